//! Random construction of lower-optimal signed graphs.
//!
//! Start from disjoint admissible cycles and isolated vertices, then
//! repeatedly add a pendant pair `v - u` where `v` joins at most one vertex
//! of each of some existing components. Such a `v` lies on no cycle, so the
//! result stays lower-optimal at every step.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{cycle, Sign, SignedGraph};

fn default_max_attachments() -> usize {
    2
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildRecipe {
    pub seed: u64,
    /// Cycle lengths; each must be even and at least 4.
    pub cycle_specs: Vec<usize>,
    #[serde(default)]
    pub isolated_vertices: usize,
    pub expansion_steps: usize,
    /// Upper bound on the number of components a new vertex `v` joins.
    #[serde(default = "default_max_attachments")]
    pub max_attachments: usize,
}

impl BuildRecipe {
    pub fn new(seed: u64, cycle_specs: Vec<usize>, expansion_steps: usize) -> Self {
        BuildRecipe {
            seed,
            cycle_specs,
            isolated_vertices: 0,
            expansion_steps,
            max_attachments: default_max_attachments(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self.cycle_specs.iter().find(|&&q| q < 4 || q % 2 == 1) {
            Some(&q) => Err(Error::InvalidCycleLength(q)),
            None => Ok(()),
        }
    }
}

/// `C_q` signed so that its sign is `+` when `q ≡ 0 (mod 4)` and `-` when
/// `q ≡ 2 (mod 4)`: all Plus, with edge `(0, 1)` Minus in the second case.
pub fn admissible_cycle_graph(q: usize) -> Result<SignedGraph> {
    if q < 4 || q % 2 == 1 {
        return Err(Error::InvalidCycleLength(q));
    }
    let mut signs = vec![Sign::Plus; q];
    if q % 4 == 2 {
        signs[0] = Sign::Minus;
    }
    cycle(q, &signs)
}

/// Disjoint union of the recipe's cycles followed by its isolated vertices.
pub fn base_components(recipe: &BuildRecipe) -> Result<SignedGraph> {
    recipe.validate()?;
    let mut g = SignedGraph::empty(0);
    for &q in &recipe.cycle_specs {
        g = g.disjoint_union(&admissible_cycle_graph(q)?);
    }
    Ok(g.disjoint_union(&SignedGraph::empty(recipe.isolated_vertices)))
}

fn random_sign<R: Rng>(rng: &mut R) -> Sign {
    if rng.gen() {
        Sign::Minus
    } else {
        Sign::Plus
    }
}

/// Adds `v = n` and `u = n + 1` with edge `v - u`, and joins `v` to one
/// random vertex in each of up to `max_attachments` random components.
pub fn expand_pendant_pair<R: Rng>(
    g: &SignedGraph,
    max_attachments: usize,
    rng: &mut R,
) -> SignedGraph {
    let n = g.order();
    let (v, u) = (n, n + 1);
    let comps = g.components();
    let k = rng.gen_range(0..=max_attachments.min(comps.len()));
    let mut edges = vec![(v, u, random_sign(rng))];
    let mut chosen = sample(rng, comps.len(), k).into_vec();
    chosen.sort_unstable();
    for ci in chosen {
        let verts = comps[ci].vertices.as_slice();
        let w = verts[rng.gen_range(0..verts.len())];
        edges.push((w, v, random_sign(rng)));
    }
    g.extend(2, edges)
        .expect("new edges are distinct and in range")
}

pub fn generate(recipe: &BuildRecipe) -> Result<SignedGraph> {
    let mut g = base_components(recipe)?;
    let mut rng = ChaCha8Rng::seed_from_u64(recipe.seed);
    for _ in 0..recipe.expansion_steps {
        g = expand_pendant_pair(&g, recipe.max_attachments, &mut rng);
    }
    Ok(g)
}

/// A random valid recipe; used for bulk sampling.
pub fn random_recipe<R: Rng>(
    rng: &mut R,
    max_cycles: usize,
    max_len: usize,
    max_steps: usize,
) -> BuildRecipe {
    let lengths: Vec<usize> = (4..=max_len.max(4)).step_by(2).collect();
    let count = rng.gen_range(0..=max_cycles);
    BuildRecipe {
        seed: rng.gen(),
        cycle_specs: (0..count)
            .map(|_| lengths[rng.gen_range(0..lengths.len())])
            .collect(),
        isolated_vertices: rng.gen_range(0..=2),
        expansion_steps: rng.gen_range(0..=max_steps),
        max_attachments: rng.gen_range(1..=3),
    }
}
