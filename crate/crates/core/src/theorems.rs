//! Deciders for the rank/independence/cyclomatic inequality and for
//! lower-optimality, plus executable checks of the supporting identities.
//!
//! A signed graph of order `n` always satisfies
//! `2n - 2c(G) <= r(G, σ) + 2α(G) <= 2n`. It is *lower-optimal* when the
//! left inequality is tight. [`is_lower_optimal_direct`] decides this from
//! the three exact quantities; [`is_lower_optimal_structural`] decides it
//! from cycle structure alone:
//!
//! 1. the cycles are pairwise vertex-disjoint;
//! 2. every cycle `C_q` has `q ≡ 0 (mod 4)` and sign `+`, or `q ≡ 2 (mod 4)`
//!    and sign `-`;
//! 3. `α(T_G) = α([T_G]) + c(G)`.
//!
//! The check suites ([`lemma_suite`], [`corollary_suite`],
//! [`extremal_suite`]) instantiate the supporting identities on a concrete
//! graph and report each one as passed, failed or skipped. A claim whose
//! hypothesis never applies is reported as skipped, never as passed.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cycles::{
    contract, cycle_branching, cycle_membership, cycles_vertex_disjoint, Cycle, CycleMembership,
    Disjointness,
};
use crate::graph::{Sign, SignedGraph, VertexSet};
use crate::invariants::{cyclomatic_number, independence_number, matching_number, IndependentSet};
use crate::linalg::graph_rank;

/// The inequality with its ingredients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub r: usize,
    pub alpha: usize,
    pub c: usize,
    pub lower_bound: i64,
    pub upper_bound: i64,
    pub value: i64,
    pub bound_ok: bool,
}

impl BoundReport {
    pub fn lower_attained(&self) -> bool {
        self.value == self.lower_bound
    }

    pub fn upper_attained(&self) -> bool {
        self.value == self.upper_bound
    }
}

pub fn bound_check(g: &SignedGraph) -> BoundReport {
    let n = g.order();
    let r = graph_rank(g);
    let alpha = independence_number(g).size;
    let c = cyclomatic_number(g);
    let lower_bound = 2 * n as i64 - 2 * c as i64;
    let upper_bound = 2 * n as i64;
    let value = r as i64 + 2 * alpha as i64;
    BoundReport {
        n,
        r,
        alpha,
        c,
        lower_bound,
        upper_bound,
        value,
        bound_ok: lower_bound <= value && value <= upper_bound,
    }
}

/// `r + 2α == 2n - 2c`, all quantities exact.
pub fn is_lower_optimal_direct(g: &SignedGraph) -> bool {
    bound_check(g).lower_attained()
}

/// Length/sign verdict for one cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleVerdict {
    pub vertices: Cycle,
    pub length: usize,
    pub residue_mod_4: usize,
    pub sign: Sign,
    pub ok: bool,
}

/// Independence numbers of the contraction forests against `c(G)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContractionLedger {
    pub alpha_t_g: usize,
    pub alpha_t_g_bracket: usize,
    pub c: usize,
    pub holds: bool,
}

/// Per-condition evidence behind the structural verdict. The cycle and
/// contraction parts are only present when the cycles are disjoint.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralWitness {
    pub disjointness: Disjointness,
    pub cycles: Vec<CycleVerdict>,
    pub contraction: Option<ContractionLedger>,
    pub cycles_disjoint: bool,
    pub cycle_signs_ok: bool,
    pub contraction_ok: bool,
}

/// Whether a cycle of length `q` with sign `sign` can appear in a
/// lower-optimal graph.
pub fn admissible_cycle(q: usize, sign: Sign) -> bool {
    matches!((q % 4, sign), (0, Sign::Plus) | (2, Sign::Minus))
}

pub fn is_lower_optimal_structural(g: &SignedGraph) -> (bool, StructuralWitness) {
    let disjointness = cycles_vertex_disjoint(g);
    let mut witness = StructuralWitness {
        cycles_disjoint: disjointness.is_disjoint(),
        disjointness,
        cycles: Vec::new(),
        contraction: None,
        cycle_signs_ok: false,
        contraction_ok: false,
    };
    if !witness.cycles_disjoint {
        return (false, witness);
    }
    let cs = contract(g).expect("cycles are disjoint");
    witness.cycles = cs
        .cycles
        .iter()
        .zip(&cs.signs)
        .map(|(cycle, &sign)| CycleVerdict {
            vertices: cycle.clone(),
            length: cycle.len(),
            residue_mod_4: cycle.len() % 4,
            sign,
            ok: admissible_cycle(cycle.len(), sign),
        })
        .collect();
    witness.cycle_signs_ok = witness.cycles.iter().all(|c| c.ok);

    let alpha_t_g = independence_number(&cs.t_g).size;
    let alpha_t_g_bracket = independence_number(&cs.t_g_bracket).size;
    let c = cs.cycles.len();
    let holds = alpha_t_g == alpha_t_g_bracket + c;
    witness.contraction = Some(ContractionLedger {
        alpha_t_g,
        alpha_t_g_bracket,
        c,
        holds,
    });
    witness.contraction_ok = holds;

    let verdict = witness.cycle_signs_ok && witness.contraction_ok;
    (verdict, witness)
}

/// Direct and structural lower-optimality verdicts agree.
pub fn check_equivalence(g: &SignedGraph) -> bool {
    is_lower_optimal_direct(g) == is_lower_optimal_structural(g).0
}

/// Everything the analyzer reports about one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OptimalityReport {
    pub n: usize,
    pub edges: usize,
    pub r: usize,
    pub nullity: usize,
    pub alpha: usize,
    pub independent_set: VertexSet,
    pub mu: usize,
    pub c: usize,
    pub omega: usize,
    pub lower_bound: i64,
    pub upper_bound: i64,
    pub value: i64,
    pub bound_ok: bool,
    pub lower_optimal_direct: bool,
    pub lower_optimal_structural: bool,
    pub agreement: bool,
    pub structural_witness: StructuralWitness,
}

pub fn analyze(g: &SignedGraph) -> OptimalityReport {
    let bounds = bound_check(g);
    let IndependentSet { witness, .. } = independence_number(g);
    let (structural, structural_witness) = is_lower_optimal_structural(g);
    let direct = bounds.lower_attained();
    OptimalityReport {
        n: bounds.n,
        edges: g.size(),
        r: bounds.r,
        nullity: bounds.n - bounds.r,
        alpha: bounds.alpha,
        independent_set: witness,
        mu: matching_number(g),
        c: bounds.c,
        omega: g.component_count(),
        lower_bound: bounds.lower_bound,
        upper_bound: bounds.upper_bound,
        value: bounds.value,
        bound_ok: bounds.bound_ok,
        lower_optimal_direct: direct,
        lower_optimal_structural: structural,
        agreement: direct == structural,
        structural_witness,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Identities checked by the suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    // rank and independence facts for arbitrary graphs
    InducedSubgraphRank,
    ComponentRankSum,
    RankZeroIffEmpty,
    PendantPairRank,
    VertexDeletionRank,
    ForestRankMatching,
    BipartiteAlphaMatching,
    ForestRankAlpha,
    PendantAlpha,
    CycleRankTable,
    CyclomaticDeletion,
    AlphaVertexDeletion,
    AlphaEdgeDeletion,
    PendantSubtreeBound,
    PendantOutsideTightSet,
    // consequences of lower-optimality at a cycle vertex
    RankUnchanged,
    DeletionLowerOptimal,
    CyclomaticDropsByOne,
    AlphaUnchanged,
    SingleCycleNotQuasiPendant,
    // structure of lower-optimal graphs
    ComponentsLowerOptimal,
    PendantPairReduction,
    PendantCycle,
    ContractionIdentity,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(claim_name(*self))
    }
}

fn claim_name(c: Claim) -> &'static str {
    use Claim::*;
    match c {
        InducedSubgraphRank => "induced_subgraph_rank",
        ComponentRankSum => "component_rank_sum",
        RankZeroIffEmpty => "rank_zero_iff_empty",
        PendantPairRank => "pendant_pair_rank",
        VertexDeletionRank => "vertex_deletion_rank",
        ForestRankMatching => "forest_rank_matching",
        BipartiteAlphaMatching => "bipartite_alpha_matching",
        ForestRankAlpha => "forest_rank_alpha",
        PendantAlpha => "pendant_alpha",
        CycleRankTable => "cycle_rank_table",
        CyclomaticDeletion => "cyclomatic_deletion",
        AlphaVertexDeletion => "alpha_vertex_deletion",
        AlphaEdgeDeletion => "alpha_edge_deletion",
        PendantSubtreeBound => "pendant_subtree_bound",
        PendantOutsideTightSet => "pendant_outside_tight_set",
        RankUnchanged => "rank_unchanged",
        DeletionLowerOptimal => "deletion_lower_optimal",
        CyclomaticDropsByOne => "cyclomatic_drops_by_one",
        AlphaUnchanged => "alpha_unchanged",
        SingleCycleNotQuasiPendant => "single_cycle_not_quasi_pendant",
        ComponentsLowerOptimal => "components_lower_optimal",
        PendantPairReduction => "pendant_pair_reduction",
        PendantCycle => "pendant_cycle",
        ContractionIdentity => "contraction_identity",
    }
}

/// Result of checking one claim over all of its instances in a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub claim: Claim,
    pub status: Status,
    /// Instances checked.
    pub instances: usize,
    /// Vertices of the first failing instance.
    pub witness: Vec<usize>,
    pub detail: String,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Accumulates instances of a single claim.
struct Tally {
    claim: Claim,
    instances: usize,
    failure: Option<(Vec<usize>, String)>,
    skip_reason: &'static str,
}

impl Tally {
    fn new(claim: Claim, skip_reason: &'static str) -> Self {
        Tally {
            claim,
            instances: 0,
            failure: None,
            skip_reason,
        }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> (Vec<usize>, String)) {
        self.instances += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(witness());
        }
    }

    fn finish(self) -> CheckOutcome {
        let (status, witness, detail) = match (self.failure, self.instances) {
            (Some((w, d)), _) => (Status::Fail, w, d),
            (None, 0) => (Status::Skipped, Vec::new(), self.skip_reason.to_string()),
            (None, _) => (Status::Pass, Vec::new(), String::new()),
        };
        CheckOutcome {
            claim: self.claim,
            status,
            instances: self.instances,
            witness,
            detail,
        }
    }
}

fn skipped(claim: Claim, reason: &str) -> CheckOutcome {
    CheckOutcome {
        claim,
        status: Status::Skipped,
        instances: 0,
        witness: Vec::new(),
        detail: reason.to_string(),
    }
}

fn del(g: &SignedGraph, xs: &[usize]) -> SignedGraph {
    g.delete_vertices(&VertexSet::new(xs.iter().copied()))
        .expect("vertices come from the graph")
        .0
}

fn alpha(g: &SignedGraph) -> usize {
    independence_number(g).size
}

fn is_forest(g: &SignedGraph) -> bool {
    cyclomatic_number(g) == 0
}

fn is_bipartite(g: &SignedGraph) -> bool {
    let mut color = vec![None; g.order()];
    for s in 0..g.order() {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let cv = color[v].expect("colored");
            for w in g.neighbor_ids(v) {
                match color[w] {
                    None => {
                        color[w] = Some(!cv);
                        stack.push(w);
                    }
                    Some(cw) if cw == cv => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

fn is_single_cycle(g: &SignedGraph) -> bool {
    g.order() >= 3 && g.is_connected() && (0..g.order()).all(|v| g.degree(v) == 2)
}

/// Rank of a signed `C_n` as a function of length and sign.
pub fn cycle_rank_formula(n: usize, sign: Sign) -> usize {
    match (n % 4, sign) {
        (1 | 3, _) => n,
        (0, Sign::Minus) | (2, Sign::Plus) => n,
        _ => n - 2,
    }
}

/// Deterministic per-graph seed for sampled instances.
fn graph_seed(g: &SignedGraph) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut mix = |x: u64| {
        h ^= x;
        h = h.wrapping_mul(0x0100_0000_01b3);
    };
    mix(g.order() as u64);
    for e in g.edges() {
        mix(e.u as u64);
        mix(e.v as u64);
        mix(e.sign.as_int() as u64);
    }
    h
}

/// Vertex subsets to try: all of them up to `exhaustive_upto` vertices,
/// otherwise `samples` uniformly random ones.
fn subsets(
    n: usize,
    exhaustive_upto: usize,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<Vec<usize>> {
    if n <= exhaustive_upto {
        (0u64..1 << n)
            .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
            .collect()
    } else {
        (0..samples)
            .map(|_| (0..n).filter(|_| rng.gen_bool(0.5)).collect())
            .collect()
    }
}

/// Rank, independence and cyclomatic facts that hold for every signed graph,
/// instantiated on `g`.
pub fn lemma_suite(g: &SignedGraph) -> Vec<CheckOutcome> {
    let n = g.order();
    let r = graph_rank(g);
    let a = alpha(g);
    let c = cyclomatic_number(g);
    let mut rng = ChaCha8Rng::seed_from_u64(graph_seed(g));
    let mut out = Vec::new();

    let mut t = Tally::new(Claim::InducedSubgraphRank, "no vertices");
    for keep in subsets(n, 8, 64, &mut rng) {
        let h = g
            .induced(&VertexSet::new(keep.iter().copied()))
            .expect("in range");
        let rh = graph_rank(&h);
        t.check(rh <= r, || (keep, format!("r(H) = {rh} > r(G) = {r}")));
    }
    out.push(t.finish());

    let mut t = Tally::new(Claim::ComponentRankSum, "no vertices");
    if n > 0 {
        let sum: usize = g
            .components()
            .iter()
            .map(|cmp| graph_rank(&cmp.graph))
            .sum();
        t.check(sum == r, || (Vec::new(), format!("sum {sum} != r {r}")));
    }
    out.push(t.finish());

    let mut t = Tally::new(Claim::RankZeroIffEmpty, "");
    t.check((r == 0) == (g.size() == 0), || {
        (Vec::new(), format!("r = {r}, |E| = {}", g.size()))
    });
    out.push(t.finish());

    let mut t_rank = Tally::new(Claim::PendantPairRank, "no pendant vertex");
    let mut t_alpha = Tally::new(Claim::PendantAlpha, "no pendant vertex");
    for y in g.pendant_vertices().iter() {
        let x = g.neighbor_ids(y).next().expect("pendant has a neighbor");
        let g_xy = del(g, &[x, y]);
        let r_xy = graph_rank(&g_xy);
        t_rank.check(r == r_xy + 2, || {
            (vec![y, x], format!("r = {r}, r(G-x-y) = {r_xy}"))
        });
        let a_x = alpha(&del(g, &[x]));
        let a_xy = alpha(&g_xy);
        t_alpha.check(a == a_x && a == a_xy + 1, || {
            (
                vec![y, x],
                format!("α = {a}, α(G-x) = {a_x}, α(G-x-y) = {a_xy}"),
            )
        });
    }
    out.push(t_rank.finish());
    out.push(t_alpha.finish());

    let membership = cycle_membership(g);
    let branching = cycle_branching(g);
    let mut t_rank = Tally::new(Claim::VertexDeletionRank, "no vertices");
    let mut t_alpha = Tally::new(Claim::AlphaVertexDeletion, "no vertices");
    let mut t_cyc = Tally::new(Claim::CyclomaticDeletion, "no vertices");
    for x in 0..n {
        let gx = del(g, &[x]);
        let rx = graph_rank(&gx);
        t_rank.check(rx <= r && r <= rx + 2, || {
            (vec![x], format!("r = {r}, r(G-x) = {rx}"))
        });
        let ax = alpha(&gx);
        t_alpha.check(ax <= a && a <= ax + 1, || {
            (vec![x], format!("α = {a}, α(G-x) = {ax}"))
        });
        let cx = cyclomatic_number(&gx);
        let ok = match (membership[x], branching[x]) {
            (CycleMembership::None, _) => cx == c,
            (_, false) => cx < c,
            (_, true) => cx + 2 <= c,
        };
        t_cyc.check(ok, || {
            (
                vec![x],
                format!(
                    "{:?}, branching {}: c = {c}, c(G-x) = {cx}",
                    membership[x], branching[x]
                ),
            )
        });
    }
    out.push(t_rank.finish());
    out.push(t_alpha.finish());
    out.push(t_cyc.finish());

    let mut t = Tally::new(Claim::AlphaEdgeDeletion, "no edges");
    for e in g.edges() {
        let ae = alpha(&g.delete_edge(e.u, e.v));
        t.check(ae >= a, || {
            (vec![e.u, e.v], format!("α = {a}, α(G-e) = {ae}"))
        });
    }
    out.push(t.finish());

    let mut t_rm = Tally::new(Claim::ForestRankMatching, "graph has a cycle");
    let mut t_ra = Tally::new(Claim::ForestRankAlpha, "graph has a cycle");
    if is_forest(g) {
        let m = matching_number(g);
        let ru = graph_rank(&g.underlying());
        t_rm.check(r == 2 * m && ru == r, || {
            (
                Vec::new(),
                format!("r = {r}, r(underlying) = {ru}, m = {m}"),
            )
        });
        t_ra.check(r + 2 * a == 2 * n, || {
            (Vec::new(), format!("r = {r}, α = {a}, n = {n}"))
        });
    }
    out.push(t_rm.finish());
    out.push(t_ra.finish());

    let mut t = Tally::new(Claim::BipartiteAlphaMatching, "graph is not bipartite");
    if is_bipartite(g) {
        let m = matching_number(g);
        t.check(a + m == n, || {
            (Vec::new(), format!("α = {a}, m = {m}, n = {n}"))
        });
    }
    out.push(t.finish());

    let mut t = Tally::new(Claim::CycleRankTable, "graph is not a cycle");
    if is_single_cycle(g) {
        let sign = Sign::product(g.edges().iter().map(|e| e.sign));
        let expected = cycle_rank_formula(n, sign);
        t.check(r == expected, || {
            (Vec::new(), format!("r = {r}, expected {expected}"))
        });
    }
    out.push(t.finish());

    let mut t_bound = Tally::new(Claim::PendantSubtreeBound, "no tree component with an edge");
    let mut t_tight = Tally::new(
        Claim::PendantOutsideTightSet,
        "no tree component with an edge",
    );
    for comp in g.components() {
        let tree = &comp.graph;
        if tree.size() == 0 || !is_forest(tree) {
            continue;
        }
        let pendants = tree.pendant_vertices();
        let at = alpha(tree);
        let t0 = del(tree, pendants.as_slice());
        let a0 = alpha(&t0);
        t_bound.check(at <= a0 + pendants.len(), || {
            (
                comp.vertices.clone(),
                format!("α(T) = {at}, α(T0) = {a0}, p = {}", pendants.len()),
            )
        });
        for d in subsets(tree.order(), 10, 64, &mut rng) {
            let ad = alpha(&del(tree, &d));
            if at == ad + d.len() {
                let outside = pendants.iter().any(|p| !d.contains(&p));
                t_tight.check(outside, || {
                    let w = d.iter().map(|&v| comp.vertices[v]).collect();
                    (w, "tight set contains every pendant vertex".to_string())
                });
            }
        }
    }
    out.push(t_bound.finish());
    out.push(t_tight.finish());

    out
}

/// Consequences of lower-optimality at each vertex lying on a cycle.
///
/// Skipped unless `g` is lower-optimal and has at least one cycle vertex.
pub fn corollary_suite(g: &SignedGraph) -> Vec<CheckOutcome> {
    const CLAIMS: [Claim; 5] = [
        Claim::RankUnchanged,
        Claim::DeletionLowerOptimal,
        Claim::CyclomaticDropsByOne,
        Claim::AlphaUnchanged,
        Claim::SingleCycleNotQuasiPendant,
    ];
    if !is_lower_optimal_direct(g) {
        return CLAIMS
            .iter()
            .map(|&c| skipped(c, "graph is not lower-optimal"))
            .collect();
    }
    let membership = cycle_membership(g);
    let cycle_vertices: Vec<usize> = (0..g.order())
        .filter(|&v| membership[v] != CycleMembership::None)
        .collect();
    if cycle_vertices.is_empty() {
        return CLAIMS
            .iter()
            .map(|&c| skipped(c, "graph has no cycle"))
            .collect();
    }

    let r = graph_rank(g);
    let a = alpha(g);
    let c = cyclomatic_number(g);
    let quasi = g.quasi_pendant_vertices();
    let mut tallies: Vec<Tally> = CLAIMS.iter().map(|&cl| Tally::new(cl, "")).collect();
    for &u in &cycle_vertices {
        let gu = del(g, &[u]);
        let ru = graph_rank(&gu);
        tallies[0].check(ru == r, || (vec![u], format!("r = {r}, r(G-u) = {ru}")));
        tallies[1].check(is_lower_optimal_direct(&gu), || {
            (vec![u], "G-u is not lower-optimal".to_string())
        });
        let cu = cyclomatic_number(&gu);
        tallies[2].check(c == cu + 1, || (vec![u], format!("c = {c}, c(G-u) = {cu}")));
        let au = alpha(&gu);
        tallies[3].check(a == au, || (vec![u], format!("α = {a}, α(G-u) = {au}")));
        let one = membership[u] == CycleMembership::One;
        tallies[4].check(one && !quasi.contains(u), || {
            (
                vec![u],
                format!(
                    "membership {:?}, quasi-pendant {}",
                    membership[u],
                    quasi.contains(u)
                ),
            )
        });
    }
    tallies.into_iter().map(Tally::finish).collect()
}

/// Structural facts about lower-optimal graphs: component decomposition,
/// pendant-pair reduction, pendant-cycle identities, and the contraction
/// identity for α.
pub fn extremal_suite(g: &SignedGraph) -> Vec<CheckOutcome> {
    let lo = is_lower_optimal_direct(g);
    let mut out = Vec::new();

    let mut t = Tally::new(Claim::ComponentsLowerOptimal, "no vertices");
    if g.order() > 0 {
        let comps = g.components();
        let all = comps.iter().all(|cmp| is_lower_optimal_direct(&cmp.graph));
        t.check(lo == all, || {
            (Vec::new(), format!("graph {lo}, all components {all}"))
        });
    }
    out.push(t.finish());

    let membership = cycle_membership(g);
    let mut t = Tally::new(Claim::PendantPairReduction, "no pendant vertex");
    for u in g.pendant_vertices().iter() {
        let v = g.neighbor_ids(u).next().expect("pendant has a neighbor");
        let rest = is_lower_optimal_direct(&del(g, &[u, v]));
        let rhs = membership[v] == CycleMembership::None && rest;
        t.check(lo == rhs, || {
            (
                vec![u, v],
                format!("graph {lo}, v acyclic and G0 lower-optimal {rhs}"),
            )
        });
    }
    out.push(t.finish());

    out.push(pendant_cycle_check(g, lo));

    let mut t = Tally::new(Claim::ContractionIdentity, "graph is not lower-optimal");
    if lo {
        match contract(g) {
            Ok(cs) => {
                let half: usize = cs.cycles.iter().map(|cy| cy.len() / 2).sum();
                let lhs = alpha(g);
                let at = alpha(&cs.t_g);
                let c = cs.cycles.len();
                t.check(lhs + c == at + half, || {
                    (
                        Vec::new(),
                        format!("α = {lhs}, α(T_G) = {at}, Σ|C|/2 = {half}, c = {c}"),
                    )
                });
            }
            Err(_) => t.check(false, || (Vec::new(), "cycles intersect".to_string())),
        }
    }
    out.push(t.finish());
    out
}

/// Pendant cycles: a cycle with exactly one vertex of degree 3, joined by a
/// single edge to a connected remainder `K`.
fn pendant_cycle_check(g: &SignedGraph, lo: bool) -> CheckOutcome {
    let mut t = Tally::new(
        Claim::PendantCycle,
        "no pendant cycle in a lower-optimal graph",
    );
    if !lo {
        return t.finish();
    }
    for comp in g.components() {
        let h = &comp.graph;
        let Disjointness::Disjoint { cycles } = cycles_vertex_disjoint(h) else {
            t.check(false, || {
                (comp.vertices.clone(), "cycles intersect".to_string())
            });
            continue;
        };
        for cycle in &cycles {
            let attach: Vec<usize> = cycle
                .vertices()
                .iter()
                .copied()
                .filter(|&v| h.degree(v) != 2)
                .collect();
            if attach.len() != 1 || h.degree(attach[0]) != 3 {
                continue;
            }
            let x = attach[0];
            let l = cycle.len();
            let sign = Sign::product(
                cycle
                    .edges()
                    .map(|(a, b)| h.sign(a, b).expect("cycle edge")),
            );
            let k = del(h, cycle.vertices());
            let without: Vec<usize> = cycle
                .vertices()
                .iter()
                .copied()
                .filter(|&v| v != x)
                .collect();
            let g_prime = del(h, &without);
            let (rh, ah) = (graph_rank(h), alpha(h));
            let (rk, ak) = (graph_rank(&k), alpha(&k));
            let (rp, ap) = (graph_rank(&g_prime), alpha(&g_prime));
            let ok = admissible_cycle(l, sign)
                && rh + 2 == l + rk
                && 2 * ah == l + 2 * ak
                && is_lower_optimal_direct(&k)
                && is_lower_optimal_direct(&g_prime)
                && ap == ak + 1
                && rp == rk;
            let witness: Vec<usize> = cycle.vertices().iter().map(|&v| comp.vertices[v]).collect();
            t.check(ok, || {
                (
                    witness,
                    format!(
                        "l = {l}, σ = {sign}, r = {rh}, α = {ah}, r(K) = {rk}, α(K) = {ak}, \
                         r(G') = {rp}, α(G') = {ap}"
                    ),
                )
            });
        }
    }
    t.finish()
}
