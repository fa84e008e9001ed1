//! Cycle structure of a signed graph.
//!
//! Everything here is decided from the block decomposition: a graph has
//! pairwise vertex-disjoint cycles exactly when every block is a bridge or
//! a cycle and no vertex lies in two cycle blocks. Under that condition the
//! cycles are the cycle blocks themselves, and contracting each one to a
//! single vertex yields the forest `T_G`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, VertexSet};

const NONE: usize = usize::MAX;

/// A block: a maximal 2-connected subgraph or a bridge.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Block {
    /// Sorted `(u, v)` pairs with `u < v`.
    pub edges: Vec<(usize, usize)>,
    pub vertices: VertexSet,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }

    /// Edge count equals vertex count and every vertex has block degree 2.
    pub fn is_cycle(&self) -> bool {
        if self.edges.len() < 3 || self.edges.len() != self.vertices.len() {
            return false;
        }
        self.vertices.iter().all(|v| {
            self.edges
                .iter()
                .filter(|&&(a, b)| a == v || b == v)
                .count()
                == 2
        })
    }

    /// Vertex sequence of a cycle block starting at its lowest vertex and
    /// heading to the lower of that vertex's two neighbors.
    fn cycle_sequence(&self) -> Cycle {
        let nbrs = |v: usize| {
            let mut out: Vec<usize> = self
                .edges
                .iter()
                .filter_map(|&(a, b)| match (a == v, b == v) {
                    (true, _) => Some(b),
                    (_, true) => Some(a),
                    _ => None,
                })
                .collect();
            out.sort_unstable();
            out
        };
        let start = self.vertices.as_slice()[0];
        let mut seq = vec![start];
        let mut prev = start;
        let mut cur = nbrs(start)[0];
        while cur != start {
            seq.push(cur);
            let next = nbrs(cur)
                .into_iter()
                .find(|&w| w != prev)
                .expect("cycle block");
            prev = cur;
            cur = next;
        }
        Cycle(seq)
    }
}

/// Cyclic vertex sequence; consecutive entries (and last/first) are adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Cycle(pub Vec<usize>);

impl Cycle {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.0.len();
        (0..k).map(move |i| (self.0[i], self.0[(i + 1) % k]))
    }
}

/// Block decomposition via an iterative low-link DFS. Blocks are sorted by
/// their edge lists.
pub fn blocks(g: &SignedGraph) -> Vec<Block> {
    let n = g.order();
    let mut disc = vec![NONE; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();

    struct Frame {
        v: usize,
        parent: usize,
        next: usize,
    }

    for root in 0..n {
        if disc[root] != NONE {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut frames = vec![Frame {
            v: root,
            parent: NONE,
            next: 0,
        }];
        while let Some(frame) = frames.last_mut() {
            let v = frame.v;
            if frame.next < g.degree(v) {
                let w = g.neighbors(v)[frame.next].0;
                frame.next += 1;
                if w == frame.parent {
                    continue;
                }
                if disc[w] == NONE {
                    edge_stack.push((v, w));
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    frames.push(Frame {
                        v: w,
                        parent: v,
                        next: 0,
                    });
                } else if disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            let Some(pf) = frames.last() else { break };
            let u = pf.v;
            low[u] = low[u].min(low[v]);
            if low[v] >= disc[u] {
                let mut edges = Vec::new();
                while let Some((a, b)) = edge_stack.pop() {
                    edges.push((a.min(b), a.max(b)));
                    if (a, b) == (u, v) {
                        break;
                    }
                }
                edges.sort_unstable();
                let vertices = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
                out.push(Block { edges, vertices });
            }
        }
    }
    out.sort();
    out
}

/// Outcome of the vertex-disjointness test for cycles.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Disjointness {
    /// Every cycle is a block; `cycles` lists all of them.
    Disjoint { cycles: Vec<Cycle> },
    /// A 2-connected block that is not a single cycle.
    NonCycleBlock {
        vertices: VertexSet,
        edge_count: usize,
    },
    /// A vertex shared by two cycle blocks.
    SharedVertex { vertex: usize, cycles: Vec<Cycle> },
}

impl Disjointness {
    pub fn is_disjoint(&self) -> bool {
        matches!(self, Disjointness::Disjoint { .. })
    }

    pub fn cycles(&self) -> Option<&[Cycle]> {
        match self {
            Disjointness::Disjoint { cycles } => Some(cycles),
            _ => None,
        }
    }
}

pub fn cycles_vertex_disjoint(g: &SignedGraph) -> Disjointness {
    let bs = blocks(g);
    if let Some(b) = bs.iter().find(|b| !b.is_bridge() && !b.is_cycle()) {
        return Disjointness::NonCycleBlock {
            vertices: b.vertices.clone(),
            edge_count: b.edges.len(),
        };
    }
    let cycle_blocks: Vec<&Block> = bs.iter().filter(|b| b.is_cycle()).collect();
    let mut owner = vec![NONE; g.order()];
    let mut shared: Option<(usize, usize, usize)> = None;
    for (i, b) in cycle_blocks.iter().enumerate() {
        for v in b.vertices.iter() {
            if owner[v] != NONE {
                if shared.is_none_or(|(sv, _, _)| v < sv) {
                    shared = Some((v, owner[v], i));
                }
            } else {
                owner[v] = i;
            }
        }
    }
    if let Some((vertex, a, b)) = shared {
        return Disjointness::SharedVertex {
            vertex,
            cycles: vec![
                cycle_blocks[a].cycle_sequence(),
                cycle_blocks[b].cycle_sequence(),
            ],
        };
    }
    let mut cycles: Vec<Cycle> = cycle_blocks.iter().map(|b| b.cycle_sequence()).collect();
    cycles.sort();
    Disjointness::Disjoint { cycles }
}

/// How many distinct cycles pass through each vertex: none, exactly one, or
/// at least two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CycleMembership {
    None,
    One,
    Several,
}

pub fn cycle_membership(g: &SignedGraph) -> Vec<CycleMembership> {
    let mut out = vec![CycleMembership::None; g.order()];
    for b in blocks(g).iter().filter(|b| !b.is_bridge()) {
        // every vertex of a 2-connected non-cycle block lies on two cycles
        let several = !b.is_cycle();
        for v in b.vertices.iter() {
            out[v] = match (out[v], several) {
                (CycleMembership::None, false) => CycleMembership::One,
                _ => CycleMembership::Several,
            };
        }
    }
    out
}

/// Whether two cycles through `v` leave it along different pairs of edges:
/// `v` lies in two non-bridge blocks, or has degree at least 3 inside one.
/// A vertex of degree 2 inside a theta subgraph lies on two cycles but is
/// not branching.
pub fn cycle_branching(g: &SignedGraph) -> Vec<bool> {
    let mut excess = vec![0usize; g.order()];
    for b in blocks(g).iter().filter(|b| !b.is_bridge()) {
        for v in b.vertices.iter() {
            let d = b.edges.iter().filter(|&&(x, y)| x == v || y == v).count();
            excess[v] += d - 1;
        }
    }
    excess.into_iter().map(|e| e >= 2).collect()
}

/// Product of the edge signs along `cycle`.
pub fn cycle_sign(g: &SignedGraph, cycle: &[usize]) -> Result<Sign> {
    let k = cycle.len();
    let distinct = VertexSet::new(cycle.iter().copied()).len() == k;
    if k < 3 || !distinct {
        return Err(Error::NotACycle(cycle.to_vec()));
    }
    let mut sign = Sign::Plus;
    for i in 0..k {
        match g.sign(cycle[i], cycle[(i + 1) % k]) {
            Some(s) => sign = sign * s,
            None => return Err(Error::NotACycle(cycle.to_vec())),
        }
    }
    Ok(sign)
}

/// Cycle inventory and the contraction forests of a graph whose cycles are
/// pairwise vertex-disjoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleStructure {
    pub cycles: Vec<Cycle>,
    pub signs: Vec<Sign>,
    pub disjoint: bool,
    /// Cyclic vertices, in the labeling of `t_g`.
    pub cyclic_vertices: VertexSet,
    /// All-Plus forest obtained by contracting each cycle to a vertex.
    pub t_g: SignedGraph,
    /// `t_g` minus its cyclic vertices.
    pub t_g_bracket: SignedGraph,
    /// Vertex of `g` to vertex of `t_g`.
    pub contraction_map: Vec<usize>,
}

/// Contracts every cycle of `g` to a single vertex.
///
/// Vertices of `T_G` are numbered in order of the lowest `g`-vertex they
/// represent.
pub fn contract(g: &SignedGraph) -> Result<CycleStructure> {
    let verdict = cycles_vertex_disjoint(g);
    let Disjointness::Disjoint { cycles } = verdict else {
        return Err(Error::NonDisjointCycles);
    };
    let n = g.order();
    let mut cycle_of = vec![NONE; n];
    for (i, c) in cycles.iter().enumerate() {
        for &v in c.vertices() {
            cycle_of[v] = i;
        }
    }
    let mut map = vec![NONE; n];
    let mut cycle_vertex = vec![NONE; cycles.len()];
    let mut next = 0;
    let mut cyclic = Vec::new();
    for v in 0..n {
        let c = cycle_of[v];
        if c == NONE {
            map[v] = next;
            next += 1;
        } else {
            if cycle_vertex[c] == NONE {
                cycle_vertex[c] = next;
                cyclic.push(next);
                next += 1;
            }
            map[v] = cycle_vertex[c];
        }
    }
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|e| map[e.u] != map[e.v])
        .map(|e| (map[e.u].min(map[e.v]), map[e.u].max(map[e.v])))
        .collect();
    edges.sort_unstable();
    debug_assert!(
        edges.windows(2).all(|w| w[0] != w[1]),
        "disjoint cycles give a simple forest"
    );
    edges.dedup();
    let t_g = SignedGraph::unsigned(next, edges)?;
    let cyclic_vertices = VertexSet::new(cyclic);
    let (t_g_bracket, _) = t_g.delete_vertices(&cyclic_vertices)?;
    let signs = cycles
        .iter()
        .map(|c| cycle_sign(g, c.vertices()))
        .collect::<Result<Vec<_>>>()?;
    Ok(CycleStructure {
        cycles,
        signs,
        disjoint: true,
        cyclic_vertices,
        t_g,
        t_g_bracket,
        contraction_map: map,
    })
}

/// Negates every edge with exactly one end in `u_set`.
pub fn switch(g: &SignedGraph, u_set: &VertexSet) -> SignedGraph {
    g.with_signs(|e| {
        if u_set.contains(e.u) != u_set.contains(e.v) {
            e.sign.negate()
        } else {
            e.sign
        }
    })
}

/// Marks the edges (indexed like `g.edges()`) of the depth-first spanning
/// forest rooted at the lowest id of each component, neighbors visited in
/// increasing order.
pub fn spanning_forest(g: &SignedGraph) -> Vec<bool> {
    let n = g.order();
    let mut tree = vec![false; g.size()];
    let mut seen = vec![false; n];
    let index_of = |u: usize, v: usize| {
        let key = (u.min(v), u.max(v));
        g.edges()
            .binary_search_by_key(&key, |e| (e.u, e.v))
            .expect("edge exists")
    };
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![(root, 0usize)];
        while let Some((v, next)) = stack.last_mut() {
            let v = *v;
            if *next >= g.degree(v) {
                stack.pop();
                continue;
            }
            let w = g.neighbors(v)[*next].0;
            *next += 1;
            if !seen[w] {
                seen[w] = true;
                tree[index_of(v, w)] = true;
                stack.push((w, 0));
            }
        }
    }
    tree
}

/// Switching set that makes every spanning-forest edge Plus.
pub fn normalizing_switch(g: &SignedGraph) -> VertexSet {
    let tree = spanning_forest(g);
    let n = g.order();
    let mut potential: Vec<Option<Sign>> = vec![None; n];
    let mut tree_adj = vec![Vec::new(); n];
    for (e, _) in g.edges().iter().zip(&tree).filter(|(_, &t)| t) {
        tree_adj[e.u].push((e.v, e.sign));
        tree_adj[e.v].push((e.u, e.sign));
    }
    for root in 0..n {
        if potential[root].is_some() {
            continue;
        }
        potential[root] = Some(Sign::Plus);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            let pv = potential[v].expect("assigned");
            for &(w, s) in &tree_adj[v] {
                if potential[w].is_none() {
                    potential[w] = Some(pv * s);
                    stack.push(w);
                }
            }
        }
    }
    (0..n)
        .filter(|&v| potential[v] == Some(Sign::Minus))
        .collect()
}

/// Canonical representative of the switching class: all spanning-forest
/// edges Plus.
pub fn normalize_signs(g: &SignedGraph) -> SignedGraph {
    switch(g, &normalizing_switch(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path, star, uniform_cycle};
    use crate::invariants::{cyclomatic_number, independence_number};

    fn two_triangles_sharing_vertex() -> SignedGraph {
        SignedGraph::unsigned(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    /// All-Plus C_4 on 0..4 with the path 0 - 4 - 5 attached at 0.
    fn c4_with_pendant_path() -> SignedGraph {
        SignedGraph::unsigned(6, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (4, 5)]).unwrap()
    }

    #[test]
    fn tree_blocks_are_bridges() {
        let bs = blocks(&star(6));
        assert_eq!(bs.len(), 5);
        assert!(bs.iter().all(Block::is_bridge));
    }

    #[test]
    fn cycle_is_one_block() {
        let bs = blocks(&uniform_cycle(5, Sign::Plus).unwrap());
        assert_eq!(bs.len(), 1);
        assert!(bs[0].is_cycle());
    }

    #[test]
    fn bowtie_has_two_blocks_sharing_cut_vertex() {
        let bs = blocks(&two_triangles_sharing_vertex());
        assert_eq!(bs.len(), 2);
        assert!(bs.iter().all(Block::is_cycle));
        assert_eq!(bs[0].vertices, VertexSet::new([0, 1, 2]));
        assert_eq!(bs[1].vertices, VertexSet::new([2, 3, 4]));
    }

    #[test]
    fn disjointness_examples() {
        match cycles_vertex_disjoint(&c4_with_pendant_path()) {
            Disjointness::Disjoint { cycles } => assert_eq!(cycles, vec![Cycle(vec![0, 1, 2, 3])]),
            other => panic!("unexpected {other:?}"),
        }
        match cycles_vertex_disjoint(&two_triangles_sharing_vertex()) {
            Disjointness::SharedVertex { vertex, .. } => assert_eq!(vertex, 2),
            other => panic!("unexpected {other:?}"),
        }
        match cycles_vertex_disjoint(&complete(4)) {
            Disjointness::NonCycleBlock {
                vertices,
                edge_count,
            } => {
                assert_eq!(vertices.len(), 4);
                assert_eq!(edge_count, 6);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn cycle_sign_examples() {
        let c4 = uniform_cycle(4, Sign::Plus).unwrap();
        assert_eq!(cycle_sign(&c4, &[0, 1, 2, 3]), Ok(Sign::Plus));
        let c3 = uniform_cycle(3, Sign::Plus).unwrap().with_signs(|e| {
            if (e.u, e.v) == (0, 1) {
                Sign::Minus
            } else {
                Sign::Plus
            }
        });
        assert_eq!(cycle_sign(&c3, &[0, 1, 2]), Ok(Sign::Minus));
        let c6 = uniform_cycle(6, Sign::Plus).unwrap().with_signs(|e| {
            if e.v <= 2 {
                Sign::Minus
            } else {
                Sign::Plus
            }
        });
        assert_eq!(c6.negative_edge_count(), 2);
        assert_eq!(cycle_sign(&c6, &[0, 1, 2, 3, 4, 5]), Ok(Sign::Plus));
        assert_eq!(
            cycle_sign(&c4, &[0, 2, 1, 3]),
            Err(Error::NotACycle(vec![0, 2, 1, 3]))
        );
        assert_eq!(cycle_sign(&c4, &[0, 1]), Err(Error::NotACycle(vec![0, 1])));
    }

    #[test]
    fn contraction_of_running_example() {
        let cs = contract(&c4_with_pendant_path()).unwrap();
        // o = 0, v = 1, u = 2
        assert_eq!(cs.t_g, path(3));
        assert_eq!(cs.cyclic_vertices, VertexSet::new([0]));
        assert_eq!(cs.t_g_bracket, path(2));
        assert_eq!(cs.contraction_map, vec![0, 0, 0, 0, 1, 2]);
        assert_eq!(independence_number(&cs.t_g).size, 2);
        assert_eq!(independence_number(&cs.t_g_bracket).size, 1);
        assert_eq!(cs.signs, vec![Sign::Plus]);
    }

    #[test]
    fn contraction_of_forest_and_cycle_union() {
        let f = star(4).disjoint_union(&path(3));
        let cs = contract(&f).unwrap();
        assert_eq!(cs.t_g, f);
        assert_eq!(cs.t_g_bracket, f);
        assert!(cs.cyclic_vertices.is_empty());

        let u = uniform_cycle(3, Sign::Plus)
            .unwrap()
            .disjoint_union(&uniform_cycle(4, Sign::Plus).unwrap());
        let cs = contract(&u).unwrap();
        assert_eq!(cs.t_g, SignedGraph::empty(2));
        assert_eq!(cs.t_g_bracket.order(), 0);
        assert_eq!(cs.cycles.len(), cyclomatic_number(&u));
    }

    #[test]
    fn contraction_rejects_intersecting_cycles() {
        assert_eq!(contract(&complete(4)), Err(Error::NonDisjointCycles));
        assert_eq!(
            contract(&two_triangles_sharing_vertex()),
            Err(Error::NonDisjointCycles)
        );
    }

    #[test]
    fn membership() {
        let m = cycle_membership(&two_triangles_sharing_vertex());
        assert_eq!(m[2], CycleMembership::Several);
        assert_eq!(m[0], CycleMembership::One);
        let m = cycle_membership(&c4_with_pendant_path());
        assert_eq!(m[0], CycleMembership::One);
        assert_eq!(m[4], CycleMembership::None);
        assert!(cycle_membership(&complete(4))
            .iter()
            .all(|&x| x == CycleMembership::Several));
    }

    #[test]
    fn branching_vertices() {
        assert_eq!(
            cycle_branching(&two_triangles_sharing_vertex()),
            vec![false, false, true, false, false]
        );
        assert!(cycle_branching(&complete(4)).iter().all(|&b| b));
        // K_4 minus the edge 2-3: vertices 2 and 3 lie on two cycles but
        // have degree 2, and deleting one drops c by only 1
        let theta = SignedGraph::unsigned(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)]).unwrap();
        assert_eq!(cycle_branching(&theta), vec![true, true, false, false]);
        assert_eq!(cycle_membership(&theta)[2], CycleMembership::Several);
        assert_eq!(cyclomatic_number(&theta), 2);
        assert_eq!(cyclomatic_number(&theta.delete_vertex(2).unwrap()), 1);
        assert_eq!(cyclomatic_number(&theta.delete_vertex(0).unwrap()), 0);
    }

    #[test]
    fn switching_basics() {
        let g =
            c4_with_pendant_path().with_signs(|e| if e.u == 0 { Sign::Minus } else { Sign::Plus });
        assert_eq!(switch(&g, &VertexSet::empty()), g);
        let u = VertexSet::new([1, 4]);
        assert_eq!(switch(&switch(&g, &u), &u), g);
        let tree = path(6).with_signs(|e| {
            if e.u % 2 == 0 {
                Sign::Minus
            } else {
                Sign::Plus
            }
        });
        assert_eq!(normalize_signs(&tree), path(6));
    }

    #[test]
    fn normalization_makes_forest_plus() {
        let g = complete(5).with_signs(|e| {
            if (e.u + e.v) % 3 == 0 {
                Sign::Minus
            } else {
                Sign::Plus
            }
        });
        let h = normalize_signs(&g);
        let tree = spanning_forest(&h);
        assert_eq!(tree.iter().filter(|&&t| t).count(), 4);
        for (e, t) in h.edges().iter().zip(tree) {
            if t {
                assert_eq!(e.sign, Sign::Plus);
            }
        }
    }
}
