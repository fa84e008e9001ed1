//! The signed-graph model.
//!
//! A [`SignedGraph`] is a simple undirected graph on the dense vertex ids
//! `0..n` together with a sign on every edge. Values are immutable once
//! built; every operation returns a new graph.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Edge sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn negate(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_int(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn product<I: IntoIterator<Item = Sign>>(signs: I) -> Sign {
        signs.into_iter().fold(Sign::Plus, |acc, s| acc * s)
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A signed edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// Sorted, duplicate-free list of vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(ids: I) -> Self {
        let mut v: Vec<usize> = ids.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::new(self.iter().chain(other.iter()))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

/// Old-to-new vertex map produced by deletions; `None` marks a deleted vertex.
pub type Relabeling = Vec<Option<usize>>;

/// A connected component together with its vertex ids in the parent graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub graph: SignedGraph,
    /// `vertices[i]` is the parent id of component vertex `i`.
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(usize, Sign)>>,
}

impl SignedGraph {
    /// Builds a graph from `(u, v, sign)` triples in any orientation.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut list = Vec::new();
        for (a, b, sign) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            list.push(Edge { u, v, sign });
        }
        list.sort_unstable();
        for w in list.windows(2) {
            if (w[0].u, w[0].v) == (w[1].u, w[1].v) {
                return Err(Error::DuplicateEdge(w[0].u, w[0].v));
            }
        }
        Ok(Self::from_sorted(n, list))
    }

    /// All-Plus graph from unsigned pairs.
    pub fn unsigned<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new(n, edges.into_iter().map(|(u, v)| (u, v, Sign::Plus)))
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u].push((e.v, e.sign));
            adj[e.v].push((e.u, e.sign));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        SignedGraph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges sorted by `(u, v)`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbors of `v` with edge signs, sorted by neighbor id.
    pub fn neighbors(&self, v: usize) -> &[(usize, Sign)] {
        &self.adj[v]
    }

    pub fn neighbor_ids(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let list = &self.adj[u];
        list.binary_search_by_key(&v, |&(w, _)| w)
            .ok()
            .map(|i| list[i].1)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.sign(u, v).is_some()
    }

    pub fn negative_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.sign == Sign::Minus).count()
    }

    /// Same graph with every sign forgotten (all Plus).
    pub fn underlying(&self) -> SignedGraph {
        self.with_signs(|_| Sign::Plus)
    }

    /// Re-signs every edge; `f` sees edges in sorted order.
    pub fn with_signs<F: FnMut(&Edge) -> Sign>(&self, mut f: F) -> SignedGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge { sign: f(e), ..*e })
            .collect();
        Self::from_sorted(self.n, edges)
    }

    /// Induced subgraph on `G - xs`, relabeled contiguously in increasing
    /// id order.
    pub fn delete_vertices(&self, xs: &VertexSet) -> Result<(SignedGraph, Relabeling)> {
        if let Some(&bad) = xs.as_slice().last().filter(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                n: self.n,
            });
        }
        let mut map = vec![None; self.n];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !xs.contains(v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|e| match (map[e.u], map[e.v]) {
                (Some(u), Some(v)) => Some(Edge { u, v, sign: e.sign }),
                _ => None,
            })
            .collect();
        Ok((Self::from_sorted(next, edges), map))
    }

    /// Shorthand for deleting a single vertex, dropping the relabeling.
    pub fn delete_vertex(&self, x: usize) -> Result<SignedGraph> {
        self.delete_vertices(&VertexSet::new([x])).map(|(g, _)| g)
    }

    /// Subgraph induced by `keep`, vertex `i` of the result being `keep[i]`
    /// after sorting.
    pub fn induced(&self, keep: &VertexSet) -> Result<SignedGraph> {
        let drop: VertexSet = (0..self.n).filter(|&v| !keep.contains(v)).collect();
        if let Some(&bad) = keep.as_slice().last().filter(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                n: self.n,
            });
        }
        self.delete_vertices(&drop).map(|(g, _)| g)
    }

    /// Graph with the single edge `{u, v}` removed (no-op if absent).
    pub fn delete_edge(&self, u: usize, v: usize) -> SignedGraph {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        let edges = self
            .edges
            .iter()
            .filter(|e| (e.u, e.v) != (a, b))
            .copied()
            .collect();
        Self::from_sorted(self.n, edges)
    }

    /// Component id per vertex, numbered in order of lowest member.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in &self.adj[x] {
                    if label[y] == usize::MAX {
                        label[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().1
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_count() == 1
    }

    pub fn components(&self) -> Vec<Component> {
        let (label, count) = self.component_labels();
        let mut members = vec![Vec::new(); count];
        for (v, &c) in label.iter().enumerate() {
            members[c].push(v);
        }
        members
            .into_iter()
            .map(|vertices| {
                let keep = VertexSet::new(vertices.iter().copied());
                let graph = self.induced(&keep).expect("component ids are in range");
                Component { graph, vertices }
            })
            .collect()
    }

    pub fn pendant_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Vertices adjacent to a pendant vertex that are not pendant themselves.
    pub fn quasi_pendant_vertices(&self) -> VertexSet {
        (0..self.n)
            .filter(|&v| self.degree(v) != 1)
            .filter(|&v| self.neighbor_ids(v).any(|w| self.degree(w) == 1))
            .collect()
    }

    /// `self` followed by `other`, whose ids are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &SignedGraph) -> SignedGraph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge {
            u: e.u + shift,
            v: e.v + shift,
            sign: e.sign,
        }));
        Self::from_sorted(self.n + other.n, edges)
    }

    /// Adds vertices and edges; new edges may touch old or new vertices.
    pub fn extend<I>(&self, extra_vertices: usize, extra_edges: I) -> Result<SignedGraph>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let all = self
            .edges
            .iter()
            .map(|e| (e.u, e.v, e.sign))
            .chain(extra_edges)
            .collect::<Vec<_>>();
        SignedGraph::new(self.n + extra_vertices, all)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<SignedGraph> {
        SignedGraph::new(
            self.n,
            self.edges.iter().map(|e| (perm[e.u], perm[e.v], e.sign)),
        )
    }
}

/// Path `0 - 1 - ... - (n-1)`, all Plus.
pub fn path(n: usize) -> SignedGraph {
    SignedGraph::unsigned(n, (1..n).map(|i| (i - 1, i))).expect("path edges are valid")
}

/// Cycle with edges `(i, i+1 mod n)`; `signs[i]` is the sign of edge `i`.
pub fn cycle(n: usize, signs: &[Sign]) -> Result<SignedGraph> {
    if n < 3 {
        return Err(Error::CycleTooShort(n));
    }
    if signs.len() != n {
        return Err(Error::SignCount {
            expected: n,
            got: signs.len(),
        });
    }
    SignedGraph::new(n, (0..n).map(|i| (i, (i + 1) % n, signs[i])))
}

/// Cycle whose edge signs are all `sign`.
pub fn uniform_cycle(n: usize, sign: Sign) -> Result<SignedGraph> {
    cycle(n, &vec![sign; n])
}

/// Star on `n` vertices with center 0.
pub fn star(n: usize) -> SignedGraph {
    SignedGraph::unsigned(n, (1..n).map(|i| (0, i))).expect("star edges are valid")
}

pub fn complete(n: usize) -> SignedGraph {
    SignedGraph::unsigned(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        .expect("complete graph edges are valid")
}
