//! Independence number, matching number and cyclomatic number.
//!
//! All three are properties of the underlying graph; edge signs are ignored.

use serde::Serialize;

use crate::bitset::VSet;
use crate::graph::{SignedGraph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantBundle {
    pub n: usize,
    pub alpha: usize,
    pub mu: usize,
    pub c: usize,
    pub omega: usize,
}

pub fn invariant_bundle(g: &SignedGraph) -> InvariantBundle {
    let omega = g.component_count();
    InvariantBundle {
        n: g.order(),
        alpha: independence_number(g).size,
        mu: matching_number(g),
        c: g.size() + omega - g.order(),
        omega,
    }
}

/// `|E| - n + ω`.
pub fn cyclomatic_number(g: &SignedGraph) -> usize {
    g.size() + g.component_count() - g.order()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndependentSet {
    pub size: usize,
    pub witness: VertexSet,
}

/// Exact independence number with a maximum independent set.
pub fn independence_number(g: &SignedGraph) -> IndependentSet {
    let solver = MisSolver::new(g);
    let best = solver.solve(VSet::full(g.order()));
    IndependentSet {
        size: best.len(),
        witness: VertexSet::new(best),
    }
}

struct MisSolver {
    n: usize,
    nbr: Vec<VSet>,
}

impl MisSolver {
    fn new(g: &SignedGraph) -> Self {
        let n = g.order();
        let nbr = (0..n)
            .map(|v| {
                let mut s = VSet::new(n);
                for w in g.neighbor_ids(v) {
                    s.insert(w);
                }
                s
            })
            .collect();
        MisSolver { n, nbr }
    }

    fn degree_in(&self, v: usize, p: &VSet) -> usize {
        self.nbr[v].intersection_len(p)
    }

    fn solve(&self, p: VSet) -> Vec<usize> {
        let mut best = self.greedy(p.clone());
        let mut cur = Vec::new();
        self.branch(p, &mut cur, &mut best);
        best.sort_unstable();
        best
    }

    /// Repeatedly takes a minimum-degree vertex.
    fn greedy(&self, mut p: VSet) -> Vec<usize> {
        let mut out = Vec::new();
        while !p.is_empty() {
            let v = p
                .iter()
                .min_by_key(|&v| (self.degree_in(v, &p), v))
                .expect("non-empty");
            out.push(v);
            p.remove(v);
            p = p.difference(&self.nbr[v]);
        }
        out
    }

    /// Number of cliques in a greedy clique cover of `p`; bounds α from above.
    fn clique_cover_bound(&self, p: &VSet) -> usize {
        let mut cliques: Vec<VSet> = Vec::new();
        for v in p.iter() {
            match cliques.iter_mut().find(|c| c.is_subset(&self.nbr[v])) {
                Some(c) => c.insert(v),
                None => {
                    let mut c = VSet::new(self.n);
                    c.insert(v);
                    cliques.push(c);
                }
            }
        }
        cliques.len()
    }

    fn split_components(&self, p: &VSet) -> Vec<VSet> {
        let mut left = p.clone();
        let mut out = Vec::new();
        while let Some(s) = left.first() {
            let mut comp = VSet::new(self.n);
            comp.insert(s);
            left.remove(s);
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for y in self.nbr[x].intersection(&left).iter() {
                    left.remove(y);
                    comp.insert(y);
                    stack.push(y);
                }
            }
            out.push(comp);
        }
        out
    }

    fn branch(&self, mut p: VSet, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
        let mark = cur.len();
        // isolated and pendant vertices always belong to some maximum set
        loop {
            let low = p.iter().find(|&v| self.degree_in(v, &p) <= 1);
            let Some(v) = low else { break };
            cur.push(v);
            p.remove(v);
            p = p.difference(&self.nbr[v]);
        }

        if p.is_empty() {
            if cur.len() > best.len() {
                best.clone_from(cur);
            }
        } else if cur.len() + self.clique_cover_bound(&p) > best.len() {
            let comps = self.split_components(&p);
            if comps.len() > 1 {
                let mut total = cur.clone();
                for comp in comps {
                    total.extend(self.solve(comp));
                }
                if total.len() > best.len() {
                    *best = total;
                }
            } else {
                let v = p
                    .iter()
                    .max_by_key(|&v| (self.degree_in(v, &p), std::cmp::Reverse(v)))
                    .expect("non-empty");
                let mut with_v = p.difference(&self.nbr[v]);
                with_v.remove(v);
                cur.push(v);
                self.branch(with_v, cur, best);
                cur.pop();
                p.remove(v);
                self.branch(p, cur, best);
            }
        }
        cur.truncate(mark);
    }
}

/// Maximum matching of the underlying graph as sorted `(u, v)` pairs.
///
/// Edmonds' blossom algorithm: repeated augmenting-path search from each
/// exposed vertex with odd-cycle contraction.
pub fn maximum_matching(g: &SignedGraph) -> Vec<(usize, usize)> {
    Blossom::new(g).run()
}

pub fn matching_number(g: &SignedGraph) -> usize {
    maximum_matching(g).len()
}

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    g: &'a SignedGraph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a SignedGraph) -> Self {
        let n = g.order();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    fn run(mut self) -> Vec<(usize, usize)> {
        let n = self.g.order();
        // greedy warm start
        for v in 0..n {
            if self.mate[v] == NONE {
                if let Some(w) = self.g.neighbor_ids(v).find(|&w| self.mate[w] == NONE) {
                    self.mate[v] = w;
                    self.mate[w] = v;
                }
            }
        }
        for root in 0..n {
            if self.mate[root] != NONE {
                continue;
            }
            let mut v = self.find_path(root);
            while v != NONE {
                let pv = self.parent[v];
                let next = self.mate[pv];
                self.mate[v] = pv;
                self.mate[pv] = v;
                v = next;
            }
        }
        (0..n)
            .filter(|&v| self.mate[v] != NONE && v < self.mate[v])
            .map(|v| (v, self.mate[v]))
            .collect()
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Returns the exposed endpoint of an augmenting path from `root`.
    fn find_path(&mut self, root: usize) -> usize {
        let n = self.g.order();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for i in 0..self.g.degree(v) {
                let to = self.g.neighbors(v)[i].0;
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    queue.push_back(m);
                }
            }
        }
        NONE
    }
}
