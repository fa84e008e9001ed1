//! Exhaustive sweep over all labeled signed graphs of bounded order.
//!
//! Underlying graphs on `n` vertices are indexed by edge-set bitmask, bit
//! `k` standing for the `k`-th pair `(i, j)`, `i < j`, in lexicographic
//! order. Each worker owns a contiguous mask range end to end (the graph and
//! all of its signings) and returns a partial tally; tallies are merged in
//! range order, so the summary does not depend on the worker count.

use std::thread;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::cycles::spanning_forest;
use crate::error::{Error, Result};
use crate::format::write_edge_list;
use crate::graph::{Sign, SignedGraph};
use crate::theorems::{bound_check, is_lower_optimal_structural};

/// Largest order accepted by the enumerator.
pub const ORDER_CAP: usize = 10;

/// Counterexamples kept in a summary.
pub const COUNTEREXAMPLE_LIMIT: usize = 100;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

fn check_order(n: usize) -> Result<()> {
    if (1..=ORDER_CAP).contains(&n) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange { n, cap: ORDER_CAP })
    }
}

/// Number of edge-set masks for order `n`.
pub fn mask_count(n: usize) -> u64 {
    1u64 << pairs(n).len()
}

/// The all-Plus graph on `n` vertices with edge set `mask`.
pub fn graph_from_mask(n: usize, mask: u64) -> SignedGraph {
    let edges = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|&(k, _)| mask >> k & 1 == 1)
        .map(|(_, p)| p);
    SignedGraph::unsigned(n, edges).expect("pairs are distinct and in range")
}

/// Every labeled simple graph on `n` vertices, in mask order.
pub fn enumerate_underlying(
    n: usize,
    connected_only: bool,
) -> Result<impl Iterator<Item = SignedGraph>> {
    check_order(n)?;
    Ok((0..mask_count(n))
        .map(move |mask| graph_from_mask(n, mask))
        .filter(move |g| !connected_only || g.is_connected()))
}

/// Edge indices (into `g.edges()`) whose signs vary during enumeration.
fn free_edges(g: &SignedGraph, mod_switching: bool) -> Vec<usize> {
    if mod_switching {
        let tree = spanning_forest(g);
        (0..g.size()).filter(|&i| !tree[i]).collect()
    } else {
        (0..g.size()).collect()
    }
}

/// All signings of `g`, or one per switching class when `mod_switching`.
///
/// Switching-class representatives keep the depth-first spanning forest
/// Plus and range over all signs on the remaining `c(G)` edges. Signings
/// are ordered by the bitmask over the free edges.
pub fn enumerate_signings(
    g: &SignedGraph,
    mod_switching: bool,
) -> impl Iterator<Item = SignedGraph> + '_ {
    let free = free_edges(g, mod_switching);
    let mut slot = vec![usize::MAX; g.size()];
    for (bit, &e) in free.iter().enumerate() {
        slot[e] = bit;
    }
    (0u64..1 << free.len()).map(move |bits| {
        let mut idx = 0;
        g.with_signs(|_| {
            let s = slot[idx];
            idx += 1;
            if s != usize::MAX && bits >> s & 1 == 1 {
                Sign::Minus
            } else {
                Sign::Plus
            }
        })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EnumerationMode {
    pub connected_only: bool,
    pub mod_switching: bool,
}

impl EnumerationMode {
    pub fn graph_class(&self) -> &'static str {
        if self.connected_only {
            "labeled-connected"
        } else {
            "labeled-all"
        }
    }

    pub fn signing_class(&self) -> &'static str {
        if self.mod_switching {
            "mod-switching"
        } else {
            "all-signings"
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Violation {
    BoundViolation,
    EquivalenceMismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub order: usize,
    pub mask: u64,
    pub signing: u64,
    pub kind: Violation,
    /// Signed edge-list text.
    pub graph: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct OrderSummary {
    pub order: usize,
    pub graphs_visited: u64,
    pub signings_visited: u64,
    pub lower_optimal_count: u64,
    pub bound_violations: u64,
    pub equivalence_mismatches: u64,
}

impl OrderSummary {
    fn merge(&mut self, other: &OrderSummary) {
        self.graphs_visited += other.graphs_visited;
        self.signings_visited += other.signings_visited;
        self.lower_optimal_count += other.lower_optimal_count;
        self.bound_violations += other.bound_violations;
        self.equivalence_mismatches += other.equivalence_mismatches;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationSummary {
    pub max_order: usize,
    pub graph_class: &'static str,
    pub signing_class: &'static str,
    pub graphs_visited: u64,
    pub signings_visited: u64,
    pub bound_violations: u64,
    pub equivalence_mismatches: u64,
    pub per_order: Vec<OrderSummary>,
    pub counterexamples: Vec<Counterexample>,
    /// Wall-clock time; kept out of the JSON so reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl EnumerationSummary {
    pub fn is_clean(&self) -> bool {
        self.bound_violations == 0 && self.equivalence_mismatches == 0
    }

    /// Lower-optimal signed graphs found at each order `1..=max_order`.
    pub fn lower_optimal_counts(&self) -> Vec<u64> {
        self.per_order
            .iter()
            .map(|o| o.lower_optimal_count)
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_order: usize,
    pub mode: EnumerationMode,
    pub workers: usize,
    /// Drop counterexamples isomorphic to an earlier one.
    pub dedup_counterexamples: bool,
}

/// Verdicts for one signed graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Visit {
    pub bound_ok: bool,
    pub lower_optimal: bool,
    pub agreement: bool,
}

pub fn visit(g: &SignedGraph) -> Visit {
    let bounds = bound_check(g);
    let direct = bounds.lower_attained();
    let (structural, _) = is_lower_optimal_structural(g);
    Visit {
        bound_ok: bounds.bound_ok,
        lower_optimal: direct,
        agreement: direct == structural,
    }
}

struct Partial {
    tally: OrderSummary,
    counterexamples: Vec<Counterexample>,
}

fn sweep_range(n: usize, masks: std::ops::Range<u64>, mode: EnumerationMode) -> Partial {
    let mut tally = OrderSummary {
        order: n,
        ..Default::default()
    };
    let mut counterexamples = Vec::new();
    for mask in masks {
        let g = graph_from_mask(n, mask);
        if mode.connected_only && !g.is_connected() {
            continue;
        }
        tally.graphs_visited += 1;
        for (signing, sg) in enumerate_signings(&g, mode.mod_switching).enumerate() {
            tally.signings_visited += 1;
            let v = visit(&sg);
            tally.lower_optimal_count += u64::from(v.lower_optimal);
            let mut record = |kind| {
                if counterexamples.len() < COUNTEREXAMPLE_LIMIT {
                    counterexamples.push(Counterexample {
                        order: n,
                        mask,
                        signing: signing as u64,
                        kind,
                        graph: write_edge_list(&sg),
                    });
                }
            };
            if !v.bound_ok {
                tally.bound_violations += 1;
                record(Violation::BoundViolation);
            }
            if !v.agreement {
                tally.equivalence_mismatches += 1;
                record(Violation::EquivalenceMismatch);
            }
        }
    }
    Partial {
        tally,
        counterexamples,
    }
}

fn sweep_order(n: usize, mode: EnumerationMode, workers: usize) -> Partial {
    let total = mask_count(n);
    let workers = (workers.max(1) as u64).min(total);
    let chunk = total.div_ceil(workers);
    let ranges: Vec<_> = (0..workers)
        .map(|w| (w * chunk).min(total)..((w + 1) * chunk).min(total))
        .collect();
    let partials: Vec<Partial> = if workers == 1 {
        ranges
            .into_iter()
            .map(|r| sweep_range(n, r, mode))
            .collect()
    } else {
        thread::scope(|s| {
            let handles: Vec<_> = ranges
                .into_iter()
                .map(|r| s.spawn(move || sweep_range(n, r, mode)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        })
    };
    let mut merged = Partial {
        tally: OrderSummary {
            order: n,
            ..Default::default()
        },
        counterexamples: Vec::new(),
    };
    for p in partials {
        merged.tally.merge(&p.tally);
        merged.counterexamples.extend(p.counterexamples);
    }
    merged
}

/// Runs the bound check and the two lower-optimality deciders on every
/// signed graph of order `1..=max_order` in the requested mode.
pub fn verify_up_to(opts: &VerifyOptions) -> Result<EnumerationSummary> {
    check_order(opts.max_order)?;
    let start = Instant::now();
    let mut per_order = Vec::new();
    let mut counterexamples = Vec::new();
    for n in 1..=opts.max_order {
        let p = sweep_order(n, opts.mode, opts.workers);
        per_order.push(p.tally);
        counterexamples.extend(p.counterexamples);
    }
    if opts.dedup_counterexamples {
        counterexamples = dedup_isomorphic(counterexamples);
    }
    counterexamples.truncate(COUNTEREXAMPLE_LIMIT);
    let sum = |f: fn(&OrderSummary) -> u64| per_order.iter().map(f).sum::<u64>();
    Ok(EnumerationSummary {
        max_order: opts.max_order,
        graph_class: opts.mode.graph_class(),
        signing_class: opts.mode.signing_class(),
        graphs_visited: sum(|o| o.graphs_visited),
        signings_visited: sum(|o| o.signings_visited),
        bound_violations: sum(|o| o.bound_violations),
        equivalence_mismatches: sum(|o| o.equivalence_mismatches),
        per_order,
        counterexamples,
        elapsed: start.elapsed(),
    })
}

/// Largest order for which [`signed_isomorphic`] is attempted.
pub const ISOMORPHISM_CAP: usize = 8;

/// Sign-preserving isomorphism test by backtracking over degree-compatible
/// vertex maps. Returns `false` above [`ISOMORPHISM_CAP`] vertices.
pub fn signed_isomorphic(a: &SignedGraph, b: &SignedGraph) -> bool {
    let n = a.order();
    if n != b.order() || a.size() != b.size() || n > ISOMORPHISM_CAP {
        return false;
    }
    let degrees = |g: &SignedGraph| {
        let mut d: Vec<(usize, usize)> = (0..g.order())
            .map(|v| {
                let minus = g
                    .neighbors(v)
                    .iter()
                    .filter(|(_, s)| *s == Sign::Minus)
                    .count();
                (g.degree(v), minus)
            })
            .collect();
        d.sort_unstable();
        d
    };
    if degrees(a) != degrees(b) {
        return false;
    }
    fn extend(a: &SignedGraph, b: &SignedGraph, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let v = map.len();
        if v == a.order() {
            return true;
        }
        for w in 0..b.order() {
            if used[w] || a.degree(v) != b.degree(w) {
                continue;
            }
            let consistent = (0..v).all(|u| a.sign(u, v) == b.sign(map[u], w));
            if !consistent {
                continue;
            }
            map.push(w);
            used[w] = true;
            if extend(a, b, map, used) {
                return true;
            }
            map.pop();
            used[w] = false;
        }
        false
    }
    extend(a, b, &mut Vec::with_capacity(n), &mut vec![false; n])
}

fn dedup_isomorphic(list: Vec<Counterexample>) -> Vec<Counterexample> {
    let mut kept: Vec<(Counterexample, SignedGraph)> = Vec::new();
    for cx in list {
        let g = crate::format::parse_edge_list(&cx.graph).expect("written by write_edge_list");
        let dup = kept
            .iter()
            .any(|(k, h)| k.kind == cx.kind && signed_isomorphic(&g, h));
        if !dup {
            kept.push((cx, g));
        }
    }
    kept.into_iter().map(|(cx, _)| cx).collect()
}
