//! Acceptance gate. Every check is an exact integer comparison; each
//! criterion prints one PASS/FAIL line and the process exits nonzero if any
//! criterion fails.

use std::collections::BTreeMap;
use std::process::{Command, ExitCode};
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sgrank::cycles::{cycle_membership, switch, CycleMembership};
use sgrank::enumerate::{
    enumerate_signings, enumerate_underlying, graph_from_mask, mask_count, verify_up_to,
    EnumerationMode, EnumerationSummary, VerifyOptions,
};
use sgrank::generator::{generate, random_recipe};
use sgrank::graph::cycle;
use sgrank::invariants::{cyclomatic_number, independence_number, matching_number};
use sgrank::linalg::{adjacency_matrix, graph_rank, rank_exact, rank_mod_p};
use sgrank::theorems::{
    corollary_suite, extremal_suite, is_lower_optimal_direct, is_lower_optimal_structural,
    lemma_suite, CheckOutcome, Claim, Status,
};
use sgrank::{Sign, SignedGraph, VertexSet};

type Verdict = Result<String, String>;

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> SignedGraph {
    let density: f64 = rng.gen_range(0.05..0.7);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                edges.push((i, j, if rng.gen() { Sign::Minus } else { Sign::Plus }));
            }
        }
    }
    SignedGraph::new(n, edges).unwrap()
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> VertexSet {
    (0..n).filter(|_| rng.gen()).collect()
}

fn sweep(max_order: usize, connected_only: bool, mod_switching: bool) -> EnumerationSummary {
    verify_up_to(&VerifyOptions {
        max_order,
        mode: EnumerationMode {
            connected_only,
            mod_switching,
        },
        workers: 1,
        dedup_counterexamples: false,
    })
    .unwrap()
}

/// Rank of a signed cycle, tabulated by parity, residue and cycle sign.
fn expected_cycle_rank(n: usize, sign: Sign) -> usize {
    match (n % 2, n % 4, sign) {
        (1, _, _) => n,
        (_, 0, Sign::Minus) | (_, 2, Sign::Plus) => n,
        (_, 0, Sign::Plus) | (_, 2, Sign::Minus) => n - 2,
        _ => unreachable!(),
    }
}

fn criterion_1() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut checked = 0;
    for n in 3..=16 {
        let mut signings: Vec<Vec<Sign>> = (0..=n)
            .map(|k| {
                (0..n)
                    .map(|i| if i < k { Sign::Minus } else { Sign::Plus })
                    .collect()
            })
            .collect();
        for _ in 0..16 {
            signings.push(
                (0..n)
                    .map(|_| if rng.gen() { Sign::Minus } else { Sign::Plus })
                    .collect(),
            );
        }
        let mut seen = [false; 2];
        for signs in signings {
            let minus = signs.iter().filter(|&&s| s == Sign::Minus).count();
            let sign = if minus % 2 == 0 {
                Sign::Plus
            } else {
                Sign::Minus
            };
            seen[minus % 2] = true;
            let g = cycle(n, &signs).unwrap();
            let r = rank_exact(&adjacency_matrix(&g));
            if r != expected_cycle_rank(n, sign) {
                return Err(format!("C_{n} with {minus} negative edges has rank {r}"));
            }
            checked += 1;
        }
        if seen != [true, true] {
            return Err(format!("C_{n}: both cycle signs not covered"));
        }
    }
    Ok(format!("{checked} signed cycles, n = 3..16, both signs"))
}

fn random_forest(rng: &mut ChaCha8Rng, n: usize) -> SignedGraph {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        if rng.gen_bool(0.85) {
            let j = rng.gen_range(0..i);
            let (a, b) = (labels[i].min(labels[j]), labels[i].max(labels[j]));
            edges.push((a, b, if rng.gen() { Sign::Minus } else { Sign::Plus }));
        }
    }
    SignedGraph::new(n, edges).unwrap()
}

fn criterion_2() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..500 {
        let n = rng.gen_range(1..=20);
        let t = random_forest(&mut rng, n);
        assert_eq!(cyclomatic_number(&t), 0);
        let (r, m, a) = (
            graph_rank(&t),
            matching_number(&t),
            independence_number(&t).size,
        );
        if r != 2 * m || a + m != n || r + 2 * a != 2 * n {
            return Err(format!("forest #{i} (n = {n}): r = {r}, m = {m}, α = {a}"));
        }
    }
    Ok("500 random signed forests, n <= 20".into())
}

/// Switching classes per order: the sum of `2^c` over labeled graphs.
fn switching_class_count(n: usize) -> u64 {
    (0..mask_count(n))
        .map(|mask| 1u64 << cyclomatic_number(&graph_from_mask(n, mask)))
        .sum()
}

fn criteria_3_4(s6: &EnumerationSummary, s5: &EnumerationSummary) -> (Verdict, Verdict) {
    let expected_classes: u64 = (1..=6).map(switching_class_count).sum();
    let expected_all: u64 = (1..=5u32).map(|n| 3u64.pow(n * (n - 1) / 2)).sum();
    let coverage = if s6.signings_visited != expected_classes {
        Err(format!(
            "mod-switching sweep visited {} of {expected_classes}",
            s6.signings_visited
        ))
    } else if s5.signings_visited != expected_all {
        Err(format!(
            "all-signings sweep visited {} of {expected_all}",
            s5.signings_visited
        ))
    } else {
        Ok(())
    };
    let c3 = coverage.clone().and_then(|_| {
        if s6.bound_violations + s5.bound_violations == 0 {
            Ok(format!(
                "0 bound violations over {} + {} signed graphs",
                s6.signings_visited, s5.signings_visited
            ))
        } else {
            Err(format!(
                "{} + {} bound violations",
                s6.bound_violations, s5.bound_violations
            ))
        }
    });
    let c4 = coverage.and_then(|_| {
        if s6.equivalence_mismatches + s5.equivalence_mismatches == 0 {
            Ok(format!(
                "0 mismatches; {} + {} lower-optimal",
                s6.lower_optimal_counts().iter().sum::<u64>(),
                s5.lower_optimal_counts().iter().sum::<u64>()
            ))
        } else {
            Err(format!(
                "{} + {} mismatches",
                s6.equivalence_mismatches, s5.equivalence_mismatches
            ))
        }
    });
    (c3, c4)
}

fn first_failure(outcomes: &[CheckOutcome]) -> Option<&CheckOutcome> {
    outcomes.iter().find(|o| o.status == Status::Fail)
}

fn criterion_5() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut instances: BTreeMap<Claim, usize> = BTreeMap::new();
    for i in 0..1000 {
        let n = rng.gen_range(1..=12);
        let g = random_graph(&mut rng, n);
        let out = lemma_suite(&g);
        if let Some(f) = first_failure(&out) {
            return Err(format!(
                "graph #{i}: {} failed at {:?}: {}",
                f.claim, f.witness, f.detail
            ));
        }
        for o in out {
            *instances.entry(o.claim).or_default() += o.instances;
        }
    }
    let idle: Vec<_> = instances
        .iter()
        .filter(|(_, &k)| k == 0)
        .map(|(c, _)| c.to_string())
        .collect();
    if !idle.is_empty() {
        return Err(format!("claims never exercised: {}", idle.join(", ")));
    }
    Ok(format!(
        "1000 random graphs, {} claims, {} instances",
        instances.len(),
        instances.values().sum::<usize>()
    ))
}

fn criterion_6() -> Verdict {
    let (mut graphs, mut with_cycles, mut instances) = (0, 0, 0);
    for n in 1..=6 {
        for g in enumerate_underlying(n, false).unwrap() {
            for s in enumerate_signings(&g, true) {
                if !is_lower_optimal_direct(&s) {
                    continue;
                }
                graphs += 1;
                let out = corollary_suite(&s);
                if let Some(f) = first_failure(&out) {
                    return Err(format!(
                        "{} failed at {:?}: {}",
                        f.claim, f.witness, f.detail
                    ));
                }
                if out.iter().all(|o| o.status == Status::Pass) {
                    with_cycles += 1;
                    instances += out.iter().map(|o| o.instances).sum::<usize>();
                }
            }
        }
    }
    if with_cycles == 0 {
        return Err("no lower-optimal graph with a cycle".into());
    }
    Ok(format!(
        "{graphs} lower-optimal graphs, {with_cycles} with cycles, {instances} instances"
    ))
}

fn criterion_7() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut deletions = 0;
    for i in 0..1000 {
        let recipe = random_recipe(&mut rng, 3, 12, 8);
        let g = generate(&recipe).unwrap();
        if !is_lower_optimal_direct(&g) || !is_lower_optimal_structural(&g).0 {
            return Err(format!("recipe #{i} {recipe:?} is not lower-optimal"));
        }
        let ext = extremal_suite(&g);
        let identity = ext
            .iter()
            .find(|o| o.claim == Claim::ContractionIdentity)
            .unwrap();
        if identity.status != Status::Pass {
            return Err(format!(
                "recipe #{i}: contraction identity {:?}: {}",
                identity.status, identity.detail
            ));
        }
        let membership = cycle_membership(&g);
        for u in (0..g.order()).filter(|&u| membership[u] != CycleMembership::None) {
            if !is_lower_optimal_direct(&g.delete_vertex(u).unwrap()) {
                return Err(format!(
                    "recipe #{i}: deleting cycle vertex {u} breaks lower-optimality"
                ));
            }
            deletions += 1;
        }
    }
    Ok(format!("1000 recipes, {deletions} cycle-vertex deletions"))
}

fn criterion_8() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for i in 0..500 {
        let n = rng.gen_range(1..=15);
        let g = random_graph(&mut rng, n);
        let a = adjacency_matrix(&g);
        let r = rank_exact(&a);
        let modular = [3, 5, 7, 11]
            .iter()
            .map(|&p| rank_mod_p(&a, p).unwrap())
            .max()
            .unwrap();
        if r != modular {
            return Err(format!("graph #{i}: exact {r}, modular {modular}"));
        }
        for _ in 0..50 {
            let u = random_subset(&mut rng, n);
            let rs = rank_exact(&adjacency_matrix(&switch(&g, &u)));
            if rs != r {
                return Err(format!("graph #{i}: switching changed rank {r} -> {rs}"));
            }
        }
    }
    Ok("500 random graphs, 4 primes, 50 switchings each".into())
}

fn criterion_9() -> Verdict {
    let run = |jobs: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_sgrank"))
            .args([
                "verify",
                "--max-order",
                "6",
                "--mod-switching",
                "--json",
                "--jobs",
                jobs,
            ])
            .output()
            .expect("run sgrank");
        (out.status.code(), out.stdout)
    };
    let (code1, one) = run("1");
    let (code8, eight) = run("8");
    if code1 != Some(0) || code8 != Some(0) {
        return Err(format!("exit codes {code1:?} and {code8:?}"));
    }
    if one != eight {
        return Err("JSON differs between --jobs 1 and --jobs 8".into());
    }
    Ok(format!("{} identical bytes", one.len()))
}

/// Connected lower-optimal signed graphs, one per switching class, for
/// orders 1..=6. Cross-check: orders 1, 2, 3 and 5 are exactly the labeled
/// trees (`n^(n-2)`); order 4 adds the 3 labeled Plus 4-cycles; order 6
/// adds the 60 labeled Minus 6-cycles and the 360 labeled Plus 4-cycles
/// carrying a pendant path of length 2.
const PINNED: [u64; 6] = [1, 1, 3, 19, 125, 1716];

fn criterion_10(connected: &EnumerationSummary) -> Verdict {
    let got = connected.lower_optimal_counts();
    if got == PINNED {
        Ok(format!("{got:?}"))
    } else {
        Err(format!("got {got:?}, pinned {PINNED:?}"))
    }
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |id: &str, name: &str, start: Instant, v: Verdict| {
        let ms = start.elapsed().as_millis();
        match v {
            Ok(detail) => println!("PASS  criterion {id:>2}  {name}: {detail} ({ms} ms)"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {id:>2}  {name}: {detail} ({ms} ms)");
            }
        }
    };

    let t = Instant::now();
    report("1", "cycle rank table", t, criterion_1());
    let t = Instant::now();
    report("2", "forest identities", t, criterion_2());

    let t = Instant::now();
    let s6 = sweep(6, false, true);
    let s5 = sweep(5, false, false);
    let (c3, c4) = criteria_3_4(&s6, &s5);
    report("3", "bounds, exhaustive", t, c3);
    report("4", "equivalence, exhaustive", t, c4);

    let t = Instant::now();
    report("5", "lemma suite", t, criterion_5());
    let t = Instant::now();
    report("6", "corollary suite", t, criterion_6());
    let t = Instant::now();
    report("7", "generator soundness", t, criterion_7());
    let t = Instant::now();
    report("8", "rank oracle agreement", t, criterion_8());
    let t = Instant::now();
    report("9", "determinism across workers", t, criterion_9());
    let t = Instant::now();
    let connected = sweep(6, true, true);
    report(
        "10",
        "pinned lower-optimal counts",
        t,
        criterion_10(&connected),
    );

    if failed == 0 {
        println!("acceptance: all 10 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
