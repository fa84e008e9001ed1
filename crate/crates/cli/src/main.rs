use std::fmt::Display;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use sgrank::enumerate::{verify_up_to, EnumerationMode, EnumerationSummary, VerifyOptions};
use sgrank::format::{parse_edge_list, write_edge_list};
use sgrank::generator::{generate, BuildRecipe};
use sgrank::linalg::graph_rank;
use sgrank::theorems::{
    analyze, is_lower_optimal_direct, is_lower_optimal_structural, OptimalityReport,
};
use sgrank::SignedGraph;

#[derive(Parser)]
#[command(
    name = "sgrank",
    version,
    about = "Rank, independence number and cycle structure of signed graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one signed edge-list file.
    Analyze {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive check of all signed graphs up to a given order.
    Verify(VerifyArgs),
    /// Write randomly constructed lower-optimal graphs.
    Generate(GenerateArgs),
    /// Adjacency rank and nullity of one signed edge-list file.
    Rank {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    max_order: usize,
    /// Only connected underlying graphs.
    #[arg(long)]
    connected_only: bool,
    /// One signing per switching class instead of all signings.
    #[arg(long)]
    mod_switching: bool,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    json: bool,
    /// Write each counterexample as an edge-list file into this directory.
    #[arg(long)]
    dump: Option<PathBuf>,
    /// Report only one counterexample per isomorphism class.
    #[arg(long)]
    dedup: bool,
}

#[derive(Args)]
struct GenerateArgs {
    /// Recipe JSON file; overrides the inline flags.
    #[arg(long)]
    recipe: Option<PathBuf>,
    /// Comma-separated cycle lengths.
    #[arg(long, value_delimiter = ',')]
    cycles: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    steps: usize,
    #[arg(long, default_value_t = 0)]
    isolated: usize,
    #[arg(long, default_value_t = 2)]
    max_attachments: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of graphs; graph `i` uses seed `seed + i`.
    #[arg(long, default_value_t = 1)]
    count: usize,
    #[arg(long)]
    out: PathBuf,
}

enum Failure {
    /// A graph violated a checked statement.
    Counterexample(String),
    /// Unreadable, malformed or invalid input.
    Input(String),
}

impl Failure {
    fn input(context: impl Display, err: impl Display) -> Self {
        Failure::Input(format!("{context}: {err}"))
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { path, json } => cmd_analyze(&path, json),
        Command::Verify(args) => cmd_verify(args),
        Command::Generate(args) => cmd_generate(args),
        Command::Rank { path, json } => cmd_rank(&path, json),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Counterexample(msg)) => {
            eprintln!("counterexample: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_graph(path: &Path) -> Result<SignedGraph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::input(path.display(), e))?;
    parse_edge_list(&text).map_err(|e| Failure::input(path.display(), e))
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("report serializes")
    );
}

fn join(ids: &[usize]) -> String {
    ids.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn print_report(rep: &OptimalityReport) {
    println!("n             {}", rep.n);
    println!("edges         {}", rep.edges);
    println!("rank          {}", rep.r);
    println!("nullity       {}", rep.nullity);
    println!(
        "alpha         {}  [{}]",
        rep.alpha,
        join(rep.independent_set.as_slice())
    );
    println!("matching      {}", rep.mu);
    println!("cyclomatic    {}", rep.c);
    println!("components    {}", rep.omega);
    println!(
        "bounds        {} <= {} <= {}  ({})",
        rep.lower_bound,
        rep.value,
        rep.upper_bound,
        if rep.bound_ok { "ok" } else { "VIOLATED" }
    );
    println!(
        "lower-optimal direct={} structural={} agreement={}",
        rep.lower_optimal_direct, rep.lower_optimal_structural, rep.agreement
    );
    let w = &rep.structural_witness;
    println!("disjoint      {}", w.cycles_disjoint);
    for cv in &w.cycles {
        println!(
            "cycle         [{}] q={} sign={} {}",
            join(cv.vertices.vertices()),
            cv.length,
            cv.sign,
            if cv.ok { "ok" } else { "bad" }
        );
    }
    if let Some(ledger) = &w.contraction {
        println!(
            "contraction   alpha(T)={} alpha([T])={} c={} {}",
            ledger.alpha_t_g,
            ledger.alpha_t_g_bracket,
            ledger.c,
            if ledger.holds { "holds" } else { "fails" }
        );
    }
}

fn cmd_analyze(path: &Path, json: bool) -> CmdResult {
    let g = read_graph(path)?;
    let rep = analyze(&g);
    if json {
        print_json(&rep);
    } else {
        print_report(&rep);
    }
    if !rep.bound_ok || !rep.agreement {
        return Err(Failure::Counterexample(path.display().to_string()));
    }
    Ok(())
}

#[derive(Serialize)]
struct RankOutput {
    n: usize,
    r: usize,
    nullity: usize,
}

fn cmd_rank(path: &Path, json: bool) -> CmdResult {
    let g = read_graph(path)?;
    let r = graph_rank(&g);
    let out = RankOutput {
        n: g.order(),
        r,
        nullity: g.order() - r,
    };
    if json {
        print_json(&out);
    } else {
        println!("r={} nullity={}", out.r, out.nullity);
    }
    Ok(())
}

fn print_summary(s: &EnumerationSummary) {
    println!("mode        {} / {}", s.graph_class, s.signing_class);
    println!("order  graphs  signings  lower-optimal  violations  mismatches");
    for o in &s.per_order {
        println!(
            "{:>5}  {:>6}  {:>8}  {:>13}  {:>10}  {:>10}",
            o.order,
            o.graphs_visited,
            o.signings_visited,
            o.lower_optimal_count,
            o.bound_violations,
            o.equivalence_mismatches
        );
    }
    println!(
        "total  {:>6}  {:>8}  {:>13}  {:>10}  {:>10}",
        s.graphs_visited,
        s.signings_visited,
        s.lower_optimal_counts().iter().sum::<u64>(),
        s.bound_violations,
        s.equivalence_mismatches
    );
    for cx in &s.counterexamples {
        println!(
            "counterexample ({:?}, order {}, mask {}, signing {}):\n{}",
            cx.kind,
            cx.order,
            cx.mask,
            cx.signing,
            cx.graph.trim_end()
        );
    }
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    let opts = VerifyOptions {
        max_order: args.max_order,
        mode: EnumerationMode {
            connected_only: args.connected_only,
            mod_switching: args.mod_switching,
        },
        workers: args.jobs.max(1),
        dedup_counterexamples: args.dedup,
    };
    let summary = verify_up_to(&opts).map_err(|e| Failure::input("--max-order", e))?;
    if args.json {
        print_json(&summary);
    } else {
        print_summary(&summary);
        eprintln!("elapsed {:.3}s", summary.elapsed.as_secs_f64());
    }
    if let Some(dir) = &args.dump {
        fs::create_dir_all(dir).map_err(|e| Failure::input(dir.display(), e))?;
        for cx in &summary.counterexamples {
            let name = format!("cx_n{}_m{}_s{}.txt", cx.order, cx.mask, cx.signing);
            let path = dir.join(name);
            fs::write(&path, &cx.graph).map_err(|e| Failure::input(path.display(), e))?;
        }
    }
    if summary.is_clean() {
        Ok(())
    } else {
        Err(Failure::Counterexample(format!(
            "{} bound violations, {} equivalence mismatches",
            summary.bound_violations, summary.equivalence_mismatches
        )))
    }
}

#[derive(Serialize)]
struct GeneratedFile {
    file: String,
    seed: u64,
    n: usize,
    edges: usize,
}

#[derive(Serialize)]
struct GenerateManifest {
    recipe: BuildRecipe,
    count: usize,
    graphs: Vec<GeneratedFile>,
}

fn cmd_generate(args: GenerateArgs) -> CmdResult {
    let recipe = match &args.recipe {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::input(path.display(), e))?;
            serde_json::from_str(&text).map_err(|e| Failure::input(path.display(), e))?
        }
        None => BuildRecipe {
            seed: args.seed,
            cycle_specs: args.cycles.clone(),
            isolated_vertices: args.isolated,
            expansion_steps: args.steps,
            max_attachments: args.max_attachments,
        },
    };
    recipe.validate().map_err(|e| Failure::input("recipe", e))?;
    fs::create_dir_all(&args.out).map_err(|e| Failure::input(args.out.display(), e))?;
    let width = args.count.saturating_sub(1).to_string().len().max(3);
    let mut graphs = Vec::with_capacity(args.count);
    for i in 0..args.count {
        let seed = recipe.seed.wrapping_add(i as u64);
        let g = generate(&BuildRecipe {
            seed,
            ..recipe.clone()
        })
        .map_err(|e| Failure::input("recipe", e))?;
        if !is_lower_optimal_direct(&g) || !is_lower_optimal_structural(&g).0 {
            return Err(Failure::Counterexample(format!(
                "seed {seed}:\n{}",
                write_edge_list(&g)
            )));
        }
        let file = format!("graph_{i:0width$}.txt");
        let path = args.out.join(&file);
        fs::write(&path, write_edge_list(&g)).map_err(|e| Failure::input(path.display(), e))?;
        graphs.push(GeneratedFile {
            file,
            seed,
            n: g.order(),
            edges: g.size(),
        });
    }
    let manifest = GenerateManifest {
        recipe,
        count: args.count,
        graphs,
    };
    let path = args.out.join("recipe.json");
    let text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    fs::write(&path, text + "\n").map_err(|e| Failure::input(path.display(), e))?;
    println!("wrote {} graphs to {}", args.count, args.out.display());
    Ok(())
}
