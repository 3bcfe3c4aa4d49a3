//! Command-line front end: thin argument parsing over the library.
//!
//! Exit codes: 0 = colourable / success, 1 = uncolourable or solver failure,
//! 2 = usage, parse or budget error.

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand};
use conflict_colouring::bounds::{
    bound_adaptable_edges, bound_adaptable_surface, bound_edges, bound_max_degree, bound_surface,
    heawood_orientation_bound, lower_bound_avg_degree, BoundConstants, HeawoodBound,
};
use conflict_colouring::model::Colouring;
use conflict_colouring::reductions::check_adapted;
use conflict_colouring::report::{
    run_bench, run_solver, SolveReport, SolverChoice, Verdict, SCHEMA_VERSION,
};
use conflict_colouring::solvers::{split_adaptable, two_phase, SearchLimits, TwoPhaseParams};
use conflict_colouring::{adversary, io};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

#[derive(Parser)]
#[command(name = "conflict", version, about = "Conflict colouring solvers and generators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance file with a chosen solver.
    Solve {
        file: PathBuf,
        /// exact | orient | lll | two-phase | split
        #[arg(long)]
        solver: String,
        /// Mandatory for randomized solvers; never auto-generated.
        #[arg(long)]
        seed: Option<u64>,
        /// Resample cap for randomized solvers.
        #[arg(long)]
        cap: Option<u64>,
        /// two-phase regime: paper enforces the guarantee gates.
        #[arg(long, default_value = "desk")]
        mode: String,
        /// Node budget for the exact solver.
        #[arg(long)]
        node_budget: Option<u64>,
        /// Time budget for the exact solver, in milliseconds.
        #[arg(long)]
        time_budget_ms: Option<u64>,
        /// Emit the machine-readable report instead of the human one.
        #[arg(long)]
        json: bool,
        /// Write the colouring (re-verified first) to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a colouring file against an instance file.
    Verify { file: PathBuf, colouring: PathBuf },
    /// Generate an instance file.
    Gen {
        /// two-vertex | star | random | complete | planar
        #[arg(long)]
        family: String,
        /// Colour budget (embedding budget for two-vertex and star).
        #[arg(long)]
        k: Option<usize>,
        /// Multiplicity (star bundles, complete edges, random cap).
        #[arg(long)]
        mu: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Number of hub vertices for the random family.
        #[arg(long, default_value_t = 0)]
        hubs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Exact conflict choosability of an instance file's graph.
    ExactCh {
        file: PathBuf,
        #[arg(long)]
        kmax: usize,
        /// Work budget for the enumeration guard.
        #[arg(long, default_value_t = 1e8)]
        budget: f64,
    },
    /// Evaluate a closed-form bound.
    Bounds {
        /// max-degree | avg-degree-lower | edges | surface |
        /// adaptable-edges | adaptable-surface | heawood
        #[arg(long)]
        formula: String,
        #[arg(long)]
        delta: Option<u64>,
        #[arg(long)]
        d: Option<f64>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long, default_value_t = 1)]
        mu: u64,
        #[arg(long)]
        g: Option<u64>,
        #[arg(long, default_value_t = 1.0)]
        c1: f64,
        #[arg(long, default_value_t = 1.0)]
        c2: f64,
        #[arg(long, default_value_t = 1.0)]
        c3: f64,
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        #[arg(long, default_value_t = std::f64::consts::E)]
        log_base: f64,
    },
    /// Run a solver matrix over a corpus directory of instance files.
    Bench {
        #[arg(long)]
        corpus: PathBuf,
        /// Comma-separated: exact,orient,lll,two-phase
        #[arg(long)]
        solvers: String,
        /// Comma-separated seed list.
        #[arg(long)]
        seeds: String,
        #[arg(long)]
        cap: Option<u64>,
        /// Write the machine-readable table here.
        #[arg(long)]
        json_out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Solve { file, solver, seed, cap, mode, node_budget, time_budget_ms, json, out } => {
            cmd_solve(&file, &solver, seed, cap, &mode, node_budget, time_budget_ms, json, out)
        }
        Command::Verify { file, colouring } => cmd_verify(&file, &colouring),
        Command::Gen { family, k, mu, n, m, hubs, seed, out } => {
            cmd_gen(&family, k, mu, n, m, hubs, seed, &out)
        }
        Command::ExactCh { file, kmax, budget } => cmd_exact_ch(&file, kmax, budget),
        Command::Bounds { formula, delta, d, m, mu, g, c1, c2, c3, c, log_base } => {
            let consts = BoundConstants { c1, c2, c3, c, log_base };
            cmd_bounds(&formula, delta, d, m, mu, g, &consts)
        }
        Command::Bench { corpus, solvers, seeds, cap, json_out } => {
            cmd_bench(&corpus, &solvers, &seeds, cap, json_out)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_solve(
    file: &Path,
    solver: &str,
    seed: Option<u64>,
    cap: Option<u64>,
    mode: &str,
    node_budget: Option<u64>,
    time_budget_ms: Option<u64>,
    json: bool,
    out: Option<PathBuf>,
) -> anyhow::Result<ExitCode> {
    if mode != "desk" && mode != "paper" {
        bail!("unknown mode '{mode}' (expected paper or desk)");
    }
    let randomized = matches!(solver, "lll" | "two-phase" | "split");
    if randomized && seed.is_none() {
        bail!("--seed is required for randomized solvers");
    }
    let seed = seed.unwrap_or(0);

    if solver == "split" {
        return cmd_solve_split(file, seed, json, out);
    }

    let choice = SolverChoice::parse(solver).ok_or_else(|| {
        anyhow!("unknown solver '{solver}' (expected exact, orient, lll, two-phase or split)")
    })?;
    let inst = io::read_instance(file).with_context(|| format!("reading {}", file.display()))?;
    let limits = SearchLimits {
        max_nodes: node_budget,
        max_time: time_budget_ms.map(Duration::from_millis),
    };

    let report = if choice == SolverChoice::TwoPhase && mode == "paper" {
        // Paper mode enforces the guarantee gates; infeasibility is a usage
        // error, not a solver failure.
        let start = Instant::now();
        let stats = inst.graph().stats();
        let scale = (2.0 * stats.max_multiplicity as f64 * stats.m as f64).sqrt().max(1.0);
        let params = TwoPhaseParams::paper(scale, 1.0, cap.unwrap_or(1_000_000));
        match two_phase(&inst, &params, seed) {
            Ok(result) => {
                let valid = inst.validate_colouring(&result.colouring)?.is_empty();
                SolveReport {
                    schema_version: SCHEMA_VERSION,
                    solver: "two-phase".into(),
                    verdict: Verdict::Colourable,
                    colouring: Some(result.colouring.into_vec()),
                    valid: Some(valid),
                    nodes: None,
                    resamples: Some(result.dense_resamples + result.sparse_resamples),
                    wall_ms: start.elapsed().as_secs_f64() * 1000.0,
                    stats,
                }
            }
            Err(e) => bail!("two-phase paper mode: {e}"),
        }
    } else {
        run_solver(&inst, choice, seed, cap, &limits)
    };

    if let (Some(path), Some(colours)) = (&out, &report.colouring) {
        let colouring = Colouring::new(colours.clone());
        let violations = inst.validate_colouring(&colouring)?;
        if !violations.is_empty() {
            bail!("refusing to write an invalid colouring");
        }
        io::write_colouring(path, &colouring)?;
    }

    if json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        print!("{}", report.human());
    }
    Ok(ExitCode::from(report.verdict.exit_code() as u8))
}

fn cmd_solve_split(
    file: &Path,
    seed: u64,
    json: bool,
    out: Option<PathBuf>,
) -> anyhow::Result<ExitCode> {
    let a = io::read_adaptable(file).with_context(|| format!("reading {}", file.display()))?;
    match split_adaptable(&a, seed) {
        Ok(result) => {
            let valid = check_adapted(&a, &result.colours)?;
            if let Some(path) = out {
                if !valid {
                    bail!("refusing to write a non-adapted colouring");
                }
                io::write_colouring(&path, &Colouring::new(result.colours.clone()))?;
            }
            if json {
                let payload = serde_json::json!({
                    "schema_version": SCHEMA_VERSION,
                    "solver": "split",
                    "verdict": "colourable",
                    "colouring": result.colours,
                    "valid": valid,
                    "resamples": result.resamples,
                    "min_overlap": result.min_overlap,
                    "bipartition_attempts": result.bipartition_attempts,
                    "stats": a.graph().stats(),
                });
                println!("{}", serde_json::to_string_pretty(&payload)?);
            } else {
                println!("solver:    split");
                println!("verdict:   colourable");
                println!("re-check:  {}", if valid { "adapted" } else { "NOT ADAPTED" });
                println!("overlap:   {:?}", result.min_overlap);
                println!("resamples: {}", result.resamples);
            }
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => {
            eprintln!("split failed: {e}");
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_verify(file: &Path, colouring: &Path) -> anyhow::Result<ExitCode> {
    let inst = io::read_instance(file).with_context(|| format!("reading {}", file.display()))?;
    let c = io::read_colouring(colouring)
        .with_context(|| format!("reading {}", colouring.display()))?;
    let violations = inst.validate_colouring(&c)?;
    if violations.is_empty() {
        println!("valid");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("invalid: {} conflict edge(s): {:?}", violations.edges.len(), violations.edges);
        Ok(ExitCode::from(1))
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    family: &str,
    k: Option<usize>,
    mu: Option<usize>,
    n: Option<usize>,
    m: Option<usize>,
    hubs: usize,
    seed: u64,
    out: &Path,
) -> anyhow::Result<ExitCode> {
    let inst = match family {
        "two-vertex" => {
            let k = k.ok_or_else(|| anyhow!("two-vertex needs --k"))?;
            adversary::gen_two_vertex(k)
        }
        "star" => {
            let mu = mu.ok_or_else(|| anyhow!("star needs --mu"))?;
            let inst = adversary::gen_star(mu);
            match k {
                Some(k) => inst.with_budget(k)?,
                None => inst,
            }
        }
        "random" => {
            let n = n.ok_or_else(|| anyhow!("random needs --n"))?;
            let m = m.ok_or_else(|| anyhow!("random needs --m"))?;
            let k = k.ok_or_else(|| anyhow!("random needs --k"))?;
            let g = adversary::gen_random_multigraph(n, m, mu.unwrap_or(1), hubs, seed)?;
            adversary::gen_random_partition(&g, k, seed ^ 0x9e37_79b9_7f4a_7c15)
        }
        "complete" => {
            let n = n.ok_or_else(|| anyhow!("complete needs --n"))?;
            let k = k.ok_or_else(|| anyhow!("complete needs --k"))?;
            let g = adversary::gen_complete_multigraph(n, mu.unwrap_or(1))?;
            adversary::gen_random_partition(&g, k, seed)
        }
        "planar" => {
            let n = n.ok_or_else(|| anyhow!("planar needs --n"))?;
            let k = k.ok_or_else(|| anyhow!("planar needs --k"))?;
            let g = adversary::gen_planar_triangulation(n, seed)?;
            adversary::gen_random_partition(&g, k, seed ^ 0x9e37_79b9_7f4a_7c15)
        }
        other => bail!("unknown family '{other}'"),
    };
    io::write_instance(out, &inst)?;
    let stats = inst.graph().stats();
    println!(
        "wrote {} (n={}, m={}, mu={}, k={})",
        out.display(),
        stats.n,
        stats.m,
        stats.max_multiplicity,
        inst.k()
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_exact_ch(file: &Path, kmax: usize, budget: f64) -> anyhow::Result<ExitCode> {
    let inst = io::read_instance(file).with_context(|| format!("reading {}", file.display()))?;
    let result = adversary::exact_choosability(inst.graph(), kmax, budget)?;
    println!("{result}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_bounds(
    formula: &str,
    delta: Option<u64>,
    d: Option<f64>,
    m: Option<u64>,
    mu: u64,
    g: Option<u64>,
    consts: &BoundConstants,
) -> anyhow::Result<ExitCode> {
    let need =
        |opt: Option<u64>, flag: &str| opt.ok_or_else(|| anyhow!("formula '{formula}' needs --{flag}"));
    match formula {
        "max-degree" => {
            let b = bound_max_degree(need(delta, "delta")?)?;
            println!("max-degree  ceil(sqrt(e(2*delta-1)))  real={} colours={}", b.raw, b.colours);
        }
        "avg-degree-lower" => {
            let d = d.ok_or_else(|| anyhow!("formula 'avg-degree-lower' needs --d"))?;
            let b = lower_bound_avg_degree(d)?;
            println!("avg-degree-lower  floor(sqrt(d/ln d))  real={} colours={}", b.raw, b.colours);
        }
        "edges" => {
            let b = bound_edges(need(m, "m")?, mu, consts)?;
            println!(
                "edges  ceil(C2*(mu*m)^(1/4)*log(mu*m))  real={} colours={}",
                b.raw, b.colours
            );
        }
        "surface" => {
            let b = bound_surface(need(g, "g")?, mu, consts)?;
            println!(
                "surface  ceil(max(C1*sqrt(mu)*(g+1)^(1/4)*log(mu^2(g+2)), 8mu))  real={} colours={}",
                b.raw, b.colours
            );
        }
        "adaptable-edges" => {
            let b = bound_adaptable_edges(need(m, "m")?, mu)?;
            let note = if b.below_threshold { "  [below the m >= 2^16 guarantee]" } else { "" };
            println!(
                "adaptable-edges  ceil(2^(11/4)*sqrt(e)*(mu*m)^(1/4))  real={} colours={}{}",
                b.bound.raw, b.bound.colours, note
            );
        }
        "adaptable-surface" => {
            let b = bound_adaptable_surface(need(g, "g")?, mu, consts)?;
            println!(
                "adaptable-surface  ceil(C3*sqrt(mu)*(g+1)^(1/4))  real={} colours={}",
                b.raw, b.colours
            );
        }
        "heawood" => match heawood_orientation_bound(need(g, "g")?) {
            HeawoodBound::Planar { bound, triangle_free } => {
                println!("heawood  planar case  bound={bound} triangle_free={triangle_free}");
            }
            h @ HeawoodBound::Surface { heawood, .. } => {
                println!(
                    "heawood  H/2+1 with H=floor((7+sqrt(24g+1))/2)  H={} real={} floored={}",
                    heawood,
                    h.value(),
                    h.floored()
                );
            }
        },
        other => bail!("unknown formula '{other}'"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(
    corpus: &Path,
    solvers: &str,
    seeds: &str,
    cap: Option<u64>,
    json_out: Option<PathBuf>,
) -> anyhow::Result<ExitCode> {
    let solvers: Vec<SolverChoice> = solvers
        .split(',')
        .filter(|s| !s.is_empty())
        .map(|s| {
            SolverChoice::parse(s.trim()).ok_or_else(|| {
                anyhow!("unknown bench solver '{s}' (split runs on adaptable files only)")
            })
        })
        .collect::<anyhow::Result<_>>()?;
    let seeds: Vec<u64> = seeds
        .split(',')
        .filter(|s| !s.is_empty())
        .map(|s| s.trim().parse::<u64>().context("bad seed"))
        .collect::<anyhow::Result<_>>()?;

    let mut corpus_files: Vec<PathBuf> = std::fs::read_dir(corpus)
        .with_context(|| format!("reading corpus {}", corpus.display()))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    corpus_files.sort();

    let mut instances = Vec::new();
    for path in corpus_files {
        let inst =
            io::read_instance(&path).with_context(|| format!("reading {}", path.display()))?;
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        instances.push((name, inst));
    }

    let report = run_bench(&instances, &solvers, &seeds, cap, &SearchLimits::none());
    print!("{}", report.human_table());
    if let Some(path) = json_out {
        std::fs::write(&path, report.to_json())?;
        eprintln!("wrote {}", path.display());
    }
    Ok(ExitCode::SUCCESS)
}
