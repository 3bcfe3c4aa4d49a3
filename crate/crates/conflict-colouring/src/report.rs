//! Structured run reports and the benchmark harness.
//!
//! Reports are dual-format: a human-readable rendering with wall times, and
//! a versioned machine-readable JSON whose content is fully determined by
//! the inputs and seeds (timings are excluded there so that identical seeds
//! give byte-identical output).

use crate::model::{ConflictInstance, GraphStats};
use crate::solvers::{
    solve_exact, solve_lll, solve_via_orientation, two_phase, ExactOutcome, LllOutcome,
    SearchLimits, TwoPhaseParams, ViaOrientation,
};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::time::Instant;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Colourable,
    Unsatisfiable,
    NotApplicable,
    CapExhausted,
    BudgetExhausted,
}

impl Verdict {
    /// Process exit code: 0 success, 1 failure to colour, 2 budget error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Colourable => 0,
            Verdict::Unsatisfiable | Verdict::NotApplicable | Verdict::CapExhausted => 1,
            Verdict::BudgetExhausted => 2,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Colourable => "colourable",
            Verdict::Unsatisfiable => "unsatisfiable",
            Verdict::NotApplicable => "not-applicable",
            Verdict::CapExhausted => "cap-exhausted",
            Verdict::BudgetExhausted => "budget-exhausted",
        };
        f.write_str(s)
    }
}

/// Known solver choices for `solve` and `bench`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolverChoice {
    Exact,
    Orient,
    Lll,
    TwoPhase,
}

impl SolverChoice {
    pub fn name(&self) -> &'static str {
        match self {
            SolverChoice::Exact => "exact",
            SolverChoice::Orient => "orient",
            SolverChoice::Lll => "lll",
            SolverChoice::TwoPhase => "two-phase",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "exact" => Some(SolverChoice::Exact),
            "orient" => Some(SolverChoice::Orient),
            "lll" => Some(SolverChoice::Lll),
            "two-phase" => Some(SolverChoice::TwoPhase),
            _ => None,
        }
    }

    pub fn is_randomized(&self) -> bool {
        matches!(self, SolverChoice::Lll | SolverChoice::TwoPhase)
    }
}

/// One solver run on one instance.
#[derive(Debug, Clone, Serialize)]
pub struct SolveReport {
    pub schema_version: u32,
    pub solver: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub colouring: Option<Vec<usize>>,
    /// Result of re-validating the emitted colouring.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub valid: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nodes: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resamples: Option<u64>,
    pub wall_ms: f64,
    pub stats: GraphStats,
}

impl SolveReport {
    pub fn human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("solver:    {}\n", self.solver));
        out.push_str(&format!("verdict:   {}\n", self.verdict));
        if let Some(c) = &self.colouring {
            out.push_str(&format!("colouring: {c:?}\n"));
        }
        if let Some(valid) = self.valid {
            out.push_str(&format!("re-check:  {}\n", if valid { "valid" } else { "INVALID" }));
        }
        if let Some(nodes) = self.nodes {
            out.push_str(&format!("nodes:     {nodes}\n"));
        }
        if let Some(resamples) = self.resamples {
            out.push_str(&format!("resamples: {resamples}\n"));
        }
        out.push_str(&format!(
            "graph:     n={} m={} mu={} max_degree={} avg_degree={:.3}\n",
            self.stats.n,
            self.stats.m,
            self.stats.max_multiplicity,
            self.stats.max_degree,
            self.stats.avg_degree
        ));
        out.push_str(&format!("wall_ms:   {:.3}\n", self.wall_ms));
        out
    }
}

/// Runs one solver on one instance and assembles the report. Every emitted
/// colouring is re-validated before being reported.
pub fn run_solver(
    inst: &ConflictInstance,
    choice: SolverChoice,
    seed: u64,
    cap: Option<u64>,
    limits: &SearchLimits,
) -> SolveReport {
    let start = Instant::now();
    let cap = cap.unwrap_or(200 * inst.graph().edge_count() as u64 + 10_000);
    let (verdict, colouring, nodes, resamples) = match choice {
        SolverChoice::Exact => {
            let res = solve_exact(inst, limits);
            match res.outcome {
                ExactOutcome::Colouring(c) => {
                    (Verdict::Colourable, Some(c), Some(res.nodes), None)
                }
                ExactOutcome::Unsatisfiable => {
                    (Verdict::Unsatisfiable, None, Some(res.nodes), None)
                }
                ExactOutcome::BudgetExhausted => {
                    (Verdict::BudgetExhausted, None, Some(res.nodes), None)
                }
            }
        }
        SolverChoice::Orient => match solve_via_orientation(inst) {
            ViaOrientation::Colouring { colouring, .. } => {
                (Verdict::Colourable, Some(colouring), None, None)
            }
            ViaOrientation::NotApplicable { .. } => (Verdict::NotApplicable, None, None, None),
        },
        SolverChoice::Lll => {
            let res = solve_lll(inst, seed, cap);
            match res.outcome {
                LllOutcome::Colouring(c) => {
                    (Verdict::Colourable, Some(c), None, Some(res.resamples))
                }
                LllOutcome::CapExhausted => {
                    (Verdict::CapExhausted, None, None, Some(res.resamples))
                }
            }
        }
        SolverChoice::TwoPhase => {
            let mut params = TwoPhaseParams::desk(inst);
            params.resample_cap = cap;
            match two_phase(inst, &params, seed) {
                Ok(out) => {
                    let resamples = out.dense_resamples + out.sparse_resamples;
                    (Verdict::Colourable, Some(out.colouring), None, Some(resamples))
                }
                Err(_) => (Verdict::CapExhausted, None, None, None),
            }
        }
    };
    let valid = colouring
        .as_ref()
        .map(|c| inst.validate_colouring(c).map(|v| v.is_empty()).unwrap_or(false));
    SolveReport {
        schema_version: SCHEMA_VERSION,
        solver: choice.name().to_string(),
        verdict,
        colouring: colouring.map(|c| c.into_vec()),
        valid,
        nodes,
        resamples,
        wall_ms: start.elapsed().as_secs_f64() * 1000.0,
        stats: inst.graph().stats(),
    }
}

/// One cell of a benchmark matrix. `counter` is nodes for the exact solver
/// and resamples for the randomized ones.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BenchRow {
    pub instance: String,
    pub solver: String,
    pub seed: u64,
    pub verdict: Verdict,
    pub counter: u64,
    #[serde(skip)]
    pub wall_ms: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BenchAggregate {
    pub solver: String,
    pub runs: usize,
    pub successes: usize,
    pub success_rate: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BenchReport {
    pub schema_version: u32,
    pub rows: Vec<BenchRow>,
    pub aggregates: Vec<BenchAggregate>,
}

impl BenchReport {
    /// Canonical machine format: timing-free, so identical seeds give
    /// byte-identical output.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("bench serialization cannot fail")
    }

    pub fn human_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "{:<28} {:<10} {:>6} {:<16} {:>10} {:>9}\n",
            "instance", "solver", "seed", "verdict", "counter", "wall_ms"
        ));
        for r in &self.rows {
            out.push_str(&format!(
                "{:<28} {:<10} {:>6} {:<16} {:>10} {:>9.2}\n",
                r.instance,
                r.solver,
                r.seed,
                r.verdict.to_string(),
                r.counter,
                r.wall_ms
            ));
        }
        out.push('\n');
        for a in &self.aggregates {
            out.push_str(&format!(
                "{}: {}/{} succeeded ({:.1}%)\n",
                a.solver,
                a.successes,
                a.runs,
                100.0 * a.success_rate
            ));
        }
        out
    }
}

/// Runs every (instance, solver, seed) cell, fanning out across threads;
/// rows come back in canonical order regardless of completion order.
pub fn run_bench(
    corpus: &[(String, ConflictInstance)],
    solvers: &[SolverChoice],
    seeds: &[u64],
    cap: Option<u64>,
    limits: &SearchLimits,
) -> BenchReport {
    let mut cells: Vec<(usize, SolverChoice, u64)> = Vec::new();
    for i in 0..corpus.len() {
        for &s in solvers {
            for &seed in seeds {
                cells.push((i, s, seed));
            }
        }
    }

    let workers = std::thread::available_parallelism().map_or(1, |p| p.get()).min(8);
    let chunk = cells.len().div_ceil(workers.max(1)).max(1);
    let mut rows: Vec<BenchRow> = std::thread::scope(|scope| {
        let handles: Vec<_> = cells
            .chunks(chunk)
            .map(|slice| {
                scope.spawn(move || {
                    slice
                        .iter()
                        .map(|&(i, choice, seed)| {
                            let (name, inst) = &corpus[i];
                            let report = run_solver(inst, choice, seed, cap, limits);
                            BenchRow {
                                instance: name.clone(),
                                solver: choice.name().to_string(),
                                seed,
                                verdict: report.verdict,
                                counter: report.nodes.or(report.resamples).unwrap_or(0),
                                wall_ms: report.wall_ms,
                            }
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("bench worker panicked")).collect()
    });
    rows.sort_by(|a, b| {
        (&a.instance, &a.solver, a.seed).cmp(&(&b.instance, &b.solver, b.seed))
    });

    let mut aggregates: Vec<BenchAggregate> = Vec::new();
    for &s in solvers {
        let name = s.name().to_string();
        let runs: Vec<&BenchRow> = rows.iter().filter(|r| r.solver == name).collect();
        let successes = runs.iter().filter(|r| r.verdict == Verdict::Colourable).count();
        let total = runs.len();
        aggregates.push(BenchAggregate {
            solver: name,
            runs: total,
            successes,
            success_rate: if total > 0 { successes as f64 / total as f64 } else { 0.0 },
        });
    }
    aggregates.sort_by(|a, b| a.solver.cmp(&b.solver));
    BenchReport { schema_version: SCHEMA_VERSION, rows, aggregates }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adversary;

    #[test]
    fn exact_report_re_checks_colouring() {
        let inst = adversary::gen_two_vertex(2).with_budget(3).unwrap();
        let report = run_solver(&inst, SolverChoice::Exact, 0, None, &SearchLimits::none());
        assert_eq!(report.verdict, Verdict::Colourable);
        assert_eq!(report.valid, Some(true));
        assert!(report.nodes.unwrap() > 0);
    }

    #[test]
    fn unsatisfiable_report() {
        let inst = adversary::gen_two_vertex(2);
        let report = run_solver(&inst, SolverChoice::Exact, 0, None, &SearchLimits::none());
        assert_eq!(report.verdict, Verdict::Unsatisfiable);
        assert_eq!(report.verdict.exit_code(), 1);
    }

    #[test]
    fn bench_is_deterministic_and_sorted() {
        let corpus: Vec<(String, ConflictInstance)> = (0..4)
            .map(|i| {
                let g = adversary::gen_planar_triangulation(12, i).unwrap();
                (format!("tri-{i}.json"), adversary::gen_random_partition(&g, 4, i))
            })
            .collect();
        let solvers = [SolverChoice::Orient, SolverChoice::Lll];
        let seeds = [1, 2];
        let a = run_bench(&corpus, &solvers, &seeds, None, &SearchLimits::none());
        let b = run_bench(&corpus, &solvers, &seeds, None, &SearchLimits::none());
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.rows.len(), 16);
        let keys: Vec<_> =
            a.rows.iter().map(|r| (r.instance.clone(), r.solver.clone(), r.seed)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn empty_corpus_gives_empty_table() {
        let report = run_bench(&[], &[SolverChoice::Exact], &[1], None, &SearchLimits::none());
        assert!(report.rows.is_empty());
    }
}
