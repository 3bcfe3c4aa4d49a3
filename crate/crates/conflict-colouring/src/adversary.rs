//! Adversarial and random instance generators, plus the brute-force
//! exact-choosability oracle that the rest of the crate is tested against.
//!
//! The oracle enumerates, for each budget `k`, every local pair assignment
//! (`k^2` choices per edge) and decides each with the exact solver. Colour
//! names at each vertex can be permuted independently, so enumeration pins
//! the first edge's pair to `(1, 1)`; the pruning is itself property-tested
//! against unpruned enumeration. Work budgets are explicit and refusal is
//! loud; the oracle never samples.

use crate::model::{ConflictInstance, Multigraph};
use crate::solvers::{solve_exact, ExactOutcome, SearchLimits};
use crate::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, Ordering};

/// Two vertices joined by `k^2` parallel edges whose pairs enumerate all of
/// `[k]^2` in lexicographic order; uncolourable with `k` colours.
pub fn gen_two_vertex(k: usize) -> ConflictInstance {
    assert!(k >= 1);
    let pairs: Vec<(usize, usize)> =
        (1..=k).flat_map(|a| (1..=k).map(move |b| (a, b))).collect();
    let edges = vec![(0, 1); pairs.len()];
    ConflictInstance::build(2, edges, k, pairs).expect("generator output is valid")
}

/// A star with centre 0 and `mu` leaves, `mu` parallel edges per leaf; the
/// bundle to leaf `i` carries every pair with `i` as the centre's local
/// colour, so the centre cannot be coloured with budget `mu`.
pub fn gen_star(mu: usize) -> ConflictInstance {
    assert!(mu >= 1);
    let mut edges = Vec::new();
    let mut pairs = Vec::new();
    for leaf in 1..=mu {
        for j in 1..=mu {
            edges.push((0, leaf));
            pairs.push((leaf, j));
        }
    }
    ConflictInstance::build(mu + 1, edges, mu, pairs).expect("generator output is valid")
}

/// Independent uniform pair per edge; deterministic per seed.
pub fn gen_random_partition(g: &Multigraph, k: usize, seed: u64) -> ConflictInstance {
    assert!(k >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pairs: Vec<(usize, usize)> = (0..g.edge_count())
        .map(|_| (rng.random_range(1..=k), rng.random_range(1..=k)))
        .collect();
    ConflictInstance::new(g.clone(), k, pairs).expect("generator output is valid")
}

/// Complete multigraph: every vertex pair joined by `mu` parallel edges.
pub fn gen_complete_multigraph(n: usize, mu: usize) -> Result<Multigraph> {
    if n < 1 || mu < 1 {
        return Err(Error::ArgOutOfDomain {
            what: "gen_complete_multigraph",
            detail: format!("need n >= 1 and mu >= 1, got n={n}, mu={mu}"),
        });
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            for _ in 0..mu {
                edges.push((u, v));
            }
        }
    }
    Multigraph::new(n, edges)
}

/// Random simple planar triangulation by repeated vertex-in-face insertion;
/// `m = 3n - 6`.
pub fn gen_planar_triangulation(n: usize, seed: u64) -> Result<Multigraph> {
    if n < 3 {
        return Err(Error::ArgOutOfDomain {
            what: "gen_planar_triangulation",
            detail: format!("need n >= 3, got {n}"),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    let mut faces = vec![[0usize, 1, 2]];
    for w in 3..n {
        let f = rng.random_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(f);
        edges.push((a, w));
        edges.push((b, w));
        edges.push((c, w));
        faces.push([a, b, w]);
        faces.push([b, c, w]);
        faces.push([a, c, w]);
    }
    Multigraph::new(n, edges)
}

/// Random multigraph with `m` edges, multiplicity capped at `mu_cap`. The
/// first `hubs` vertices attract roughly half of all edge endpoints, which
/// is how test corpora get vertices above the degree-split threshold.
pub fn gen_random_multigraph(
    n: usize,
    m: usize,
    mu_cap: usize,
    hubs: usize,
    seed: u64,
) -> Result<Multigraph> {
    if n < 2 && m > 0 {
        return Err(Error::ArgOutOfDomain {
            what: "gen_random_multigraph",
            detail: format!("need n >= 2 for any edge, got n={n}"),
        });
    }
    if mu_cap < 1 && m > 0 {
        return Err(Error::ArgOutOfDomain {
            what: "gen_random_multigraph",
            detail: "multiplicity cap must be at least 1".into(),
        });
    }
    let capacity = mu_cap.saturating_mul(n * (n - 1) / 2);
    if m > capacity {
        return Err(Error::ArgOutOfDomain {
            what: "gen_random_multigraph",
            detail: format!("{m} edges exceed capacity {capacity}"),
        });
    }
    let hubs = hubs.min(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut mult: HashMap<(usize, usize), usize> = HashMap::new();
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let u = if hubs > 0 && rng.random_bool(0.5) {
            rng.random_range(0..hubs)
        } else {
            rng.random_range(0..n)
        };
        let v = rng.random_range(0..n);
        if u == v {
            continue;
        }
        let key = (u.min(v), u.max(v));
        let count = mult.entry(key).or_insert(0);
        if *count >= mu_cap {
            continue;
        }
        *count += 1;
        edges.push((u, v));
    }
    Multigraph::new(n, edges)
}

/// Random simple graph (multiplicity 1), optionally hub-skewed.
pub fn gen_random_simple_graph(n: usize, m: usize, hubs: usize, seed: u64) -> Result<Multigraph> {
    gen_random_multigraph(n, m, 1, hubs, seed)
}

/// Random multigraph with every degree at most `max_degree`; edges that
/// cannot be placed after a bounded number of tries are skipped, so the
/// result may have fewer than `m` edges on saturated inputs.
pub fn gen_random_bounded_degree(n: usize, m: usize, max_degree: usize, seed: u64) -> Multigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut degree = vec![0usize; n];
    if n >= 2 {
        for _ in 0..m {
            for _ in 0..64 {
                let u = rng.random_range(0..n);
                let v = rng.random_range(0..n);
                if u == v || degree[u] >= max_degree || degree[v] >= max_degree {
                    continue;
                }
                degree[u] += 1;
                degree[v] += 1;
                edges.push((u, v));
                break;
            }
        }
    }
    Multigraph::new(n, edges).expect("generator output is valid")
}

/// Uniform labels in `[1, k]`, one per edge.
pub fn random_labels(m: usize, k: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..m).map(|_| rng.random_range(1..=k)).collect()
}

/// Verdict of the exact-choosability oracle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Choosability {
    Exact(usize),
    GreaterThan(usize),
}

impl Choosability {
    pub fn value(&self) -> Option<usize> {
        match self {
            Choosability::Exact(k) => Some(*k),
            Choosability::GreaterThan(_) => None,
        }
    }
}

impl std::fmt::Display for Choosability {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Choosability::Exact(k) => write!(f, "{k}"),
            Choosability::GreaterThan(k) => write!(f, ">{k}"),
        }
    }
}

/// Estimated enumeration work for the guard: `k^(2m) * k^n`.
fn oracle_work(k: usize, m: usize, n: usize) -> f64 {
    (k as f64).powi(2 * m as i32) * (k as f64).powi(n as i32)
}

/// The least `k <= k_max` for which every local `k`-partition of `g` admits
/// a colouring, determined by full enumeration with the first edge's pair
/// pinned to `(1, 1)`.
pub fn exact_choosability(g: &Multigraph, k_max: usize, work_budget: f64) -> Result<Choosability> {
    if k_max < 1 {
        return Err(Error::ArgOutOfDomain {
            what: "exact_choosability",
            detail: "k_max must be at least 1".into(),
        });
    }
    let estimated = oracle_work(k_max, g.edge_count(), g.vertex_count());
    if estimated > work_budget {
        return Err(Error::WorkBudgetExceeded { estimated, budget: work_budget });
    }
    for k in 1..=k_max {
        if all_partitions_colourable(g, k, true) {
            return Ok(Choosability::Exact(k));
        }
    }
    Ok(Choosability::GreaterThan(k_max))
}

/// Decides whether every local `k`-partition of `g` is colourable.
/// `prune_symmetry` pins the first edge's pair to `(1, 1)`; the unpruned
/// path exists to property-test the pruning itself.
pub fn all_partitions_colourable(g: &Multigraph, k: usize, prune_symmetry: bool) -> bool {
    let m = g.edge_count();
    if m == 0 {
        return true;
    }
    let choices = k * k;
    let free_edges = if prune_symmetry { m - 1 } else { m };
    if free_edges == 0 {
        return colourable(&assemble(g, k, &[], prune_symmetry));
    }
    // Fan out over the first free edge's pair when the enumeration is big
    // enough to be worth it.
    let outer_work = (choices as f64).powi(free_edges as i32 - 1);
    let workers = std::thread::available_parallelism().map_or(1, |p| p.get());
    if workers > 1 && choices > 1 && outer_work > 4096.0 {
        let found_unsat = AtomicBool::new(false);
        std::thread::scope(|scope| {
            for first in 0..choices {
                let found_unsat = &found_unsat;
                scope.spawn(move || {
                    if enumerate_range(g, k, prune_symmetry, free_edges, first, found_unsat) {
                        found_unsat.store(true, Ordering::Relaxed);
                    }
                });
            }
        });
        !found_unsat.load(Ordering::Relaxed)
    } else {
        let found_unsat = AtomicBool::new(false);
        for first in 0..choices {
            if enumerate_range(g, k, prune_symmetry, free_edges, first, &found_unsat) {
                return false;
            }
        }
        true
    }
}

/// Enumerates all assignments whose first free edge takes `first`; returns
/// true when an uncolourable partition is found.
fn enumerate_range(
    g: &Multigraph,
    k: usize,
    prune_symmetry: bool,
    free_edges: usize,
    first: usize,
    stop: &AtomicBool,
) -> bool {
    let choices = k * k;
    let mut digits = vec![0usize; free_edges];
    digits[0] = first;
    let mut checked = 0u64;
    loop {
        if checked.is_multiple_of(64) && stop.load(Ordering::Relaxed) {
            return false;
        }
        checked += 1;
        let inst = assemble(g, k, &digits, prune_symmetry);
        if !colourable(&inst) {
            return true;
        }
        // Advance the odometer over digits[1..].
        let mut i = 1;
        loop {
            if i >= free_edges {
                return false;
            }
            digits[i] += 1;
            if digits[i] < choices {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Builds the instance for one enumeration state: an optional pinned
/// `(1, 1)` on edge 0 followed by one pair per free edge, decoded from the
/// digit `d` as `(d / k + 1, d % k + 1)`.
fn assemble(g: &Multigraph, k: usize, digits: &[usize], prune_symmetry: bool) -> ConflictInstance {
    let mut pairs = Vec::with_capacity(g.edge_count());
    if prune_symmetry && g.edge_count() > 0 {
        pairs.push((1, 1));
    }
    for &d in digits {
        pairs.push((d / k + 1, d % k + 1));
    }
    debug_assert_eq!(pairs.len(), g.edge_count());
    ConflictInstance::new(g.clone(), k, pairs).expect("enumerated pairs are in range")
}

fn colourable(inst: &ConflictInstance) -> bool {
    matches!(
        solve_exact(inst, &SearchLimits::none()).outcome,
        ExactOutcome::Colouring(_)
    )
}

/// Samples random partitions until the exact solver declares one
/// unsatisfiable; `Ok(None)` after `trials` failures. Budget exhaustion in
/// the exact solver propagates as an error.
pub fn find_hard_partition(
    g: &Multigraph,
    k: usize,
    trials: u64,
    seed: u64,
    limits: &SearchLimits,
) -> Result<Option<ConflictInstance>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let trial_seed: u64 = rng.random();
        let inst = gen_random_partition(g, k, trial_seed);
        match solve_exact(&inst, limits).outcome {
            ExactOutcome::Unsatisfiable => return Ok(Some(inst)),
            ExactOutcome::Colouring(_) => {}
            ExactOutcome::BudgetExhausted => return Err(Error::SearchBudgetExhausted),
        }
    }
    Ok(None)
}
