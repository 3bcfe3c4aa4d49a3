//! Two-phase degree-split pipeline.
//!
//! Vertices of degree at least sqrt(2*mu*m) form the dense side; both the
//! dense and the sparse induced multigraphs then have maximum degree at most
//! sqrt(2*mu*m). The dense side is coloured by Bernoulli colour selection
//! plus resampling of three bad-event families (a dense vertex with no
//! selected colour; a dense edge with both local colours selected; a sparse
//! vertex watching too many selected colours), then deselection to one
//! colour per vertex. The sparse side drops everything clashing with the
//! dense choices, trims its palettes, and finishes with the resampling
//! solver at its reduced degree.

use crate::model::{Colouring, ConflictInstance};
use crate::solvers::lll::solve_lll_with_rng;
use crate::solvers::LllOutcome;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PipelineMode {
    /// Enforce the guarantee regime: degree scale at least 2^23 and a colour
    /// budget meeting both phase requirements. One attempt, no retries.
    Paper,
    /// Run the same pipeline at the instance's actual scale; failures retry
    /// with fresh derived seeds (up to 32 attempts).
    Desk,
}

/// Working parameters of the pipeline. The constructors fill in the standard
/// formulas in the degree scale `d`: selection probability `2^-4 / sqrt(d)`,
/// prune and clash caps `sqrt(d)`, dense-phase budget `ceil(C sqrt(d) ln d)`
/// and sparse-phase budget `ceil(sqrt(e(2d-1))) + ceil(sqrt(d))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoPhaseParams {
    pub degree_scale: f64,
    pub select_prob: f64,
    pub prune_cap: f64,
    pub clash_cap: f64,
    pub k_dense: usize,
    pub k_sparse: usize,
    pub resample_cap: u64,
    pub mode: PipelineMode,
}

impl TwoPhaseParams {
    fn from_scale(degree_scale: f64, c: f64, resample_cap: u64, mode: PipelineMode) -> Self {
        let sqrt_d = degree_scale.sqrt();
        let k_dense = (c * sqrt_d * degree_scale.ln()).ceil().max(1.0) as usize;
        let k_sparse = (std::f64::consts::E * (2.0 * degree_scale - 1.0)).sqrt().ceil() as usize
            + sqrt_d.ceil() as usize;
        TwoPhaseParams {
            degree_scale,
            select_prob: (0.0625 / sqrt_d).min(0.5),
            prune_cap: sqrt_d,
            clash_cap: sqrt_d,
            k_dense,
            k_sparse,
            resample_cap,
            mode,
        }
    }

    /// Guarantee-regime parameters at a prescribed degree scale.
    pub fn paper(degree_scale: f64, c: f64, resample_cap: u64) -> Self {
        Self::from_scale(degree_scale, c, resample_cap, PipelineMode::Paper)
    }

    /// Desk parameters: the degree scale is the instance's own
    /// sqrt(2*mu*m), the scale gate is lifted and failures retry.
    pub fn desk(inst: &ConflictInstance) -> Self {
        let stats = inst.graph().stats();
        let scale = (2.0 * stats.max_multiplicity as f64 * stats.m as f64).sqrt().max(1.0);
        let cap = 200 * stats.m as u64 + 10_000;
        Self::from_scale(scale, 1.0, cap, PipelineMode::Desk)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum TwoPhaseFailure {
    /// Parameters that cannot be run as requested (paper-mode gates).
    Infeasible(String),
    /// Every attempt exhausted a resample cap or a degenerate palette.
    AttemptsExhausted { attempts: u32 },
}

impl fmt::Display for TwoPhaseFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwoPhaseFailure::Infeasible(msg) => write!(f, "infeasible parameters: {msg}"),
            TwoPhaseFailure::AttemptsExhausted { attempts } => {
                write!(f, "no attempt succeeded ({attempts} tried)")
            }
        }
    }
}

impl std::error::Error for TwoPhaseFailure {}

#[derive(Debug, Clone)]
pub struct TwoPhaseColouring {
    pub colouring: Colouring,
    /// Size of the dense side.
    pub dense_vertices: usize,
    /// Attempts beyond the first.
    pub retries: u32,
    pub dense_resamples: u64,
    pub sparse_resamples: u64,
    /// Largest number of dense edges clashing at one sparse vertex after the
    /// dense phase; bounded by the clash cap.
    pub max_clash: usize,
    /// Whether the run satisfied the guarantee-regime parameter gates.
    pub meets_guarantee: bool,
}

struct AttemptOutput {
    colouring: Colouring,
    dense_resamples: u64,
    sparse_resamples: u64,
    max_clash: usize,
}

/// Runs the pipeline. Paper mode refuses degree scales below 2^23 and
/// budgets below the phase requirements; desk mode runs regardless and
/// retries failures with fresh derived seeds.
pub fn two_phase(
    inst: &ConflictInstance,
    params: &TwoPhaseParams,
    seed: u64,
) -> Result<TwoPhaseColouring, TwoPhaseFailure> {
    let k = inst.k();
    let scale_ok = params.degree_scale >= (1u64 << 23) as f64;
    let budget_ok = k >= params.k_dense && k >= params.k_sparse;
    if params.mode == PipelineMode::Paper {
        if !scale_ok {
            return Err(TwoPhaseFailure::Infeasible(format!(
                "degree scale {} is below 2^23",
                params.degree_scale
            )));
        }
        if !budget_ok {
            return Err(TwoPhaseFailure::Infeasible(format!(
                "budget {} is below the phase requirements ({}, {})",
                k, params.k_dense, params.k_sparse
            )));
        }
    }
    let meets_guarantee = scale_ok && budget_ok;

    let stats = inst.graph().stats();
    let threshold = (2.0 * stats.max_multiplicity as f64 * stats.m as f64).sqrt();
    let degrees = inst.graph().degrees();
    let dense: Vec<bool> = degrees.iter().map(|&d| d as f64 >= threshold && stats.m > 0).collect();
    let dense_vertices = dense.iter().filter(|&&b| b).count();

    let max_attempts = match params.mode {
        PipelineMode::Paper => 1,
        PipelineMode::Desk => 32,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..max_attempts {
        rng.set_stream(attempt as u64);
        if let Some(out) = run_attempt(inst, params, &dense, &mut rng) {
            let violations = inst.validate_colouring(&out.colouring).unwrap();
            assert!(violations.is_empty(), "pipeline produced an invalid colouring");
            return Ok(TwoPhaseColouring {
                colouring: out.colouring,
                dense_vertices,
                retries: attempt,
                dense_resamples: out.dense_resamples,
                sparse_resamples: out.sparse_resamples,
                max_clash: out.max_clash,
                meets_guarantee,
            });
        }
    }
    Err(TwoPhaseFailure::AttemptsExhausted { attempts: max_attempts })
}

/// Bad-event keys, ordered: starved dense vertices, then doubly-selected
/// dense edges, then overloaded sparse vertices; within a family by id.
type EventKey = (u8, usize);
const STARVED: u8 = 0;
const DOUBLE: u8 = 1;
const OVERLOAD: u8 = 2;

fn run_attempt(
    inst: &ConflictInstance,
    params: &TwoPhaseParams,
    dense: &[bool],
    rng: &mut ChaCha8Rng,
) -> Option<AttemptOutput> {
    let n = inst.graph().vertex_count();
    let k = inst.k();

    if inst.graph().edge_count() == 0 {
        return Some(AttemptOutput {
            colouring: Colouring::new(vec![1; n]),
            dense_resamples: 0,
            sparse_resamples: 0,
            max_clash: 0,
        });
    }

    // With no dense vertices the pipeline degenerates to the sparse step on
    // the whole instance, i.e. plain resampling.
    if dense.iter().all(|&b| !b) {
        let res = solve_lll_with_rng(inst, rng, params.resample_cap);
        return match res.outcome {
            LllOutcome::Colouring(c) => Some(AttemptOutput {
                colouring: c,
                dense_resamples: 0,
                sparse_resamples: res.resamples,
                max_clash: 0,
            }),
            LllOutcome::CapExhausted => None,
        };
    }

    let dense_ids: Vec<usize> = (0..n).filter(|&v| dense[v]).collect();
    let mut dense_index = vec![usize::MAX; n];
    for (ai, &v) in dense_ids.iter().enumerate() {
        dense_index[v] = ai;
    }
    let na = dense_ids.len();

    // Prune: a colour around a dense vertex is dropped when too many of its
    // dense-to-dense edges carry it. Counts are taken before any removal;
    // removal only shrinks other counts.
    let mut within_count = vec![vec![0u32; k]; na];
    let mut dense_edges = Vec::new();
    for (e, &(u, v)) in inst.graph().edges().iter().enumerate() {
        if dense[u] && dense[v] {
            let (lu, lv) = inst.pair(e);
            within_count[dense_index[u]][lu - 1] += 1;
            within_count[dense_index[v]][lv - 1] += 1;
            dense_edges.push(e);
        }
    }
    let pruned: Vec<Vec<bool>> = within_count
        .iter()
        .map(|counts| counts.iter().map(|&c| c as f64 > params.prune_cap).collect())
        .collect();
    let allowed_count: Vec<usize> =
        pruned.iter().map(|p| p.iter().filter(|&&b| !b).count()).collect();
    if allowed_count.contains(&0) {
        return None;
    }

    // Trial index space: (dense position, colour).
    let trial = |ai: usize, colour: usize| ai * k + (colour - 1);

    // Dense edges whose local colours both survived pruning; others can
    // never end up in conflict.
    let mut live_edges = Vec::new();
    let mut rev_live: HashMap<usize, Vec<usize>> = HashMap::new();
    for &e in &dense_edges {
        let (u, v) = inst.graph().endpoints(e);
        let (lu, lv) = inst.pair(e);
        let (au, av) = (dense_index[u], dense_index[v]);
        if !pruned[au][lu - 1] && !pruned[av][lv - 1] {
            live_edges.push(e);
            rev_live.entry(trial(au, lu)).or_default().push(e);
            rev_live.entry(trial(av, lv)).or_default().push(e);
        }
    }

    // Sparse watch lists: selected colours on dense neighbours.
    let mut watch: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut rev_watch: HashMap<usize, Vec<(usize, i64)>> = HashMap::new();
    for (e, &(u, v)) in inst.graph().edges().iter().enumerate() {
        for (x, y) in [(u, v), (v, u)] {
            if !dense[x] && dense[y] {
                let ly = inst.local_colour(e, y);
                let ay = dense_index[y];
                if !pruned[ay][ly - 1] {
                    watch[x].push((ay, ly));
                }
            }
        }
    }
    for (x, entries) in watch.iter().enumerate() {
        let mut mult: HashMap<usize, i64> = HashMap::new();
        for &(ay, ly) in entries {
            *mult.entry(trial(ay, ly)).or_insert(0) += 1;
        }
        for (t, m) in mult {
            rev_watch.entry(t).or_default().push((x, m));
        }
    }

    // Independent Bernoulli selection of every unpruned colour.
    let mut sel = vec![false; na * k];
    let mut sel_count = vec![0usize; na];
    for ai in 0..na {
        for colour in 1..=k {
            if !pruned[ai][colour - 1] {
                let s = rng.random_bool(params.select_prob);
                sel[trial(ai, colour)] = s;
                if s {
                    sel_count[ai] += 1;
                }
            }
        }
    }
    let mut watch_sel: Vec<i64> = (0..n)
        .map(|x| watch[x].iter().filter(|&&(ay, ly)| sel[trial(ay, ly)]).count() as i64)
        .collect();

    let mut violated: BTreeSet<EventKey> = BTreeSet::new();
    for (ai, &count) in sel_count.iter().enumerate() {
        if count == 0 {
            violated.insert((STARVED, ai));
        }
    }
    for &e in &live_edges {
        let (u, v) = inst.graph().endpoints(e);
        let (lu, lv) = inst.pair(e);
        if sel[trial(dense_index[u], lu)] && sel[trial(dense_index[v], lv)] {
            violated.insert((DOUBLE, e));
        }
    }
    for (x, &count) in watch_sel.iter().enumerate() {
        if count as f64 > params.clash_cap {
            violated.insert((OVERLOAD, x));
        }
    }

    // Resample the lowest violated event until none remain.
    let mut dense_resamples = 0u64;
    let empty_live: Vec<usize> = Vec::new();
    let empty_watch: Vec<(usize, i64)> = Vec::new();
    while let Some(&event) = violated.iter().next() {
        if dense_resamples >= params.resample_cap {
            return None;
        }
        dense_resamples += 1;
        let trials: Vec<(usize, usize)> = match event {
            (STARVED, ai) => {
                (1..=k).filter(|&c| !pruned[ai][c - 1]).map(|c| (ai, c)).collect()
            }
            (DOUBLE, e) => {
                let (u, v) = inst.graph().endpoints(e);
                let (lu, lv) = inst.pair(e);
                vec![(dense_index[u], lu), (dense_index[v], lv)]
            }
            (OVERLOAD, x) => {
                let set: BTreeSet<(usize, usize)> = watch[x].iter().copied().collect();
                set.into_iter().collect()
            }
            _ => unreachable!(),
        };
        for (ai, colour) in trials {
            let t = trial(ai, colour);
            let new = rng.random_bool(params.select_prob);
            if new == sel[t] {
                continue;
            }
            sel[t] = new;
            let delta: i64 = if new { 1 } else { -1 };
            sel_count[ai] = (sel_count[ai] as i64 + delta) as usize;
            if sel_count[ai] == 0 {
                violated.insert((STARVED, ai));
            } else {
                violated.remove(&(STARVED, ai));
            }
            for &e in rev_live.get(&t).unwrap_or(&empty_live) {
                let (u, v) = inst.graph().endpoints(e);
                let (lu, lv) = inst.pair(e);
                if sel[trial(dense_index[u], lu)] && sel[trial(dense_index[v], lv)] {
                    violated.insert((DOUBLE, e));
                } else {
                    violated.remove(&(DOUBLE, e));
                }
            }
            for &(x, mult) in rev_watch.get(&t).unwrap_or(&empty_watch) {
                watch_sel[x] += delta * mult;
                if watch_sel[x] as f64 > params.clash_cap {
                    violated.insert((OVERLOAD, x));
                } else {
                    violated.remove(&(OVERLOAD, x));
                }
            }
        }
    }

    // Deselect all but the lowest selected colour per dense vertex.
    // Deselection cannot introduce double-selection or overload events.
    let mut colours = vec![0usize; n];
    for (ai, &v) in dense_ids.iter().enumerate() {
        let c = (1..=k)
            .find(|&c| !pruned[ai][c - 1] && sel[trial(ai, c)])
            .expect("no starved events remain");
        colours[v] = c;
    }
    for &e in &dense_edges {
        let (u, v) = inst.graph().endpoints(e);
        let (lu, lv) = inst.pair(e);
        assert!(
            !(colours[u] == lu && colours[v] == lv),
            "dense phase left a conflicting edge"
        );
    }

    // Sparse phase: drop clashing colours, trim, relabel, resolve.
    let mut max_clash = 0usize;
    let mut removed: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for (e, &(u, v)) in inst.graph().edges().iter().enumerate() {
        for (x, y) in [(u, v), (v, u)] {
            if !dense[x] && dense[y] && colours[y] == inst.local_colour(e, y) {
                removed[x].insert(inst.local_colour(e, x));
            }
        }
    }
    let mut clash_count = vec![0usize; n];
    for (e, &(u, v)) in inst.graph().edges().iter().enumerate() {
        for (x, y) in [(u, v), (v, u)] {
            if !dense[x] && dense[y] && colours[y] == inst.local_colour(e, y) {
                clash_count[x] += 1;
            }
        }
    }
    for x in 0..n {
        if dense[x] {
            continue;
        }
        assert!(
            clash_count[x] as f64 <= params.clash_cap,
            "sparse vertex {x} exceeds the clash cap"
        );
        max_clash = max_clash.max(clash_count[x]);
    }

    let sparse_ids: Vec<usize> = (0..n).filter(|&v| !dense[v]).collect();
    let mut sparse_resamples = 0u64;
    if !sparse_ids.is_empty() {
        let k_prime = (std::f64::consts::E * (2.0 * params.degree_scale - 1.0))
            .sqrt()
            .ceil()
            .max(1.0) as usize;
        let min_avail = sparse_ids.iter().map(|&x| k - removed[x].len()).min().unwrap();
        let k_sub = min_avail.min(k_prime);
        if k_sub == 0 {
            return None;
        }
        let kept: HashMap<usize, Vec<usize>> = sparse_ids
            .iter()
            .map(|&x| {
                let cols: Vec<usize> =
                    (1..=k).filter(|c| !removed[x].contains(c)).take(k_sub).collect();
                (x, cols)
            })
            .collect();
        let mut sparse_index = vec![usize::MAX; n];
        for (i, &x) in sparse_ids.iter().enumerate() {
            sparse_index[x] = i;
        }
        let mut sub_edges = Vec::new();
        let mut sub_pairs = Vec::new();
        for (e, &(u, v)) in inst.graph().edges().iter().enumerate() {
            if dense[u] || dense[v] {
                continue;
            }
            let (lu, lv) = inst.pair(e);
            let pu = kept[&u].iter().position(|&c| c == lu);
            let pv = kept[&v].iter().position(|&c| c == lv);
            if let (Some(pu), Some(pv)) = (pu, pv) {
                sub_edges.push((sparse_index[u], sparse_index[v]));
                sub_pairs.push((pu + 1, pv + 1));
            }
        }
        let sub = ConflictInstance::build(sparse_ids.len(), sub_edges, k_sub, sub_pairs)
            .expect("sparse sub-instance is valid by construction");
        let res = solve_lll_with_rng(&sub, rng, params.resample_cap);
        sparse_resamples = res.resamples;
        let sub_colouring = match res.outcome {
            LllOutcome::Colouring(c) => c,
            LllOutcome::CapExhausted => return None,
        };
        for (i, &x) in sparse_ids.iter().enumerate() {
            colours[x] = kept[&x][sub_colouring.get(i) - 1];
        }
    }

    Some(AttemptOutput {
        colouring: Colouring::new(colours),
        dense_resamples,
        sparse_resamples,
        max_clash,
    })
}

/// Result of [`lll_feasibility_check`]: per-inequality slack (right side
/// minus left side; nonnegative when the inequality holds).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FeasibilityCheck {
    pub holds: bool,
    pub slack: [f64; 3],
}

/// Evaluates the three dependency inequalities behind the dense-phase event
/// weights at degree scale `d`, exactly as stated (with the
/// `exp(-x - x^2) <= 1 - x <= exp(-x)` envelope already folded in).
pub fn lll_feasibility_check(d: f64) -> FeasibilityCheck {
    assert!(d > 0.0, "degree scale must be positive");
    let sd = d.sqrt();
    let e_slow = (-sd / 64.0).exp();
    let e_fast = (-sd / 32.0).exp();

    let rhs1 = (-1.0 / 128.0 - 1.0 / (16384.0 * d) - 1.0 / 128.0 - 1.0 / (16384.0 * d)
        - 2.0 * d * d * e_slow
        - 4.0 * d * d * e_fast)
        .exp();
    let s1 = rhs1 - 0.5;

    let rhs2 = (1.0 - 1.0 / (128.0 * d)).powi(2)
        * (-1.0 / 64.0 - 1.0 / (8192.0 * d) - 4.0 * d * d * e_slow - 8.0 * d * d * e_fast).exp();
    let s2 = rhs2 - 0.5;

    let lhs3 = -sd / 16.0 + sd / 64.0;
    let rhs3 = -1.0 / 128.0
        - 1.0 / (16384.0 * d)
        - sd / 128.0
        - 1.0 / (16384.0 * sd)
        - 2.0 * d.powf(1.5) * e_slow
        - 4.0 * d.powf(1.5) * e_fast;
    let s3 = rhs3 - lhs3;

    FeasibilityCheck { holds: s1 >= 0.0 && s2 >= 0.0 && s3 >= 0.0, slack: [s1, s2, s3] }
}
