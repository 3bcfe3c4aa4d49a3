//! Palette-split solver for adaptable instances.
//!
//! The colour universe is split uniformly into two halves, resampling until
//! every list keeps at least a quarter of its colours on each side. Vertices
//! of degree at least sqrt(2*mu*m) are restricted to the second half, the
//! rest to the first; both induced sides then have maximum degree at most
//! sqrt(2*mu*m) and are solved independently by resampling. Disjoint halves
//! make cross edges conflict-free.

use crate::model::ConflictInstance;
use crate::reductions::{check_adapted, AdaptableInstance};
use crate::solvers::lll::solve_lll_with_rng;
use crate::solvers::LllOutcome;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;
use std::fmt;

const BIPARTITION_CAP: u32 = 64;

#[derive(Debug, Clone, PartialEq)]
pub enum SplitFailure {
    /// Lists smaller than 8 cannot keep two colours per half.
    Infeasible(String),
    /// No sampled bipartition kept a quarter of every list on both sides.
    BipartitionExhausted { attempts: u32 },
    /// A side's resampling solver ran out of its cap.
    SubSolverExhausted { side: &'static str },
}

impl fmt::Display for SplitFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SplitFailure::Infeasible(msg) => write!(f, "infeasible parameters: {msg}"),
            SplitFailure::BipartitionExhausted { attempts } => {
                write!(f, "no balanced bipartition in {attempts} attempts")
            }
            SplitFailure::SubSolverExhausted { side } => {
                write!(f, "{side}-side solver exhausted its resample cap")
            }
        }
    }
}

impl std::error::Error for SplitFailure {}

#[derive(Debug, Clone)]
pub struct SplitColouring {
    /// One colour per vertex, drawn from that vertex's list; passes
    /// `check_adapted`.
    pub colours: Vec<usize>,
    /// Smallest per-vertex list overlap with each half of the accepted
    /// bipartition.
    pub min_overlap: [usize; 2],
    pub bipartition_attempts: u32,
    pub resamples: u64,
}

pub fn split_adaptable(
    a: &AdaptableInstance,
    seed: u64,
) -> Result<SplitColouring, SplitFailure> {
    let k = a.k();
    if k < 8 {
        return Err(SplitFailure::Infeasible(format!(
            "list size {k} is below 8, so a quarter per half cannot reach 2"
        )));
    }
    let n = a.graph().vertex_count();
    let stats = a.graph().stats();

    let mut universe: Vec<usize> = a.lists().iter().flatten().copied().collect();
    universe.sort_unstable();
    universe.dedup();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Rejection-sample the bipartition until every list keeps at least
    // a quarter of its colours on both sides.
    let mut first_half: HashSet<usize> = HashSet::new();
    let mut attempts = 0;
    let min_overlap = loop {
        if attempts >= BIPARTITION_CAP {
            return Err(SplitFailure::BipartitionExhausted { attempts });
        }
        attempts += 1;
        first_half.clear();
        for &colour in &universe {
            if rng.random_bool(0.5) {
                first_half.insert(colour);
            }
        }
        let mut min1 = usize::MAX;
        let mut min2 = usize::MAX;
        for list in a.lists() {
            let c1 = list.iter().filter(|c| first_half.contains(c)).count();
            min1 = min1.min(c1);
            min2 = min2.min(k - c1);
        }
        // count >= k/4 without rounding: 4 * count >= k.
        if 4 * min1 >= k && 4 * min2 >= k {
            break [min1, min2];
        }
    };

    let threshold = (2.0 * stats.max_multiplicity as f64 * stats.m as f64).sqrt();
    let degrees = a.graph().degrees();
    let dense: Vec<bool> =
        degrees.iter().map(|&d| d as f64 >= threshold && stats.m > 0).collect();

    // Dense vertices keep second-half colours, sparse keep first-half.
    let restricted: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            let mut cols: Vec<usize> = a.lists()[v]
                .iter()
                .copied()
                .filter(|c| first_half.contains(c) != dense[v])
                .collect();
            cols.sort_unstable();
            cols
        })
        .collect();

    let mut colours = vec![0usize; n];
    let mut resamples = 0u64;
    for (side, name) in [(true, "dense"), (false, "sparse")] {
        let ids: Vec<usize> = (0..n).filter(|&v| dense[v] == side).collect();
        if ids.is_empty() {
            continue;
        }
        // Uniform list length per side keeps the sub-instance budget clean.
        let len = ids.iter().map(|&v| restricted[v].len()).min().unwrap();
        let trimmed: Vec<&[usize]> = ids.iter().map(|&v| &restricted[v][..len]).collect();
        let mut index = vec![usize::MAX; n];
        for (i, &v) in ids.iter().enumerate() {
            index[v] = i;
        }
        let mut sub_edges = Vec::new();
        let mut sub_pairs = Vec::new();
        for (e, &(u, v)) in a.graph().edges().iter().enumerate() {
            if dense[u] != side || dense[v] != side {
                continue;
            }
            let label = a.labels()[e];
            let pu = trimmed[index[u]].iter().position(|&c| c == label);
            let pv = trimmed[index[v]].iter().position(|&c| c == label);
            if let (Some(pu), Some(pv)) = (pu, pv) {
                sub_edges.push((index[u], index[v]));
                sub_pairs.push((pu + 1, pv + 1));
            }
        }
        let m_side = sub_edges.len() as u64;
        let sub = ConflictInstance::build(ids.len(), sub_edges, len, sub_pairs)
            .expect("side instance is valid by construction");
        let res = solve_lll_with_rng(&sub, &mut rng, 1000 + 200 * m_side);
        resamples += res.resamples;
        let sub_colouring = match res.outcome {
            LllOutcome::Colouring(c) => c,
            LllOutcome::CapExhausted => {
                return Err(SplitFailure::SubSolverExhausted { side: name })
            }
        };
        for (i, &v) in ids.iter().enumerate() {
            colours[v] = trimmed[i][sub_colouring.get(i) - 1];
        }
    }

    assert!(
        check_adapted(a, &colours).unwrap_or(false),
        "split produced a non-adapted colouring"
    );
    Ok(SplitColouring { colours, min_overlap, bipartition_attempts: attempts, resamples })
}
