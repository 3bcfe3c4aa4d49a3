//! Randomized colouring by resampling: draw uniform colours, then repeatedly
//! redraw both endpoints of the lowest-id violated edge.
//!
//! Convergence is fast in expectation whenever the colour budget meets the
//! maximum-degree bound `ceil(sqrt(e(2*max_degree - 1)))`; below that the
//! cap may be exhausted (which never implies unsatisfiability).

use crate::model::{Colouring, ConflictInstance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LllOutcome {
    Colouring(Colouring),
    CapExhausted,
}

#[derive(Debug, Clone)]
pub struct LllResult {
    pub outcome: LllOutcome,
    pub resamples: u64,
}

pub fn solve_lll(inst: &ConflictInstance, seed: u64, cap: u64) -> LllResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    solve_lll_with_rng(inst, &mut rng, cap)
}

/// Same as [`solve_lll`] but drawing from a caller-owned stream, so pipeline
/// solvers can keep one seed for their whole transcript.
pub(crate) fn solve_lll_with_rng(
    inst: &ConflictInstance,
    rng: &mut ChaCha8Rng,
    cap: u64,
) -> LllResult {
    let n = inst.graph().vertex_count();
    let k = inst.k();
    let incidence = inst.graph().incidence();
    let mut colour: Vec<usize> = (0..n).map(|_| rng.random_range(1..=k)).collect();

    let is_violated = |colour: &[usize], e: usize| {
        let (u, v) = inst.graph().endpoints(e);
        let (lu, lv) = inst.pair(e);
        colour[u] == lu && colour[v] == lv
    };

    let mut violated: BTreeSet<usize> = (0..inst.graph().edge_count())
        .filter(|&e| is_violated(&colour, e))
        .collect();

    let mut resamples = 0u64;
    while let Some(&e) = violated.iter().next() {
        if resamples >= cap {
            return LllResult { outcome: LllOutcome::CapExhausted, resamples };
        }
        resamples += 1;
        let (u, v) = inst.graph().endpoints(e);
        colour[u] = rng.random_range(1..=k);
        colour[v] = rng.random_range(1..=k);
        for x in [u, v] {
            for &(f, _) in &incidence[x] {
                if is_violated(&colour, f) {
                    violated.insert(f);
                } else {
                    violated.remove(&f);
                }
            }
        }
    }
    let colouring = Colouring::new(colour);
    debug_assert!(inst.validate_colouring(&colouring).unwrap().is_empty());
    LllResult { outcome: LllOutcome::Colouring(colouring), resamples }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adversary;
    use crate::bounds::bound_max_degree;

    #[test]
    fn forced_edge_two_colours() {
        let inst = ConflictInstance::build(2, vec![(0, 1)], 2, vec![(1, 1)]).unwrap();
        for seed in 0..20 {
            let res = solve_lll(&inst, seed, 100);
            match res.outcome {
                LllOutcome::Colouring(c) => {
                    assert!(inst.validate_colouring(&c).unwrap().is_empty());
                    assert!(res.resamples <= 20);
                }
                LllOutcome::CapExhausted => panic!("seed {seed} exhausted the cap"),
            }
        }
    }

    #[test]
    fn forced_edge_one_colour_exhausts() {
        let inst = ConflictInstance::build(2, vec![(0, 1)], 1, vec![(1, 1)]).unwrap();
        let res = solve_lll(&inst, 3, 50);
        assert_eq!(res.outcome, LllOutcome::CapExhausted);
        assert_eq!(res.resamples, 50);
    }

    #[test]
    fn degree_bound_regime_converges() {
        // Maximum degree 5 instances at the guaranteed budget k = 5.
        let k = bound_max_degree(5).unwrap().colours as usize;
        assert_eq!(k, 5);
        let mut total_resamples = 0u64;
        let mut total_edges = 0u64;
        for seed in 0..100 {
            let g = adversary::gen_random_bounded_degree(24, 40, 5, seed);
            let inst = adversary::gen_random_partition(&g, k, seed ^ 0xabcd);
            let m = inst.graph().edge_count() as u64;
            let res = solve_lll(&inst, seed, 10 * m + 100);
            assert!(
                matches!(res.outcome, LllOutcome::Colouring(_)),
                "seed {seed} exhausted the cap"
            );
            total_resamples += res.resamples;
            total_edges += m;
        }
        assert!(total_resamples <= 10 * total_edges);
    }

    #[test]
    fn identical_seed_identical_transcript() {
        let g = adversary::gen_complete_multigraph(6, 2).unwrap();
        let inst = adversary::gen_random_partition(&g, 6, 5);
        let a = solve_lll(&inst, 42, 10_000);
        let b = solve_lll(&inst, 42, 10_000);
        assert_eq!(a.resamples, b.resamples);
        match (a.outcome, b.outcome) {
            (LllOutcome::Colouring(x), LllOutcome::Colouring(y)) => assert_eq!(x, y),
            _ => panic!("expected colourings from both runs"),
        }
    }
}
