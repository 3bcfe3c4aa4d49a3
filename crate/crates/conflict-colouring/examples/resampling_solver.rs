//! Randomized resampling at the maximum-degree budget
//! ceil(sqrt(e(2*max_degree - 1))): convergence is fast in expectation.
//!
//! ```bash
//! cargo run --example resampling_solver
//! ```

use conflict_colouring::adversary::{gen_random_bounded_degree, gen_random_partition};
use conflict_colouring::bounds::bound_max_degree;
use conflict_colouring::solvers::{solve_lll, LllOutcome};

fn main() {
    for target_degree in [3, 5, 10, 20] {
        let g = gen_random_bounded_degree(60, 30 * target_degree, target_degree, 1);
        let max_degree = g.degrees().iter().copied().max().unwrap();
        let k = bound_max_degree(max_degree as u64).unwrap().colours as usize;
        let mut total = 0u64;
        let seeds = 50;
        for seed in 0..seeds {
            let inst = gen_random_partition(&g, k, seed);
            let res = solve_lll(&inst, seed, 10_000);
            match res.outcome {
                LllOutcome::Colouring(_) => total += res.resamples,
                LllOutcome::CapExhausted => println!("  seed {seed} exhausted the cap"),
            }
        }
        println!(
            "max degree {max_degree:2} (m={:3}, k={k:2}): mean resamples {:6.1} over {seeds} seeds",
            g.edge_count(),
            total as f64 / seeds as f64,
        );
    }
}
