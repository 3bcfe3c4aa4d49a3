//! Two-phase degree-split pipeline on a hub-skewed multigraph, desk mode:
//! vertices above sqrt(2*mu*m) are coloured by Bernoulli selection and
//! resampling, the rest by the plain resampling solver on what survives.
//!
//! ```bash
//! cargo run --example two_phase_pipeline
//! ```

use conflict_colouring::adversary::{gen_random_multigraph, gen_random_partition};
use conflict_colouring::solvers::{two_phase, TwoPhaseParams};

fn main() {
    let g = gen_random_multigraph(800, 20_000, 4, 10, 31).unwrap();
    let stats = g.stats();
    let params = TwoPhaseParams::desk(&gen_random_partition(&g, 1, 0));
    let k = params.k_dense.max(params.k_sparse);
    let inst = gen_random_partition(&g, k, 32);

    println!(
        "multigraph n={} m={} mu={} max_degree={}",
        stats.n, stats.m, stats.max_multiplicity, stats.max_degree
    );
    println!(
        "degree scale {:.1}, caps {:.1}, selection probability {:.5}, budget k={k}",
        params.degree_scale, params.clash_cap, params.select_prob
    );

    match two_phase(&inst, &params, 33) {
        Ok(out) => {
            let ok = inst.validate_colouring(&out.colouring).unwrap().is_empty();
            println!(
                "dense side {} vertices; resamples {} + {}; max clash {} (cap {:.1})",
                out.dense_vertices,
                out.dense_resamples,
                out.sparse_resamples,
                out.max_clash,
                params.clash_cap,
            );
            println!(
                "colouring {} after {} retries (guarantee regime: {})",
                if ok { "valid" } else { "INVALID" },
                out.retries,
                out.meets_guarantee,
            );
        }
        Err(e) => println!("pipeline failed: {e}"),
    }
}
