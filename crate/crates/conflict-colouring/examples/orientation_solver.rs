//! Orientation route: planar triangulations orient with maximum outdegree
//! at most 3, so four colours always work, whatever the local partition.
//!
//! ```bash
//! cargo run --example orientation_solver
//! ```

use conflict_colouring::adversary::{gen_planar_triangulation, gen_random_partition};
use conflict_colouring::solvers::{solve_orientation, solve_via_orientation, ViaOrientation};

fn main() {
    for seed in 0..5 {
        let n = 30 + 30 * seed as usize;
        let g = gen_planar_triangulation(n, seed).unwrap();
        let solve = solve_orientation(&g);
        let inst = gen_random_partition(&g, 4, seed + 100);
        let outcome = match solve_via_orientation(&inst) {
            ViaOrientation::Colouring { colouring, .. } => {
                let ok = inst.validate_colouring(&colouring).unwrap().is_empty();
                format!("4-coloured (re-check {})", if ok { "valid" } else { "INVALID" })
            }
            ViaOrientation::NotApplicable { k_star } => {
                format!("not applicable (k_star={k_star})")
            }
        };
        println!(
            "triangulation n={n:3} m={:3}: min max-outdegree {} -> {outcome}",
            g.edge_count(),
            solve.k_star,
        );
    }
}
