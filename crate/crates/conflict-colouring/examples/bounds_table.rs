//! The closed-form bounds over a small grid of inputs.
//!
//! ```bash
//! cargo run --example bounds_table
//! ```

use conflict_colouring::bounds::{
    bound_adaptable_edges, bound_adaptable_surface, bound_edges, bound_max_degree, bound_surface,
    heawood_orientation_bound, lower_bound_avg_degree, BoundConstants, HeawoodBound,
};

fn main() {
    let consts = BoundConstants::default();

    println!("max degree -> sufficient colours, and the average-degree lower bound:");
    for d in [3u64, 5, 10, 20, 100, 1000] {
        let upper = bound_max_degree(d).unwrap();
        let lower = lower_bound_avg_degree(d as f64).unwrap();
        println!(
            "  degree {d:5}: between {:3} and {:3}  (raw {:8.3} / {:7.3})",
            lower.colours, upper.colours, lower.raw, upper.raw
        );
    }

    println!("\nedge-count bound (multiplicity 1 and 16):");
    for m in [100u64, 10_000, 1_000_000] {
        let b1 = bound_edges(m, 1, &consts).unwrap();
        let b16 = bound_edges(m, 16, &consts).unwrap();
        println!("  m={m:8}: {:4} | {:4}", b1.colours, b16.colours);
    }

    println!("\nsurface bounds (conflict | adaptable):");
    for g in [0u64, 1, 2, 100, 10_000] {
        let c = bound_surface(g, 1, &consts).unwrap();
        let a = bound_adaptable_surface(g, 1, &consts).unwrap();
        let h = heawood_orientation_bound(g);
        let orientation = match h {
            HeawoodBound::Planar { bound, .. } => format!("planar {bound}"),
            HeawoodBound::Surface { heawood, .. } => {
                format!("H={heawood} -> {:.1}", h.value())
            }
        };
        println!("  genus {g:5}: {:3} | {:3}   orientation route: {orientation}", c.colours, a.colours);
    }

    println!("\nadaptable edge bound at the guarantee threshold:");
    for m in [1u64 << 10, 1 << 16, 1 << 20] {
        let b = bound_adaptable_edges(m, 1).unwrap();
        println!(
            "  m=2^{:2}: {:4}{}",
            m.ilog2(),
            b.bound.colours,
            if b.below_threshold { "  (below threshold)" } else { "" }
        );
    }
}
