//! Minimum-degree peeling: when the budget exceeds the degeneracy, peeling
//! empties the graph and the reverse replay colours it greedily.
//!
//! ```bash
//! cargo run --example peel_and_extend
//! ```

use conflict_colouring::adversary::{gen_planar_triangulation, gen_random_partition};
use conflict_colouring::model::Colouring;
use conflict_colouring::solvers::{extend_peeled, kernelize};

fn main() {
    // Planar graphs are 5-degenerate, so budget 6 peels everything.
    let g = gen_planar_triangulation(120, 8).unwrap();
    let inst = gen_random_partition(&g, 6, 9);
    let (core, trace) = kernelize(&inst);
    println!(
        "triangulation n={} m={}: peeled {} vertices, core keeps {} edges",
        g.vertex_count(),
        g.edge_count(),
        trace.steps.len(),
        core.graph().edge_count(),
    );
    let colouring = extend_peeled(&Colouring::new(vec![1; g.vertex_count()]), &trace, &inst);
    let violations = inst.validate_colouring(&colouring).unwrap();
    println!(
        "replayed colouring: {}",
        if violations.is_empty() { "valid" } else { "INVALID" }
    );

    // At budget 4 the core of a triangulation survives.
    let inst = gen_random_partition(&g, 4, 10);
    let (core, trace) = kernelize(&inst);
    println!(
        "same graph at budget 4: {} peeled, core has {} edges (min degree >= 4)",
        trace.steps.len(),
        core.graph().edge_count(),
    );
}
