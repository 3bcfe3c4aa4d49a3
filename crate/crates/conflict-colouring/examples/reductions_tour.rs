//! The three translations into conflict instances: conflict lists on simple
//! edges, adaptable list colouring, and separation list colouring.
//!
//! ```bash
//! cargo run --example reductions_tour
//! ```

use conflict_colouring::model::{Colouring, Multigraph};
use conflict_colouring::reductions::{
    adaptable_to_conflict, check_adapted, check_separation, conflict_lists_to_instance,
    separation_to_conflict, AdaptableInstance, ConflictListAssignment, SeparationInstance,
};
use conflict_colouring::solvers::{solve_exact, ExactOutcome, SearchLimits};

fn main() {
    // Conflict lists: one parallel edge per forbidden pair.
    let lists = ConflictListAssignment::new(
        2,
        2,
        4,
        vec![(0, 1, vec![(1, 1), (1, 2), (2, 1), (2, 2)])],
    )
    .unwrap();
    let inst = conflict_lists_to_instance(&lists).unwrap();
    println!(
        "conflict lists -> multigraph with m={}, mu={}",
        inst.graph().edge_count(),
        inst.graph().stats().max_multiplicity
    );

    // Adaptable: a triangle where every edge is labelled 1 and every list
    // is {1, 2}; avoiding the label everywhere is the only way.
    let triangle = Multigraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
    let a = AdaptableInstance::new(triangle, vec![vec![1, 2]; 3], vec![1, 1, 1]).unwrap();
    let (reduced, decoder) = adaptable_to_conflict(&a);
    let res = solve_exact(&reduced, &SearchLimits::none());
    if let ExactOutcome::Colouring(c) = res.outcome {
        let decoded = decoder.decode_all(c.colours());
        println!(
            "adaptable triangle: instance colouring {:?} decodes to {:?} (adapted: {})",
            c.colours(),
            decoded,
            check_adapted(&a, &decoded).unwrap()
        );
    }

    // Separation: lists meeting in at most one colour per edge reduce to
    // at most one conflict pair per edge.
    let path = Multigraph::new(3, vec![(0, 1), (1, 2)]).unwrap();
    let s = SeparationInstance::new(path, vec![vec![1, 2], vec![1, 3], vec![3, 4]]).unwrap();
    println!("separation holds: {}", check_separation(&s));
    let (reduced, decoder) = separation_to_conflict(&s).unwrap();
    println!("separation path reduces to {} constrained edge(s)", reduced.graph().edge_count());
    let c = Colouring::new(vec![2, 1, 2]);
    if reduced.validate_colouring(&c).unwrap().is_empty() {
        println!("decoded proper colouring: {:?}", decoder.decode_all(c.colours()));
    }
}
