//! Exact solving of the two hard generator families.
//!
//! Both generators produce instances that block their own colour budget:
//! k^2 parallel edges listing every pair beat budget k, and the star whose
//! bundles pin the centre beats budget mu.
//!
//! ```bash
//! cargo run --example exact_solver
//! ```

use conflict_colouring::adversary::{gen_star, gen_two_vertex};
use conflict_colouring::solvers::{solve_exact, ExactOutcome, SearchLimits};

fn main() {
    for k in 1..=3 {
        let inst = gen_two_vertex(k);
        let at_k = solve_exact(&inst, &SearchLimits::none());
        let wider = inst.with_budget(k + 1).unwrap();
        let above = solve_exact(&wider, &SearchLimits::none());
        println!(
            "two-vertex(k={k}): m={}, budget {k} -> {}, budget {} -> {}",
            inst.graph().edge_count(),
            verdict(&at_k.outcome),
            k + 1,
            verdict(&above.outcome),
        );
    }
    for mu in 1..=3 {
        let inst = gen_star(mu);
        let res = solve_exact(&inst, &SearchLimits::none());
        println!(
            "star(mu={mu}): n={}, m={}, budget {mu} -> {} ({} nodes)",
            inst.graph().vertex_count(),
            inst.graph().edge_count(),
            verdict(&res.outcome),
            res.nodes,
        );
    }
}

fn verdict(outcome: &ExactOutcome) -> String {
    match outcome {
        ExactOutcome::Colouring(c) => format!("colourable {:?}", c.colours()),
        ExactOutcome::Unsatisfiable => "unsatisfiable".into(),
        ExactOutcome::BudgetExhausted => "budget exhausted".into(),
    }
}
