//! Scan of the three dependency inequalities behind the two-phase dense
//! phase: where the event-weight conditions start to hold.
//!
//! ```bash
//! cargo run --example feasibility_scan
//! ```

use conflict_colouring::solvers::lll_feasibility_check;

fn main() {
    println!("{:>8}  {:>9} {:>9} {:>9}  holds", "d", "slack I", "slack II", "slack III");
    for exp in 14..=30 {
        let d = (1u64 << exp) as f64;
        let check = lll_feasibility_check(d);
        println!(
            "2^{exp:<6}  {:>9.3} {:>9.3} {:>9.3}  {}",
            check.slack[0], check.slack[1], check.slack[2], check.holds,
        );
    }
}
