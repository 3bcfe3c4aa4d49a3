//! First-moment witness search: random local partitions of a dense graph
//! are often uncolourable; sample until the exact solver confirms one.
//!
//! ```bash
//! cargo run --example hard_partition_search
//! ```

use conflict_colouring::adversary::find_hard_partition;
use conflict_colouring::model::Multigraph;
use conflict_colouring::solvers::SearchLimits;

fn main() {
    // Nine parallel edges, two colours: a random partition covers all four
    // pairs with probability about 0.71.
    let g = Multigraph::new(2, vec![(0, 1); 9]).unwrap();
    let mut found = 0;
    let seeds = 20;
    for seed in 0..seeds {
        match find_hard_partition(&g, 2, 100, seed, &SearchLimits::none()).unwrap() {
            Some(inst) => {
                found += 1;
                if seed == 0 {
                    println!("seed 0 witness pairs: {:?}", inst.pairs());
                }
            }
            None => println!("seed {seed}: no witness in 100 trials"),
        }
    }
    println!("{found}/{seeds} seeds found an uncolourable 2-partition of the 9-edge bundle");

    // The triangle with two colours has none: its cyclic orientation has
    // outdegree 1 < 2, so every 2-partition is colourable.
    let triangle = Multigraph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
    let none = find_hard_partition(&triangle, 2, 500, 1, &SearchLimits::none()).unwrap();
    println!("triangle with k=2: witness found = {}", none.is_some());
}
