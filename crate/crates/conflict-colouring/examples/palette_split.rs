//! Palette-split pipeline for adaptable instances: halve the colour
//! universe, give high-degree vertices one half and the rest the other,
//! and solve the two sides independently.
//!
//! ```bash
//! cargo run --example palette_split
//! ```

use conflict_colouring::adversary::{gen_random_simple_graph, random_labels};
use conflict_colouring::reductions::{check_adapted, AdaptableInstance};
use conflict_colouring::solvers::split_adaptable;

fn main() {
    let n = 400;
    let m = 4096;
    let k = 48;
    let g = gen_random_simple_graph(n, m, 4, 21).unwrap();
    let lists: Vec<Vec<usize>> = (0..n).map(|_| (1..=k).collect()).collect();
    let labels = random_labels(m, k, 22);
    let a = AdaptableInstance::new(g, lists, labels).unwrap();

    match split_adaptable(&a, 23) {
        Ok(out) => {
            let adapted = check_adapted(&a, &out.colours).unwrap();
            println!("n={n}, m={m}, lists of size {k}");
            println!(
                "bipartition accepted after {} attempt(s); every list keeps {:?} colours per half",
                out.bipartition_attempts, out.min_overlap,
            );
            println!(
                "solved with {} resamples; colouring is {}",
                out.resamples,
                if adapted { "adapted" } else { "NOT adapted" },
            );
        }
        Err(e) => println!("split failed: {e}"),
    }
}
