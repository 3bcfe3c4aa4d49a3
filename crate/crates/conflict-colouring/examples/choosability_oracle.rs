//! Exact conflict choosability of tiny graphs by full enumeration of local
//! partitions (first edge pinned by symmetry).
//!
//! ```bash
//! cargo run --example choosability_oracle
//! ```

use conflict_colouring::adversary::exact_choosability;
use conflict_colouring::model::Multigraph;

fn main() {
    let cases: Vec<(&str, Multigraph)> = vec![
        ("K2", Multigraph::new(2, vec![(0, 1)]).unwrap()),
        ("P3", Multigraph::new(3, vec![(0, 1), (1, 2)]).unwrap()),
        ("C5", Multigraph::new(5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()),
        ("two-vertex x4", Multigraph::new(2, vec![(0, 1); 4]).unwrap()),
        (
            "doubled star",
            Multigraph::new(3, vec![(0, 1), (0, 1), (0, 2), (0, 2)]).unwrap(),
        ),
    ];
    for (name, g) in cases {
        match exact_choosability(&g, 4, 1e10) {
            Ok(value) => println!("{name:>14}: choosability {value}"),
            Err(e) => println!("{name:>14}: {e}"),
        }
    }

    // The guard refuses loudly instead of guessing.
    let dense = Multigraph::new(4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
    match exact_choosability(&dense, 4, 1e6) {
        Ok(value) => println!("{:>14}: choosability {value}", "K4"),
        Err(e) => println!("{:>14}: refused ({e})", "K4"),
    }
}
