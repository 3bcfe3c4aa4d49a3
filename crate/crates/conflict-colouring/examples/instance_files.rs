//! Writing, reading and verifying the canonical instance and colouring
//! files.
//!
//! ```bash
//! cargo run --example instance_files
//! ```

use conflict_colouring::adversary::{gen_planar_triangulation, gen_random_partition};
use conflict_colouring::io;
use conflict_colouring::solvers::{solve_via_orientation, ViaOrientation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("conflict-instance-files");
    std::fs::create_dir_all(&dir)?;

    let g = gen_planar_triangulation(12, 4)?;
    let inst = gen_random_partition(&g, 4, 5);
    let instance_path = dir.join("triangulation.json");
    io::write_instance(&instance_path, &inst)?;
    println!("wrote {}", instance_path.display());

    let loaded = io::read_instance(&instance_path)?;
    assert_eq!(loaded, inst);
    println!("round trip: identical instance (m={})", loaded.graph().edge_count());

    if let ViaOrientation::Colouring { colouring, k_star } = solve_via_orientation(&loaded) {
        let colouring_path = dir.join("colouring.json");
        io::write_colouring(&colouring_path, &colouring)?;
        let back = io::read_colouring(&colouring_path)?;
        let violations = loaded.validate_colouring(&back)?;
        println!(
            "orientation colouring (k_star={k_star}) saved and re-verified: {}",
            if violations.is_empty() { "valid" } else { "INVALID" }
        );
    }
    Ok(())
}
