//! Decide b-colorability of a small graph and print a witness.
//!
//! cargo run --example bcoloring

use bcolor::{best_decomposition, solve_bcoloring_witness, Effort, Graph};

fn main() -> bcolor::Result<()> {
    // The 3-cube.
    let edges = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 0),
        (4, 5),
        (5, 6),
        (6, 7),
        (7, 4),
        (0, 4),
        (1, 5),
        (2, 6),
        (3, 7),
    ];
    let g = Graph::from_edges(8, &edges)?;
    let d = best_decomposition(&g, Effort::Heuristic)?;
    for k in 1..=4 {
        match solve_bcoloring_witness(&g, &d, k)? {
            Some(w) => println!(
                "k={k}: colors {:?}, b-vertices {:?}",
                w.coloring.colors(),
                w.b_vertices
            ),
            None => println!("k={k}: no b-coloring"),
        }
    }
    Ok(())
}
