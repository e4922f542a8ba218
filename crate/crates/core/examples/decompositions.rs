//! Equivalence classes, node operators and module-width.
//!
//! cargo run --example decompositions

use bcolor::io::write_decomposition;
use bcolor::{best_decomposition, linear_decomposition, DecompositionAnalysis, Effort, Graph};

fn main() -> bcolor::Result<()> {
    // A path with a pendant triangle.
    let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 6)])?;

    let naive = linear_decomposition(&g, &[0, 6, 1, 5, 2, 4, 3])?;
    let heuristic = best_decomposition(&g, Effort::Heuristic)?;
    let exact = best_decomposition(&g, Effort::ExactTiny)?;
    for (name, d) in [
        ("interleaved order", &naive),
        ("heuristic", &heuristic),
        ("exact", &exact),
    ] {
        println!(
            "{name:>17}: module-width {}",
            DecompositionAnalysis::new(&g, d)?.module_width()
        );
    }

    let a = DecompositionAnalysis::new(&g, &exact)?;
    for &t in a.post_order() {
        let classes = &a.partition(t).classes;
        match a.operator(t) {
            None => println!("node {t}: leaf {:?}", a.vertices(t)),
            Some(op) => println!(
                "node {t}: classes {classes:?}, joined child classes {:?}",
                op.h_edges
            ),
        }
    }
    print!("{}", write_decomposition(&exact));
    Ok(())
}
