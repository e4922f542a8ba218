//! Fall colorings: partitions into independent dominating sets.
//!
//! cargo run --example fall_coloring

use bcolor::{best_decomposition, solve_fallcoloring_witness, Effort, Graph};

fn main() -> bcolor::Result<()> {
    for n in 3..=9 {
        let g = Graph::cycle(n);
        let d = best_decomposition(&g, Effort::Heuristic)?;
        let ks: Vec<usize> = (1..=3)
            .filter(|&k| matches!(solve_fallcoloring_witness(&g, &d, k), Ok(Some(_))))
            .collect();
        println!("C{n}: fall colorable with k in {ks:?}");
    }
    let c6 = Graph::cycle(6);
    let d = best_decomposition(&c6, Effort::Heuristic)?;
    if let Some(c) = solve_fallcoloring_witness(&c6, &d, 3)? {
        println!("C6 with 3 colors: {:?}", c.colors());
    }
    Ok(())
}
