//! b-Chromatic numbers of a few graph families.
//!
//! cargo run --example b_chromatic

use bcolor::{b_chromatic_number, best_decomposition, Effort, Graph};

fn main() -> bcolor::Result<()> {
    let families: Vec<(String, Graph)> = (2..=7)
        .flat_map(|n| {
            [
                (format!("P{n}"), Graph::path(n)),
                (format!("C{}", n + 1), Graph::cycle(n + 1)),
                (format!("K1,{n}"), Graph::star(n)),
                (format!("K{n}"), Graph::complete(n)),
            ]
        })
        .collect();
    for (name, g) in &families {
        let d = best_decomposition(g, Effort::Heuristic)?;
        println!("{name:>6}: chi_b = {}", b_chromatic_number(g, &d)?);
    }
    Ok(())
}
