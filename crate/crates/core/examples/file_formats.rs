//! Reading and writing graphs, decompositions and colorings.
//!
//! cargo run --example file_formats

use bcolor::io::{parse_coloring_str, parse_decomposition_str, parse_graph_str, write_coloring};
use bcolor::{is_b_coloring, solve_bcoloring_witness};

fn main() -> bcolor::Result<()> {
    let g = parse_graph_str("c the path a-b-c\np edge 3 2\ne 1 2\ne 2 3\n")?;
    let d = parse_decomposition_str(
        "n 1 internal 2 5\nn 2 internal 3 4\nn 3 leaf 1\nn 4 leaf 2\nn 5 leaf 3\n",
        &g,
    )?;
    let w = solve_bcoloring_witness(&g, &d, 2)?.expect("P3 has a 2-b-coloring");
    let text = write_coloring(&w.coloring);
    print!("{text}");
    let back = parse_coloring_str(&text, g.vertex_count())?;
    println!("round trip valid: {}", is_b_coloring(&g, &back));

    match parse_decomposition_str("n 1 internal 2 3\nn 2 leaf 1\nn 3 leaf 2\n", &g) {
        Ok(_) => println!("unexpectedly valid"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
