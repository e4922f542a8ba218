//! Drives the command-line front end in-process on files in a temp dir.
//!
//! cargo run --example command_line

use bcolor::cli::main_with_args;
use bcolor::io::write_graph;
use bcolor::Graph;

fn main() -> std::io::Result<()> {
    let dir = std::env::temp_dir().join(format!("bcolor-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let graph = dir.join("petersen.col");
    let outer: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    let inner: Vec<(usize, usize)> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
    let spokes: Vec<(usize, usize)> = (0..5).map(|i| (i, i + 5)).collect();
    let edges: Vec<_> = [outer, inner, spokes].concat();
    std::fs::write(&graph, write_graph(&Graph::from_edges(10, &edges).unwrap()))?;
    let g = graph.to_str().unwrap();
    let dec = dir.join("petersen.dec");
    let d = dec.to_str().unwrap();

    let runs: [&[&str]; 4] = [
        &[
            "bcolor",
            "decompose",
            "--graph",
            g,
            "--effort",
            "heuristic",
            "--out",
            d,
        ],
        &[
            "bcolor",
            "bcol",
            "--graph",
            g,
            "--k",
            "3",
            "--dec",
            d,
            "--witness",
        ],
        &["bcolor", "bchrom", "--graph", g, "--solver", "vc"],
        &["bcolor", "fallcol", "--graph", g, "--k", "3"],
    ];
    for args in runs {
        println!("$ {}", args.join(" "));
        let code = main_with_args(args.iter().copied());
        println!("(exit {code})");
    }
    std::fs::remove_dir_all(&dir)
}
