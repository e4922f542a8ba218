//! The vertex cover solver on a graph with many vertices but a small cover,
//! next to the decomposition solver.
//!
//! cargo run --release --example vertex_cover

use std::time::Instant;

use bcolor::bcol::bcoloring_on;
use bcolor::{
    best_decomposition, min_vertex_cover, solve_bcoloring_vc, DecompositionAnalysis, Effort, Graph,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> bcolor::Result<()> {
    // Six hubs, each of 30 satellites attached to a random subset of hubs.
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (hubs, sats) = (6, 30);
    let mut g = Graph::new(hubs + sats);
    for u in 0..hubs {
        for v in u + 1..hubs {
            if rng.gen_bool(0.5) {
                g.add_edge(u, v)?;
            }
        }
    }
    for s in hubs..hubs + sats {
        for h in 0..hubs {
            if rng.gen_bool(0.6) {
                g.add_edge(s, h)?;
            }
        }
    }
    let a = DecompositionAnalysis::new(&g, &best_decomposition(&g, Effort::Heuristic)?)?;
    let width = a.module_width();
    let cover = min_vertex_cover(&g);
    println!(
        "n = {}, heuristic module-width = {width}, vertex cover = {:?}",
        g.vertex_count(),
        cover
    );
    for k in 1..=cover.len() + 1 {
        let t = Instant::now();
        let w = solve_bcoloring_vc(&g, k)?;
        let vc_ms = t.elapsed().as_secs_f64() * 1e3;
        let verdict = if w.is_some() { "b-colorable" } else { "no" };
        // The decomposition tables grow quickly with k here.
        if k <= 5 {
            let t = Instant::now();
            let dp = bcoloring_on(&g, &a, k, false)?.answer;
            let dp_ms = t.elapsed().as_secs_f64() * 1e3;
            println!(
                "k={k}: {verdict:<11} vertex cover {vc_ms:.1} ms, decomposition {dp_ms:.1} ms (agree: {})",
                w.is_some() == dp
            );
        } else {
            println!("k={k}: {verdict:<11} vertex cover {vc_ms:.1} ms");
        }
    }
    Ok(())
}
