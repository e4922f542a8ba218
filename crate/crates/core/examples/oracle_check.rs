//! Cross-check every solver against brute force on random graphs.
//!
//! cargo run --release --example oracle_check -- [trials] [seed]

use bcolor::cli::random_graph;
use bcolor::{
    best_decomposition, solve_bcoloring, solve_bcoloring_vc, solve_fallcoloring, Effort, Oracle,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> bcolor::Result<()> {
    let mut args = std::env::args().skip(1);
    let trials: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(200);
    let seed: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let oracle = Oracle::default();
    let (mut checks, mut bad) = (0, 0);
    for _ in 0..trials {
        let n = rng.gen_range(1..=7);
        let g = random_graph(&mut rng, n);
        let d = best_decomposition(&g, Effort::Heuristic)?;
        for k in 1..=n {
            let b = oracle.bcoloring(&g, k)?.is_some();
            let f = oracle.fallcoloring(&g, k)?.is_some();
            let got = (
                solve_bcoloring(&g, &d, k)?,
                solve_bcoloring_vc(&g, k)?.is_some(),
                solve_fallcoloring(&g, &d, k)?,
            );
            checks += 1;
            if got != (b, b, f) {
                bad += 1;
                println!("mismatch on {g:?} with k={k}: {got:?} vs oracle ({b}, {f})");
            }
        }
    }
    println!("{checks} checks, {bad} mismatches");
    Ok(())
}
