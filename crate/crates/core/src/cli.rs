//! Command-line front end. Every command prints one JSON document on
//! standard output; keys are sorted.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bcol::{b_chromatic_number_on, bcoloring_on, BColoring, DpStats};
use crate::decomposition::{
    best_decomposition, DecompositionAnalysis, Effort, RootedBranchDecomposition,
};
use crate::error::{Error, Result};
use crate::fall::fallcoloring_on;
use crate::graph::{Coloring, Graph};
use crate::io;
use crate::oracle::{is_b_coloring, is_fall_coloring, Oracle};
use crate::vc::{min_vertex_cover, solve_bcoloring_vc};

/// Cover size up to which `auto` may pick the vertex cover solver.
pub const AUTO_VC_MAX_COVER: usize = 12;
/// Heuristic width above which `auto` prefers the vertex cover solver.
pub const AUTO_VC_MIN_WIDTH: usize = 8;

#[derive(Debug, Parser)]
#[command(
    name = "bcolor",
    version,
    about = "b-coloring and fall coloring solvers"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SolverChoice {
    Auto,
    Cw,
    Vc,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EffortArg {
    ExactTiny,
    Heuristic,
}

impl From<EffortArg> for Effort {
    fn from(e: EffortArg) -> Self {
        match e {
            EffortArg::ExactTiny => Effort::ExactTiny,
            EffortArg::Heuristic => Effort::Heuristic,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    B,
    Fall,
}

#[derive(Debug, Clone, clap::Args)]
pub struct SolveOpts {
    #[arg(long)]
    pub graph: PathBuf,
    /// Decomposition file; overrides --dec-effort.
    #[arg(long)]
    pub dec: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "heuristic")]
    pub dec_effort: EffortArg,
    #[arg(long)]
    pub witness: bool,
    #[arg(long, value_enum, default_value = "auto")]
    pub solver: SolverChoice,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a b-coloring with k colors exists.
    Bcol {
        #[command(flatten)]
        opts: SolveOpts,
        #[arg(long)]
        k: usize,
    },
    /// Compute the b-chromatic number.
    Bchrom {
        #[command(flatten)]
        opts: SolveOpts,
    },
    /// Decide whether a fall coloring with k colors exists.
    Fallcol {
        #[command(flatten)]
        opts: SolveOpts,
        #[arg(long)]
        k: usize,
    },
    /// Build a decomposition and write it to a file.
    Decompose {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "heuristic")]
        effort: EffortArg,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a coloring file.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Random sweep comparing all solvers against the oracle.
    Selftest {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessDoc {
    /// Color of vertex `i + 1` at position `i`.
    pub coloring: Vec<usize>,
    /// One b-vertex per color, 1-indexed; empty for fall colorings.
    pub b_vertices: Vec<usize>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct RunStats {
    pub nodes: usize,
    pub module_width: usize,
    pub max_table_size: usize,
    pub total_signatures: usize,
    pub wall_ms: f64,
}

impl From<DpStats> for RunStats {
    fn from(s: DpStats) -> Self {
        RunStats {
            nodes: s.nodes,
            module_width: s.module_width,
            max_table_size: s.max_table_size,
            total_signatures: s.total_signatures,
            wall_ms: 0.0,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RunResult {
    pub problem: String,
    pub k: Option<usize>,
    pub answer: Value,
    pub witness: Option<WitnessDoc>,
    pub solver: String,
    pub stats: RunStats,
}

impl RunResult {
    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("serializable")
    }
}

fn witness_doc(c: &Coloring, b: &[usize]) -> WitnessDoc {
    WitnessDoc {
        coloring: c.colors().to_vec(),
        b_vertices: b.iter().map(|v| v + 1).collect(),
    }
}

/// Checked before any witness leaves the process.
fn checked_b(g: &Graph, w: &BColoring) -> WitnessDoc {
    assert!(
        is_b_coloring(g, &w.coloring),
        "solver produced an invalid b-coloring"
    );
    witness_doc(&w.coloring, &w.b_vertices)
}

fn checked_fall(g: &Graph, c: &Coloring) -> WitnessDoc {
    assert!(
        is_fall_coloring(g, c),
        "solver produced an invalid fall coloring"
    );
    witness_doc(c, &[])
}

/// Any vertex seeing every other color of its class, one per color.
fn b_vertices_of(g: &Graph, c: &Coloring) -> Vec<usize> {
    (1..=c.k())
        .filter_map(|col| {
            (0..g.vertex_count()).find(|&v| {
                c.color(v) == col && {
                    let mut seen = vec![false; c.k() + 1];
                    g.neighbors_of(v)
                        .iter()
                        .for_each(|&u| seen[c.color(u)] = true);
                    (1..=c.k()).all(|x| x == col || seen[x])
                }
            })
        })
        .collect()
}

fn decomposition_for(g: &Graph, opts: &SolveOpts) -> Result<RootedBranchDecomposition> {
    match &opts.dec {
        Some(p) => io::parse_decomposition(p, g),
        None => best_decomposition(g, opts.dec_effort.into()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Resolved {
    Cw,
    Vc,
    Oracle,
}

impl Resolved {
    fn name(self) -> &'static str {
        match self {
            Resolved::Cw => "cw-dp",
            Resolved::Vc => "vc",
            Resolved::Oracle => "oracle",
        }
    }
}

/// `auto` runs the decomposition DP unless the width is large and the
/// vertex cover small.
fn resolve_solver(
    g: &Graph,
    opts: &SolveOpts,
    analysis: &mut Option<DecompositionAnalysis>,
) -> Result<Resolved> {
    match opts.solver {
        SolverChoice::Cw => Ok(Resolved::Cw),
        SolverChoice::Vc => Ok(Resolved::Vc),
        SolverChoice::Oracle => Ok(Resolved::Oracle),
        SolverChoice::Auto => {
            if g.vertex_count() == 0 {
                return Ok(Resolved::Vc);
            }
            let a = DecompositionAnalysis::new(g, &decomposition_for(g, opts)?)?;
            let width = a.module_width();
            *analysis = Some(a);
            if width > AUTO_VC_MIN_WIDTH && min_vertex_cover(g).len() <= AUTO_VC_MAX_COVER {
                Ok(Resolved::Vc)
            } else {
                Ok(Resolved::Cw)
            }
        }
    }
}

fn analysis_for(
    g: &Graph,
    opts: &SolveOpts,
    cached: Option<DecompositionAnalysis>,
) -> Result<DecompositionAnalysis> {
    match cached {
        Some(a) => Ok(a),
        None => DecompositionAnalysis::new(g, &decomposition_for(g, opts)?),
    }
}

fn run_bcol(opts: &SolveOpts, k: usize) -> Result<RunResult> {
    let g = io::parse_graph(&opts.graph)?;
    if k == 0 {
        return Err(Error::input("k must be at least 1"));
    }
    let mut cached = None;
    let solver = resolve_solver(&g, opts, &mut cached)?;
    let (answer, witness, stats) = match solver {
        Resolved::Cw => {
            let a = analysis_for(&g, opts, cached)?;
            let out = bcoloring_on(&g, &a, k, opts.witness)?;
            (
                out.answer,
                out.witness.map(|w| checked_b(&g, &w)),
                out.stats.into(),
            )
        }
        Resolved::Vc => {
            let w = solve_bcoloring_vc(&g, k)?;
            let doc = if opts.witness {
                w.as_ref().map(|w| checked_b(&g, w))
            } else {
                None
            };
            (w.is_some(), doc, RunStats::default())
        }
        Resolved::Oracle => {
            let w = Oracle::default().bcoloring(&g, k)?;
            let doc = if opts.witness {
                w.as_ref().map(|c| {
                    checked_b(
                        &g,
                        &BColoring {
                            b_vertices: b_vertices_of(&g, c),
                            coloring: c.clone(),
                        },
                    )
                })
            } else {
                None
            };
            (w.is_some(), doc, RunStats::default())
        }
    };
    Ok(RunResult {
        problem: "bcol".into(),
        k: Some(k),
        answer: json!(answer),
        witness,
        solver: solver.name().into(),
        stats,
    })
}

fn run_bchrom(opts: &SolveOpts) -> Result<RunResult> {
    let g = io::parse_graph(&opts.graph)?;
    let mut cached = None;
    let solver = resolve_solver(&g, opts, &mut cached)?;
    let top = g.vertex_count().min(g.max_degree() + 1);
    let (chi, witness, stats) = match solver {
        Resolved::Cw => {
            let a = analysis_for(&g, opts, cached)?;
            let (chi, stats) = b_chromatic_number_on(&g, &a)?;
            let witness = if opts.witness && chi > 0 {
                bcoloring_on(&g, &a, chi, true)?
                    .witness
                    .map(|w| checked_b(&g, &w))
            } else {
                None
            };
            (chi, witness, stats.into())
        }
        Resolved::Vc => {
            let mut found = (0, None);
            for k in (1..=top).rev() {
                if let Some(w) = solve_bcoloring_vc(&g, k)? {
                    found = (k, Some(w));
                    break;
                }
            }
            let doc = if opts.witness {
                found.1.as_ref().map(|w| checked_b(&g, w))
            } else {
                None
            };
            (found.0, doc, RunStats::default())
        }
        Resolved::Oracle => {
            let oracle = Oracle::default();
            let chi = oracle.chi_b(&g)?;
            let doc = match (opts.witness, chi) {
                (true, k) if k > 0 => oracle.bcoloring(&g, k)?.map(|c| {
                    checked_b(
                        &g,
                        &BColoring {
                            b_vertices: b_vertices_of(&g, &c),
                            coloring: c,
                        },
                    )
                }),
                _ => None,
            };
            (chi, doc, RunStats::default())
        }
    };
    Ok(RunResult {
        problem: "bchrom".into(),
        k: None,
        answer: json!(chi),
        witness,
        solver: solver.name().into(),
        stats,
    })
}

fn run_fallcol(opts: &SolveOpts, k: usize) -> Result<RunResult> {
    let g = io::parse_graph(&opts.graph)?;
    if k == 0 {
        return Err(Error::input("k must be at least 1"));
    }
    let solver = match opts.solver {
        SolverChoice::Vc => {
            return Err(Error::input(
                "the vertex cover solver handles b-coloring only",
            ))
        }
        SolverChoice::Oracle => Resolved::Oracle,
        SolverChoice::Auto | SolverChoice::Cw => Resolved::Cw,
    };
    let (answer, witness, stats) = match solver {
        Resolved::Oracle => {
            let w = Oracle::default().fallcoloring(&g, k)?;
            let doc = if opts.witness {
                w.as_ref().map(|c| checked_fall(&g, c))
            } else {
                None
            };
            (w.is_some(), doc, RunStats::default())
        }
        _ => {
            let a = DecompositionAnalysis::new(&g, &decomposition_for(&g, opts)?)?;
            let out = fallcoloring_on(&g, &a, k, opts.witness)?;
            (
                out.answer,
                out.witness.map(|c| checked_fall(&g, &c)),
                out.stats.into(),
            )
        }
    };
    Ok(RunResult {
        problem: "fallcol".into(),
        k: Some(k),
        answer: json!(answer),
        witness,
        solver: solver.name().into(),
        stats,
    })
}

fn run_decompose(graph: &PathBuf, effort: EffortArg, out: &PathBuf) -> Result<Value> {
    let g = io::parse_graph(graph)?;
    let d = best_decomposition(&g, effort.into())?;
    let a = DecompositionAnalysis::new(&g, &d)?;
    std::fs::write(out, io::write_decomposition(&d))?;
    Ok(json!({
        "problem": "decompose",
        "module_width": a.module_width(),
        "nodes": d.node_count(),
        "out": out.display().to_string(),
    }))
}

fn run_verify(graph: &PathBuf, coloring: &PathBuf, mode: Mode) -> Result<Value> {
    let g = io::parse_graph(graph)?;
    let c = io::parse_coloring(coloring, g.vertex_count())?;
    let (name, ok) = match mode {
        Mode::B => ("b", is_b_coloring(&g, &c)),
        Mode::Fall => ("fall", is_fall_coloring(&g, &c)),
    };
    Ok(json!({ "problem": "verify", "mode": name, "k": c.k(), "answer": ok }))
}

/// Erdős–Rényi sample with a random edge density.
pub fn random_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.2..0.8);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("fresh edge");
            }
        }
    }
    g
}

pub fn selftest(n_max: usize, trials: usize, seed: u64) -> Result<Value> {
    if n_max == 0 {
        return Err(Error::input("--n-max must be at least 1"));
    }
    let oracle = Oracle::default();
    if n_max > oracle.capacity {
        return Err(Error::Capacity(format!(
            "oracle handles at most {} vertices",
            oracle.capacity
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = 0usize;
    let mut mismatches = Vec::new();
    for trial in 0..trials {
        let n = rng.gen_range(1..=n_max);
        let g = random_graph(&mut rng, n);
        let a = DecompositionAnalysis::new(&g, &best_decomposition(&g, Effort::Heuristic)?)?;
        for k in 1..=n {
            let bf = oracle.bcoloring(&g, k)?.is_some();
            let cw = bcoloring_on(&g, &a, k, false)?.answer;
            let vc = solve_bcoloring_vc(&g, k)?.is_some();
            let fall_bf = oracle.fallcoloring(&g, k)?.is_some();
            let fall_cw = fallcoloring_on(&g, &a, k, false)?.answer;
            checks += 1;
            if bf != cw || bf != vc || fall_bf != fall_cw {
                mismatches.push(json!({
                    "trial": trial,
                    "k": k,
                    "graph": io::write_graph(&g),
                    "oracle": bf, "cw": cw, "vc": vc,
                    "fall_oracle": fall_bf, "fall_cw": fall_cw,
                }));
            }
        }
    }
    Ok(json!({
        "problem": "selftest",
        "seed": seed,
        "trials": trials,
        "checks": checks,
        "answer": mismatches.is_empty(),
        "mismatches": mismatches,
    }))
}

/// Runs one command and returns the document to print.
pub fn run(cli: &Cli) -> Result<Value> {
    let start = Instant::now();
    let mut result = match &cli.command {
        Command::Bcol { opts, k } => run_bcol(opts, *k)?.to_json(),
        Command::Bchrom { opts } => run_bchrom(opts)?.to_json(),
        Command::Fallcol { opts, k } => run_fallcol(opts, *k)?.to_json(),
        Command::Decompose { graph, effort, out } => run_decompose(graph, *effort, out)?,
        Command::Verify {
            graph,
            coloring,
            mode,
        } => run_verify(graph, coloring, *mode)?,
        Command::Selftest {
            n_max,
            trials,
            seed,
        } => selftest(*n_max, *trials, *seed)?,
    };
    let ms = start.elapsed().as_secs_f64() * 1e3;
    if let Some(stats) = result.get_mut("stats").and_then(Value::as_object_mut) {
        stats.insert("wall_ms".into(), json!(ms));
    }
    Ok(result)
}

/// Parses arguments, runs, prints; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(&cli) {
        Ok(doc) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&doc).expect("serializable")
            );
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
