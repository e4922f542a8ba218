//! Exact solvers for b-coloring, the b-chromatic number and fall coloring.
//!
//! Two algorithms are provided. The first is a dynamic program over a rooted
//! branch decomposition whose cost is governed by the module-width of the
//! decomposition ([`bcol`], [`fall`]). The second branches over colorings of
//! a minimum vertex cover ([`vc`]). [`oracle`] holds exhaustive reference
//! solvers used for cross-checking.
//!
//! ```
//! use bcolor::{best_decomposition, solve_bcoloring, Effort, Graph};
//!
//! let g = Graph::path(4);
//! let d = best_decomposition(&g, Effort::Heuristic).unwrap();
//! assert!(solve_bcoloring(&g, &d, 2).unwrap());
//! assert!(!solve_bcoloring(&g, &d, 3).unwrap());
//! ```

pub mod bcol;
pub mod cli;
pub mod decomposition;
pub mod dp;
pub mod error;
pub mod fall;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod vc;

pub use bcol::{b_chromatic_number, solve_bcoloring, solve_bcoloring_witness, BColoring};
pub use decomposition::{
    best_decomposition, linear_decomposition, module_width, DecompositionAnalysis, Effort,
    RootedBranchDecomposition,
};
pub use error::{Error, Result};
pub use fall::{solve_fallcoloring, solve_fallcoloring_witness};
pub use graph::{is_proper, Coloring, Graph, Vertex};
pub use oracle::{is_b_coloring, is_fall_coloring, Oracle};
pub use vc::{min_vertex_cover, solve_bcoloring_vc};
