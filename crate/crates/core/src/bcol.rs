//! b-Coloring and b-chromatic number over a rooted branch decomposition.

use serde::Serialize;

use crate::decomposition::{DecompositionAnalysis, RootedBranchDecomposition};
use crate::dp::{ColorClassType, DpTable, Label, PartialColoring, Signature};
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph, Vertex};

/// A b-coloring together with one b-vertex per color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BColoring {
    pub coloring: Coloring,
    pub b_vertices: Vec<Vertex>,
}

/// Counters reported alongside an answer.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct DpStats {
    pub nodes: usize,
    pub module_width: usize,
    pub max_table_size: usize,
    pub total_signatures: usize,
}

impl DpStats {
    pub(crate) fn of<T: crate::dp::ClassType>(
        a: &DecompositionAnalysis,
        table: Option<&DpTable<T>>,
    ) -> Self {
        DpStats {
            nodes: a.node_count(),
            module_width: a.module_width(),
            max_table_size: table.map_or(0, DpTable::max_table_size),
            total_signatures: table.map_or(0, DpTable::total_signatures),
        }
    }
}

#[derive(Debug, Clone)]
pub struct DpOutcome<W> {
    pub answer: bool,
    pub witness: Option<W>,
    pub stats: DpStats,
}

/// The two leaf signatures: the vertex's color class without a b-vertex next
/// to `k - 1` untouched colors, or with the vertex as its b-vertex and the
/// other `k - 1` colors demanding a future neighbor.
pub fn leaf_signatures(k: usize) -> Result<[Signature<ColorClassType>; 2]> {
    if k == 0 {
        return Err(Error::input("k must be at least 1"));
    }
    let rest = (k - 1) as u32;
    let plain = Signature::from_counts([
        (ColorClassType::new(&[Label::Contains], false), 1),
        (ColorClassType::new(&[Label::None], false), rest),
    ]);
    let with_b = Signature::from_counts([
        (ColorClassType::new(&[Label::Contains], true), 1),
        (ColorClassType::new(&[Label::Demand], false), rest),
    ]);
    Ok([plain, with_b])
}

/// Root signature of a b-coloring: `k` nonempty classes, each with a b-vertex.
pub fn accepting_signature(k: usize) -> Signature<ColorClassType> {
    Signature::from_counts([(ColorClassType::new(&[Label::Contains], true), k as u32)])
}

pub fn build_table(
    a: &DecompositionAnalysis,
    k: usize,
    with_witnesses: bool,
) -> Result<DpTable<ColorClassType>> {
    DpTable::build(a, k, &leaf_signatures(k)?, with_witnesses)
}

/// Decides b-coloring with `k` colors on an analyzed decomposition.
pub fn bcoloring_on(
    g: &Graph,
    a: &DecompositionAnalysis,
    k: usize,
    want_witness: bool,
) -> Result<DpOutcome<BColoring>> {
    if k == 0 {
        return Err(Error::input("k must be at least 1"));
    }
    if k > g.vertex_count() {
        return Ok(DpOutcome {
            answer: false,
            witness: None,
            stats: DpStats::of::<ColorClassType>(a, None),
        });
    }
    let table = build_table(a, k, want_witness)?;
    let accept = accepting_signature(k);
    let answer = table.contains(a.root(), &accept);
    let witness = if answer && want_witness {
        Some(reconstruct_witness(&table, g, a, k)?)
    } else {
        None
    };
    Ok(DpOutcome {
        answer,
        witness,
        stats: DpStats::of(a, Some(&table)),
    })
}

pub fn solve_bcoloring(g: &Graph, d: &RootedBranchDecomposition, k: usize) -> Result<bool> {
    let a = DecompositionAnalysis::new(g, d)?;
    Ok(bcoloring_on(g, &a, k, false)?.answer)
}

pub fn solve_bcoloring_witness(
    g: &Graph,
    d: &RootedBranchDecomposition,
    k: usize,
) -> Result<Option<BColoring>> {
    let a = DecompositionAnalysis::new(g, d)?;
    Ok(bcoloring_on(g, &a, k, true)?.witness)
}

/// Rebuilds a b-coloring from the witness annotations of an accepting table.
pub fn reconstruct_witness(
    table: &DpTable<ColorClassType>,
    g: &Graph,
    a: &DecompositionAnalysis,
    k: usize,
) -> Result<BColoring> {
    let part = table.reconstruct(a, &accepting_signature(k))?;
    let coloring = to_coloring(&part, g.vertex_count(), k)?;
    debug_assert!(crate::oracle::is_b_coloring(g, &coloring));
    Ok(BColoring {
        coloring,
        b_vertices: part.b_vertices,
    })
}

pub(crate) fn to_coloring<T>(part: &PartialColoring<T>, n: usize, k: usize) -> Result<Coloring> {
    let mut classes: Vec<&Vec<Vertex>> = part.classes.iter().map(|(_, vs)| vs).collect();
    classes.sort_by_key(|vs| vs.first().copied().unwrap_or(usize::MAX));
    let mut colors = vec![0; n];
    for (c, vs) in classes.iter().enumerate() {
        for &v in vs.iter() {
            colors[v] = c + 1;
        }
    }
    Coloring::new(colors, k)
}

/// Largest `k` admitting a b-coloring. Existence is not monotone in `k`, so
/// every candidate up to `Δ + 1` is probed from the top.
pub fn b_chromatic_number(g: &Graph, d: &RootedBranchDecomposition) -> Result<usize> {
    let a = DecompositionAnalysis::new(g, d)?;
    b_chromatic_number_on(g, &a).map(|(k, _)| k)
}

pub fn b_chromatic_number_on(g: &Graph, a: &DecompositionAnalysis) -> Result<(usize, DpStats)> {
    let top = g.vertex_count().min(g.max_degree() + 1);
    let mut stats = DpStats::of::<ColorClassType>(a, None);
    for k in (1..=top).rev() {
        let out = bcoloring_on(g, a, k, false)?;
        stats.max_table_size = stats.max_table_size.max(out.stats.max_table_size);
        stats.total_signatures += out.stats.total_signatures;
        if out.answer {
            return Ok((k, stats));
        }
    }
    Ok((0, stats))
}
