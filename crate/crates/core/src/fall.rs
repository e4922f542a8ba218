//! Fall coloring: partitions into `k` independent dominating sets.
//!
//! Same DP as b-coloring, over fall types. Every vertex must end up a
//! b-vertex, so a leaf contributes its own class plus `k - 1` demands.

use crate::bcol::{to_coloring, DpOutcome, DpStats};
use crate::decomposition::{DecompositionAnalysis, NodeOperator, RootedBranchDecomposition};
use crate::dp::{compatible, merge_type, DpTable, FallType, Label, Signature};
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};

pub fn fall_leaf_signature(k: usize) -> Result<Signature<FallType>> {
    if k == 0 {
        return Err(Error::input("k must be at least 1"));
    }
    Ok(Signature::from_counts([
        (FallType::new(&[Label::Contains]), 1),
        (FallType::new(&[Label::Demand]), (k - 1) as u32),
    ]))
}

pub fn fall_accepting_signature(k: usize) -> Signature<FallType> {
    Signature::from_counts([(FallType::new(&[Label::Contains]), k as u32)])
}

pub fn fall_compatible(left: &FallType, right: &FallType, op: &NodeOperator) -> Result<bool> {
    compatible(left, right, op)
}

pub fn fall_merge_type(left: &FallType, right: &FallType, op: &NodeOperator) -> Result<FallType> {
    merge_type(left, right, op)
}

pub fn build_fall_table(
    a: &DecompositionAnalysis,
    k: usize,
    with_witnesses: bool,
) -> Result<DpTable<FallType>> {
    DpTable::build(a, k, &[fall_leaf_signature(k)?], with_witnesses)
}

/// Every vertex needs a neighbor in each of the other `k - 1` classes, so
/// `k <= δ + 1`; with one color the graph must be edgeless.
fn trivially_impossible(g: &Graph, k: usize) -> bool {
    k > g.vertex_count() || k > g.min_degree() + 1 || (k == 1 && g.edge_count() > 0)
}

pub fn fallcoloring_on(
    g: &Graph,
    a: &DecompositionAnalysis,
    k: usize,
    want_witness: bool,
) -> Result<DpOutcome<Coloring>> {
    if k == 0 {
        return Err(Error::input("k must be at least 1"));
    }
    if trivially_impossible(g, k) {
        return Ok(DpOutcome {
            answer: false,
            witness: None,
            stats: DpStats::of::<FallType>(a, None),
        });
    }
    let table = build_fall_table(a, k, want_witness)?;
    let accept = fall_accepting_signature(k);
    let answer = table.contains(a.root(), &accept);
    let witness = if answer && want_witness {
        let part = table.reconstruct(a, &accept)?;
        let coloring = to_coloring(&part, g.vertex_count(), k)?;
        debug_assert!(crate::oracle::is_fall_coloring(g, &coloring));
        Some(coloring)
    } else {
        None
    };
    Ok(DpOutcome {
        answer,
        witness,
        stats: DpStats::of(a, Some(&table)),
    })
}

pub fn solve_fallcoloring(g: &Graph, d: &RootedBranchDecomposition, k: usize) -> Result<bool> {
    let a = DecompositionAnalysis::new(g, d)?;
    Ok(fallcoloring_on(g, &a, k, false)?.answer)
}

pub fn solve_fallcoloring_witness(
    g: &Graph,
    d: &RootedBranchDecomposition,
    k: usize,
) -> Result<Option<Coloring>> {
    let a = DecompositionAnalysis::new(g, d)?;
    Ok(fallcoloring_on(g, &a, k, true)?.witness)
}
