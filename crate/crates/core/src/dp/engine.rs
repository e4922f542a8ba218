//! Bottom-up signature DP shared by b-coloring and fall coloring.
//!
//! Internal nodes generate parent signatures forward: for every pair of child
//! signatures we enumerate the edge labelings of the merge skeleton whose
//! per-type sums match both children, and read off the parent signature from
//! the per-label sums.

use std::collections::{HashMap, HashSet};

use super::signature::Signature;
use super::skeleton::{build_merge_skeleton, MergeSkeleton};
use super::types::{ClassType, Label, MAX_CLASSES};
use crate::decomposition::{DecompositionAnalysis, NodeId};
use crate::error::{Error, Result};
use crate::graph::Vertex;

/// One skeleton edge used `count` times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledEdge<T> {
    pub left: T,
    pub right: T,
    pub merged: T,
    pub count: u32,
}

/// How a parent signature was produced: indices of the child signatures in
/// their tables plus the edge labeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness<T> {
    pub left: usize,
    pub right: usize,
    pub labeling: Vec<LabeledEdge<T>>,
}

#[derive(Debug, Clone)]
pub struct Combined<T> {
    /// Distinct parent signatures in discovery order.
    pub signatures: Vec<Signature<T>>,
    /// First realizing labeling of each signature.
    pub witnesses: Vec<Witness<T>>,
}

/// All parent signatures obtainable from one left and one right signature.
pub fn combine_signatures<T: ClassType>(
    left: &[Signature<T>],
    right: &[Signature<T>],
    skel: &MergeSkeleton<T>,
) -> Combined<T> {
    let mut out = Combined {
        signatures: Vec::new(),
        witnesses: Vec::new(),
    };
    let mut seen: HashMap<Signature<T>, usize> = HashMap::new();
    for (li, ls) in left.iter().enumerate() {
        for (ri, rs) in right.iter().enumerate() {
            PairSearch::new(ls, rs, skel).run(|sig, labeling| {
                if !seen.contains_key(sig) {
                    seen.insert(sig.clone(), out.signatures.len());
                    out.signatures.push(sig.clone());
                    out.witnesses.push(Witness {
                        left: li,
                        right: ri,
                        labeling,
                    });
                }
            });
        }
    }
    out
}

/// Enumerates labelings for one pair of child signatures. Rows are the left
/// types, columns the right types; a cell may be nonzero only on a skeleton
/// edge. States at row boundaries are memoized, since the remaining column
/// capacities and the partial parent signature determine every completion.
struct PairSearch<'a, T> {
    rows: &'a [(T, u32)],
    cols: &'a [(T, u32)],
    /// Per row: compatible columns with their merged type.
    cells: Vec<Vec<(usize, T)>>,
    /// Per column: rows that can feed it.
    feeders: Vec<Vec<usize>>,
    residual: Vec<u32>,
    partial: Signature<T>,
    path: Vec<(usize, usize, u32)>,
    visited: HashSet<(usize, Vec<u32>, Signature<T>)>,
}

impl<'a, T: ClassType> PairSearch<'a, T> {
    fn new(left: &'a Signature<T>, right: &'a Signature<T>, skel: &MergeSkeleton<T>) -> Self {
        let rows = left.entries();
        let cols = right.entries();
        let col_of: HashMap<usize, usize> = cols
            .iter()
            .enumerate()
            .filter_map(|(j, (ty, _))| skel.right_index(ty).map(|s| (s, j)))
            .collect();
        let mut feeders = vec![Vec::new(); cols.len()];
        let cells: Vec<Vec<(usize, T)>> = rows
            .iter()
            .enumerate()
            .map(|(i, (ty, _))| {
                let Some(l) = skel.left_index(ty) else {
                    return Vec::new();
                };
                skel.edges_from(l)
                    .iter()
                    .filter_map(|(s, label)| col_of.get(s).map(|&j| (j, *label)))
                    .inspect(|&(j, _)| feeders[j].push(i))
                    .collect()
            })
            .collect();
        PairSearch {
            rows,
            cols,
            cells,
            feeders,
            residual: cols.iter().map(|&(_, c)| c).collect(),
            partial: Signature::empty(),
            path: Vec::new(),
            visited: HashSet::new(),
        }
    }

    fn run(mut self, mut emit: impl FnMut(&Signature<T>, Vec<LabeledEdge<T>>)) {
        if self.rows.iter().map(|r| r.1).sum::<u32>() != self.cols.iter().map(|c| c.1).sum::<u32>()
        {
            return;
        }
        self.row(0, &mut emit);
    }

    fn row(&mut self, i: usize, emit: &mut impl FnMut(&Signature<T>, Vec<LabeledEdge<T>>)) {
        if i == self.rows.len() {
            debug_assert!(self.residual.iter().all(|&r| r == 0));
            let labeling = self
                .path
                .iter()
                .map(|&(r, c, count)| LabeledEdge {
                    left: self.rows[r].0,
                    right: self.cols[c].0,
                    merged: self.cells[r]
                        .iter()
                        .find(|x| x.0 == c)
                        .expect("edge on path")
                        .1,
                    count,
                })
                .collect();
            emit(&self.partial, labeling);
            return;
        }
        // Every column must still be fillable from the rows left.
        for (j, &need) in self.residual.iter().enumerate() {
            if need > 0 {
                let supply: u32 = self.feeders[j]
                    .iter()
                    .filter(|&&r| r >= i)
                    .map(|&r| self.rows[r].1)
                    .sum();
                if supply < need {
                    return;
                }
            }
        }
        let key = (i, self.residual.clone(), self.partial.clone());
        if !self.visited.insert(key) {
            return;
        }
        self.cell(i, 0, self.rows[i].1, emit);
    }

    fn cell(
        &mut self,
        i: usize,
        p: usize,
        remaining: u32,
        emit: &mut impl FnMut(&Signature<T>, Vec<LabeledEdge<T>>),
    ) {
        if remaining == 0 {
            self.row(i + 1, emit);
            return;
        }
        let Some(&(j, merged)) = self.cells[i].get(p) else {
            return;
        };
        let later: u32 = self.cells[i][p + 1..]
            .iter()
            .map(|&(c, _)| self.residual[c])
            .sum();
        let hi = remaining.min(self.residual[j]);
        let lo = remaining.saturating_sub(later);
        for x in (lo..=hi).rev() {
            if x > 0 {
                self.residual[j] -= x;
                self.partial.add(merged, x);
                self.path.push((i, j, x));
            }
            self.cell(i, p + 1, remaining - x, emit);
            if x > 0 {
                self.path.pop();
                self.partial.remove(merged, x);
                self.residual[j] += x;
            }
        }
    }
}

#[derive(Debug, Clone)]
struct NodeTable<T> {
    signatures: Vec<Signature<T>>,
    index: HashMap<Signature<T>, usize>,
    witnesses: Vec<Witness<T>>,
}

impl<T: ClassType> NodeTable<T> {
    fn new(signatures: Vec<Signature<T>>, witnesses: Vec<Witness<T>>) -> Self {
        let index = signatures
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        NodeTable {
            signatures,
            index,
            witnesses,
        }
    }
}

/// Achievable signatures at every node of a decomposition.
#[derive(Debug, Clone)]
pub struct DpTable<T> {
    k: usize,
    nodes: Vec<NodeTable<T>>,
    with_witnesses: bool,
}

impl<T: ClassType> DpTable<T> {
    pub(crate) fn build(
        a: &DecompositionAnalysis,
        k: usize,
        leaf_signatures: &[Signature<T>],
        with_witnesses: bool,
    ) -> Result<Self> {
        if a.module_width() > MAX_CLASSES {
            return Err(Error::Capacity(format!(
                "module-width {} exceeds the supported {MAX_CLASSES}",
                a.module_width()
            )));
        }
        let mut nodes: Vec<Option<NodeTable<T>>> = vec![None; a.node_count()];
        for &t in a.post_order() {
            let table = match a.decomposition().children(t) {
                None => NodeTable::new(leaf_signatures.to_vec(), Vec::new()),
                Some((l, r)) => {
                    let op = a.operator(t).expect("internal node has an operator");
                    let (lt, rt) = (nodes[l].as_ref().unwrap(), nodes[r].as_ref().unwrap());
                    let skel = build_merge_skeleton(
                        op,
                        lt.signatures.iter().flat_map(|s| s.types()),
                        rt.signatures.iter().flat_map(|s| s.types()),
                    );
                    let combined = combine_signatures(&lt.signatures, &rt.signatures, &skel);
                    let witnesses = if with_witnesses {
                        combined.witnesses
                    } else {
                        Vec::new()
                    };
                    NodeTable::new(combined.signatures, witnesses)
                }
            };
            nodes[t] = Some(table);
        }
        Ok(DpTable {
            k,
            nodes: nodes
                .into_iter()
                .map(|x| x.expect("every node visited"))
                .collect(),
            with_witnesses,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn signatures(&self, t: NodeId) -> &[Signature<T>] {
        &self.nodes[t].signatures
    }

    pub fn contains(&self, t: NodeId, sig: &Signature<T>) -> bool {
        self.nodes[t].index.contains_key(sig)
    }

    pub fn max_table_size(&self) -> usize {
        self.nodes
            .iter()
            .map(|x| x.signatures.len())
            .max()
            .unwrap_or(0)
    }

    pub fn total_signatures(&self) -> usize {
        self.nodes.iter().map(|x| x.signatures.len()).sum()
    }

    /// Distinct types occurring in the signatures of node `t`.
    pub fn instantiated_types(&self, t: NodeId) -> usize {
        self.nodes[t]
            .signatures
            .iter()
            .flat_map(|s| s.types())
            .collect::<HashSet<_>>()
            .len()
    }

    pub fn has_witnesses(&self) -> bool {
        self.with_witnesses
    }

    pub fn witness(&self, t: NodeId, sig: &Signature<T>) -> Option<&Witness<T>> {
        let i = *self.nodes[t].index.get(sig)?;
        self.nodes[t].witnesses.get(i)
    }

    /// Replays stored witnesses from `sig` at the root downwards, then unites
    /// concrete classes bottom-up along the recorded labelings.
    pub fn reconstruct(
        &self,
        a: &DecompositionAnalysis,
        sig: &Signature<T>,
    ) -> Result<PartialColoring<T>> {
        if !self.with_witnesses {
            return Err(Error::Unsupported(
                "table was built without witness annotations".into(),
            ));
        }
        let root = a.root();
        let mut chosen: Vec<Option<usize>> = vec![None; a.node_count()];
        chosen[root] = Some(
            *self.nodes[root]
                .index
                .get(sig)
                .ok_or_else(|| Error::input("signature not achievable at the root"))?,
        );
        let order = a.post_order();
        for &t in order.iter().rev() {
            if let Some((l, r)) = a.decomposition().children(t) {
                let w = &self.nodes[t].witnesses[chosen[t].expect("parents are resolved first")];
                chosen[l] = Some(w.left);
                chosen[r] = Some(w.right);
            }
        }

        let mut built: Vec<Option<PartialColoring<T>>> = vec![None; a.node_count()];
        for &t in order {
            let idx = chosen[t].expect("every node resolved");
            let part = match a.decomposition().children(t) {
                None => {
                    let v = a.decomposition().leaf_vertex(t).expect("leaf vertex");
                    leaf_coloring(&self.nodes[t].signatures[idx], v)
                }
                Some((l, r)) => {
                    let left = built[l].take().expect("child built");
                    let right = built[r].take().expect("child built");
                    merge_colorings(left, right, &self.nodes[t].witnesses[idx])
                }
            };
            built[t] = Some(part);
        }
        Ok(built[root].take().expect("root built"))
    }
}

/// Concrete color classes with their types, plus designated b-vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialColoring<T> {
    pub classes: Vec<(T, Vec<Vertex>)>,
    pub b_vertices: Vec<Vertex>,
}

fn leaf_coloring<T: ClassType>(sig: &Signature<T>, v: Vertex) -> PartialColoring<T> {
    let mut classes = Vec::new();
    let mut b_vertices = Vec::new();
    for &(ty, count) in sig.entries() {
        for _ in 0..count {
            if ty.desc().get(0) == Label::Contains {
                classes.push((ty, vec![v]));
                if ty.b_vertex() {
                    b_vertices.push(v);
                }
            } else {
                classes.push((ty, Vec::new()));
            }
        }
    }
    PartialColoring {
        classes,
        b_vertices,
    }
}

fn merge_colorings<T: ClassType>(
    left: PartialColoring<T>,
    right: PartialColoring<T>,
    witness: &Witness<T>,
) -> PartialColoring<T> {
    let bucket = |p: PartialColoring<T>| {
        let mut by_type: HashMap<T, Vec<Vec<Vertex>>> = HashMap::new();
        for (ty, vs) in p.classes {
            by_type.entry(ty).or_default().push(vs);
        }
        by_type
    };
    let mut b_vertices = left.b_vertices.clone();
    b_vertices.extend(&right.b_vertices);
    b_vertices.sort_unstable();
    let mut lb = bucket(left);
    let mut rb = bucket(right);
    let mut classes = Vec::new();
    for e in &witness.labeling {
        for _ in 0..e.count {
            let mut vs = lb
                .get_mut(&e.left)
                .and_then(Vec::pop)
                .expect("labeling matches left signature");
            vs.extend(
                rb.get_mut(&e.right)
                    .and_then(Vec::pop)
                    .expect("labeling matches right signature"),
            );
            vs.sort_unstable();
            classes.push((e.merged, vs));
        }
    }
    PartialColoring {
        classes,
        b_vertices,
    }
}
