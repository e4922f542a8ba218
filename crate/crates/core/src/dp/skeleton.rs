use std::collections::HashMap;

use super::types::{merge, ClassType};
use crate::decomposition::NodeOperator;

/// Bipartite graph between child types whose edges are the compatible pairs,
/// each labeled with the merged parent type.
#[derive(Debug, Clone)]
pub struct MergeSkeleton<T> {
    pub left: Vec<T>,
    pub right: Vec<T>,
    /// `(left index, right index, merge type)`.
    pub edges: Vec<(usize, usize, T)>,
    by_left: Vec<Vec<(usize, T)>>,
    left_index: HashMap<T, usize>,
    right_index: HashMap<T, usize>,
}

impl<T: ClassType> MergeSkeleton<T> {
    pub fn left_index(&self, ty: &T) -> Option<usize> {
        self.left_index.get(ty).copied()
    }

    pub fn right_index(&self, ty: &T) -> Option<usize> {
        self.right_index.get(ty).copied()
    }

    /// Edges at a left vertex as `(right index, label)`.
    pub fn edges_from(&self, left: usize) -> &[(usize, T)] {
        &self.by_left[left]
    }
}

/// Duplicate types in the input lists are ignored.
pub fn build_merge_skeleton<T: ClassType>(
    op: &NodeOperator,
    left: impl IntoIterator<Item = T>,
    right: impl IntoIterator<Item = T>,
) -> MergeSkeleton<T> {
    let mut left_index = HashMap::new();
    let mut lefts = Vec::new();
    for ty in left {
        left_index.entry(ty).or_insert_with(|| {
            lefts.push(ty);
            lefts.len() - 1
        });
    }
    let mut right_index = HashMap::new();
    let mut rights = Vec::new();
    for ty in right {
        right_index.entry(ty).or_insert_with(|| {
            rights.push(ty);
            rights.len() - 1
        });
    }
    let mut edges = Vec::new();
    let mut by_left = vec![Vec::new(); lefts.len()];
    for (i, l) in lefts.iter().enumerate() {
        for (j, r) in rights.iter().enumerate() {
            if let Some(label) = merge(l, r, op) {
                edges.push((i, j, label));
                by_left[i].push((j, label));
            }
        }
    }
    MergeSkeleton {
        left: lefts,
        right: rights,
        edges,
        by_left,
        left_index,
        right_index,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{linear_decomposition, DecompositionAnalysis};
    use crate::dp::types::{ColorClassType, Label};
    use crate::graph::Graph;

    fn leaf_types() -> Vec<ColorClassType> {
        [Label::None, Label::Contains, Label::Demand]
            .iter()
            .flat_map(|&l| [false, true].map(|b| ColorClassType::new(&[l], b)))
            .collect()
    }

    #[test]
    fn k2_skeleton_drops_contains_pairs() {
        let g = Graph::complete(2);
        let a =
            DecompositionAnalysis::new(&g, &linear_decomposition(&g, &[0, 1]).unwrap()).unwrap();
        let op = a.operator(a.root()).unwrap();
        let skel = build_merge_skeleton(op, leaf_types(), leaf_types());
        for &(i, j, _) in &skel.edges {
            let (l, r) = (skel.left[i], skel.right[j]);
            assert!(!(l.desc.get(0) == Label::Contains && r.desc.get(0) == Label::Contains));
            assert!(!(l.bvtx && r.bvtx));
        }
        let c = skel
            .left_index(&ColorClassType::new(&[Label::Contains], true))
            .unwrap();
        let d = skel
            .right_index(&ColorClassType::new(&[Label::Demand], false))
            .unwrap();
        assert!(skel.edges_from(c).iter().any(|&(j, _)| j == d));
    }

    #[test]
    fn no_h_edges_and_no_demand_is_complete_up_to_bits() {
        let g = Graph::new(2);
        let a =
            DecompositionAnalysis::new(&g, &linear_decomposition(&g, &[0, 1]).unwrap()).unwrap();
        let op = a.operator(a.root()).unwrap();
        let types: Vec<_> = leaf_types()
            .into_iter()
            .filter(|t| t.desc.get(0) != Label::Demand)
            .collect();
        let skel = build_merge_skeleton(op, types.clone(), types.clone());
        let expected = types
            .iter()
            .flat_map(|l| types.iter().map(move |r| (l, r)))
            .filter(|(l, r)| !(l.bvtx && r.bvtx))
            .count();
        assert_eq!(skel.edges.len(), expected);
    }

    #[test]
    fn empty_side_has_no_edges() {
        let g = Graph::complete(2);
        let a =
            DecompositionAnalysis::new(&g, &linear_decomposition(&g, &[0, 1]).unwrap()).unwrap();
        let skel = build_merge_skeleton(a.operator(a.root()).unwrap(), leaf_types(), Vec::new());
        assert!(skel.edges.is_empty());
    }
}
