//! Rooted branch decompositions and their module-width structure.
//!
//! A rooted branch decomposition is a rooted binary tree whose leaves are in
//! bijection with the vertices of the graph. Every node `t` induces the vertex
//! set `V_t` of the leaves below it. Two vertices of `V_t` are equivalent at
//! `t` when they have the same neighbors outside `V_t`; the maximum number of
//! equivalence classes over all nodes is the module-width.
//!
//! For an internal node `t` with children `r` and `s`, the [`NodeOperator`]
//! records which pairs of child classes are completely joined in `G[V_t]` and
//! which parent class each child class ("bubble") lands in.

use std::collections::HashMap;

use crate::error::{Diagnostic, Error, Result};
use crate::graph::{Graph, Vertex};

pub type NodeId = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    pub children: Vec<NodeId>,
    /// Graph vertex of a leaf.
    pub vertex: Option<Vertex>,
}

impl TreeNode {
    pub fn leaf(v: Vertex) -> Self {
        TreeNode {
            children: Vec::new(),
            vertex: Some(v),
        }
    }

    pub fn internal(left: NodeId, right: NodeId) -> Self {
        TreeNode {
            children: vec![left, right],
            vertex: None,
        }
    }
}

/// A rooted tree over graph vertices. Nothing is checked on construction;
/// call [`RootedBranchDecomposition::validate`] or build a
/// [`DecompositionAnalysis`] before use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedBranchDecomposition {
    nodes: Vec<TreeNode>,
    root: NodeId,
}

impl RootedBranchDecomposition {
    pub fn from_nodes(nodes: Vec<TreeNode>, root: NodeId) -> Self {
        RootedBranchDecomposition { nodes, root }
    }

    pub fn nodes(&self) -> &[TreeNode] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn root(&self) -> NodeId {
        self.root
    }

    pub fn is_leaf(&self, t: NodeId) -> bool {
        self.nodes[t].children.is_empty()
    }

    pub fn leaf_vertex(&self, t: NodeId) -> Option<Vertex> {
        self.nodes[t].vertex
    }

    pub fn children(&self, t: NodeId) -> Option<(NodeId, NodeId)> {
        match self.nodes[t].children.as_slice() {
            &[l, r] => Some((l, r)),
            _ => None,
        }
    }

    /// Nodes in post-order (children before parents). Assumes a valid tree.
    pub fn post_order(&self) -> Vec<NodeId> {
        let mut order = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((t, expanded)) = stack.pop() {
            if expanded {
                order.push(t);
            } else {
                stack.push((t, true));
                for &c in self.nodes[t].children.iter().rev() {
                    stack.push((c, false));
                }
            }
        }
        order
    }

    /// Graph vertices of the leaves, from left to right.
    pub fn leaf_order(&self) -> Vec<Vertex> {
        self.post_order()
            .into_iter()
            .filter_map(|t| self.nodes[t].vertex)
            .collect()
    }

    /// Structural checks plus the all-or-nothing property of every operator.
    pub fn validate(&self, g: &Graph) -> Validation {
        let mut diagnostics = self.structural_diagnostics(g);
        if diagnostics.is_empty() {
            diagnostics.extend(DecompositionAnalysis::compute(g, self).1);
        }
        Validation { diagnostics }
    }

    fn structural_diagnostics(&self, g: &Graph) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        let diag = |node: Option<NodeId>, msg: &str| Diagnostic {
            node,
            message: msg.to_string(),
        };
        let n = g.vertex_count();
        if n == 0 {
            out.push(diag(None, "graph has no vertices"));
            return out;
        }
        if self.root >= self.nodes.len() {
            out.push(diag(None, "root out of range"));
            return out;
        }
        let mut visited = vec![false; self.nodes.len()];
        let mut stack = vec![self.root];
        visited[self.root] = true;
        let mut tree_ok = true;
        while let Some(t) = stack.pop() {
            let node = &self.nodes[t];
            if !(node.children.is_empty() || node.children.len() == 2) {
                out.push(diag(Some(t), "not binary"));
            }
            if !node.children.is_empty() && node.vertex.is_some() {
                out.push(diag(Some(t), "internal node carries a vertex"));
            }
            for &c in &node.children {
                if c >= self.nodes.len() {
                    out.push(diag(Some(t), "child out of range"));
                    tree_ok = false;
                } else if visited[c] {
                    out.push(diag(Some(c), "not a tree (node reached twice)"));
                    tree_ok = false;
                } else {
                    visited[c] = true;
                    stack.push(c);
                }
            }
        }
        if let Some(t) = visited.iter().position(|&v| !v) {
            out.push(diag(Some(t), "not a tree (node unreachable from root)"));
            tree_ok = false;
        }
        if tree_ok {
            let mut hits = vec![0usize; n];
            let mut bijective = true;
            for node in self.nodes.iter().filter(|x| x.children.is_empty()) {
                match node.vertex {
                    Some(v) if v < n => hits[v] += 1,
                    _ => bijective = false,
                }
            }
            if !bijective || hits.iter().any(|&h| h != 1) {
                out.push(diag(None, "leaf_map not bijective"));
            }
        }
        out
    }
}

/// Result of [`RootedBranchDecomposition::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Validation {
    pub diagnostics: Vec<Diagnostic>,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.diagnostics.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.diagnostics.is_empty() {
            Ok(())
        } else {
            Err(Error::Structural(self.diagnostics))
        }
    }
}

/// Equivalence classes of `~t`, ordered by their minimum vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPartition {
    pub node: NodeId,
    pub classes: Vec<Vec<Vertex>>,
}

impl ClassPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Operator of an internal node: full joins between child classes plus the
/// bubble maps into parent classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeOperator {
    /// Pairs `(left class, right class)` that are completely adjacent.
    pub h_edges: Vec<(usize, usize)>,
    pub bubble_left: Vec<usize>,
    pub bubble_right: Vec<usize>,
    pub parent_classes: usize,
    joined: Vec<Vec<bool>>,
}

impl NodeOperator {
    pub fn new(
        h_edges: Vec<(usize, usize)>,
        bubble_left: Vec<usize>,
        bubble_right: Vec<usize>,
        parent_classes: usize,
    ) -> Self {
        let mut joined = vec![vec![false; bubble_right.len()]; bubble_left.len()];
        for &(a, b) in &h_edges {
            joined[a][b] = true;
        }
        NodeOperator {
            h_edges,
            bubble_left,
            bubble_right,
            parent_classes,
            joined,
        }
    }

    pub fn left_classes(&self) -> usize {
        self.bubble_left.len()
    }

    pub fn right_classes(&self) -> usize {
        self.bubble_right.len()
    }

    #[inline]
    pub fn joined(&self, left: usize, right: usize) -> bool {
        self.joined[left][right]
    }
}

#[derive(Debug, Clone)]
struct NodeInfo {
    vertices: Vec<Vertex>,
    partition: ClassPartition,
    class_of: HashMap<Vertex, usize>,
    operator: Option<NodeOperator>,
}

/// A validated decomposition with classes and operators precomputed for every
/// node. Immutable once built.
#[derive(Debug, Clone)]
pub struct DecompositionAnalysis {
    decomposition: RootedBranchDecomposition,
    nodes: Vec<NodeInfo>,
    post_order: Vec<NodeId>,
}

impl DecompositionAnalysis {
    pub fn new(g: &Graph, d: &RootedBranchDecomposition) -> Result<Self> {
        let structural = d.structural_diagnostics(g);
        if !structural.is_empty() {
            return Err(Error::Structural(structural));
        }
        let (analysis, diagnostics) = Self::compute(g, d);
        if diagnostics.is_empty() {
            Ok(analysis)
        } else {
            Err(Error::Structural(diagnostics))
        }
    }

    /// Assumes a structurally valid tree.
    fn compute(g: &Graph, d: &RootedBranchDecomposition) -> (Self, Vec<Diagnostic>) {
        let n = g.vertex_count();
        let post_order = d.post_order();
        let mut vertex_sets: Vec<Vec<Vertex>> = vec![Vec::new(); d.node_count()];
        for &t in &post_order {
            vertex_sets[t] = match (d.children(t), d.leaf_vertex(t)) {
                (Some((l, r)), _) => {
                    let mut vs = [vertex_sets[l].as_slice(), vertex_sets[r].as_slice()].concat();
                    vs.sort_unstable();
                    vs
                }
                (None, Some(v)) => vec![v],
                (None, None) => unreachable!("structural check guarantees leaf vertices"),
            };
        }
        let mut nodes: Vec<Option<NodeInfo>> = vec![None; d.node_count()];
        for &t in &post_order {
            let mut inside = vec![false; n];
            for &v in &vertex_sets[t] {
                inside[v] = true;
            }
            let classes = equivalence_classes_of(g, &vertex_sets[t], &inside);
            let mut class_of = HashMap::with_capacity(vertex_sets[t].len());
            for (i, class) in classes.iter().enumerate() {
                for &v in class {
                    class_of.insert(v, i);
                }
            }
            nodes[t] = Some(NodeInfo {
                vertices: std::mem::take(&mut vertex_sets[t]),
                partition: ClassPartition { node: t, classes },
                class_of,
                operator: None,
            });
        }
        let mut nodes: Vec<NodeInfo> = nodes
            .into_iter()
            .map(|x| x.expect("all nodes reached"))
            .collect();
        let mut diagnostics = Vec::new();
        for &t in &post_order {
            if let Some((l, r)) = d.children(t) {
                let op = build_operator(g, t, &nodes[l], &nodes[r], &nodes[t], &mut diagnostics);
                nodes[t].operator = Some(op);
            }
        }
        (
            DecompositionAnalysis {
                decomposition: d.clone(),
                nodes,
                post_order,
            },
            diagnostics,
        )
    }

    pub fn decomposition(&self) -> &RootedBranchDecomposition {
        &self.decomposition
    }

    pub fn post_order(&self) -> &[NodeId] {
        &self.post_order
    }

    pub fn root(&self) -> NodeId {
        self.decomposition.root()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    /// `V_t`, sorted.
    pub fn vertices(&self, t: NodeId) -> &[Vertex] {
        &self.nodes[t].vertices
    }

    pub fn partition(&self, t: NodeId) -> &ClassPartition {
        &self.nodes[t].partition
    }

    pub fn class_count(&self, t: NodeId) -> usize {
        self.nodes[t].partition.len()
    }

    /// Index of the class of `v` at `t`, or `None` if `v` is not in `V_t`.
    pub fn class_of(&self, t: NodeId, v: Vertex) -> Option<usize> {
        self.nodes[t].class_of.get(&v).copied()
    }

    pub fn operator(&self, t: NodeId) -> Option<&NodeOperator> {
        self.nodes[t].operator.as_ref()
    }

    pub fn module_width(&self) -> usize {
        self.nodes
            .iter()
            .map(|x| x.partition.len())
            .max()
            .unwrap_or(0)
    }
}

fn equivalence_classes_of(g: &Graph, vertices: &[Vertex], inside: &[bool]) -> Vec<Vec<Vertex>> {
    let mut by_signature: HashMap<Vec<Vertex>, usize> = HashMap::new();
    let mut classes: Vec<Vec<Vertex>> = Vec::new();
    for &v in vertices {
        let outside: Vec<Vertex> = g
            .neighbors_of(v)
            .iter()
            .copied()
            .filter(|&u| !inside[u])
            .collect();
        let idx = *by_signature.entry(outside).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[idx].push(v);
    }
    classes
}

fn build_operator(
    g: &Graph,
    t: NodeId,
    left: &NodeInfo,
    right: &NodeInfo,
    parent: &NodeInfo,
    diagnostics: &mut Vec<Diagnostic>,
) -> NodeOperator {
    let mut h_edges = Vec::new();
    for (a, qa) in left.partition.classes.iter().enumerate() {
        for (b, qb) in right.partition.classes.iter().enumerate() {
            let joined = g.adjacent(qa[0], qb[0]);
            let uniform = qa
                .iter()
                .all(|&u| qb.iter().all(|&v| g.adjacent(u, v) == joined));
            if !uniform {
                diagnostics.push(Diagnostic {
                    node: Some(t),
                    message: format!("classes ({a}, {b}) are neither fully joined nor anti-joined"),
                });
            }
            if joined {
                h_edges.push((a, b));
            }
        }
    }
    let bubble = |child: &NodeInfo, diagnostics: &mut Vec<Diagnostic>| -> Vec<usize> {
        child
            .partition
            .classes
            .iter()
            .map(|q| {
                let target = parent.class_of[&q[0]];
                if q.iter().any(|v| parent.class_of[v] != target) {
                    diagnostics.push(Diagnostic {
                        node: Some(t),
                        message: "child class split across parent classes".into(),
                    });
                }
                target
            })
            .collect()
    };
    let bubble_left = bubble(left, diagnostics);
    let bubble_right = bubble(right, diagnostics);
    NodeOperator::new(h_edges, bubble_left, bubble_right, parent.partition.len())
}

pub fn equivalence_classes(
    g: &Graph,
    d: &RootedBranchDecomposition,
    t: NodeId,
) -> Result<ClassPartition> {
    if t >= d.node_count() {
        return Err(Error::input(format!("unknown node {t}")));
    }
    Ok(DecompositionAnalysis::new(g, d)?.partition(t).clone())
}

pub fn module_width(g: &Graph, d: &RootedBranchDecomposition) -> Result<usize> {
    Ok(DecompositionAnalysis::new(g, d)?.module_width())
}

pub fn operator_of(g: &Graph, d: &RootedBranchDecomposition, t: NodeId) -> Result<NodeOperator> {
    if t >= d.node_count() {
        return Err(Error::input(format!("unknown node {t}")));
    }
    DecompositionAnalysis::new(g, d)?
        .operator(t)
        .cloned()
        .ok_or_else(|| Error::input(format!("node {t} is a leaf")))
}

/// Caterpillar whose leaves, read along the spine, follow `order`.
pub fn linear_decomposition(g: &Graph, order: &[Vertex]) -> Result<RootedBranchDecomposition> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    if order.len() != n
        || n == 0
        || order
            .iter()
            .any(|&v| v >= n || std::mem::replace(&mut seen[v], true))
    {
        return Err(Error::input("order is not a permutation of the vertex set"));
    }
    let mut nodes = vec![TreeNode::leaf(order[0])];
    let mut spine = 0;
    for &v in &order[1..] {
        nodes.push(TreeNode::leaf(v));
        let leaf = nodes.len() - 1;
        nodes.push(TreeNode::internal(spine, leaf));
        spine = nodes.len() - 1;
    }
    Ok(RootedBranchDecomposition::from_nodes(nodes, spine))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Effort {
    /// Minimum module-width over all rooted decompositions; `n <= 8` only.
    ExactTiny,
    /// Greedy linear order.
    Heuristic,
}

pub const EXACT_TINY_LIMIT: usize = 8;

pub fn best_decomposition(g: &Graph, effort: Effort) -> Result<RootedBranchDecomposition> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::input("graph has no vertices"));
    }
    match effort {
        Effort::ExactTiny if n > EXACT_TINY_LIMIT => Err(Error::Capacity(format!(
            "exact decomposition search supports at most {EXACT_TINY_LIMIT} vertices, got {n}"
        ))),
        Effort::ExactTiny => Ok(exact_tiny(g)),
        Effort::Heuristic => linear_decomposition(g, &greedy_order(g)),
    }
}

/// Number of `~` classes of a vertex subset given as a bitmask (`n <= 64`).
fn mask_classes(g: &Graph, mask: u64) -> usize {
    let n = g.vertex_count();
    let mut seen: Vec<u64> = Vec::new();
    for v in (0..n).filter(|&v| mask >> v & 1 == 1) {
        let outside = g
            .neighbors_of(v)
            .iter()
            .filter(|&&u| mask >> u & 1 == 0)
            .fold(0u64, |acc, &u| acc | 1 << u);
        if !seen.contains(&outside) {
            seen.push(outside);
        }
    }
    seen.len()
}

/// The width of a tree depends only on the vertex sets of its nodes, so the
/// optimum over all trees is a DP over subsets: best(S) is the minimum over
/// splits S = A + B of max(classes(S), best(A), best(B)).
fn exact_tiny(g: &Graph) -> RootedBranchDecomposition {
    let n = g.vertex_count();
    let full = (1u64 << n) - 1;
    let mut best = vec![usize::MAX; 1 << n];
    let mut split = vec![0u64; 1 << n];
    for mask in 1..=full {
        if mask.count_ones() == 1 {
            best[mask as usize] = 1;
            continue;
        }
        let own = mask_classes(g, mask);
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        // A ranges over proper subsets containing the lowest vertex.
        let mut sub = rest;
        loop {
            let a = sub | low;
            if a != mask {
                let b = mask ^ a;
                let w = own.max(best[a as usize]).max(best[b as usize]);
                if w < best[mask as usize] {
                    best[mask as usize] = w;
                    split[mask as usize] = a;
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    let mut nodes = Vec::new();
    let root = build_from_splits(full, &split, &mut nodes);
    RootedBranchDecomposition::from_nodes(nodes, root)
}

fn build_from_splits(mask: u64, split: &[u64], nodes: &mut Vec<TreeNode>) -> NodeId {
    if mask.count_ones() == 1 {
        nodes.push(TreeNode::leaf(mask.trailing_zeros() as usize));
        return nodes.len() - 1;
    }
    let a = split[mask as usize];
    let l = build_from_splits(a, split, nodes);
    let r = build_from_splits(mask ^ a, split, nodes);
    nodes.push(TreeNode::internal(l, r));
    nodes.len() - 1
}

/// Repeatedly appends the vertex that keeps the prefix class count lowest
/// (ties to the smaller id); tries every start vertex on small graphs.
fn greedy_order(g: &Graph) -> Vec<Vertex> {
    let n = g.vertex_count();
    let starts: Vec<Vertex> = if n <= 64 { (0..n).collect() } else { vec![0] };
    let mut best: Option<(usize, Vec<Vertex>)> = None;
    for start in starts {
        let (width, order) = greedy_from(g, start);
        if best.as_ref().is_none_or(|(w, _)| width < *w) {
            best = Some((width, order));
        }
    }
    best.expect("n >= 1").1
}

fn greedy_from(g: &Graph, start: Vertex) -> (usize, Vec<Vertex>) {
    let n = g.vertex_count();
    let mut inside = vec![false; n];
    inside[start] = true;
    let mut order = vec![start];
    let mut prefix = vec![start];
    let mut width = 1;
    while order.len() < n {
        let mut choice: Option<(usize, Vertex)> = None;
        let outside: Vec<Vertex> = (0..n).filter(|&v| !inside[v]).collect();
        for v in outside {
            inside[v] = true;
            prefix.push(v);
            prefix.sort_unstable();
            let c = equivalence_classes_of(g, &prefix, &inside).len();
            prefix.retain(|&u| u != v);
            inside[v] = false;
            if choice.is_none_or(|(best, _)| c < best) {
                choice = Some((c, v));
            }
        }
        let (c, v) = choice.expect("some vertex remains");
        inside[v] = true;
        prefix.push(v);
        order.push(v);
        width = width.max(c);
    }
    (width, order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classes(g: &Graph, d: &RootedBranchDecomposition, set: &[Vertex]) -> Vec<Vec<Vertex>> {
        let a = DecompositionAnalysis::new(g, d).unwrap();
        let t = (0..a.node_count()).find(|&t| a.vertices(t) == set).unwrap();
        a.partition(t).classes.clone()
    }

    #[test]
    fn star_classes() {
        // Center 0, leaves 1..=3.
        let g = Graph::star(3);
        let d = linear_decomposition(&g, &[1, 2, 0, 3]).unwrap();
        assert_eq!(classes(&g, &d, &[1, 2]), vec![vec![1, 2]]);
        let d = linear_decomposition(&g, &[0, 1, 2, 3]).unwrap();
        assert_eq!(classes(&g, &d, &[0, 1]), vec![vec![0], vec![1]]);
        let a = DecompositionAnalysis::new(&g, &d).unwrap();
        assert_eq!(a.partition(a.root()).classes, vec![vec![0, 1, 2, 3]]);
        assert!(equivalence_classes(&g, &d, 99).is_err());
    }

    #[test]
    fn module_width_examples() {
        let k4 = Graph::complete(4);
        for order in [[0, 1, 2, 3], [3, 1, 0, 2]] {
            assert_eq!(
                module_width(&k4, &linear_decomposition(&k4, &order).unwrap()).unwrap(),
                1
            );
        }
        let single = Graph::new(1);
        assert_eq!(
            module_width(&single, &linear_decomposition(&single, &[0]).unwrap()).unwrap(),
            1
        );
        let star = Graph::star(3);
        assert_eq!(
            module_width(&star, &linear_decomposition(&star, &[0, 1, 2, 3]).unwrap()).unwrap(),
            2
        );
    }

    #[test]
    fn operator_examples() {
        let k2 = Graph::complete(2);
        let d = linear_decomposition(&k2, &[0, 1]).unwrap();
        let op = operator_of(&k2, &d, d.root()).unwrap();
        assert_eq!(op.h_edges, vec![(0, 0)]);
        assert_eq!(op.bubble_left, vec![0]);
        assert_eq!(op.bubble_right, vec![0]);

        // P_3 a-b-c with a node joining the leaves a and c.
        let p3 = Graph::path(3);
        let nodes = vec![
            TreeNode::leaf(0),
            TreeNode::leaf(2),
            TreeNode::internal(0, 1),
            TreeNode::leaf(1),
            TreeNode::internal(2, 3),
        ];
        let d = RootedBranchDecomposition::from_nodes(nodes, 4);
        let a = DecompositionAnalysis::new(&p3, &d).unwrap();
        assert_eq!(a.partition(2).classes, vec![vec![0, 2]]);
        let op = a.operator(2).unwrap();
        assert!(op.h_edges.is_empty());
        assert_eq!(
            (op.bubble_left.clone(), op.bubble_right.clone()),
            (vec![0], vec![0])
        );

        let empty = Graph::new(4);
        let a = DecompositionAnalysis::new(
            &empty,
            &linear_decomposition(&empty, &[2, 0, 3, 1]).unwrap(),
        )
        .unwrap();
        for t in 0..a.node_count() {
            if let Some(op) = a.operator(t) {
                assert!(op.h_edges.is_empty());
            }
        }
    }

    #[test]
    fn validate_examples() {
        let c4 = Graph::cycle(4);
        assert!(linear_decomposition(&c4, &[0, 1, 2, 3])
            .unwrap()
            .validate(&c4)
            .is_valid());

        let missing = RootedBranchDecomposition::from_nodes(
            vec![
                TreeNode::leaf(0),
                TreeNode::leaf(1),
                TreeNode::internal(0, 1),
            ],
            2,
        );
        let v = missing.validate(&Graph::path(3));
        assert!(v
            .diagnostics
            .iter()
            .any(|d| d.message == "leaf_map not bijective"));

        let ternary = RootedBranchDecomposition::from_nodes(
            vec![
                TreeNode::leaf(0),
                TreeNode::leaf(1),
                TreeNode::leaf(2),
                TreeNode {
                    children: vec![0, 1, 2],
                    vertex: None,
                },
            ],
            3,
        );
        let v = ternary.validate(&Graph::path(3));
        assert!(v.diagnostics.iter().any(|d| d.message == "not binary"));

        let cyclic = RootedBranchDecomposition::from_nodes(
            vec![
                TreeNode::internal(1, 2),
                TreeNode::leaf(0),
                TreeNode::internal(0, 1),
            ],
            0,
        );
        assert!(!cyclic.validate(&Graph::path(2)).is_valid());
    }

    #[test]
    fn linear_shapes() {
        let g1 = Graph::new(1);
        let d = linear_decomposition(&g1, &[0]).unwrap();
        assert_eq!(d.node_count(), 1);
        assert!(d.is_leaf(d.root()));

        let g2 = Graph::complete(2);
        let d = linear_decomposition(&g2, &[1, 0]).unwrap();
        assert_eq!(d.node_count(), 3);
        let (l, r) = d.children(d.root()).unwrap();
        assert!(d.is_leaf(l) && d.is_leaf(r));

        let g4 = Graph::path(4);
        let d = linear_decomposition(&g4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(
            d.nodes().iter().filter(|x| !x.children.is_empty()).count(),
            3
        );
        assert_eq!(d.leaf_order(), vec![0, 1, 2, 3]);

        assert!(linear_decomposition(&g4, &[0, 1, 1, 3]).is_err());
        assert!(linear_decomposition(&g4, &[0, 1, 2]).is_err());
    }

    #[test]
    fn best_decomposition_examples() {
        let k5 = Graph::complete(5);
        let d = best_decomposition(&k5, Effort::ExactTiny).unwrap();
        assert_eq!(module_width(&k5, &d).unwrap(), 1);
        let star = Graph::star(3);
        let d = best_decomposition(&star, Effort::ExactTiny).unwrap();
        assert!(module_width(&star, &d).unwrap() <= 2);
        let g1 = Graph::new(1);
        assert_eq!(
            module_width(&g1, &best_decomposition(&g1, Effort::ExactTiny).unwrap()).unwrap(),
            1
        );
        assert!(matches!(
            best_decomposition(&Graph::new(9), Effort::ExactTiny),
            Err(Error::Capacity(_))
        ));
        let big = Graph::cycle(12);
        let d = best_decomposition(&big, Effort::Heuristic).unwrap();
        assert!(d.validate(&big).is_valid());
    }
}
