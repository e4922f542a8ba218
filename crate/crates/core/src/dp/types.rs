//! Color-class types and the rules for combining them at an internal node.
//!
//! A type describes one color class relative to the equivalence classes of a
//! node `t`: for each class `Q` it records whether the color class meets `Q`
//! (`Contains`), whether it still owes a vertex to the future neighbors of `Q`
//! (`Demand`), or neither (`None`).

use std::fmt;
use std::hash::Hash;

use crate::decomposition::{DecompositionAnalysis, NodeId, NodeOperator};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Largest per-node class count a packed [`ClassDesc`] can hold.
pub const MAX_CLASSES: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(u8)]
pub enum Label {
    None = 0,
    Contains = 1,
    Demand = 2,
}

impl Label {
    fn from_bits(bits: u64) -> Label {
        match bits {
            0 => Label::None,
            1 => Label::Contains,
            2 => Label::Demand,
            _ => unreachable!("invalid label encoding"),
        }
    }

    fn symbol(self) -> char {
        match self {
            Label::None => '-',
            Label::Contains => 'C',
            Label::Demand => 'D',
        }
    }
}

/// Label per class of a node, two bits each.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassDesc {
    bits: u64,
    len: u8,
}

impl ClassDesc {
    /// All classes labeled `None`.
    pub fn new(len: usize) -> Self {
        assert!(len <= MAX_CLASSES, "at most {MAX_CLASSES} classes per node");
        ClassDesc {
            bits: 0,
            len: len as u8,
        }
    }

    pub fn from_labels(labels: &[Label]) -> Self {
        let mut d = ClassDesc::new(labels.len());
        for (i, &l) in labels.iter().enumerate() {
            d.set(i, l);
        }
        d
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> Label {
        debug_assert!(i < self.len());
        Label::from_bits(self.bits >> (2 * i) & 3)
    }

    #[inline]
    pub fn set(&mut self, i: usize, label: Label) {
        debug_assert!(i < self.len());
        self.bits = self.bits & !(3 << (2 * i)) | (label as u64) << (2 * i);
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> + '_ {
        (0..self.len()).map(|i| self.get(i))
    }
}

impl fmt::Debug for ClassDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.labels().map(Label::symbol).collect();
        write!(f, "[{s}]")
    }
}

/// Common surface of b-coloring types and fall types.
pub trait ClassType: Copy + Eq + Ord + Hash + fmt::Debug {
    /// Whether the b-vertex bit is part of the type.
    const TRACKS_B_VERTEX: bool;

    fn desc(&self) -> ClassDesc;

    fn b_vertex(&self) -> bool;

    /// Ignores `b_vertex` when the bit is not tracked.
    fn from_parts(desc: ClassDesc, b_vertex: bool) -> Self;
}

/// Type of a color class in a partial b-coloring.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorClassType {
    pub desc: ClassDesc,
    pub bvtx: bool,
}

impl ColorClassType {
    pub fn new(labels: &[Label], bvtx: bool) -> Self {
        ColorClassType {
            desc: ClassDesc::from_labels(labels),
            bvtx,
        }
    }
}

impl fmt::Debug for ColorClassType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.desc, if self.bvtx { "*" } else { "" })
    }
}

impl ClassType for ColorClassType {
    const TRACKS_B_VERTEX: bool = true;

    fn desc(&self) -> ClassDesc {
        self.desc
    }

    fn b_vertex(&self) -> bool {
        self.bvtx
    }

    fn from_parts(desc: ClassDesc, b_vertex: bool) -> Self {
        ColorClassType {
            desc,
            bvtx: b_vertex,
        }
    }
}

/// Type of a color class in a fall coloring; every vertex acts as a b-vertex,
/// so there is no b-vertex bit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FallType {
    pub desc: ClassDesc,
}

impl FallType {
    pub fn new(labels: &[Label]) -> Self {
        FallType {
            desc: ClassDesc::from_labels(labels),
        }
    }
}

impl fmt::Debug for FallType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.desc)
    }
}

impl ClassType for FallType {
    const TRACKS_B_VERTEX: bool = false;

    fn desc(&self) -> ClassDesc {
        self.desc
    }

    fn b_vertex(&self) -> bool {
        false
    }

    fn from_parts(desc: ClassDesc, _b_vertex: bool) -> Self {
        FallType { desc }
    }
}

/// Merge type of `left` and `right` under `op`, or `None` if they are not
/// compatible.
pub(crate) fn merge<T: ClassType>(left: &T, right: &T, op: &NodeOperator) -> Option<T> {
    if T::TRACKS_B_VERTEX && left.b_vertex() && right.b_vertex() {
        return None;
    }
    let (l, r) = (left.desc(), right.desc());
    debug_assert_eq!(l.len(), op.left_classes());
    debug_assert_eq!(r.len(), op.right_classes());

    let mut l_fulfilled = 0u64;
    let mut r_fulfilled = 0u64;
    for &(a, b) in &op.h_edges {
        let (la, rb) = (l.get(a), r.get(b));
        if la == Label::Contains && rb == Label::Contains {
            return None;
        }
        if rb == Label::Contains {
            l_fulfilled |= 1 << a;
        }
        if la == Label::Contains {
            r_fulfilled |= 1 << b;
        }
    }

    // Per parent class: does some bubble contain the color, and does some
    // bubble still carry a demand nobody on the other side fulfils.
    let mut contains = 0u64;
    let mut open_demand = 0u64;
    let mut scan = |desc: ClassDesc, bubble: &[usize], fulfilled: u64| {
        for (q, &parent) in bubble.iter().enumerate() {
            match desc.get(q) {
                Label::Contains => contains |= 1 << parent,
                Label::Demand if fulfilled >> q & 1 == 0 => open_demand |= 1 << parent,
                _ => {}
            }
        }
    };
    scan(l, &op.bubble_left, l_fulfilled);
    scan(r, &op.bubble_right, r_fulfilled);

    // A class that receives the color cannot keep an open demand.
    if contains & open_demand != 0 {
        return None;
    }
    let mut desc = ClassDesc::new(op.parent_classes);
    for q in 0..op.parent_classes {
        if contains >> q & 1 == 1 {
            desc.set(q, Label::Contains);
        } else if open_demand >> q & 1 == 1 {
            desc.set(q, Label::Demand);
        }
    }
    Some(T::from_parts(desc, left.b_vertex() || right.b_vertex()))
}

fn check_dims<T: ClassType>(left: &T, right: &T, op: &NodeOperator) -> Result<()> {
    if left.desc().len() != op.left_classes() || right.desc().len() != op.right_classes() {
        return Err(Error::input(format!(
            "type dimensions ({}, {}) do not match operator ({}, {})",
            left.desc().len(),
            right.desc().len(),
            op.left_classes(),
            op.right_classes()
        )));
    }
    Ok(())
}

/// Whether a class of type `left` (first child) and one of type `right`
/// (second child) can be united into a valid class of the parent.
pub fn compatible<T: ClassType>(left: &T, right: &T, op: &NodeOperator) -> Result<bool> {
    check_dims(left, right, op)?;
    Ok(merge(left, right, op).is_some())
}

pub fn merge_type<T: ClassType>(left: &T, right: &T, op: &NodeOperator) -> Result<T> {
    check_dims(left, right, op)?;
    merge(left, right, op).ok_or_else(|| Error::input("types are not compatible"))
}

fn check_class(g: &Graph, a: &DecompositionAnalysis, t: NodeId, class: &[Vertex]) -> Result<()> {
    if let Some(&v) = class
        .iter()
        .find(|&&v| v >= g.vertex_count() || a.class_of(t, v).is_none())
    {
        return Err(Error::input(format!("vertex {v} is not below node {t}")));
    }
    if !g.is_independent(class) {
        return Err(Error::input("color class is not independent"));
    }
    Ok(())
}

/// Direct evaluation of the type of `class` at node `t`, given the partial
/// b-vertices `b` of the surrounding coloring.
pub fn type_of_class(
    g: &Graph,
    a: &DecompositionAnalysis,
    t: NodeId,
    class: &[Vertex],
    b: &[Vertex],
) -> Result<ColorClassType> {
    check_class(g, a, t, class)?;
    let partition = a.partition(t);
    let mut desc = ClassDesc::new(partition.len());
    for (i, q) in partition.classes.iter().enumerate() {
        if q.iter().any(|v| class.contains(v)) {
            desc.set(i, Label::Contains);
        } else if q
            .iter()
            .filter(|v| b.contains(v))
            .any(|&v| class.iter().all(|&u| !g.adjacent(u, v)))
        {
            desc.set(i, Label::Demand);
        }
    }
    Ok(ColorClassType {
        desc,
        bvtx: class.iter().any(|v| b.contains(v)),
    })
}

/// A class is invalid when it meets some `Q` holding a partial b-vertex with
/// no closed neighbor in the class.
pub fn is_valid_class(
    g: &Graph,
    a: &DecompositionAnalysis,
    t: NodeId,
    class: &[Vertex],
    b: &[Vertex],
) -> Result<bool> {
    check_class(g, a, t, class)?;
    Ok(a.partition(t).classes.iter().all(|q| {
        !q.iter().any(|v| class.contains(v))
            || q.iter()
                .filter(|v| b.contains(v))
                .all(|&v| class.iter().any(|&u| u == v || g.adjacent(u, v)))
    }))
}

fn color_class(
    g: &Graph,
    a: &DecompositionAnalysis,
    t: NodeId,
    colors: &[Option<usize>],
    color: usize,
) -> Result<Vec<Vertex>> {
    let vs = a.vertices(t);
    if vs
        .iter()
        .any(|&v| colors.get(v).copied().flatten().is_none())
    {
        return Err(Error::input(format!(
            "coloring is not total on the vertices below node {t}"
        )));
    }
    for &u in vs {
        for &v in g.neighbors_of(u) {
            if a.class_of(t, v).is_some() && colors[u] == colors[v] {
                return Err(Error::input("coloring is not proper"));
            }
        }
    }
    Ok(vs
        .iter()
        .copied()
        .filter(|&v| colors[v] == Some(color))
        .collect())
}

/// Fall type of the class of `color` at node `t`; `colors` must be a proper
/// coloring of every vertex below `t`.
pub fn fall_type_of_class(
    g: &Graph,
    a: &DecompositionAnalysis,
    t: NodeId,
    colors: &[Option<usize>],
    color: usize,
) -> Result<FallType> {
    let class = color_class(g, a, t, colors, color)?;
    let partition = a.partition(t);
    let mut desc = ClassDesc::new(partition.len());
    for (i, q) in partition.classes.iter().enumerate() {
        if q.iter().any(|v| class.contains(v)) {
            desc.set(i, Label::Contains);
        } else if q.iter().any(|&v| class.iter().all(|&u| !g.adjacent(u, v))) {
            desc.set(i, Label::Demand);
        }
    }
    Ok(FallType { desc })
}

/// Fall analogue of [`is_valid_class`]: every vertex counts as a b-vertex.
pub fn is_valid_fall_class(
    g: &Graph,
    a: &DecompositionAnalysis,
    t: NodeId,
    colors: &[Option<usize>],
    color: usize,
) -> Result<bool> {
    let class = color_class(g, a, t, colors, color)?;
    Ok(a.partition(t).classes.iter().all(|q| {
        !q.iter().any(|v| class.contains(v))
            || q.iter()
                .all(|&v| class.iter().any(|&u| u == v || g.adjacent(u, v)))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::{linear_decomposition, RootedBranchDecomposition, TreeNode};
    use Label::{Contains as C, Demand as D, None as N};

    fn k2_root() -> (Graph, DecompositionAnalysis) {
        let g = Graph::complete(2);
        let d = linear_decomposition(&g, &[0, 1]).unwrap();
        let a = DecompositionAnalysis::new(&g, &d).unwrap();
        (g, a)
    }

    #[test]
    fn desc_packing() {
        let d = ClassDesc::from_labels(&[C, N, D, D, C]);
        assert_eq!(d.labels().collect::<Vec<_>>(), vec![C, N, D, D, C]);
        assert_eq!(format!("{d:?}"), "[C-DDC]");
        let mut e = d;
        e.set(2, N);
        assert_eq!(e.get(2), N);
        assert_eq!(e.get(3), D);
    }

    #[test]
    fn leaf_types() {
        let g = Graph::path(3);
        let d = linear_decomposition(&g, &[0, 1, 2]).unwrap();
        let a = DecompositionAnalysis::new(&g, &d).unwrap();
        let leaf = (0..a.node_count()).find(|&t| a.vertices(t) == [1]).unwrap();
        assert_eq!(
            type_of_class(&g, &a, leaf, &[1], &[1]).unwrap(),
            ColorClassType::new(&[C], true)
        );
        assert_eq!(
            type_of_class(&g, &a, leaf, &[], &[1]).unwrap(),
            ColorClassType::new(&[D], false)
        );
        assert_eq!(
            type_of_class(&g, &a, leaf, &[1], &[]).unwrap(),
            ColorClassType::new(&[C], false)
        );
        assert_eq!(
            type_of_class(&g, &a, leaf, &[], &[]).unwrap(),
            ColorClassType::new(&[N], false)
        );
    }

    /// Four classes Q1..Q4 below one node, each with a distinct private
    /// outside neighbor: yellow b-vertex in Q1 with a green neighbor, green
    /// b-vertex in Q2, red b-vertex in Q3 without a green neighbor, green
    /// vertex in Q4.
    #[test]
    fn figure_configuration() {
        // 0: yellow b-vertex (Q1), 1: green b-vertex (Q2), 2: red b-vertex (Q3),
        // 3: green (Q4), 4-7: private outside neighbors of 0-3.
        let g = Graph::from_edges(8, &[(0, 1), (0, 4), (1, 5), (2, 6), (3, 7)]).unwrap();
        let d = linear_decomposition(&g, &[0, 1, 2, 3, 4, 5, 6, 7]).unwrap();
        let a = DecompositionAnalysis::new(&g, &d).unwrap();
        let t = (0..a.node_count())
            .find(|&t| a.vertices(t) == [0, 1, 2, 3])
            .unwrap();
        assert_eq!(a.class_count(t), 4);
        let green = [1, 3];
        let ty = type_of_class(&g, &a, t, &green, &[0, 1, 2]).unwrap();
        assert_eq!(ty, ColorClassType::new(&[N, C, D, C], true));
        assert!(is_valid_class(&g, &a, t, &green, &[0, 1, 2]).unwrap());
    }

    #[test]
    fn validity_examples() {
        let g = Graph::new(1);
        let d = linear_decomposition(&g, &[0]).unwrap();
        let a = DecompositionAnalysis::new(&g, &d).unwrap();
        assert!(is_valid_class(&g, &a, 0, &[0], &[0]).unwrap());

        let (g, a) = k2_root();
        assert!(is_valid_class(&g, &a, a.root(), &[0], &[0, 1]).unwrap());

        let g = Graph::path(3);
        let a =
            DecompositionAnalysis::new(&g, &linear_decomposition(&g, &[0, 1, 2]).unwrap()).unwrap();
        assert!(!is_valid_class(&g, &a, a.root(), &[0], &[0, 2]).unwrap());
        assert!(is_valid_class(&g, &a, a.root(), &[0, 1], &[]).is_err());
    }

    #[test]
    fn compatibility_examples() {
        let (_, a) = k2_root();
        let op = a.operator(a.root()).unwrap();
        let cb = ColorClassType::new(&[C], true);
        let d0 = ColorClassType::new(&[D], false);
        assert!(!compatible(&cb, &cb, op).unwrap());
        assert!(compatible(&cb, &d0, op).unwrap());
        assert!(compatible(&d0, &d0, op).unwrap());
        assert_eq!(merge_type(&cb, &d0, op).unwrap(), cb);
        assert_eq!(merge_type(&d0, &d0, op).unwrap(), d0);
        assert!(merge_type(&cb, &cb, op).is_err());
        let wide = ColorClassType::new(&[C, N], false);
        assert!(compatible(&wide, &d0, op).is_err());
    }

    #[test]
    fn no_h_edge_merges() {
        let g = Graph::path(3);
        let d = RootedBranchDecomposition::from_nodes(
            vec![
                TreeNode::leaf(0),
                TreeNode::leaf(2),
                TreeNode::internal(0, 1),
                TreeNode::leaf(1),
                TreeNode::internal(2, 3),
            ],
            4,
        );
        let a = DecompositionAnalysis::new(&g, &d).unwrap();
        let op = a.operator(2).unwrap();
        let merged = merge_type(
            &ColorClassType::new(&[C], false),
            &ColorClassType::new(&[D], false),
            op,
        );
        // The demand bubble sits in the same parent class as a contained one
        // and nothing fulfils it, so the union would be invalid.
        assert!(merged.is_err());
        let merged = merge_type(
            &ColorClassType::new(&[C], false),
            &ColorClassType::new(&[N], false),
            op,
        )
        .unwrap();
        assert_eq!(merged, ColorClassType::new(&[C], false));
        let merged = merge_type(&FallType::new(&[D]), &FallType::new(&[N]), op).unwrap();
        assert_eq!(merged, FallType::new(&[D]));
    }

    #[test]
    fn fall_examples() {
        let (g, a) = k2_root();
        let op = a.operator(a.root()).unwrap();
        let c = FallType::new(&[C]);
        let dm = FallType::new(&[D]);
        assert!(!compatible(&c, &c, op).unwrap());
        assert_eq!(merge_type(&c, &dm, op).unwrap(), c);
        // Unlike b-types, two bits never clash.
        let cb = ColorClassType::new(&[C], true);
        let nb = ColorClassType::new(&[N], true);
        let g1 = Graph::new(2);
        let a1 =
            DecompositionAnalysis::new(&g1, &linear_decomposition(&g1, &[0, 1]).unwrap()).unwrap();
        assert!(!compatible(&cb, &nb, a1.operator(a1.root()).unwrap()).unwrap());
        assert!(compatible(&c, &FallType::new(&[N]), a1.operator(a1.root()).unwrap()).unwrap());

        let colors = [Some(1), Some(2)];
        assert_eq!(fall_type_of_class(&g, &a, a.root(), &colors, 1).unwrap(), c);
        let leaf = (0..a.node_count()).find(|&t| a.vertices(t) == [0]).unwrap();
        assert_eq!(fall_type_of_class(&g, &a, leaf, &colors, 1).unwrap(), c);
        assert_eq!(fall_type_of_class(&g, &a, leaf, &colors, 2).unwrap(), dm);
        assert!(fall_type_of_class(&g, &a, a.root(), &[Some(1), Some(1)], 1).is_err());
    }
}
