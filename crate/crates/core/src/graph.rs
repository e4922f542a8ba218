//! Simple undirected graphs and colorings.
//!
//! Vertices are dense ids `0..n`. Adjacency is kept both as sorted neighbor
//! lists and as a bit matrix so that `adjacent` is O(1).

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    rows: Vec<Vec<u64>>,
    edge_count: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        Graph {
            adj: vec![Vec::new(); n],
            rows: vec![vec![0; words]; n],
            edge_count: 0,
        }
    }

    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range ids.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(Error::input(format!(
                "edge ({u}, {v}) out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::input(format!("self-loop at vertex {u}")));
        }
        if self.adjacent(u, v) {
            return Err(Error::input(format!("duplicate edge ({u}, {v})")));
        }
        self.rows[u][v / 64] |= 1 << (v % 64);
        self.rows[v][u / 64] |= 1 << (u % 64);
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        self.edge_count += 1;
        Ok(())
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).expect("fresh edge");
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v).expect("fresh edge");
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0).expect("fresh edge");
        }
        g
    }

    /// Star `K_{1,m}` with center 0.
    pub fn star(m: usize) -> Self {
        let mut g = Graph::new(m + 1);
        for v in 1..=m {
            g.add_edge(0, v).expect("fresh edge");
        }
        g
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.rows[u][v / 64] >> (v % 64) & 1 == 1
    }

    /// Sorted neighbor list of `v`. Panics when `v` is out of range; see
    /// [`Graph::neighbors`] for the checked variant.
    #[inline]
    pub fn neighbors_of(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: Vertex) -> Result<&[Vertex]> {
        self.adj
            .get(v)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::input(format!("vertex {v} out of range")))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn is_independent(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.adjacent(u, v)))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    /// Subgraph induced by `set`. The returned remap sends old ids to new ids
    /// (`None` for vertices outside `set`); new ids follow the order of `set`.
    pub fn induced_subgraph(&self, set: &[Vertex]) -> Result<(Graph, Vec<Option<Vertex>>)> {
        let n = self.vertex_count();
        let mut remap = vec![None; n];
        for (i, &v) in set.iter().enumerate() {
            if v >= n {
                return Err(Error::input(format!("vertex {v} out of range")));
            }
            if remap[v].is_some() {
                return Err(Error::input(format!("vertex {v} listed twice")));
            }
            remap[v] = Some(i);
        }
        let mut sub = Graph::new(set.len());
        for (u, v) in self.edges() {
            if let (Some(a), Some(b)) = (remap[u], remap[v]) {
                sub.add_edge(a, b)
                    .expect("edges of a simple graph stay simple");
            }
        }
        Ok((sub, remap))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[Vertex]) -> Result<Graph> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        if perm.len() != n
            || perm
                .iter()
                .any(|&p| p >= n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::input("not a permutation of the vertex set"));
        }
        let mut g = Graph::new(n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }
}

/// A total assignment of colors `1..=k` to the vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, k: usize) -> Result<Self> {
        if let Some(&c) = colors.iter().find(|&&c| c == 0 || c > k) {
            return Err(Error::input(format!("color {c} outside 1..={k}")));
        }
        Ok(Coloring { colors, k })
    }

    /// Uses the largest color present as `k`.
    pub fn from_colors(colors: Vec<usize>) -> Result<Self> {
        let k = colors.iter().copied().max().unwrap_or(0);
        Coloring::new(colors, k)
    }

    #[inline]
    pub fn color(&self, v: Vertex) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Color classes; entry `i` holds the vertices of color `i + 1`.
    pub fn classes(&self) -> Vec<Vec<Vertex>> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c - 1].push(v);
        }
        classes
    }
}

/// True iff every color class is an independent set.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    if c.len() != g.vertex_count() {
        return Err(Error::input(format!(
            "coloring covers {} vertices, graph has {}",
            c.len(),
            g.vertex_count()
        )));
    }
    Ok(g.edges().all(|(u, v)| c.color(u) != c.color(v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neighbors_examples() {
        assert_eq!(Graph::complete(3).neighbors(0).unwrap(), &[1, 2]);
        assert_eq!(Graph::path(3).neighbors(1).unwrap(), &[0, 2]);
        assert!(Graph::new(3).neighbors(2).unwrap().is_empty());
        assert!(matches!(
            Graph::new(3).neighbors(3),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn proper_examples() {
        let k2 = Graph::complete(2);
        assert!(is_proper(&k2, &Coloring::new(vec![1, 2], 2).unwrap()).unwrap());
        assert!(!is_proper(&k2, &Coloring::new(vec![1, 1], 2).unwrap()).unwrap());
        let c4 = Graph::cycle(4);
        assert!(is_proper(&c4, &Coloring::new(vec![1, 2, 1, 2], 2).unwrap()).unwrap());
        assert!(is_proper(&c4, &Coloring::new(vec![1, 2], 2).unwrap()).is_err());
    }

    #[test]
    fn induced_examples() {
        let (sub, remap) = Graph::complete(3).induced_subgraph(&[0, 1]).unwrap();
        assert_eq!(sub, Graph::complete(2));
        assert_eq!(remap, vec![Some(0), Some(1), None]);

        let (sub, _) = Graph::path(4).induced_subgraph(&[0, 2]).unwrap();
        assert_eq!(sub, Graph::new(2));

        let c5 = Graph::cycle(5);
        let (sub, remap) = c5.induced_subgraph(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(sub, c5);
        assert_eq!(remap, (0..5).map(Some).collect::<Vec<_>>());
    }

    #[test]
    fn rejects_non_simple_input() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn coloring_rejects_out_of_range_colors() {
        assert!(Coloring::new(vec![1, 0], 2).is_err());
        assert!(Coloring::new(vec![1, 3], 2).is_err());
    }

    fn arb_graph() -> impl proptest::strategy::Strategy<Value = Graph> {
        use proptest::prelude::*;
        (1usize..9).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::new(n);
                let mut it = bits.into_iter();
                for u in 0..n {
                    for v in u + 1..n {
                        if it.next().unwrap() {
                            g.add_edge(u, v).unwrap();
                        }
                    }
                }
                g
            })
        })
    }

    proptest::proptest! {
        #[test]
        fn adjacency_is_symmetric(g in arb_graph()) {
            for u in 0..g.vertex_count() {
                proptest::prop_assert!(!g.neighbors_of(u).contains(&u));
                for &v in g.neighbors_of(u) {
                    proptest::prop_assert!(g.neighbors_of(v).contains(&u));
                }
            }
        }

        #[test]
        fn properness_ignores_color_names(g in arb_graph(), seed in 0u64..1000) {
            let n = g.vertex_count();
            let k = 3;
            let colors: Vec<usize> = (0..n).map(|v| ((seed as usize >> (v % 8)) + v * 7) % k + 1).collect();
            let c = Coloring::new(colors.clone(), k).unwrap();
            let swapped = Coloring::new(colors.iter().map(|&x| [0, 3, 1, 2][x]).collect(), k).unwrap();
            proptest::prop_assert_eq!(is_proper(&g, &c).unwrap(), is_proper(&g, &swapped).unwrap());
        }
    }
}
