#![allow(dead_code)]

use bcolor::decomposition::TreeNode;
use bcolor::{Graph, RootedBranchDecomposition};
use rand::seq::SliceRandom;
use rand::Rng;

/// Edge set as a bitmask over the pairs `(u, v)`, `u < v`, in lexicographic order.
fn edge_mask(n: usize, adj: &[[bool; 8]], perm: &[usize]) -> u32 {
    let mut mask = 0u32;
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if adj[perm[u]][perm[v]] {
                mask |= 1 << bit;
            }
            bit += 1;
        }
    }
    mask
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(i: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == p.len() {
            out.push(p.clone());
            return;
        }
        for j in i..p.len() {
            p.swap(i, j);
            rec(i + 1, p, out);
            p.swap(i, j);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices (`n <= 6`).
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 6);
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let perms = permutations(n);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let mut adj = [[false; 8]; 8];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u][v] = true;
                adj[v][u] = true;
            }
        }
        let canon = perms.iter().map(|p| edge_mask(n, &adj, p)).min().unwrap();
        if !seen.insert(canon) {
            continue;
        }
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// All connected graphs with 1 to 6 vertices up to isomorphism.
pub fn corpus() -> Vec<Graph> {
    (1..=6).flat_map(connected_graphs).collect()
}

pub fn random_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.15..0.85);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_order(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    order
}

/// Random tree shape: repeatedly joins two random subtrees.
pub fn random_tree(rng: &mut impl Rng, n: usize) -> RootedBranchDecomposition {
    let mut nodes: Vec<TreeNode> = (0..n).map(TreeNode::leaf).collect();
    let mut roots: Vec<usize> = (0..n).collect();
    while roots.len() > 1 {
        let i = rng.gen_range(0..roots.len());
        let l = roots.swap_remove(i);
        let j = rng.gen_range(0..roots.len());
        let r = roots.swap_remove(j);
        nodes.push(TreeNode::internal(l, r));
        roots.push(nodes.len() - 1);
    }
    RootedBranchDecomposition::from_nodes(nodes, roots[0])
}
