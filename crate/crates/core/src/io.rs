//! Text formats: DIMACS edge lists, decomposition trees and colorings.
//!
//! All vertex numbers in files are 1-indexed.

use std::fmt::Write as _;
use std::path::Path;

use crate::decomposition::{RootedBranchDecomposition, TreeNode};
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph};

fn int(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| Error::parse(line, format!("bad {what} `{tok}`")))
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, toks)| !toks.is_empty() && toks[0] != "c")
}

/// Parses `p edge <n> <m>` followed by `e <u> <v>` lines.
pub fn parse_graph_str(text: &str) -> Result<Graph> {
    let mut graph: Option<(Graph, usize)> = None;
    for (ln, toks) in content_lines(text) {
        match toks[0] {
            "p" => {
                if graph.is_some() {
                    return Err(Error::parse(ln, "duplicate problem line"));
                }
                if toks.get(1) != Some(&"edge") {
                    return Err(Error::parse(ln, "expected `p edge <n> <m>`"));
                }
                let n = int(toks.get(2).copied(), ln, "vertex count")?;
                let m = int(toks.get(3).copied(), ln, "edge count")?;
                if toks.len() > 4 {
                    return Err(Error::parse(ln, "trailing tokens"));
                }
                graph = Some((Graph::new(n), m));
            }
            "e" => {
                let (g, _) = graph
                    .as_mut()
                    .ok_or_else(|| Error::parse(ln, "edge before problem line"))?;
                let u = int(toks.get(1).copied(), ln, "vertex")?;
                let v = int(toks.get(2).copied(), ln, "vertex")?;
                if toks.len() > 3 {
                    return Err(Error::parse(ln, "trailing tokens"));
                }
                let n = g.vertex_count();
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(Error::parse(ln, format!("vertex {x} out of range 1..={n}")));
                    }
                }
                if u == v {
                    return Err(Error::parse(ln, format!("self-loop at {u}")));
                }
                if g.adjacent(u - 1, v - 1) {
                    return Err(Error::parse(ln, format!("duplicate edge {u} {v}")));
                }
                g.add_edge(u - 1, v - 1)
                    .map_err(|e| Error::parse(ln, e.to_string()))?;
            }
            other => return Err(Error::parse(ln, format!("unknown line type `{other}`"))),
        }
    }
    let (g, m) = graph.ok_or_else(|| Error::parse(0, "missing problem line"))?;
    if g.edge_count() != m {
        return Err(Error::parse(
            0,
            format!("problem line declares {m} edges, found {}", g.edge_count()),
        ));
    }
    Ok(g)
}

pub fn parse_graph(path: impl AsRef<Path>) -> Result<Graph> {
    parse_graph_str(&std::fs::read_to_string(path)?)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Parses `n <id> internal <l> <r>` and `n <id> leaf <vertex>` lines. Node
/// ids are `1..=N`; the first listed node is the root. The result is
/// validated against `g`.
pub fn parse_decomposition_str(text: &str, g: &Graph) -> Result<RootedBranchDecomposition> {
    let mut raw: Vec<(usize, usize, TreeNode)> = Vec::new();
    let mut child_refs: Vec<(usize, usize)> = Vec::new();
    for (ln, toks) in content_lines(text) {
        if toks[0] != "n" {
            return Err(Error::parse(ln, format!("unknown line type `{}`", toks[0])));
        }
        let id = int(toks.get(1).copied(), ln, "node id")?;
        if id == 0 {
            return Err(Error::parse(ln, "node ids start at 1"));
        }
        let node = match toks.get(2).copied() {
            Some("leaf") => {
                if toks.len() != 4 {
                    return Err(Error::parse(ln, "expected `n <id> leaf <vertex>`"));
                }
                let v = int(toks.get(3).copied(), ln, "vertex")?;
                if v == 0 || v > g.vertex_count() {
                    return Err(Error::parse(ln, format!("vertex {v} out of range")));
                }
                TreeNode::leaf(v - 1)
            }
            Some("internal") => {
                let children = toks[3..]
                    .iter()
                    .map(|t| int(Some(t), ln, "child id"))
                    .collect::<Result<Vec<_>>>()?;
                if children.is_empty() {
                    return Err(Error::parse(ln, "internal node without children"));
                }
                child_refs.extend(children.iter().map(|&c| (ln, c)));
                TreeNode {
                    children: children.into_iter().map(|c| c.wrapping_sub(1)).collect(),
                    vertex: None,
                }
            }
            _ => return Err(Error::parse(ln, "expected `leaf` or `internal`")),
        };
        raw.push((ln, id, node));
    }
    if raw.is_empty() {
        return Err(Error::parse(0, "no nodes"));
    }
    let count = raw.len();
    let mut slots: Vec<Option<TreeNode>> = vec![None; count];
    for (ln, id, node) in &raw {
        if *id > count {
            return Err(Error::parse(
                *ln,
                format!("node id {id} exceeds node count {count}"),
            ));
        }
        if slots[id - 1].replace(node.clone()).is_some() {
            return Err(Error::parse(*ln, format!("node {id} defined twice")));
        }
    }
    for (ln, c) in child_refs {
        if c == 0 || c > count {
            return Err(Error::parse(ln, format!("unknown node {c}")));
        }
    }
    let nodes = slots
        .into_iter()
        .map(|n| n.expect("ids are a permutation"))
        .collect();
    let d = RootedBranchDecomposition::from_nodes(nodes, raw[0].1 - 1);
    d.validate(g).into_result()?;
    Ok(d)
}

pub fn parse_decomposition(path: impl AsRef<Path>, g: &Graph) -> Result<RootedBranchDecomposition> {
    parse_decomposition_str(&std::fs::read_to_string(path)?, g)
}

/// Root first, then the remaining nodes by id.
pub fn write_decomposition(d: &RootedBranchDecomposition) -> String {
    let order = std::iter::once(d.root()).chain((0..d.node_count()).filter(|&t| t != d.root()));
    let mut out = String::new();
    for t in order {
        let node = &d.nodes()[t];
        match node.vertex {
            Some(v) => {
                let _ = writeln!(out, "n {} leaf {}", t + 1, v + 1);
            }
            None => {
                let kids: Vec<String> = node.children.iter().map(|c| (c + 1).to_string()).collect();
                let _ = writeln!(out, "n {} internal {}", t + 1, kids.join(" "));
            }
        }
    }
    out
}

/// One `<vertex> <color>` line per vertex of a graph on `n` vertices.
pub fn parse_coloring_str(text: &str, n: usize) -> Result<Coloring> {
    let mut colors = vec![0usize; n];
    for (ln, toks) in content_lines(text) {
        if toks.len() != 2 {
            return Err(Error::parse(ln, "expected `<vertex> <color>`"));
        }
        let v = int(Some(toks[0]), ln, "vertex")?;
        let c = int(Some(toks[1]), ln, "color")?;
        if v == 0 || v > n {
            return Err(Error::parse(ln, format!("vertex {v} out of range")));
        }
        if c == 0 {
            return Err(Error::parse(ln, "colors start at 1"));
        }
        if colors[v - 1] != 0 {
            return Err(Error::parse(ln, format!("vertex {v} colored twice")));
        }
        colors[v - 1] = c;
    }
    if let Some(v) = colors.iter().position(|&c| c == 0) {
        return Err(Error::input(format!("vertex {} has no color", v + 1)));
    }
    Coloring::from_colors(colors)
}

pub fn parse_coloring(path: impl AsRef<Path>, n: usize) -> Result<Coloring> {
    parse_coloring_str(&std::fs::read_to_string(path)?, n)
}

pub fn write_coloring(c: &Coloring) -> String {
    let mut out = String::new();
    for (v, &col) in c.colors().iter().enumerate() {
        let _ = writeln!(out, "{} {}", v + 1, col);
    }
    out
}
