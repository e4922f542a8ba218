//! Exhaustive reference solvers and definition checkers.
//!
//! Everything here follows the definitions literally and is meant for small
//! graphs. Colorings are enumerated in lexicographic order of the assignment
//! vector, so the first witness found is deterministic.

use std::collections::HashSet;

use crate::decomposition::{DecompositionAnalysis, NodeId};
use crate::dp::{fall_type_of_class, is_valid_class, is_valid_fall_class, type_of_class};
use crate::dp::{ColorClassType, FallType, Signature};
use crate::error::{Error, Result};
use crate::graph::{is_proper, Coloring, Graph, Vertex};

pub const DEFAULT_CAPACITY: usize = 10;

fn has_all_nonempty_classes(c: &Coloring) -> bool {
    let mut used = vec![false; c.k()];
    for &x in c.colors() {
        used[x - 1] = true;
    }
    used.into_iter().all(|u| u)
}

/// Colors (1-based) seen in the neighborhood of `v`, as a membership vector.
fn neighbor_colors(g: &Graph, c: &Coloring, v: Vertex) -> Vec<bool> {
    let mut seen = vec![false; c.k() + 1];
    for &u in g.neighbors_of(v) {
        seen[c.color(u)] = true;
    }
    seen
}

fn is_b_vertex(g: &Graph, c: &Coloring, v: Vertex) -> bool {
    let seen = neighbor_colors(g, c, v);
    (1..=c.k()).all(|x| x == c.color(v) || seen[x])
}

/// Proper, every class nonempty, every class holds a vertex adjacent to all
/// other classes.
pub fn is_b_coloring(g: &Graph, c: &Coloring) -> bool {
    if !matches!(is_proper(g, c), Ok(true)) || !has_all_nonempty_classes(c) {
        return false;
    }
    c.classes()
        .iter()
        .all(|class| class.iter().any(|&v| is_b_vertex(g, c, v)))
}

/// Proper, every class nonempty, and every vertex is a b-vertex.
pub fn is_fall_coloring(g: &Graph, c: &Coloring) -> bool {
    matches!(is_proper(g, c), Ok(true))
        && has_all_nonempty_classes(c)
        && (0..g.vertex_count()).all(|v| is_b_vertex(g, c, v))
}

/// Exhaustive solvers with a vertex-count ceiling.
#[derive(Debug, Clone, Copy)]
pub struct Oracle {
    pub capacity: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            capacity: DEFAULT_CAPACITY,
        }
    }
}

impl Oracle {
    pub fn with_capacity(capacity: usize) -> Self {
        Oracle { capacity }
    }

    fn check(&self, g: &Graph) -> Result<()> {
        if g.vertex_count() > self.capacity {
            return Err(Error::Capacity(format!(
                "brute force limited to {} vertices, got {}",
                self.capacity,
                g.vertex_count()
            )));
        }
        Ok(())
    }

    /// First proper `k`-coloring in lexicographic order satisfying `accept`.
    fn first_coloring(g: &Graph, k: usize, accept: impl Fn(&Coloring) -> bool) -> Option<Coloring> {
        let n = g.vertex_count();
        if k == 0 {
            return None;
        }
        let mut colors = vec![0usize; n];
        let mut v = 0;
        // Depth-first odometer; a partial assignment that already clashes on
        // an edge is skipped since no completion can be proper.
        loop {
            if v == n {
                let c = Coloring::new(colors.clone(), k).expect("colors in range");
                if accept(&c) {
                    return Some(c);
                }
                if n == 0 {
                    return None;
                }
                v -= 1;
            }
            colors[v] += 1;
            if colors[v] > k {
                colors[v] = 0;
                if v == 0 {
                    return None;
                }
                v -= 1;
                continue;
            }
            if g.neighbors_of(v)
                .iter()
                .all(|&u| u > v || colors[u] != colors[v])
            {
                v += 1;
            }
        }
    }

    pub fn bcoloring(&self, g: &Graph, k: usize) -> Result<Option<Coloring>> {
        self.check(g)?;
        // A b-vertex has a neighbor in each of the other k - 1 classes.
        if k > g.max_degree() + 1 {
            return Ok(None);
        }
        Ok(Self::first_coloring(g, k, |c| is_b_coloring(g, c)))
    }

    pub fn fallcoloring(&self, g: &Graph, k: usize) -> Result<Option<Coloring>> {
        self.check(g)?;
        if k > g.min_degree() + 1 {
            return Ok(None);
        }
        Ok(Self::first_coloring(g, k, |c| is_fall_coloring(g, c)))
    }

    pub fn chi_b(&self, g: &Graph) -> Result<usize> {
        self.check(g)?;
        for k in (1..=g.vertex_count()).rev() {
            if self.bcoloring(g, k)?.is_some() {
                return Ok(k);
            }
        }
        Ok(0)
    }
}

pub fn brute_force_bcoloring(g: &Graph, k: usize) -> Result<Option<Coloring>> {
    Oracle::default().bcoloring(g, k)
}

pub fn brute_force_fallcoloring(g: &Graph, k: usize) -> Result<Option<Coloring>> {
    Oracle::default().fallcoloring(g, k)
}

pub fn brute_force_chi_b(g: &Graph) -> Result<usize> {
    Oracle::default().chi_b(g)
}

/// Calls `f` with every proper coloring of `V_t` into `1..=k`, given as a
/// per-graph-vertex assignment (`None` outside `V_t`).
fn for_each_proper_coloring(
    g: &Graph,
    vs: &[Vertex],
    k: usize,
    mut f: impl FnMut(&[Option<usize>]),
) {
    let mut colors: Vec<Option<usize>> = vec![None; g.vertex_count()];
    fn rec(
        g: &Graph,
        vs: &[Vertex],
        i: usize,
        k: usize,
        colors: &mut Vec<Option<usize>>,
        f: &mut dyn FnMut(&[Option<usize>]),
    ) {
        if i == vs.len() {
            f(colors);
            return;
        }
        let v = vs[i];
        for c in 1..=k {
            if g.neighbors_of(v).iter().all(|&u| colors[u] != Some(c)) {
                colors[v] = Some(c);
                rec(g, vs, i + 1, k, colors, f);
                colors[v] = None;
            }
        }
    }
    rec(g, vs, 0, k, &mut colors, &mut f);
}

/// Signatures of all valid partial b-colorings of `G_t` with `k` colors,
/// enumerated from the definitions.
pub fn partial_bcoloring_signatures(
    g: &Graph,
    a: &DecompositionAnalysis,
    t: NodeId,
    k: usize,
) -> Result<HashSet<Signature<ColorClassType>>> {
    let mut out = HashSet::new();
    let mut err = None;
    for_each_proper_coloring(g, a.vertices(t), k, |colors| {
        let classes: Vec<Vec<Vertex>> = (1..=k)
            .map(|c| {
                a.vertices(t)
                    .iter()
                    .copied()
                    .filter(|&v| colors[v] == Some(c))
                    .collect()
            })
            .collect();
        // Choose at most one partial b-vertex per class.
        let mut choice = vec![0usize; k];
        loop {
            let b: Vec<Vertex> = classes
                .iter()
                .zip(&choice)
                .filter(|(_, &i)| i > 0)
                .map(|(cls, &i)| cls[i - 1])
                .collect();
            let run = || -> Result<Option<Signature<ColorClassType>>> {
                for cls in &classes {
                    if !is_valid_class(g, a, t, cls, &b)? {
                        return Ok(None);
                    }
                }
                let types = classes
                    .iter()
                    .map(|cls| type_of_class(g, a, t, cls, &b).map(|ty| (ty, 1)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Some(Signature::from_counts(types)))
            };
            match run() {
                Ok(Some(sig)) => {
                    out.insert(sig);
                }
                Ok(None) => {}
                Err(e) => err = Some(e),
            }
            let mut i = 0;
            while i < k {
                choice[i] += 1;
                if choice[i] <= classes[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Signatures of all valid proper colorings of `G_t` with `k` colors under
/// fall types.
pub fn partial_fall_signatures(
    g: &Graph,
    a: &DecompositionAnalysis,
    t: NodeId,
    k: usize,
) -> Result<HashSet<Signature<FallType>>> {
    let mut out = HashSet::new();
    let mut err = None;
    for_each_proper_coloring(g, a.vertices(t), k, |colors| {
        let run = || -> Result<Option<Signature<FallType>>> {
            let mut types = Vec::with_capacity(k);
            for c in 1..=k {
                if !is_valid_fall_class(g, a, t, colors, c)? {
                    return Ok(None);
                }
                types.push((fall_type_of_class(g, a, t, colors, c)?, 1));
            }
            Ok(Some(Signature::from_counts(types)))
        };
        match run() {
            Ok(Some(sig)) => {
                out.insert(sig);
            }
            Ok(None) => {}
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(cs: &[usize]) -> Coloring {
        Coloring::from_colors(cs.to_vec()).unwrap()
    }

    #[test]
    fn b_coloring_checker() {
        assert!(is_b_coloring(&Graph::complete(3), &col(&[1, 2, 3])));
        assert!(!is_b_coloring(&Graph::path(3), &col(&[1, 2, 3])));
        assert!(!is_b_coloring(&Graph::complete(2), &col(&[1, 1])));
        // Empty class 2.
        assert!(!is_b_coloring(
            &Graph::new(2),
            &Coloring::new(vec![1, 1], 2).unwrap()
        ));
    }

    #[test]
    fn fall_coloring_checker() {
        assert!(is_fall_coloring(&Graph::cycle(4), &col(&[1, 2, 1, 2])));
        assert!(is_fall_coloring(
            &Graph::cycle(6),
            &col(&[1, 2, 1, 2, 1, 2])
        ));
        assert!(!is_fall_coloring(&Graph::path(4), &col(&[1, 2, 2, 1])));
        // Proper b-coloring that is not a fall coloring: leaf 3 sees no color 1.
        let p4 = Graph::path(4);
        assert!(!is_fall_coloring(&p4, &col(&[1, 2, 3, 2])));
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(
            brute_force_bcoloring(&Graph::complete(4), 4).unwrap(),
            Some(col(&[1, 2, 3, 4]))
        );
        assert_eq!(brute_force_bcoloring(&Graph::star(3), 3).unwrap(), None);
        let w = brute_force_bcoloring(&Graph::path(4), 2).unwrap().unwrap();
        assert!(is_b_coloring(&Graph::path(4), &w));
        assert_eq!(brute_force_chi_b(&Graph::complete(5)).unwrap(), 5);
        assert_eq!(brute_force_chi_b(&Graph::star(4)).unwrap(), 2);
        for k in 1..=5 {
            assert_eq!(brute_force_fallcoloring(&Graph::cycle(5), k).unwrap(), None);
        }
        assert!(matches!(
            brute_force_chi_b(&Graph::new(11)),
            Err(Error::Capacity(_))
        ));
        assert_eq!(Oracle::with_capacity(12).chi_b(&Graph::new(11)).unwrap(), 1);
    }

    #[test]
    fn lexicographic_first_witness() {
        // P_3 with two colors: (1,2,1) is the first proper assignment.
        assert_eq!(
            brute_force_bcoloring(&Graph::path(3), 2).unwrap(),
            Some(col(&[1, 2, 1]))
        );
        assert_eq!(
            brute_force_bcoloring(&Graph::new(1), 1).unwrap(),
            Some(col(&[1]))
        );
        assert_eq!(brute_force_bcoloring(&Graph::new(0), 1).unwrap(), None);
    }
}
