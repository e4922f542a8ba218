//! b-Coloring parameterized by the vertex cover number.
//!
//! With a minimum cover `S`, the rest of the graph is an independent set
//! whose vertices only see `S`. A guess fixes the coloring of `S` and the
//! b-vertices inside `S`; everything outside is then forced, demanded by a
//! b-vertex, or free.

use crate::bcol::BColoring;
use crate::error::{Error, Result};
use crate::graph::{Coloring, Graph, Vertex};

/// Colors are kept as bitmasks, bit `c - 1` for color `c`.
pub const MAX_VC_COLORS: usize = 64;

type Mask = u64;

fn bit(c: usize) -> Mask {
    1 << (c - 1)
}

fn full(k: usize) -> Mask {
    if k == 64 {
        Mask::MAX
    } else {
        (1 << k) - 1
    }
}

/// A minimum vertex cover, sorted.
pub fn min_vertex_cover(g: &Graph) -> Vec<Vertex> {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut cur = Vec::new();
    let mut best: Vec<Vertex> = (0..n).filter(|&v| g.degree(v) > 0).collect();
    cover_rec(g, &mut alive, &mut cur, &mut best);
    best.sort_unstable();
    best
}

fn live_degree(g: &Graph, alive: &[bool], v: Vertex) -> usize {
    g.neighbors_of(v).iter().filter(|&&u| alive[u]).count()
}

fn cover_rec(g: &Graph, alive: &mut [bool], cur: &mut Vec<Vertex>, best: &mut Vec<Vertex>) {
    if cur.len() >= best.len() {
        return;
    }
    let pick = (0..g.vertex_count())
        .filter(|&v| alive[v])
        .map(|v| (live_degree(g, alive, v), v))
        .max_by_key(|&(d, v)| (d, std::cmp::Reverse(v)));
    let (d, v) = match pick {
        Some((d, v)) if d > 0 => (d, v),
        _ => {
            *best = cur.clone();
            return;
        }
    };
    if d == 1 {
        // A matching: one endpoint per remaining edge is optimal.
        let mark = cur.len();
        let mut removed = Vec::new();
        for u in 0..g.vertex_count() {
            if alive[u] && live_degree(g, alive, u) > 0 {
                cur.push(u);
                alive[u] = false;
                removed.push(u);
            }
        }
        if cur.len() < best.len() {
            *best = cur.clone();
        }
        for u in removed {
            alive[u] = true;
        }
        cur.truncate(mark);
        return;
    }
    // Either v is in the cover, or all of its neighbors are.
    alive[v] = false;
    cur.push(v);
    cover_rec(g, alive, cur, best);
    cur.pop();

    let nbrs: Vec<Vertex> = g
        .neighbors_of(v)
        .iter()
        .copied()
        .filter(|&u| alive[u])
        .collect();
    for &u in &nbrs {
        alive[u] = false;
        cur.push(u);
    }
    cover_rec(g, alive, cur, best);
    for &u in &nbrs {
        alive[u] = true;
        cur.pop();
    }
    alive[v] = true;
}

/// Coloring of the cover plus the b-vertices chosen inside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverGuess {
    /// Color per graph vertex; `None` outside the cover.
    pub phi: Vec<Option<usize>>,
    /// Designated b-vertices in the cover, pairwise distinct colors.
    pub b: Vec<Vertex>,
}

/// A b-vertex `x` still missing `color` among its neighbors, with the
/// uncolored outside neighbors that could take that color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Need {
    pub x: Vertex,
    pub color: usize,
    pub candidates: Vec<Vertex>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NeedSet {
    pub needs: Vec<Need>,
}

/// Vertex-to-color assignments outside the cover.
pub type Extension = Vec<(Vertex, usize)>;

/// Colors at most `k² - k` candidates so that every need in `needs` is met,
/// or reports that no assignment does. A vertex takes a single color.
pub fn small_extension_search(needs: &NeedSet, k: usize) -> Option<Extension> {
    let budget = k * k.saturating_sub(1);
    let mut ext: Extension = Vec::new();
    let found = extend(&needs.needs, &mut ext, budget);
    debug_assert!(!found || ext.len() <= budget);
    found.then_some(ext)
}

fn extend(needs: &[Need], ext: &mut Extension, budget: usize) -> bool {
    let open = needs.iter().find(|n| {
        !ext.iter()
            .any(|&(y, c)| c == n.color && n.candidates.contains(&y))
    });
    let need = match open {
        None => return true,
        Some(n) => n,
    };
    if ext.len() == budget {
        return false;
    }
    for &y in &need.candidates {
        if ext.iter().any(|&(z, _)| z == y) {
            continue;
        }
        ext.push((y, need.color));
        if extend(needs, ext, budget) {
            return true;
        }
        ext.pop();
    }
    false
}

struct Ctx<'a> {
    g: &'a Graph,
    k: usize,
    cover: Vec<Vertex>,
    outside: Vec<Vertex>,
    in_cover: Vec<bool>,
}

/// Decides b-coloring with `k` colors; on success returns a witness.
pub fn solve_bcoloring_vc(g: &Graph, k: usize) -> Result<Option<BColoring>> {
    if k == 0 {
        return Err(Error::input("k must be at least 1"));
    }
    let n = g.vertex_count();
    if k > n || k > g.max_degree() + 1 {
        return Ok(None);
    }
    let cover = min_vertex_cover(g);
    // At least two b-vertices would sit outside the cover, each needing
    // k - 1 > |S| cover neighbors.
    if k >= cover.len() + 2 {
        return Ok(None);
    }
    if k > MAX_VC_COLORS {
        return Err(Error::Capacity(format!(
            "vertex cover solver supports at most {MAX_VC_COLORS} colors"
        )));
    }
    let mut in_cover = vec![false; n];
    for &v in &cover {
        in_cover[v] = true;
    }
    let ctx = Ctx {
        g,
        k,
        outside: (0..n).filter(|&v| !in_cover[v]).collect(),
        cover,
        in_cover,
    };
    let mut phi = vec![None; n];
    Ok(enumerate_phi(&ctx, 0, 0, &mut phi))
}

pub fn decide_bcoloring_vc(g: &Graph, k: usize) -> Result<bool> {
    Ok(solve_bcoloring_vc(g, k)?.is_some())
}

/// Proper colorings of the cover in restricted-growth form: the cover vertex
/// at position `i` uses a color at most one above those used before it.
/// Renaming colors maps every b-coloring onto one of these.
fn enumerate_phi(
    ctx: &Ctx,
    i: usize,
    used: usize,
    phi: &mut Vec<Option<usize>>,
) -> Option<BColoring> {
    if i == ctx.cover.len() {
        return try_phi(ctx, phi);
    }
    let v = ctx.cover[i];
    for c in 1..=(used + 1).min(ctx.k) {
        if ctx.g.neighbors_of(v).iter().any(|&u| phi[u] == Some(c)) {
            continue;
        }
        phi[v] = Some(c);
        if let Some(w) = enumerate_phi(ctx, i + 1, used.max(c), phi) {
            return Some(w);
        }
        phi[v] = None;
    }
    None
}

fn try_phi(ctx: &Ctx, phi: &[Option<usize>]) -> Option<BColoring> {
    let k = ctx.k;
    let n = ctx.g.vertex_count();
    let mut seen = vec![0 as Mask; n];
    for &x in &ctx.outside {
        seen[x] = ctx
            .g
            .neighbors_of(x)
            .iter()
            .fold(0, |m, &u| m | bit(phi[u].expect("cover colored")));
        if seen[x] == full(k) {
            return None;
        }
    }
    // Colors some outside vertex would complete as a b-vertex.
    let completable = ctx
        .outside
        .iter()
        .filter(|&&x| seen[x].count_ones() as usize == k - 1)
        .fold(0 as Mask, |m, &x| m | (full(k) & !seen[x]));

    let mut classes: Vec<Vec<Vertex>> = vec![Vec::new(); k];
    for &v in &ctx.cover {
        let c = phi[v].expect("cover colored");
        if ctx.g.degree(v) + 1 >= k {
            classes[c - 1].push(v);
        }
    }
    let guess = CoverGuess {
        phi: phi.to_vec(),
        b: Vec::new(),
    };
    enumerate_b(
        ctx,
        &guess,
        &seen,
        completable,
        &classes,
        0,
        &mut Vec::new(),
    )
}

fn enumerate_b(
    ctx: &Ctx,
    guess: &CoverGuess,
    seen: &[Mask],
    completable: Mask,
    classes: &[Vec<Vertex>],
    c: usize,
    b: &mut Vec<Vertex>,
) -> Option<BColoring> {
    if c == ctx.k {
        let g = CoverGuess {
            phi: guess.phi.clone(),
            b: b.clone(),
        };
        return try_guess(ctx, &g, seen);
    }
    if completable & bit(c + 1) != 0 {
        if let Some(w) = enumerate_b(ctx, guess, seen, completable, classes, c + 1, b) {
            return Some(w);
        }
    }
    for &v in &classes[c] {
        b.push(v);
        if let Some(w) = enumerate_b(ctx, guess, seen, completable, classes, c + 1, b) {
            return Some(w);
        }
        b.pop();
    }
    None
}

/// Checks one guess and, if it extends, completes it to a b-coloring.
fn try_guess(ctx: &Ctx, guess: &CoverGuess, seen: &[Mask]) -> Option<BColoring> {
    let (g, k) = (ctx.g, ctx.k);
    let n = g.vertex_count();
    let mut color: Vec<Option<usize>> = guess.phi.clone();

    // Outside vertices missing a single color must take it.
    for &x in &ctx.outside {
        let free = full(k) & !seen[x];
        if free.count_ones() == 1 {
            color[x] = Some(free.trailing_zeros() as usize + 1);
        }
    }

    let mut b_vertex: Vec<Option<Vertex>> = vec![None; k];
    for &v in &guess.b {
        b_vertex[color[v].expect("cover colored") - 1] = Some(v);
    }
    for c in 1..=k {
        if b_vertex[c - 1].is_none() {
            let x = ctx
                .outside
                .iter()
                .copied()
                .find(|&x| seen[x] == full(k) & !bit(c))?;
            b_vertex[c - 1] = Some(x);
        }
    }

    let mut needs = Vec::new();
    for &x in &guess.b {
        let own = color[x].expect("cover colored");
        let have = g
            .neighbors_of(x)
            .iter()
            .filter_map(|&u| color[u])
            .fold(0 as Mask, |m, c| m | bit(c));
        for c in (1..=k).filter(|&c| c != own && have & bit(c) == 0) {
            let candidates: Vec<Vertex> = g
                .neighbors_of(x)
                .iter()
                .copied()
                .filter(|&y| !ctx.in_cover[y] && color[y].is_none() && seen[y] & bit(c) == 0)
                .collect();
            if candidates.is_empty() {
                return None;
            }
            needs.push(Need {
                x,
                color: c,
                candidates,
            });
        }
    }

    let threshold = k * (k - 1);
    let (small, large): (Vec<Need>, Vec<Need>) = needs
        .into_iter()
        .partition(|nd| nd.candidates.len() <= threshold);
    let ext = small_extension_search(&NeedSet { needs: small }, k)?;
    for (y, c) in ext {
        color[y] = Some(c);
    }
    // Each remaining need has more candidates than there are needs in
    // total, so one is always still uncolored.
    for nd in &large {
        if nd.candidates.iter().any(|&y| color[y] == Some(nd.color)) {
            continue;
        }
        let y = nd
            .candidates
            .iter()
            .copied()
            .find(|&y| color[y].is_none())
            .expect("large need keeps a free candidate");
        color[y] = Some(nd.color);
    }
    for &x in &ctx.outside {
        if color[x].is_none() {
            let free = full(k) & !seen[x];
            color[x] = Some(free.trailing_zeros() as usize + 1);
        }
    }

    let colors: Vec<usize> = (0..n).map(|v| color[v].expect("all colored")).collect();
    let coloring = Coloring::new(colors, k).ok()?;
    debug_assert!(crate::oracle::is_b_coloring(g, &coloring));
    Some(BColoring {
        coloring,
        b_vertices: b_vertex
            .into_iter()
            .map(|v| v.expect("b-vertex per color"))
            .collect(),
    })
}
