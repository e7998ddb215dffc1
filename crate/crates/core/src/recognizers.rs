//! Recognition of induced paths, holes, chordality and the related
//! structures used by the class definition.
//!
//! Searches run in increasing vertex order, so the first witness returned
//! is the lexicographically smallest one the search meets.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Calls `visit` on every induced path with `k` vertices (both orientations)
/// until it returns `true`. Returns whether a visit stopped the search.
pub fn for_each_induced_path(g: &Graph, k: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    if k == 0 {
        return visit(&[]);
    }
    let mut path = Vec::with_capacity(k);
    for s in 0..g.n() {
        path.push(s);
        if grow_path(g, &mut path, VertexSet::singleton(g.n(), s), k, &mut visit) {
            return true;
        }
        path.pop();
    }
    false
}

/// `blocked` = closed neighborhoods of all path vertices but the last, plus the last.
fn grow_path(
    g: &Graph,
    path: &mut Vec<usize>,
    blocked: VertexSet,
    k: usize,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if path.len() == k {
        return visit(path);
    }
    let last = *path.last().expect("path is nonempty");
    let cand = g.neighbors(last).difference(&blocked);
    if cand.is_empty() {
        return false;
    }
    let next_blocked = blocked.union(&g.closed_neighbors(last));
    for w in &cand {
        path.push(w);
        if grow_path(g, path, next_blocked.with(w), k, visit) {
            return true;
        }
        path.pop();
    }
    false
}

/// An induced path on `k` vertices, in path order.
pub fn find_induced_path(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_induced_path(g, k, |p| {
        found = Some(p.to_vec());
        true
    });
    found
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Any,
    Even,
    Odd,
}

impl Parity {
    fn admits(self, len: usize) -> bool {
        match self {
            Parity::Any => true,
            Parity::Even => len.is_multiple_of(2),
            Parity::Odd => !len.is_multiple_of(2),
        }
    }
}

enum HoleSearch {
    Found(Vec<usize>),
    /// No hole of this length; `reached` tells whether any candidate prefix
    /// got to the closing step (if not, no longer hole exists either).
    Absent {
        reached: bool,
    },
}

/// A hole (induced cycle of length at least 4), listed in cycle order.
///
/// Without `exact_length`, lengths are tried in increasing order, so the
/// result is a shortest hole of the requested parity.
pub fn find_hole(g: &Graph, parity: Parity, exact_length: Option<usize>) -> Option<Vec<usize>> {
    match exact_length {
        Some(l) => {
            if l < 4 || !parity.admits(l) {
                return None;
            }
            match hole_of_length(g, l) {
                HoleSearch::Found(h) => Some(h),
                HoleSearch::Absent { .. } => None,
            }
        }
        None => {
            for l in 4..=g.n() {
                if !parity.admits(l) {
                    continue;
                }
                match hole_of_length(g, l) {
                    HoleSearch::Found(h) => return Some(h),
                    HoleSearch::Absent { reached: false } => return None,
                    HoleSearch::Absent { reached: true } => {}
                }
            }
            None
        }
    }
}

fn hole_of_length(g: &Graph, l: usize) -> HoleSearch {
    let mut found = None;
    let reached = for_each_hole(g, l, |h| {
        found = Some(h.to_vec());
        true
    });
    match found {
        Some(h) => HoleSearch::Found(h),
        None => HoleSearch::Absent { reached },
    }
}

/// Calls `visit` on each hole of length `l` once, until it returns `true`.
///
/// Holes are rooted at their smallest vertex `s`, with the second vertex
/// smaller than the last to fix the orientation. Returns whether any
/// candidate prefix reached the closing step; if none did, no hole of
/// length `l` or longer exists.
pub fn for_each_hole(g: &Graph, l: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    let n = g.n();
    let mut reached = false;
    if l < 4 {
        return false;
    }
    for s in 0..n {
        let low = VertexSet::from_iter_in(n, 0..=s);
        let ns = g.neighbors(s);
        for v2 in ns.difference(&low).iter() {
            let mut path = vec![s, v2];
            if grow_hole(g, &mut path, low.clone(), ns, l, &mut reached, &mut visit) {
                return true;
            }
        }
    }
    reached
}

/// `inner` = vertices `<= s` plus closed neighborhoods of `path[1..len-1]`.
fn grow_hole(
    g: &Graph,
    path: &mut Vec<usize>,
    inner: VertexSet,
    ns: &VertexSet,
    l: usize,
    reached: &mut bool,
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let last = *path.last().expect("path is nonempty");
    if path.len() == l - 1 {
        *reached = true;
        let v2 = path[1];
        let close = g.neighbors(last).intersection(ns).difference(&inner);
        for w in close.iter().filter(|&w| w > v2) {
            path.push(w);
            let stop = visit(path);
            path.pop();
            if stop {
                return true;
            }
        }
        return false;
    }
    let cand = g.neighbors(last).difference(&inner).difference(ns);
    if cand.is_empty() {
        return false;
    }
    let next_inner = inner.union(&g.closed_neighbors(last));
    for w in &cand {
        path.push(w);
        if grow_hole(g, path, next_inner.clone(), ns, l, reached, visit) {
            return true;
        }
        path.pop();
    }
    false
}

/// Every induced C5, each listed once in cycle order from its smallest vertex.
pub fn all_induced_c5(g: &Graph) -> Vec<[usize; 5]> {
    let mut out = Vec::new();
    for_each_hole(g, 5, |h| {
        out.push([h[0], h[1], h[2], h[3], h[4]]);
        false
    });
    out
}

/// Membership in the (P7, even-hole)-free class and its named sub-conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassReport {
    pub p7_free: bool,
    pub c4_free: bool,
    pub c6_free: bool,
    pub c7_free: bool,
    pub even_hole_free: bool,
    pub witnesses: ClassWitnesses,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassWitnesses {
    pub p7: Option<Vec<usize>>,
    pub c4: Option<Vec<usize>>,
    pub c6: Option<Vec<usize>>,
    pub c7: Option<Vec<usize>>,
    pub even_hole: Option<Vec<usize>>,
}

impl ClassReport {
    /// (P7, even-hole)-free.
    pub fn in_class(&self) -> bool {
        self.p7_free && self.even_hole_free
    }

    /// (P7, C4, C6, C7)-free, the setting of the blowup structure statements.
    pub fn c7_free_class(&self) -> bool {
        self.p7_free && self.c4_free && self.c6_free && self.c7_free
    }

    /// Short human-readable reason for non-membership.
    pub fn violation(&self) -> Option<String> {
        let w = &self.witnesses;
        if let Some(p) = &w.p7 {
            return Some(format!("induced P7 {p:?}"));
        }
        w.even_hole.as_ref().map(|h| format!("even hole {h:?}"))
    }
}

pub fn is_in_class(g: &Graph) -> ClassReport {
    let p7 = find_induced_path(g, 7);
    let c4 = find_hole(g, Parity::Any, Some(4));
    let c6 = find_hole(g, Parity::Any, Some(6));
    let c7 = find_hole(g, Parity::Any, Some(7));
    let even_hole = c4
        .clone()
        .or_else(|| c6.clone())
        .or_else(|| find_hole(g, Parity::Even, None));
    ClassReport {
        p7_free: p7.is_none(),
        c4_free: c4.is_none(),
        c6_free: c6.is_none(),
        c7_free: c7.is_none(),
        even_hole_free: even_hole.is_none(),
        witnesses: ClassWitnesses {
            p7,
            c4,
            c6,
            c7,
            even_hole,
        },
    }
}

/// Lexicographic breadth-first search order (ties to the lowest index).
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .fold(None::<usize>, |best, v| match best {
                Some(b) if labels[b] >= labels[v] => Some(b),
                _ => Some(v),
            })
            .expect("an unvisited vertex remains");
        done[v] = true;
        order.push(v);
        for u in g.neighbors(v) {
            if !done[u] {
                labels[u].push(n - step);
            }
        }
    }
    order
}

/// `order` is a perfect elimination ordering: each vertex's later neighbors form a clique.
pub fn is_peo(g: &Graph, order: &[usize]) -> bool {
    if order.len() != g.n() {
        return false;
    }
    let mut later = g.vertices();
    for &v in order {
        if !later.remove(v) {
            return false;
        }
        if !g.is_clique(&g.neighbors(v).intersection(&later)) {
            return false;
        }
    }
    true
}

/// A perfect elimination ordering when `g` is chordal.
pub fn is_chordal(g: &Graph) -> Option<Vec<usize>> {
    let mut peo = lex_bfs(g);
    peo.reverse();
    if is_peo(g, &peo) {
        Some(peo)
    } else {
        None
    }
}

/// Vertices of `x` whose neighborhood in `x` is a clique.
pub fn simplicial_vertices(g: &Graph, x: &VertexSet) -> VertexSet {
    VertexSet::from_iter_in(
        g.n(),
        x.iter()
            .filter(|&v| g.is_clique(&g.neighbors(v).intersection(x))),
    )
}

/// Among the vertices of `N_X[seed]` simplicial in `g[X]`, one whose
/// neighborhood in `Y` is inclusion-minimal (smallest size, then lowest index).
pub fn minimal_simplicial_vertex(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    seed: usize,
) -> Result<usize> {
    if let Some(v) = x.intersection(y).first() {
        return Err(Error::Overlap(v));
    }
    if !x.contains(seed) {
        return Err(Error::InvalidArgument(format!("seed {seed} is not in X")));
    }
    let simp = simplicial_vertices(g, x);
    if !simp.contains(seed) {
        return Err(Error::NotSimplicial(seed));
    }
    let cand = g.closed_neighbors(seed).intersection(x).intersection(&simp);
    Ok(cand
        .iter()
        .min_by_key(|&s| (g.degree_in(s, y), s))
        .expect("seed itself is a candidate"))
}

/// A bad P7: `v1..v6` an induced P6 and `v3..v7` an induced P5.
pub fn has_bad_p7(g: &Graph) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_induced_path(g, 6, |p| {
        let block = g
            .closed_neighbors(p[2])
            .union(&g.closed_neighbors(p[3]))
            .union(&g.closed_neighbors(p[4]));
        if let Some(v7) = g.neighbors(p[5]).difference(&block).first() {
            let mut w = p.to_vec();
            w.push(v7);
            found = Some(w);
            true
        } else {
            false
        }
    });
    found
}

/// Each part nonempty and connected, consecutive parts joined by an edge,
/// other pairs anticomplete. Cyclic sequences also treat the last and first
/// parts as consecutive. Errors if two parts overlap.
pub fn check_induced_sequence(g: &Graph, parts: &[VertexSet], cyclic: bool) -> Result<bool> {
    let m = parts.len();
    for i in 0..m {
        for j in i + 1..m {
            if let Some(v) = parts[i].intersection(&parts[j]).first() {
                return Err(Error::Overlap(v));
            }
        }
    }
    if parts.iter().any(|p| !g.is_connected_set(p)) {
        return Ok(false);
    }
    let consecutive = |i: usize, j: usize| j == i + 1 || (cyclic && m >= 3 && i == 0 && j == m - 1);
    for i in 0..m {
        for j in i + 1..m {
            let joined = !g.anticomplete_between(&parts[i], &parts[j]);
            if joined != consecutive(i, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
