//! Maximal clique enumeration (Bron–Kerbosch with Tomita pivoting).

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// All maximal cliques of `g[within]`, each sorted, in lexicographic order.
pub fn maximal_cliques_in(g: &Graph, within: &VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if within.is_empty() {
        return out;
    }
    bk(g, g.empty_set(), within.clone(), g.empty_set(), &mut out);
    out.sort_by(|a, b| a.lex_cmp(b));
    out
}

pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    maximal_cliques_in(g, &g.vertices())
}

fn bk(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    // Pivot maximizing |P ∩ N(u)| over u in P ∪ X.
    let pivot = p
        .union(&x)
        .iter()
        .max_by_key(|&u| (p.intersection_len(g.neighbors(u)), std::cmp::Reverse(u)))
        .expect("P is nonempty");
    let candidates = p.difference(g.neighbors(pivot));
    for v in &candidates {
        let nv = g.neighbors(v);
        bk(g, r.with(v), p.intersection(nv), x.intersection(nv), out);
        p.remove(v);
        x.insert(v);
    }
}

/// Largest size of a maximal clique in `g[within]`, or 0 when empty.
pub fn clique_number_by_enumeration(g: &Graph, within: &VertexSet) -> usize {
    maximal_cliques_in(g, within)
        .iter()
        .map(VertexSet::len)
        .max()
        .unwrap_or(0)
}
