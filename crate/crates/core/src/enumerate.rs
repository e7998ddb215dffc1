//! Isomorphism-free enumeration of small graphs.

use crate::bitset::VertexSet;
use crate::exec::Execution;
use crate::graph::Graph;
use std::collections::HashSet;

/// Largest order handled by [`canonical_code`] (the code must fit in 64 bits).
pub const CANONICAL_LIMIT: usize = 11;

/// Isomorphism invariant that determines the graph up to isomorphism.
///
/// Vertices are split by iterated degree refinement; the code is the maximum
/// upper-triangle adjacency word over all labelings that respect the ordered cells.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(
        n <= CANONICAL_LIMIT,
        "canonical codes need n <= {CANONICAL_LIMIT}"
    );
    let cells = refined_cells(g);
    let slot_cell: Vec<usize> = cells
        .iter()
        .enumerate()
        .flat_map(|(i, c)| std::iter::repeat_n(i, c.len()))
        .collect();
    let mut best = 0u64;
    let mut labeling = Vec::with_capacity(n);
    label(
        g,
        &cells,
        &slot_cell,
        &mut labeling,
        &mut vec![false; n],
        &mut best,
    );
    best
}

fn refined_cells(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| color[u]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct = keys.clone();
        distinct.sort();
        distinct.dedup();
        color = keys
            .iter()
            .map(|k| distinct.binary_search(k).expect("key present"))
            .collect();
        if distinct.len() == classes {
            break;
        }
        classes = distinct.len();
    }
    let mut cells = vec![Vec::new(); classes];
    for v in 0..n {
        cells[color[v]].push(v);
    }
    cells
}

fn label(
    g: &Graph,
    cells: &[Vec<usize>],
    slot_cell: &[usize],
    labeling: &mut Vec<usize>,
    used: &mut [bool],
    best: &mut u64,
) {
    let pos = labeling.len();
    if pos == slot_cell.len() {
        *best = (*best).max(code_of(g, labeling));
        return;
    }
    for &v in &cells[slot_cell[pos]] {
        if used[v] {
            continue;
        }
        used[v] = true;
        labeling.push(v);
        label(g, cells, slot_cell, labeling, used, best);
        labeling.pop();
        used[v] = false;
    }
}

fn code_of(g: &Graph, labeling: &[usize]) -> u64 {
    let n = labeling.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = (code << 1) | g.has_edge(labeling[i], labeling[j]) as u64;
        }
    }
    code
}

/// One representative of every isomorphism class of graphs on `n` vertices.
///
/// Built by extending each class on `n - 1` vertices with a new vertex in all
/// possible ways and keeping one graph per canonical code.
pub fn all_graphs(n: usize, exec: Execution) -> Vec<Graph> {
    assert!(n <= 9, "exhaustive enumeration is limited to n <= 9");
    let mut level = vec![Graph::empty(0)];
    for k in 1..=n {
        let candidates: Vec<Vec<(u64, Graph)>> = exec.map(&level, |g| {
            (0u64..1 << (k - 1))
                .map(|mask| {
                    let s =
                        VertexSet::from_iter_in(k - 1, (0..k - 1).filter(|&v| mask >> v & 1 == 1));
                    let h = g.with_vertex(&s);
                    (canonical_code(&h), h)
                })
                .collect()
        });
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for (code, h) in candidates.into_iter().flatten() {
            if seen.insert(code) {
                next.push(h);
            }
        }
        level = next;
    }
    level
}
