//! Vertex colorings with colors `1..=k`; `0` marks an uncolored vertex.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coloring {
    colors: Vec<u32>,
}

impl Coloring {
    pub fn uncolored(n: usize) -> Self {
        Coloring { colors: vec![0; n] }
    }

    pub fn from_vec(colors: Vec<u32>) -> Self {
        Coloring { colors }
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    #[inline]
    pub fn get(&self, v: usize) -> Option<u32> {
        match self.colors[v] {
            0 => None,
            c => Some(c),
        }
    }

    #[inline]
    pub fn set(&mut self, v: usize, c: u32) {
        self.colors[v] = c;
    }

    pub fn clear(&mut self, v: usize) {
        self.colors[v] = 0;
    }

    /// Largest color used.
    pub fn max_color(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Number of distinct colors used.
    pub fn num_colors(&self) -> usize {
        let mut seen: Vec<u32> = self.colors.iter().copied().filter(|&c| c > 0).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    pub fn is_complete(&self) -> bool {
        self.colors.iter().all(|&c| c > 0)
    }

    /// First edge (lexicographic) whose endpoints share a color.
    pub fn conflict(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges()
            .into_iter()
            .find(|&(u, v)| self.colors[u] != 0 && self.colors[u] == self.colors[v])
    }

    /// Complete and proper on `g`.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n() && self.is_complete() && self.conflict(g).is_none()
    }

    /// Smallest color not used on `N(v)`.
    pub fn smallest_free(&self, g: &Graph, v: usize) -> u32 {
        let mut used: Vec<u32> = g
            .neighbors(v)
            .iter()
            .map(|u| self.colors[u])
            .filter(|&c| c > 0)
            .collect();
        used.sort_unstable();
        used.dedup();
        let mut c = 1;
        for u in used {
            if u == c {
                c += 1;
            } else if u > c {
                break;
            }
        }
        c
    }

    /// Members of each color class, indexed by `color - 1`.
    pub fn classes(&self) -> Vec<VertexSet> {
        let n = self.colors.len();
        let k = self.max_color() as usize;
        let mut out = vec![VertexSet::empty(n); k];
        for (v, &c) in self.colors.iter().enumerate() {
            if c > 0 {
                out[c as usize - 1].insert(v);
            }
        }
        out
    }

    /// Renumbers used colors to `1..=num_colors()` preserving their order.
    pub fn compact(&mut self) {
        let mut used: Vec<u32> = self.colors.iter().copied().filter(|&c| c > 0).collect();
        used.sort_unstable();
        used.dedup();
        for c in self.colors.iter_mut() {
            if *c > 0 {
                *c = used.binary_search(c).expect("color is present") as u32 + 1;
            }
        }
    }
}

/// Greedy coloring in the given vertex order, each vertex taking its smallest free color.
pub fn greedy(g: &Graph, order: &[usize]) -> Coloring {
    let mut c = Coloring::uncolored(g.n());
    for &v in order {
        let f = c.smallest_free(g, v);
        c.set(v, f);
    }
    c
}

/// DSATUR heuristic: repeatedly color the vertex seeing the most colors.
pub fn dsatur(g: &Graph) -> Coloring {
    let n = g.n();
    let mut c = Coloring::uncolored(n);
    let mut seen: Vec<Vec<bool>> = vec![vec![false; n + 2]; n];
    let mut sat = vec![0usize; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| c.colors[v] == 0)
            .max_by_key(|&v| (sat[v], g.degree(v), std::cmp::Reverse(v)))
            .expect("an uncolored vertex remains");
        let col = (1..).find(|&k| !seen[v][k]).expect("some color is free");
        c.set(v, col as u32);
        for u in g.neighbors(v) {
            if !seen[u][col] {
                seen[u][col] = true;
                sat[u] += 1;
            }
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    #[test]
    fn compact_renumbers() {
        let mut c = Coloring::from_vec(vec![5, 2, 5, 9]);
        c.compact();
        assert_eq!(c.as_slice(), &[2, 1, 2, 3]);
    }

    proptest! {
        #[test]
        fn heuristics_are_proper(g in arb_graph(20)) {
            let d = dsatur(&g);
            prop_assert!(d.is_proper(&g));
            let order: Vec<usize> = (0..g.n()).collect();
            let gr = greedy(&g, &order);
            prop_assert!(gr.is_proper(&g));
            let maxdeg = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0);
            prop_assert!(gr.max_color() as usize <= maxdeg + 1);
        }
    }
}
