//! Immutable simple graphs on dense vertex ids `0..n`.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Undirected simple graph. Adjacency rows are symmetric and irreflexive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// `g[S]` plus the map from its vertices back to the parent graph.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `map[i]` is the parent vertex of subgraph vertex `i`; increasing.
    pub map: Vec<usize>,
}

impl InducedSubgraph {
    pub fn lift(&self, s: &VertexSet, parent_n: usize) -> VertexSet {
        VertexSet::from_iter_in(parent_n, s.iter().map(|v| self.map[v]))
    }

    pub fn lift_vec(&self, vs: &[usize]) -> Vec<usize> {
        vs.iter().map(|&v| self.map[v]).collect()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            g.adj[u] = VertexSet::full(n).without(u);
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path edges are valid")
    }

    /// The cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).expect("cycle edges are valid")
    }

    fn add_edge_checked(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degree_in(&self, v: usize, s: &VertexSet) -> usize {
        self.adj[v].intersection_len(s)
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.n)
    }

    pub fn set_of(&self, vs: &[usize]) -> VertexSet {
        VertexSet::from_iter_in(self.n, vs.iter().copied())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            g.adj[u] = self.adj[u].complement().without(u);
        }
        g
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        if s.universe() != self.n {
            if let Some(v) = s.iter().find(|&v| v >= self.n) {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        Ok(())
    }

    fn normalize(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        if s.universe() == self.n {
            Ok(s.clone())
        } else {
            Ok(VertexSet::from_iter_in(self.n, s.iter()))
        }
    }

    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<InducedSubgraph> {
        let s = self.normalize(s)?;
        let map = s.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let k = map.len();
        let mut g = Graph::empty(k);
        for (i, &v) in map.iter().enumerate() {
            g.adj[i] =
                VertexSet::from_iter_in(k, self.adj[v].intersection(&s).iter().map(|u| index[u]));
        }
        Ok(InducedSubgraph { graph: g, map })
    }

    /// Induced subgraph on `V \ s`.
    pub fn remove(&self, s: &VertexSet) -> InducedSubgraph {
        self.induced_subgraph(&self.vertices().difference(s))
            .expect("complement of a valid set is valid")
    }

    fn disjoint(&self, a: &VertexSet, b: &VertexSet) -> Result<(VertexSet, VertexSet)> {
        let a = self.normalize(a)?;
        let b = self.normalize(b)?;
        if let Some(v) = a.intersection(&b).first() {
            return Err(Error::Overlap(v));
        }
        Ok((a, b))
    }

    /// Every vertex of `a` is adjacent to every vertex of `b`. Errors on overlap.
    pub fn is_complete_between(&self, a: &VertexSet, b: &VertexSet) -> Result<bool> {
        let (a, b) = self.disjoint(a, b)?;
        Ok(self.complete_between(&a, &b))
    }

    /// No edges between `a` and `b`. Errors on overlap.
    pub fn is_anticomplete_between(&self, a: &VertexSet, b: &VertexSet) -> Result<bool> {
        let (a, b) = self.disjoint(a, b)?;
        Ok(self.anticomplete_between(&a, &b))
    }

    /// Unchecked variant for disjoint sets over this graph's universe.
    pub fn complete_between(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.iter().all(|v| b.is_subset(&self.adj[v]))
    }

    pub fn anticomplete_between(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.iter().all(|v| self.adj[v].is_disjoint(b))
    }

    pub fn is_complete_to(&self, v: usize, s: &VertexSet) -> bool {
        s.without(v).is_subset(&self.adj[v])
    }

    pub fn is_anticomplete_to(&self, v: usize, s: &VertexSet) -> bool {
        self.adj[v].is_disjoint(s)
    }

    /// `v` has both a neighbor and a non-neighbor in `s`. Errors if `v` is in `s`.
    pub fn mixes_on(&self, v: usize, s: &VertexSet) -> Result<bool> {
        let s = self.normalize(s)?;
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        if s.contains(v) {
            return Err(Error::VertexInSet(v));
        }
        let k = self.adj[v].intersection_len(&s);
        Ok(k > 0 && k < s.len())
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(&self.adj[v]))
    }

    pub fn is_stable(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// `N(s) = (union of N(v), v in s) \ s`.
    pub fn neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for v in s {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(s);
        out
    }

    /// Vertices of `s` reachable from `start` inside `g[s]`.
    pub fn component_of(&self, start: usize, s: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(self.n, start);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = self.empty_set();
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(s);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    /// Components of `g[s]`, ordered by smallest vertex.
    pub fn components(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut rest = s.clone();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(v, s);
            rest.difference_with(&c);
            out.push(c);
        }
        out
    }

    pub fn is_connected_set(&self, s: &VertexSet) -> bool {
        match s.first() {
            None => false,
            Some(v) => self.component_of(v, s).len() == s.len(),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.is_connected_set(&self.vertices())
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> VertexSet {
        VertexSet::from_iter_in(
            self.n,
            (0..self.n).filter(|&v| self.degree(v) + 1 == self.n),
        )
    }

    /// Closed-neighborhood equivalence classes, ordered by smallest vertex.
    pub fn true_twin_classes(&self) -> Vec<VertexSet> {
        let mut assigned = self.empty_set();
        let mut out = Vec::new();
        for v in 0..self.n {
            if assigned.contains(v) {
                continue;
            }
            let nv = self.closed_neighbors(v);
            let cls = VertexSet::from_iter_in(
                self.n,
                (v..self.n).filter(|&u| !assigned.contains(u) && self.closed_neighbors(u) == nv),
            );
            assigned.union_with(&cls);
            out.push(cls);
        }
        out
    }

    /// Disjoint union of `self` and `other`; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut edges = self.edges();
        edges.extend(
            other
                .edges()
                .into_iter()
                .map(|(u, v)| (u + self.n, v + self.n)),
        );
        Graph::from_edges(n, &edges).expect("shifted edges are valid")
    }

    /// Adds one vertex adjacent to every existing vertex.
    pub fn with_universal_vertex(&self) -> Graph {
        self.with_vertex(&self.vertices())
    }

    /// Adds one vertex (id `n`) with neighborhood `s`.
    pub fn with_vertex(&self, s: &VertexSet) -> Graph {
        let n = self.n + 1;
        let mut edges = self.edges();
        edges.extend(s.iter().map(|v| (v, self.n)));
        Graph::from_edges(n, &edges).expect("new vertex edges are valid")
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// JSON form: `{"n": 5, "edges": [[0, 1], ...]}` with 0-based endpoints.
impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.n,
            edges: self.edges(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = GraphRepr::deserialize(d)?;
        Graph::from_edges(r.n, &r.edges).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn p4_subgraph() {
        let g = Graph::path(4);
        let h = g.induced_subgraph(&g.set_of(&[0, 1, 3])).unwrap();
        assert_eq!(h.map, vec![0, 1, 3]);
        assert_eq!(h.graph.edges(), vec![(0, 1)]);
    }

    #[test]
    fn between_predicates() {
        let c5 = Graph::cycle(5);
        assert!(c5
            .is_anticomplete_between(&c5.set_of(&[0]), &c5.set_of(&[2, 3]))
            .unwrap());
        assert!(c5
            .is_complete_between(&c5.set_of(&[0]), &c5.set_of(&[1, 4]))
            .unwrap());
        assert_eq!(
            c5.is_complete_between(&c5.set_of(&[0, 1]), &c5.set_of(&[1])),
            Err(Error::Overlap(1))
        );
        assert!(c5.mixes_on(0, &c5.set_of(&[1, 2])).unwrap());
        assert_eq!(
            c5.mixes_on(0, &c5.set_of(&[0, 2])),
            Err(Error::VertexInSet(0))
        );
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::cycle(5);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"n":5,"edges":[[0,1],[0,4],[1,2],[2,3],[3,4]]}"#);
        assert_eq!(serde_json::from_str::<Graph>(&s).unwrap(), g);
    }

    proptest! {
        #[test]
        fn induced_subgraph_preserves_adjacency(g in arb_graph(20), mask in any::<u32>()) {
            let s = VertexSet::from_iter_in(g.n(), (0..g.n()).filter(|&v| mask >> v & 1 == 1));
            let h = g.induced_subgraph(&s).unwrap();
            for i in 0..h.graph.n() {
                for j in 0..h.graph.n() {
                    prop_assert_eq!(h.graph.has_edge(i, j), g.has_edge(h.map[i], h.map[j]));
                }
            }
        }

        #[test]
        fn adjacency_symmetric_irreflexive(g in arb_graph(20)) {
            for u in 0..g.n() {
                prop_assert!(!g.has_edge(u, u));
                for v in g.neighbors(u) {
                    prop_assert!(g.has_edge(v, u));
                }
            }
            prop_assert_eq!(g.complement().complement(), g.clone());
        }

        #[test]
        fn complete_and_anticomplete_are_dual(g in arb_graph(14), mask in any::<u32>()) {
            let a = VertexSet::from_iter_in(g.n(), (0..g.n()).filter(|&v| mask >> v & 1 == 1));
            let b = a.complement();
            if !a.is_empty() && !b.is_empty() {
                prop_assert_eq!(
                    g.is_complete_between(&a, &b).unwrap(),
                    g.complement().is_anticomplete_between(&a, &b).unwrap()
                );
            }
        }
    }
}
