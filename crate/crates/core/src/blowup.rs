//! Blowups of small patterns, hyperholes, and the catalog of good
//! subgraphs in special blowups of the twelve-vertex graph `M`.

use crate::bitset::VertexSet;
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Blowup of `pattern`: vertex `i` becomes a clique of `sizes[i]` vertices;
/// parts of adjacent pattern vertices are complete, all others anticomplete.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupSpec {
    pub pattern: Graph,
    pub sizes: Vec<usize>,
    pub labels: Option<Vec<String>>,
}

/// A realized blowup: parts occupy consecutive vertex ranges in pattern order.
#[derive(Clone, Debug)]
pub struct Realized {
    pub graph: Graph,
    pub part_of: Vec<usize>,
    pub parts: Vec<VertexSet>,
}

impl BlowupSpec {
    pub fn new(pattern: Graph, sizes: Vec<usize>) -> Self {
        BlowupSpec {
            pattern,
            sizes,
            labels: None,
        }
    }

    pub fn realize(&self) -> Result<Realized> {
        let k = self.pattern.n();
        if self.sizes.len() != k {
            return Err(Error::InvalidArgument(format!(
                "{} sizes given for a pattern on {k} vertices",
                self.sizes.len()
            )));
        }
        if let Some(l) = &self.labels {
            if l.len() != k {
                return Err(Error::InvalidArgument(format!(
                    "{} labels given for {k} parts",
                    l.len()
                )));
            }
        }
        let n: usize = self.sizes.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (i, &s) in self.sizes.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, s));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let (a, b) = (part_of[u], part_of[v]);
                if a == b || self.pattern.has_edge(a, b) {
                    edges.push((u, v));
                }
            }
        }
        let graph = Graph::from_edges(n, &edges)?;
        let parts = (0..k)
            .map(|i| VertexSet::from_iter_in(n, (0..n).filter(|&v| part_of[v] == i)))
            .collect();
        Ok(Realized {
            graph,
            part_of,
            parts,
        })
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum PatternRepr {
    Named(String),
    Explicit(Graph),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BlowupSpecRepr {
    pattern: PatternRepr,
    sizes: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

/// Named pattern graphs accepted in blowup specifications.
pub fn named_pattern(name: &str) -> Option<Graph> {
    match name {
        "C5" => Some(Graph::cycle(5)),
        "M" => Some(pattern_m()),
        "M1" => Some(pattern_m1()),
        "M2" => Some(pattern_m2()),
        _ => None,
    }
}

fn pattern_name(g: &Graph) -> Option<&'static str> {
    ["C5", "M", "M1", "M2"]
        .into_iter()
        .find(|name| named_pattern(name).as_ref() == Some(g))
}

/// JSON form: `{"pattern": "C5" | "M" | "M1" | "M2" | {"n":..,"edges":[..]}, "sizes": [..], "labels": [..]}`.
impl Serialize for BlowupSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pattern = match pattern_name(&self.pattern) {
            Some(name) => PatternRepr::Named(name.to_string()),
            None => PatternRepr::Explicit(self.pattern.clone()),
        };
        BlowupSpecRepr {
            pattern,
            sizes: self.sizes.clone(),
            labels: self.labels.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BlowupSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = BlowupSpecRepr::deserialize(d)?;
        let pattern = match r.pattern {
            PatternRepr::Named(name) => named_pattern(&name)
                .ok_or_else(|| serde::de::Error::custom(format!("unknown pattern {name:?}")))?,
            PatternRepr::Explicit(g) => g,
        };
        Ok(BlowupSpec {
            pattern,
            sizes: r.sizes,
            labels: r.labels,
        })
    }
}

/// Index of `M`'s vertex `v_i` (1-based name) in [`pattern_m`].
pub const fn m_vertex(i: usize) -> usize {
    i - 1
}

fn cycle7_edges() -> Vec<(usize, usize)> {
    (0..7).map(|i| (i, (i + 1) % 7)).collect()
}

fn attach(edges: &mut Vec<(usize, usize)>, v: usize, cycle_names: &[usize]) {
    edges.extend(cycle_names.iter().map(|&i| (m_vertex(i), v)));
}

/// `M`: an induced cycle `v1..v7` and a clique `{v8, .., v12}` of hubs
/// (vertex `v_i` has index `i - 1`). Hub neighborhoods on the cycle:
/// `v8: {6,7,1,2,3}`, `v9: {7,1,2,3,4}`, `v10: {3,4,5,6,7}`, `v11: {3,6,7}`, `v12: {3,4,7}`.
pub fn pattern_m() -> Graph {
    let mut e = cycle7_edges();
    for a in 7..12 {
        for b in a + 1..12 {
            e.push((a, b));
        }
    }
    attach(&mut e, 7, &[6, 7, 1, 2, 3]);
    attach(&mut e, 8, &[7, 1, 2, 3, 4]);
    attach(&mut e, 9, &[3, 4, 5, 6, 7]);
    attach(&mut e, 10, &[3, 6, 7]);
    attach(&mut e, 11, &[3, 4, 7]);
    Graph::from_edges(12, &e).expect("M is well formed")
}

/// `M1`: cycle `v1..v7`, hubs `v8, v9` as in `M`, and `v*` (index 9) with
/// `v8 - v9 - v*` an induced path and `v*` complete to `{v1, v4, v5}` only.
pub fn pattern_m1() -> Graph {
    let mut e = cycle7_edges();
    attach(&mut e, 7, &[6, 7, 1, 2, 3]);
    attach(&mut e, 8, &[7, 1, 2, 3, 4]);
    attach(&mut e, 9, &[1, 4, 5]);
    e.push((7, 8));
    e.push((8, 9));
    Graph::from_edges(10, &e).expect("M1 is well formed")
}

/// `M2 = M1 - v9`; `v*` has index 8.
pub fn pattern_m2() -> Graph {
    let g = pattern_m1();
    let keep = VertexSet::from_iter_in(10, (0..10).filter(|&v| v != 8));
    g.induced_subgraph(&keep).expect("subset is valid").graph
}

/// Blowup of `C_k` with part sizes `sizes` (`k = sizes.len()`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hyperhole {
    pub sizes: Vec<usize>,
}

impl Hyperhole {
    pub fn new(sizes: Vec<usize>) -> Self {
        Hyperhole { sizes }
    }

    pub fn k(&self) -> usize {
        self.sizes.len()
    }

    fn validate(&self) -> Result<()> {
        if self.k() < 4 {
            return Err(Error::InvalidArgument(format!(
                "hyperholes need k >= 4, got {}",
                self.k()
            )));
        }
        if let Some(i) = self.sizes.iter().position(|&s| s == 0) {
            return Err(Error::InvalidArgument(format!(
                "hyperhole part {i} is empty"
            )));
        }
        Ok(())
    }

    pub fn spec(&self) -> Result<BlowupSpec> {
        self.validate()?;
        Ok(BlowupSpec::new(Graph::cycle(self.k()), self.sizes.clone()))
    }

    pub fn realize(&self) -> Result<Realized> {
        self.spec()?.realize()
    }

    /// Largest clique: the heaviest pair of consecutive parts.
    pub fn omega(&self) -> usize {
        let k = self.k();
        (0..k)
            .map(|i| self.sizes[i] + self.sizes[(i + 1) % k])
            .max()
            .unwrap_or(0)
    }

    /// `max(ω, ⌈n / ⌊k/2⌋⌉)`.
    pub fn chromatic_formula(&self) -> Result<usize> {
        self.validate()?;
        let n: usize = self.sizes.iter().sum();
        let alpha = self.k() / 2;
        Ok(self.omega().max(n.div_ceil(alpha)))
    }
}

/// Chromatic number of a hyperhole and an optimal coloring of its realization.
///
/// Part `i` receives the cyclic color window `[o_i, o_i + s_i)` mod `c`, with
/// offsets advancing by steps `t_i` in `[s_i, c - s_{i+1}]` that sum to
/// `⌊k/2⌋ · c`. Such steps exist exactly when `c` is at least the formula value,
/// and they keep consecutive windows disjoint while wrapping back to offset 0.
pub fn hyperhole_chromatic(h: &Hyperhole) -> Result<(usize, Coloring)> {
    let c = h.chromatic_formula()?;
    let k = h.k();
    let s = &h.sizes;
    let n: usize = s.iter().sum();
    let mut steps: Vec<usize> = s.clone();
    let mut deficit = (k / 2) * c - n;
    for i in 0..k {
        let room = c - s[(i + 1) % k] - s[i];
        let add = room.min(deficit);
        steps[i] += add;
        deficit -= add;
    }
    debug_assert_eq!(deficit, 0, "step budget is always reachable");
    let mut colors = Vec::with_capacity(n);
    let mut offset = 0;
    for i in 0..k {
        for j in 0..s[i] {
            colors.push(((offset + j) % c) as u32 + 1);
        }
        offset += steps[i];
    }
    Ok((c, Coloring::from_vec(colors)))
}

/// Special blowups of `M` label their parts `L1..L12` after `v1..v12`.
pub const M_PARTS: usize = 12;

/// The catalog of (4,5)-good subgraphs in special blowups of `M`.
///
/// Each case names which hub parts `L8..L12` must be nonempty or empty and
/// how many vertices to take from each part, with a 5-coloring of the selection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GoodSubgraphCase {
    /// `L10` empty, `L11` and `L12` nonempty.
    L11L12,
    /// `L8`, `L9`, `L10` all nonempty.
    L8L9L10,
    /// `L8`, `L10` nonempty, `L9` empty.
    L8L10,
    /// `L8`, `L9`, `L12` nonempty, `L10` empty.
    L8L9L12,
    /// `L9`, `L11` nonempty; `L8`, `L10`, `L12` empty.
    L9L11,
    /// `L9`, `L12` nonempty; `L8`, `L10`, `L11` empty.
    L9L12,
    /// `L10`, `L11` nonempty; `L8`, `L9` empty.
    L10L11,
    /// `L12` nonempty; `L8..L11` empty.
    L12,
    /// `L10`, `L11`, `L12` empty: two vertices from each cycle part.
    CycleOnly,
}

impl GoodSubgraphCase {
    pub const FIGURES: [GoodSubgraphCase; 8] = [
        GoodSubgraphCase::L11L12,
        GoodSubgraphCase::L8L9L10,
        GoodSubgraphCase::L8L10,
        GoodSubgraphCase::L8L9L12,
        GoodSubgraphCase::L9L11,
        GoodSubgraphCase::L9L12,
        GoodSubgraphCase::L10L11,
        GoodSubgraphCase::L12,
    ];

    pub const ALL: [GoodSubgraphCase; 9] = [
        GoodSubgraphCase::L11L12,
        GoodSubgraphCase::L8L9L10,
        GoodSubgraphCase::L8L10,
        GoodSubgraphCase::L8L9L12,
        GoodSubgraphCase::L9L11,
        GoodSubgraphCase::L9L12,
        GoodSubgraphCase::L10L11,
        GoodSubgraphCase::L12,
        GoodSubgraphCase::CycleOnly,
    ];

    pub fn id(self) -> &'static str {
        match self {
            GoodSubgraphCase::L11L12 => "l11-l12",
            GoodSubgraphCase::L8L9L10 => "l8-l9-l10",
            GoodSubgraphCase::L8L10 => "l8-l10",
            GoodSubgraphCase::L8L9L12 => "l8-l9-l12",
            GoodSubgraphCase::L9L11 => "l9-l11",
            GoodSubgraphCase::L9L12 => "l9-l12",
            GoodSubgraphCase::L10L11 => "l10-l11",
            GoodSubgraphCase::L12 => "l12",
            GoodSubgraphCase::CycleOnly => "cycle-only",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.id() == id)
    }

    /// Hub parts (1-based names) required nonempty and required empty.
    pub fn hypothesis(self) -> (&'static [usize], &'static [usize]) {
        match self {
            GoodSubgraphCase::L11L12 => (&[11, 12], &[10]),
            GoodSubgraphCase::L8L9L10 => (&[8, 9, 10], &[]),
            GoodSubgraphCase::L8L10 => (&[8, 10], &[9]),
            GoodSubgraphCase::L8L9L12 => (&[8, 9, 12], &[10]),
            GoodSubgraphCase::L9L11 => (&[9, 11], &[8, 10, 12]),
            GoodSubgraphCase::L9L12 => (&[9, 12], &[8, 10, 11]),
            GoodSubgraphCase::L10L11 => (&[10, 11], &[8, 9]),
            GoodSubgraphCase::L12 => (&[12], &[8, 9, 10, 11]),
            GoodSubgraphCase::CycleOnly => (&[], &[10, 11, 12]),
        }
    }

    /// For each part `L_i` (1-based), the colors of the vertices taken from it.
    pub fn selection(self) -> Vec<(usize, Vec<u32>)> {
        let raw: &[(usize, &[u32])] = match self {
            GoodSubgraphCase::L11L12 => &[
                (1, &[1, 2]),
                (2, &[3, 4]),
                (3, &[1, 5]),
                (4, &[3]),
                (5, &[2, 4, 5]),
                (6, &[1]),
                (7, &[3, 5]),
                (11, &[4]),
                (12, &[2]),
            ],
            GoodSubgraphCase::L8L9L10 => &[
                (1, &[1]),
                (2, &[2]),
                (3, &[3]),
                (4, &[4]),
                (5, &[2, 3]),
                (6, &[5]),
                (7, &[2]),
                (8, &[4]),
                (9, &[5]),
                (10, &[1]),
            ],
            GoodSubgraphCase::L8L10 => &[
                (1, &[1, 2]),
                (2, &[3]),
                (3, &[2, 5]),
                (4, &[4]),
                (5, &[3, 5]),
                (6, &[2]),
                (7, &[3, 5]),
                (8, &[4]),
                (10, &[1]),
            ],
            GoodSubgraphCase::L8L9L12 => &[
                (1, &[1]),
                (2, &[2]),
                (3, &[3]),
                (4, &[4]),
                (5, &[1, 2, 3]),
                (6, &[5]),
                (7, &[2, 3]),
                (8, &[4]),
                (9, &[5]),
                (12, &[1]),
            ],
            GoodSubgraphCase::L9L11 => &[
                (1, &[1, 2]),
                (2, &[3]),
                (3, &[2, 5]),
                (4, &[3]),
                (5, &[1, 2, 5]),
                (6, &[4]),
                (7, &[3, 5]),
                (9, &[4]),
                (11, &[1]),
            ],
            GoodSubgraphCase::L9L12 => &[
                (1, &[1]),
                (2, &[2, 3]),
                (3, &[5]),
                (4, &[2]),
                (5, &[1, 3, 5]),
                (6, &[2, 4]),
                (7, &[3, 5]),
                (9, &[4]),
                (12, &[1]),
            ],
            // L2 takes colors {3, 4}: with {3, 5} it would clash with L3.
            GoodSubgraphCase::L10L11 => &[
                (1, &[1, 2]),
                (2, &[3, 4]),
                (3, &[1, 5]),
                (4, &[4]),
                (5, &[1, 2, 5]),
                (7, &[4, 5]),
                (10, &[3]),
                (11, &[2]),
            ],
            GoodSubgraphCase::L12 => &[
                (1, &[4]),
                (2, &[1, 2, 5]),
                (3, &[3]),
                (4, &[2, 4]),
                (5, &[1, 3, 5]),
                (6, &[4]),
                (7, &[1, 2, 3]),
                (12, &[5]),
            ],
            GoodSubgraphCase::CycleOnly => {
                let (_, col) =
                    hyperhole_chromatic(&Hyperhole::new(vec![2; 7])).expect("C7[2] is valid");
                return (0..7)
                    .map(|i| (i + 1, col.as_slice()[2 * i..2 * i + 2].to_vec()))
                    .collect();
            }
        };
        raw.iter().map(|(p, c)| (*p, c.to_vec())).collect()
    }
}

/// A `(p, q)`-good subgraph candidate: its vertices and a `q`-coloring of them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodSubgraphWitness {
    pub case: String,
    pub p: usize,
    pub q: usize,
    pub vertices: Vec<usize>,
    /// `colors[i]` colors `vertices[i]`.
    pub colors: Vec<u32>,
}

impl GoodSubgraphWitness {
    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_iter_in(n, self.vertices.iter().copied())
    }
}

/// Applies a catalog case to a labeled partition `parts[0..12]` (`L1..L12`) of
/// a special blowup of `M`. Checks the case hypothesis and part sizes.
pub fn select_good_subgraph(
    case: GoodSubgraphCase,
    parts: &[VertexSet],
) -> Result<GoodSubgraphWitness> {
    if parts.len() != M_PARTS {
        return Err(Error::InvalidArgument(format!(
            "expected {M_PARTS} parts, got {}",
            parts.len()
        )));
    }
    if let Some(i) = (0..7).find(|&i| parts[i].is_empty()) {
        return Err(Error::Hypothesis(format!(
            "L{} is empty, so the blowup is not special",
            i + 1
        )));
    }
    let (nonempty, empty) = case.hypothesis();
    for &i in nonempty {
        if parts[i - 1].is_empty() {
            return Err(Error::Hypothesis(format!(
                "case {} needs L{i} nonempty",
                case.id()
            )));
        }
    }
    for &i in empty {
        if !parts[i - 1].is_empty() {
            return Err(Error::Hypothesis(format!(
                "case {} needs L{i} empty",
                case.id()
            )));
        }
    }
    let mut vertices = Vec::new();
    let mut colors = Vec::new();
    for (part, cols) in case.selection() {
        let avail = &parts[part - 1];
        if avail.len() < cols.len() {
            return Err(Error::Hypothesis(format!(
                "case {} needs {} vertices in L{part}, found {}",
                case.id(),
                cols.len(),
                avail.len()
            )));
        }
        vertices.extend(avail.iter().take(cols.len()));
        colors.extend(cols);
    }
    Ok(GoodSubgraphWitness {
        case: case.id().to_string(),
        p: 4,
        q: 5,
        vertices,
        colors,
    })
}

/// Realizes `spec` (a blowup of `M`) and selects the catalog subgraph for `case`.
pub fn figure_good_subgraph(
    case: GoodSubgraphCase,
    spec: &BlowupSpec,
) -> Result<(Realized, GoodSubgraphWitness)> {
    if spec.pattern != pattern_m() {
        return Err(Error::InvalidArgument(
            "catalog cases apply to blowups of M".into(),
        ));
    }
    let r = spec.realize()?;
    let w = select_good_subgraph(case, &r.parts)?;
    Ok((r, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{exact_chi, exact_omega, OracleLimits};
    use crate::recognizers::{find_hole, is_in_class, Parity};
    use proptest::prelude::*;

    #[test]
    fn m_is_twelve_vertices_with_c7() {
        let m = pattern_m();
        assert_eq!(m.n(), 12);
        let c7: Vec<usize> = (0..7).collect();
        assert!(find_hole(
            &m.induced_subgraph(&m.set_of(&c7)).unwrap().graph,
            Parity::Any,
            Some(7)
        )
        .is_some());
        assert!(m.is_clique(&m.set_of(&[7, 8, 9, 10, 11])));
        assert!(m
            .is_anticomplete_between(&m.set_of(&[10]), &m.set_of(&[0, 1, 3, 4]))
            .unwrap());
    }

    #[test]
    fn m_omega_by_oracle() {
        // Maximum cliques are v3 or v7 together with all five hubs.
        let r = exact_omega(&pattern_m(), &OracleLimits::default()).unwrap();
        assert_eq!(r.value, 6);
    }

    #[test]
    fn m_family_in_class() {
        for g in [pattern_m(), pattern_m1(), pattern_m2()] {
            assert!(is_in_class(&g).in_class(), "{g:?}");
        }
        let m1 = pattern_m1();
        assert!(m1.has_edge(7, 8) && m1.has_edge(8, 9) && !m1.has_edge(7, 9));
        assert_eq!(pattern_m2().n(), 9);
    }

    #[test]
    fn hyperhole_rejects_bad_input() {
        assert!(hyperhole_chromatic(&Hyperhole::new(vec![1, 1, 1])).is_err());
        assert!(hyperhole_chromatic(&Hyperhole::new(vec![1, 0, 1, 1, 1])).is_err());
    }

    #[test]
    fn hyperhole_examples() {
        let (c, col) = hyperhole_chromatic(&Hyperhole::new(vec![2; 5])).unwrap();
        assert_eq!(c, 5);
        assert!(col.is_proper(&Hyperhole::new(vec![2; 5]).realize().unwrap().graph));
        assert_eq!(
            hyperhole_chromatic(&Hyperhole::new(vec![1; 7])).unwrap().0,
            3
        );
    }

    #[test]
    fn spec_json() {
        let s: BlowupSpec =
            serde_json::from_str(r#"{"pattern":"C5","sizes":[1,2,1,2,1]}"#).unwrap();
        assert_eq!(s.realize().unwrap().graph.n(), 7);
        let round: BlowupSpec = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(round, s);
        let e: BlowupSpec =
            serde_json::from_str(r#"{"pattern":{"n":2,"edges":[[0,1]]},"sizes":[2,1]}"#).unwrap();
        assert_eq!(e.realize().unwrap().graph, Graph::complete(3));
        assert!(serde_json::from_str::<BlowupSpec>(r#"{"pattern":"X","sizes":[]}"#).is_err());
        assert!(
            serde_json::from_str::<BlowupSpec>(r#"{"pattern":"C5","sizes":[1],"extra":1}"#)
                .is_err()
        );
    }

    #[test]
    fn selections_are_proper_five_colorings_in_small_blowups() {
        for case in GoodSubgraphCase::ALL {
            let mut sizes = vec![3; 12];
            for &i in case.hypothesis().1 {
                sizes[i - 1] = 0;
            }
            let (r, w) = figure_good_subgraph(case, &BlowupSpec::new(pattern_m(), sizes)).unwrap();
            let h = r
                .graph
                .induced_subgraph(&w.vertex_set(r.graph.n()))
                .unwrap();
            let col: Vec<u32> = h
                .map
                .iter()
                .map(|v| w.colors[w.vertices.iter().position(|u| u == v).unwrap()])
                .collect();
            assert!(
                Coloring::from_vec(col).is_proper(&h.graph),
                "case {}",
                case.id()
            );
            assert!(w.colors.iter().all(|&c| (1..=5).contains(&c)));
        }
    }

    #[test]
    fn selection_rejects_small_parts_and_hypotheses() {
        let sizes = vec![1; 12];
        let spec = BlowupSpec::new(pattern_m(), sizes);
        assert!(matches!(
            figure_good_subgraph(GoodSubgraphCase::L8L9L10, &spec),
            Err(Error::Hypothesis(_))
        ));
        assert!(matches!(
            figure_good_subgraph(GoodSubgraphCase::L12, &spec),
            Err(Error::Hypothesis(_))
        ));
    }

    proptest! {
        #[test]
        fn hyperhole_coloring_is_proper_and_formula_sized(sizes in proptest::collection::vec(1usize..6, 4..10)) {
            let h = Hyperhole::new(sizes);
            let (c, col) = hyperhole_chromatic(&h).unwrap();
            let g = h.realize().unwrap().graph;
            prop_assert!(col.is_proper(&g));
            prop_assert!(col.max_color() as usize <= c);
            prop_assert_eq!(c, h.chromatic_formula().unwrap());
        }

        #[test]
        fn hyperhole_formula_is_exact(sizes in proptest::collection::vec(1usize..4, 4..8)) {
            let h = Hyperhole::new(sizes);
            let g = h.realize().unwrap().graph;
            prop_assume!(g.n() <= 14);
            let chi = exact_chi(&g, &OracleLimits::default()).unwrap().value;
            prop_assert_eq!(chi, h.chromatic_formula().unwrap());
        }

        #[test]
        fn realized_parts_are_cliques(sizes in proptest::collection::vec(0usize..4, 5)) {
            let r = BlowupSpec::new(Graph::cycle(5), sizes.clone()).realize().unwrap();
            for (i, p) in r.parts.iter().enumerate() {
                prop_assert_eq!(p.len(), sizes[i]);
                prop_assert!(r.graph.is_clique(p));
                let next = &r.parts[(i + 1) % 5];
                let far = &r.parts[(i + 2) % 5];
                prop_assert!(r.graph.complete_between(p, next));
                prop_assert!(r.graph.anticomplete_between(p, far));
            }
        }
    }
}
