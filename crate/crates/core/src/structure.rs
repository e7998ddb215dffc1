//! Nice blowups of C5, attachment classes, clique cutsets and good subgraphs.
//!
//! Part indices are taken mod 5 throughout.

use crate::bitset::VertexSet;
use crate::blowup::GoodSubgraphWitness;
use crate::cliques::maximal_cliques;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognizers::find_hole;
use crate::recognizers::Parity;
use serde::{Deserialize, Serialize};

#[inline]
pub fn md(i: isize) -> usize {
    i.rem_euclid(5) as usize
}

/// Which of the defining conditions a candidate blowup breaks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlowupCondition {
    PartCount,
    EmptyPart,
    Disjoint,
    PartClique,
    NeighborBothSides,
    DistanceTwoAnticomplete,
    P4Structure,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupViolation {
    pub condition: BlowupCondition,
    pub vertices: Vec<usize>,
    pub detail: String,
}

impl BlowupViolation {
    fn new(condition: BlowupCondition, vertices: Vec<usize>, detail: impl Into<String>) -> Self {
        BlowupViolation {
            condition,
            vertices,
            detail: detail.into(),
        }
    }
}

/// How maximality of a blowup was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Maximality {
    /// Not checked.
    Unknown,
    /// No single vertex can be added to a part.
    Greedy,
    /// Exhaustive search found no nice blowup on a strict superset of the vertices.
    Certified,
}

/// A nice blowup `(B_0, .., B_4)` of C5.
///
/// `hubs[i]` is the lowest vertex of `B_i` complete to `B_{i-1} ∪ B_{i+1}`;
/// in C4-free hosts every part has one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NiceBlowup {
    pub parts: [VertexSet; 5],
    pub hubs: [Option<usize>; 5],
    pub maximality: Maximality,
}

impl NiceBlowup {
    pub fn part(&self, i: isize) -> &VertexSet {
        &self.parts[md(i)]
    }

    pub fn vertices(&self) -> VertexSet {
        let mut s = self.parts[0].clone();
        for p in &self.parts[1..] {
            s.union_with(p);
        }
        s
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(VertexSet::len).sum()
    }

    /// Same partition up to rotation and reflection of the part indices.
    pub fn same_partition(&self, other: &NiceBlowup) -> bool {
        (0..5).any(|r| {
            (0..5).all(|i| self.parts[i] == other.parts[(i + r) % 5])
                || (0..5).all(|i| self.parts[i] == other.parts[(r + 5 - i) % 5])
        })
    }
}

/// Checks the nice-blowup conditions on `parts` (which must have length 5).
pub fn verify_nice_blowup(
    g: &Graph,
    parts: &[VertexSet],
) -> std::result::Result<NiceBlowup, BlowupViolation> {
    use BlowupCondition::*;
    if parts.len() != 5 {
        return Err(BlowupViolation::new(
            PartCount,
            vec![],
            format!("{} parts given", parts.len()),
        ));
    }
    let p = |i: isize| &parts[md(i)];
    for i in 0..5 {
        if parts[i].is_empty() {
            return Err(BlowupViolation::new(
                EmptyPart,
                vec![],
                format!("B{i} is empty"),
            ));
        }
        for j in i + 1..5 {
            if let Some(v) = parts[i].intersection(&parts[j]).first() {
                return Err(BlowupViolation::new(
                    Disjoint,
                    vec![v],
                    format!("B{i} and B{j} share a vertex"),
                ));
            }
        }
    }
    for i in 0..5isize {
        let b = p(i);
        for u in b {
            if let Some(v) = b.without(u).difference(g.neighbors(u)).first() {
                return Err(BlowupViolation::new(
                    PartClique,
                    vec![u, v],
                    format!("B{i} is not a clique"),
                ));
            }
        }
        for v in b {
            for side in [i - 1, i + 1] {
                if g.neighbors(v).is_disjoint(p(side)) {
                    return Err(BlowupViolation::new(
                        NeighborBothSides,
                        vec![v],
                        format!("vertex of B{i} has no neighbor in B{}", md(side)),
                    ));
                }
            }
            if let Some(u) = g.neighbors(v).intersection(p(i + 2)).first() {
                return Err(BlowupViolation::new(
                    DistanceTwoAnticomplete,
                    vec![v, u],
                    format!("edge between B{i} and B{}", md(i + 2)),
                ));
            }
        }
    }
    for i in 0..5 {
        if let Some(w) = p4_in_window(g, parts, i) {
            return Err(BlowupViolation::new(
                P4Structure,
                w.to_vec(),
                format!(
                    "induced P4 with ends in B{} and B{} and middle in B{}",
                    md(i),
                    md(i + 2),
                    md(i + 1)
                ),
            ));
        }
    }
    let hubs = std::array::from_fn(|i| {
        let i = i as isize;
        let side = p(i - 1).union(p(i + 1));
        p(i).iter().find(|&v| side.is_subset(g.neighbors(v)))
    });
    Ok(NiceBlowup {
        parts: std::array::from_fn(|i| parts[i].clone()),
        hubs,
        maximality: Maximality::Unknown,
    })
}

/// An induced P4 `a - b - c - d` with `a` in `B_i`, `b, c` in `B_{i+1}`, `d` in `B_{i+2}`.
fn p4_in_window(g: &Graph, parts: &[VertexSet], i: isize) -> Option<[usize; 4]> {
    let (x, y, z) = (&parts[md(i)], &parts[md(i + 1)], &parts[md(i + 2)]);
    for b in y {
        let nb = g.neighbors(b);
        for c in y.without(b).iter() {
            let nc = g.neighbors(c);
            let a = x.intersection(nb).difference(nc).first();
            let d = z.intersection(nc).difference(nb).first();
            if let (Some(a), Some(d)) = (a, d) {
                return Some([a, b, c, d]);
            }
        }
    }
    None
}

/// Node budget for the exhaustive maximality search.
pub const MAXIMALITY_BUDGET: u64 = 2_000_000;

/// Grows a nice blowup from an induced C5 `seed` (in cycle order) until no
/// nice blowup on a strict superset of its vertices exists.
///
/// Single vertices are added greedily (lowest vertex, then lowest part);
/// when that stalls an exhaustive search looks for any strictly larger nice
/// blowup, which may reassign existing vertices to other parts.
pub fn find_maximal_nice_blowup(g: &Graph, seed: &[usize]) -> Result<NiceBlowup> {
    if seed.len() != 5 || !is_induced_c5(g, seed) {
        return Err(Error::InvalidArgument(format!(
            "{seed:?} is not an induced C5"
        )));
    }
    let parts: Vec<VertexSet> = seed
        .iter()
        .map(|&v| VertexSet::singleton(g.n(), v))
        .collect();
    let mut h = verify_nice_blowup(g, &parts).expect("an induced C5 is a nice blowup of itself");
    loop {
        h = greedy_extend(g, h);
        match larger_nice_blowup(g, &h, MAXIMALITY_BUDGET) {
            Search::Found(bigger) => h = *bigger,
            Search::Exhausted => {
                h.maximality = Maximality::Certified;
                return Ok(h);
            }
            Search::OverBudget => {
                log::debug!("maximality search over budget; keeping greedy blowup");
                h.maximality = Maximality::Greedy;
                return Ok(h);
            }
        }
    }
}

pub fn is_induced_c5(g: &Graph, c: &[usize]) -> bool {
    c.len() == 5
        && c.iter().all(|&v| v < g.n())
        && g.set_of(c).len() == 5
        && (0..5).all(|i| {
            (0..5)
                .all(|j| i == j || g.has_edge(c[i], c[j]) == ((i + 1) % 5 == j || (j + 1) % 5 == i))
        })
}

fn greedy_extend(g: &Graph, mut h: NiceBlowup) -> NiceBlowup {
    'outer: loop {
        let inside = h.vertices();
        for v in inside.complement().iter() {
            for i in 0..5 {
                let mut parts = h.parts.clone();
                parts[i].insert(v);
                if let Ok(bigger) = verify_nice_blowup(g, &parts) {
                    h = bigger;
                    continue 'outer;
                }
            }
        }
        return h;
    }
}

/// Whether `h` is certified maximal by exhaustive search.
pub fn is_maximal(g: &Graph, h: &NiceBlowup) -> Option<bool> {
    match larger_nice_blowup(g, h, MAXIMALITY_BUDGET) {
        Search::Found(_) => Some(false),
        Search::Exhausted => Some(true),
        Search::OverBudget => None,
    }
}

enum Search {
    Found(Box<NiceBlowup>),
    Exhausted,
    OverBudget,
}

struct Exhaustive<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    required: usize,
    parts: [VertexSet; 5],
    nodes: u64,
    budget: u64,
}

const OUT: usize = 5;

/// Searches for a nice blowup whose vertex set strictly contains `V(h)`.
fn larger_nice_blowup(g: &Graph, h: &NiceBlowup, budget: u64) -> Search {
    let inside = h.vertices();
    let mut order: Vec<usize> = h.parts.iter().flat_map(|p| p.iter()).collect();
    let required = order.len();
    order.extend(inside.complement().iter());
    if order.len() == required {
        return Search::Exhausted;
    }
    let mut s = Exhaustive {
        g,
        order,
        required,
        parts: std::array::from_fn(|_| g.empty_set()),
        nodes: 0,
        budget,
    };
    let mut extra = 0;
    match s.assign(0, &mut extra) {
        Some(Some(found)) => Search::Found(Box::new(found)),
        Some(None) => Search::Exhausted,
        None => Search::OverBudget,
    }
}

impl Exhaustive<'_> {
    /// `None` when over budget; `Some(None)` when exhausted without success.
    fn assign(&mut self, idx: usize, extra: &mut usize) -> Option<Option<NiceBlowup>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        if idx == self.order.len() {
            if *extra == 0 {
                return Some(None);
            }
            return Some(verify_nice_blowup(self.g, &self.parts).ok());
        }
        let v = self.order[idx];
        let required = idx < self.required;
        // Rotational symmetry: the first vertex goes to B0.
        let choices: &[usize] = if idx == 0 {
            &[0]
        } else {
            &[0, 1, 2, 3, 4, OUT]
        };
        for &j in choices {
            if j == OUT {
                if required {
                    continue;
                }
                if let r @ (None | Some(Some(_))) = self.assign(idx + 1, extra) {
                    return r;
                }
                continue;
            }
            if !self.fits(v, j) {
                continue;
            }
            self.parts[j].insert(v);
            if !required {
                *extra += 1;
            }
            let r = self.assign(idx + 1, extra);
            if !required {
                *extra -= 1;
            }
            self.parts[j].remove(v);
            if let r @ (None | Some(Some(_))) = r {
                return r;
            }
        }
        Some(None)
    }

    fn fits(&self, v: usize, j: usize) -> bool {
        let nv = self.g.neighbors(v);
        let j = j as isize;
        if !self.parts[md(j)].is_subset(nv)
            || nv.intersects(&self.parts[md(j + 2)])
            || nv.intersects(&self.parts[md(j - 2)])
        {
            return false;
        }
        let mut parts = self.parts.clone();
        parts[md(j)].insert(v);
        [j - 2, j - 1, j]
            .iter()
            .all(|&w| p4_in_window(self.g, &parts, w).is_none())
    }
}

/// Every induced C5 of `g` grown into a maximal nice blowup, without duplicates.
pub fn all_maximal_nice_blowups(g: &Graph) -> Vec<NiceBlowup> {
    let mut out: Vec<NiceBlowup> = Vec::new();
    for c in crate::recognizers::all_induced_c5(g) {
        if out
            .iter()
            .any(|h| c.iter().all(|v| h.vertices().contains(*v)) && seeds_in_distinct_parts(h, &c))
        {
            continue;
        }
        let h = find_maximal_nice_blowup(g, &c).expect("enumerated C5 is induced");
        if !out.iter().any(|o| o.same_partition(&h)) {
            out.push(h);
        }
    }
    out
}

/// The seed's vertices sit in consecutive parts of `h` in cycle order.
fn seeds_in_distinct_parts(h: &NiceBlowup, c: &[usize; 5]) -> bool {
    let pos: Vec<usize> = c
        .iter()
        .filter_map(|&v| (0..5).find(|&i| h.parts[i].contains(v)))
        .collect();
    pos.len() == 5 && {
        let fwd = (0..5).all(|i| pos[(i + 1) % 5] == (pos[i] + 1) % 5);
        let bwd = (0..5).all(|i| pos[(i + 1) % 5] == (pos[i] + 4) % 5);
        fwd || bwd
    }
}

/// Classes of vertices outside a nice blowup by their support
/// `supp(v) = { i : v has a neighbor in B_i }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttachmentPartition {
    /// Empty support.
    pub a0: VertexSet,
    /// `a1[i]`: support `{i}`.
    pub a1: [VertexSet; 5],
    /// `a2[i]`: support `{i, i+1}`.
    pub a2: [VertexSet; 5],
    /// `a3[i]`: support `{i-1, i, i+1}`.
    pub a3: [VertexSet; 5],
    /// Full support.
    pub a5: VertexSet,
    /// Vertices whose support has size 4 or is not consecutive, with that support.
    pub flagged: Vec<(usize, Vec<usize>)>,
}

impl AttachmentPartition {
    pub fn a1(&self, i: isize) -> &VertexSet {
        &self.a1[md(i)]
    }
    pub fn a2(&self, i: isize) -> &VertexSet {
        &self.a2[md(i)]
    }
    pub fn a3(&self, i: isize) -> &VertexSet {
        &self.a3[md(i)]
    }
}

/// Support of `v` as a sorted list of part indices.
pub fn support(g: &Graph, h: &NiceBlowup, v: usize) -> Vec<usize> {
    (0..5)
        .filter(|&i| g.neighbors(v).intersects(&h.parts[i]))
        .collect()
}

pub fn classify_attachments(g: &Graph, h: &NiceBlowup) -> AttachmentPartition {
    let n = g.n();
    let e = || VertexSet::empty(n);
    let mut out = AttachmentPartition {
        a0: e(),
        a1: std::array::from_fn(|_| e()),
        a2: std::array::from_fn(|_| e()),
        a3: std::array::from_fn(|_| e()),
        a5: e(),
        flagged: Vec::new(),
    };
    for v in h.vertices().complement().iter() {
        let s = support(g, h, v);
        let mask: u8 = s.iter().map(|&i| 1u8 << i).sum();
        let rot = |m: u8, i: usize| ((m << i) | (m >> (5 - i))) & 0b11111;
        let class = (0..5).find_map(|i| {
            if mask == rot(0b1, i) {
                Some((1, i))
            } else if mask == rot(0b11, i) {
                Some((2, i))
            } else if mask == rot(0b111, md(i as isize - 1)) {
                Some((3, i))
            } else {
                None
            }
        });
        match (s.len(), class) {
            (0, _) => {
                out.a0.insert(v);
            }
            (5, _) => {
                out.a5.insert(v);
            }
            (_, Some((1, i))) => {
                out.a1[i].insert(v);
            }
            (_, Some((2, i))) => {
                out.a2[i].insert(v);
            }
            (_, Some((3, i))) => {
                out.a3[i].insert(v);
            }
            _ => out.flagged.push((v, s)),
        }
    }
    out
}

/// A clique `S` whose removal disconnects the graph, with the `S`-components
/// `V(C) ∪ S` for each component `C` of `G - S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCutset {
    pub clique: VertexSet,
    pub components: Vec<VertexSet>,
}

/// A clique cutset, or `None` when there is none. A disconnected graph
/// yields the empty cutset.
///
/// Every clique cutset lies in a maximal clique `K`; if `C` is a component
/// of `G - K`, then `N(C) ⊆ K` separates `C` from the rest whenever anything
/// else remains. So scanning maximal cliques is exhaustive.
pub fn find_clique_cutset(g: &Graph) -> Option<CliqueCutset> {
    let all = g.vertices();
    let comps = g.components(&all);
    if comps.len() >= 2 {
        return Some(CliqueCutset {
            clique: g.empty_set(),
            components: comps,
        });
    }
    for k in maximal_cliques(g) {
        let rest = all.difference(&k);
        let comps = g.components(&rest);
        let Some(c) = comps.first() else { continue };
        let s = g.neighborhood(c);
        if comps.len() >= 2 || s != k {
            return Some(split_at(g, &s));
        }
    }
    None
}

/// The `S`-components of `g` for a separating set `s`.
pub fn split_at(g: &Graph, s: &VertexSet) -> CliqueCutset {
    let rest = g.vertices().difference(s);
    CliqueCutset {
        clique: s.clone(),
        components: g
            .components(&rest)
            .into_iter()
            .map(|c| c.union(s))
            .collect(),
    }
}

/// Vertices of degree at most `⌈5ω/4⌉ - 1`.
pub fn small_vertices(g: &Graph, omega: usize) -> Result<VertexSet> {
    if omega < 1 {
        return Err(Error::InvalidArgument("omega must be at least 1".into()));
    }
    let limit = crate::five_quarters(omega) - 1;
    Ok(VertexSet::from_iter_in(
        g.n(),
        (0..g.n()).filter(|&v| g.degree(v) <= limit),
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueShortfall {
    pub clique: Vec<usize>,
    pub meets: usize,
    pub required: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodSubgraphReport {
    pub good: bool,
    pub shortfalls: Vec<CliqueShortfall>,
    /// An edge of `g[H]` whose ends share a color.
    pub coloring_conflict: Option<(usize, usize)>,
    pub colors_used: usize,
    pub maximal_cliques: usize,
}

/// Checks that `w` is `(p, q)`-good in `g`: every maximal clique `K` has
/// `|K ∩ H| >= p - (ω - |K|)` and `w.colors` properly colors `g[H]` with at most `q` colors.
///
/// Errors if a maximal clique is larger than `omega` or the witness is malformed.
pub fn verify_good_subgraph(
    g: &Graph,
    w: &GoodSubgraphWitness,
    omega: usize,
) -> Result<GoodSubgraphReport> {
    if w.vertices.len() != w.colors.len() {
        return Err(Error::InvalidArgument(
            "witness needs one color per vertex".into(),
        ));
    }
    if let Some(&v) = w.vertices.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        });
    }
    let h = w.vertex_set(g.n());
    if h.len() != w.vertices.len() {
        return Err(Error::InvalidArgument("witness repeats a vertex".into()));
    }
    let cliques = maximal_cliques(g);
    let mut shortfalls = Vec::new();
    for k in &cliques {
        if k.len() > omega {
            return Err(Error::InvalidArgument(format!(
                "clique {:?} is larger than omega = {omega}",
                k.to_vec()
            )));
        }
        let required = w.p.saturating_sub(omega - k.len());
        let meets = k.intersection_len(&h);
        if meets < required {
            shortfalls.push(CliqueShortfall {
                clique: k.to_vec(),
                meets,
                required,
            });
        }
    }
    let color_of = |v: usize| w.colors[w.vertices.iter().position(|&u| u == v).expect("v in H")];
    let coloring_conflict = w.vertices.iter().enumerate().find_map(|(i, &u)| {
        w.vertices[i + 1..]
            .iter()
            .find(|&&v| g.has_edge(u, v) && color_of(u) == color_of(v))
            .map(|&v| (u, v))
    });
    let mut used = w.colors.clone();
    used.sort_unstable();
    used.dedup();
    let colors_used = used.len();
    let good = shortfalls.is_empty()
        && coloring_conflict.is_none()
        && colors_used <= w.q
        && w.colors.iter().all(|&c| c >= 1);
    Ok(GoodSubgraphReport {
        good,
        shortfalls,
        coloring_conflict,
        colors_used,
        maximal_cliques: cliques.len(),
    })
}

/// Vertices outside an induced C5 `c`, bucketed by which cycle vertices they see.
///
/// Bucket `mask` holds vertices adjacent to exactly `{c[i] : bit i of mask}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct C5Classes {
    pub cycle: [usize; 5],
    pub buckets: Vec<VertexSet>,
}

impl C5Classes {
    /// `S(c[i] : i in idx)`, indices taken mod 5.
    pub fn s(&self, idx: &[isize]) -> &VertexSet {
        let mask: usize = idx.iter().map(|&i| 1usize << md(i)).fold(0, |a, b| a | b);
        &self.buckets[mask]
    }
}

pub fn classify_by_c5(g: &Graph, c: &[usize; 5]) -> Result<C5Classes> {
    if !is_induced_c5(g, c) {
        return Err(Error::InvalidArgument(format!(
            "{c:?} is not an induced C5"
        )));
    }
    let mut buckets = vec![g.empty_set(); 32];
    let cs = g.set_of(c);
    for v in cs.complement().iter() {
        let mask: usize = (0..5)
            .filter(|&i| g.has_edge(v, c[i]))
            .map(|i| 1 << i)
            .sum();
        buckets[mask].insert(v);
    }
    Ok(C5Classes { cycle: *c, buckets })
}

/// `(a, b, U, P_a, P_b, Q)`: `U` the common neighbors of `a` and `b` in `K`,
/// `P_a`, `P_b` their private neighbors, `Q` the rest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NiceSixTuple {
    pub a: usize,
    pub b: usize,
    pub u: VertexSet,
    pub pa: VertexSet,
    pub pb: VertexSet,
    pub q: VertexSet,
}

/// The canonical split of `k` by `a` and `b`, if it is nice: `U`, `P_a`, `P_b`
/// nonempty; `P_a`, `P_b`, `Q` pairwise anticomplete; `U` complete to
/// `P_a ∪ P_b ∪ {a, b}`.
pub fn find_nice_six_tuple(
    g: &Graph,
    k: &VertexSet,
    a: usize,
    b: usize,
) -> Result<Option<NiceSixTuple>> {
    for v in [a, b] {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
        if k.contains(v) {
            return Err(Error::VertexInSet(v));
        }
    }
    if a == b || g.has_edge(a, b) {
        return Err(Error::InvalidArgument(format!(
            "{a} and {b} must be distinct and non-adjacent"
        )));
    }
    let na = g.neighbors(a).intersection(k);
    let nb = g.neighbors(b).intersection(k);
    let u = na.intersection(&nb);
    let pa = na.difference(&nb);
    let pb = nb.difference(&na);
    let q = k.difference(&na).difference(&nb);
    let nice = !u.is_empty()
        && !pa.is_empty()
        && !pb.is_empty()
        && g.anticomplete_between(&pa, &pb)
        && g.anticomplete_between(&pa, &q)
        && g.anticomplete_between(&pb, &q)
        && g.complete_between(&u, &pa.union(&pb));
    Ok(nice.then_some(NiceSixTuple { a, b, u, pa, pb, q }))
}

/// Some induced C5 of `g`, in cycle order.
pub fn find_c5(g: &Graph) -> Option<[usize; 5]> {
    find_hole(g, Parity::Any, Some(5)).map(|h| [h[0], h[1], h[2], h[3], h[4]])
}
