//! Traced reduction pipeline and certified colorings.
//!
//! `reduce` strips universal vertices, splits along clique cutsets, removes
//! catalog good subgraphs and small vertices until only kernels remain.
//! Kernels are colored directly, and `splice` replays the trace backwards
//! to color the input. Each step keeps the color count within `⌈5ω/4⌉`
//! of the graph it acted on, given the same for its children.

use crate::bitset::VertexSet;
use crate::blowup::{
    hyperhole_chromatic, select_good_subgraph, GoodSubgraphCase, GoodSubgraphWitness, Hyperhole,
    M_PARTS,
};
use crate::cliques::maximal_cliques;
use crate::coloring::{dsatur, greedy, Coloring};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::five_quarters;
use crate::graph::Graph;
use crate::oracles::{exact_chi, exact_omega, OracleLimits, Witness};
use crate::recognizers::{for_each_hole, is_chordal, is_in_class, ClassReport};
use crate::structure::{
    find_clique_cutset, find_maximal_nice_blowup, verify_good_subgraph, NiceBlowup,
};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineConfig {
    pub limits: OracleLimits,
    #[serde(skip, default)]
    pub exec: Execution,
    /// Node budget for bounded k-coloring searches on kernels beyond the oracle limit.
    pub search_budget: u64,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            limits: OracleLimits::default(),
            exec: Execution::default(),
            search_budget: 200_000,
        }
    }
}

/// A graph met during reduction; `origin[i]` is the input vertex behind vertex `i`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Snapshot {
    pub graph: Graph,
    pub origin: Vec<usize>,
    pub omega: usize,
}

impl Snapshot {
    fn child(&self, keep: &VertexSet) -> Snapshot {
        let sub = self
            .graph
            .induced_subgraph(keep)
            .expect("subset of the snapshot");
        let origin = sub.map.iter().map(|&v| self.origin[v]).collect();
        Snapshot {
            graph: sub.graph,
            origin,
            omega: 0,
        }
    }
}

/// How a kernel was colored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum KernelMethod {
    Empty,
    Chordal,
    Hyperhole,
    NiceBlowup,
    Structured,
    Exact,
    BoundedSearch,
    Heuristic,
}

/// One reduction step. Vertex ids refer to the input graph; snapshot ids
/// index [`Reduction::snapshots`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "kebab-case")]
pub enum TraceStep {
    UniversalVertex {
        before: usize,
        after: usize,
        vertex: usize,
    },
    CliqueCutset {
        before: usize,
        clique: Vec<usize>,
        components: Vec<usize>,
    },
    GoodSubgraph {
        before: usize,
        after: usize,
        case: String,
        p: usize,
        q: usize,
        vertices: Vec<usize>,
        colors: Vec<u32>,
    },
    SmallVertex {
        before: usize,
        after: usize,
        vertex: usize,
        degree: usize,
        threshold: usize,
    },
    DegeneracyVertex {
        snapshot: usize,
        vertex: usize,
        degree: usize,
        budget: usize,
    },
    Kernel {
        snapshot: usize,
        method: KernelMethod,
        colors: usize,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Reduction {
    pub snapshots: Vec<Snapshot>,
    pub trace: Vec<TraceStep>,
    pub kernels: Vec<usize>,
}

/// Applies the reduction rules in priority order: universal vertex, clique
/// cutset, catalog good subgraph, small vertex. `ω` is recomputed exactly
/// for every snapshot.
pub fn reduce(g: &Graph, cfg: &EngineConfig) -> Result<Reduction> {
    let mut snapshots = vec![Snapshot {
        graph: g.clone(),
        origin: (0..g.n()).collect(),
        omega: 0,
    }];
    let mut trace = Vec::new();
    let mut kernels = Vec::new();
    let mut stack = vec![0usize];
    while let Some(id) = stack.pop() {
        let omega = exact_omega(&snapshots[id].graph, &cfg.limits)?.value;
        snapshots[id].omega = omega;
        let snap = &snapshots[id];
        let sg = &snap.graph;
        if sg.n() == 0 {
            kernels.push(id);
            continue;
        }
        if let Some(u) = sg.universal_vertices().first() {
            let child = snap.child(&sg.vertices().without(u));
            let vertex = snap.origin[u];
            let after = push(&mut snapshots, child);
            trace.push(TraceStep::UniversalVertex {
                before: id,
                after,
                vertex,
            });
            stack.push(after);
            continue;
        }
        if let Some(cut) = find_clique_cutset(sg) {
            let clique = cut.clique.iter().map(|v| snap.origin[v]).collect();
            let children: Vec<Snapshot> = cut.components.iter().map(|c| snap.child(c)).collect();
            let ids: Vec<usize> = children
                .into_iter()
                .map(|c| push(&mut snapshots, c))
                .collect();
            trace.push(TraceStep::CliqueCutset {
                before: id,
                clique,
                components: ids.clone(),
            });
            stack.extend(ids.into_iter().rev());
            continue;
        }
        if let Some(w) = catalog_good_subgraph(sg, omega) {
            let snap = &snapshots[id];
            let child = snap.child(
                &snap
                    .graph
                    .vertices()
                    .difference(&w.vertex_set(snap.graph.n())),
            );
            let vertices = w.vertices.iter().map(|&v| snap.origin[v]).collect();
            let after = push(&mut snapshots, child);
            trace.push(TraceStep::GoodSubgraph {
                before: id,
                after,
                case: w.case,
                p: w.p,
                q: w.q,
                vertices,
                colors: w.colors,
            });
            stack.push(after);
            continue;
        }
        let threshold = five_quarters(omega) - 1;
        let snap = &snapshots[id];
        if let Some(v) = (0..snap.graph.n()).find(|&v| snap.graph.degree(v) <= threshold) {
            let child = snap.child(&snap.graph.vertices().without(v));
            let (vertex, degree) = (snap.origin[v], snap.graph.degree(v));
            let after = push(&mut snapshots, child);
            trace.push(TraceStep::SmallVertex {
                before: id,
                after,
                vertex,
                degree,
                threshold,
            });
            stack.push(after);
            continue;
        }
        kernels.push(id);
    }
    Ok(Reduction {
        snapshots,
        trace,
        kernels,
    })
}

fn push(snapshots: &mut Vec<Snapshot>, s: Snapshot) -> usize {
    snapshots.push(s);
    snapshots.len() - 1
}

/// A (p, q)-good subgraph from the catalog, verified before use:
/// the special-blowup-of-M cases, then a single vertex lying in every maximum
/// clique, which is (1, 1)-good.
pub fn catalog_good_subgraph(g: &Graph, omega: usize) -> Option<GoodSubgraphWitness> {
    for parts in detect_special_m_blowup(g) {
        for case in GoodSubgraphCase::ALL {
            if let Ok(w) = select_good_subgraph(case, &parts) {
                if verify_good_subgraph(g, &w, omega).is_ok_and(|r| r.good) {
                    return Some(w);
                }
            }
        }
    }
    let mut common = g.vertices();
    for k in maximal_cliques(g).iter().filter(|k| k.len() == omega) {
        common.intersect_with(k);
    }
    let v = common.first()?;
    let w = GoodSubgraphWitness {
        case: "common-vertex".into(),
        p: 1,
        q: 1,
        vertices: vec![v],
        colors: vec![1],
    };
    verify_good_subgraph(g, &w, omega)
        .is_ok_and(|r| r.good)
        .then_some(w)
}

/// Labelings `L1..L12` under which `g` is a special blowup of `M`
/// (`L1..L7` nonempty).
///
/// In a special blowup no two parts are true twins, so the parts are exactly
/// the closed-neighborhood classes; a labeling is an isomorphism from the
/// quotient to an induced subgraph of `M` containing the 7-cycle.
pub fn detect_special_m_blowup(g: &Graph) -> Vec<Vec<VertexSet>> {
    let classes = g.true_twin_classes();
    let q = classes.len();
    if !(7..=M_PARTS).contains(&q) || classes.iter().any(|c| !g.is_clique(c)) {
        return Vec::new();
    }
    let reps: Vec<usize> = classes
        .iter()
        .map(|c| c.first().expect("classes are nonempty"))
        .collect();
    let quotient = g
        .induced_subgraph(&g.set_of(&reps))
        .expect("reps are vertices")
        .graph;
    let m = crate::blowup::pattern_m();
    let mut out: Vec<Vec<VertexSet>> = Vec::new();
    for_each_hole(&quotient, 7, |cyc| {
        for shift in 0..7 {
            for dir in [1usize, 6] {
                let mut label = vec![usize::MAX; q];
                for (j, &c) in cyc.iter().enumerate() {
                    label[c] = (shift + j * dir) % 7;
                }
                if let Some(parts) = complete_labeling(&quotient, &m, label, &classes, g.n()) {
                    if !out.contains(&parts) {
                        out.push(parts);
                    }
                }
            }
        }
        false
    });
    out
}

fn complete_labeling(
    quotient: &Graph,
    m: &Graph,
    mut label: Vec<usize>,
    classes: &[VertexSet],
    n: usize,
) -> Option<Vec<VertexSet>> {
    let cyc: Vec<usize> = (0..quotient.n())
        .filter(|&c| label[c] != usize::MAX)
        .collect();
    let mut used = [false; M_PARTS];
    for &c in &cyc {
        used[label[c]] = true;
    }
    for c in 0..quotient.n() {
        if label[c] != usize::MAX {
            continue;
        }
        let hub = (7..M_PARTS).find(|&h| {
            !used[h]
                && cyc
                    .iter()
                    .all(|&d| quotient.has_edge(c, d) == m.has_edge(h, label[d]))
        })?;
        used[hub] = true;
        label[c] = hub;
    }
    for a in 0..quotient.n() {
        for b in a + 1..quotient.n() {
            if quotient.has_edge(a, b) != m.has_edge(label[a], label[b]) {
                return None;
            }
        }
    }
    let mut parts = vec![VertexSet::empty(n); M_PARTS];
    for (c, cls) in classes.iter().enumerate() {
        parts[label[c]] = cls.clone();
    }
    Some(parts)
}

/// Colors of `g` with provenance, for a base graph family.
#[derive(Clone, Debug)]
pub struct BaseColoring {
    pub coloring: Coloring,
    pub method: KernelMethod,
}

/// Direct colorings for chordal graphs (exactly `ω` colors), hyperholes
/// (exactly `χ`) and nice blowups of C5 (at most `⌈5ω/4⌉`, when the
/// precolor-and-peel tactic succeeds). `None` for other graphs.
pub fn color_base(g: &Graph, cfg: &EngineConfig) -> Option<BaseColoring> {
    if let Some(mut peo) = is_chordal(g) {
        peo.reverse();
        return Some(BaseColoring {
            coloring: greedy(g, &peo),
            method: KernelMethod::Chordal,
        });
    }
    if let Some(c) = color_hyperhole(g) {
        return Some(BaseColoring {
            coloring: c,
            method: KernelMethod::Hyperhole,
        });
    }
    let h = spanning_nice_blowup(g)?;
    let omega = crate::oracles::omega_unchecked(g, &g.vertices()).len();
    let c = precolor_tactic(g, &h, omega, cfg)?.coloring;
    Some(BaseColoring {
        coloring: c,
        method: KernelMethod::NiceBlowup,
    })
}

/// Recognizes a hyperhole (the true-twin quotient is a cycle of length at
/// least 4) and colors it optimally.
pub fn color_hyperhole(g: &Graph) -> Option<Coloring> {
    let classes = g.true_twin_classes();
    let k = classes.len();
    if k < 4 || classes.iter().any(|c| !g.is_clique(c)) {
        return None;
    }
    let reps: Vec<usize> = classes
        .iter()
        .map(|c| c.first().expect("nonempty"))
        .collect();
    let q = g
        .induced_subgraph(&g.set_of(&reps))
        .expect("reps are vertices")
        .graph;
    if (0..k).any(|v| q.degree(v) != 2) || !q.is_connected() {
        return None;
    }
    let mut order = vec![0];
    let mut prev = usize::MAX;
    while order.len() < k {
        let cur = *order.last().expect("nonempty");
        let next = q
            .neighbors(cur)
            .iter()
            .find(|&u| u != prev && !order.contains(&u))?;
        prev = cur;
        order.push(next);
    }
    let h = Hyperhole::new(order.iter().map(|&c| classes[c].len()).collect());
    let (_, local) = hyperhole_chromatic(&h).ok()?;
    let mut col = Coloring::uncolored(g.n());
    let mut idx = 0;
    for &c in &order {
        for v in &classes[c] {
            col.set(v, local.as_slice()[idx]);
            idx += 1;
        }
    }
    debug_assert!(col.is_proper(g));
    Some(col)
}

/// A nice blowup of C5 covering all of `g`, if one grows from some induced C5.
pub fn spanning_nice_blowup(g: &Graph) -> Option<NiceBlowup> {
    let mut found = None;
    let mut tried = 0;
    for_each_hole(g, 5, |c| {
        tried += 1;
        if let Ok(h) = find_maximal_nice_blowup(g, c) {
            if h.size() == g.n() {
                found = Some(h);
                return true;
            }
        }
        tried >= 16
    });
    found
}

/// Outcome of [`precolor_tactic`].
#[derive(Clone, Debug)]
pub struct Precolored {
    pub coloring: Coloring,
    /// Peeled vertices with their degrees at removal.
    pub peeled: Vec<(usize, usize)>,
    /// Colors shared between `S_i` and `S_{i-2} ∪ S_{i+2}`.
    pub shared: usize,
}

/// Precolor-and-peel: for some `i`, color `S_i ⊆ B_i` and
/// `S_{i-2} ∪ S_{i+2}` (the parts beyond `⌈ω/4⌉` in `B_{i±2}`) with the same
/// `p` colors, then color the rest with the other `⌈5ω/4⌉ - p` colors by
/// peeling low-degree vertices and coloring the residue directly.
///
pub fn precolor_tactic(
    g: &Graph,
    h: &NiceBlowup,
    omega: usize,
    cfg: &EngineConfig,
) -> Option<Precolored> {
    let b = five_quarters(omega);
    let r = omega.div_ceil(4);
    let mut plans: Vec<(isize, usize)> = vec![(0, 0)];
    for i in 0..5isize {
        let (x, y) = (h.part(i - 2).len(), h.part(i + 2).len());
        if x > r && y > r {
            let p = x + y - 2 * r;
            if p <= h.part(i).len() && p < b {
                plans.push((i, p));
            }
        }
    }
    for (i, p) in plans {
        let mut col = Coloring::uncolored(g.n());
        let mut pre = g.empty_set();
        if p > 0 {
            let by_degree = |s: &VertexSet, k: usize| -> Vec<usize> {
                let mut v: Vec<usize> = s.to_vec();
                v.sort_by_key(|&u| (std::cmp::Reverse(g.degree(u)), u));
                v.truncate(k);
                v
            };
            let si = by_degree(h.part(i), p);
            let sl = by_degree(h.part(i - 2), h.part(i - 2).len() - r);
            let sr = by_degree(h.part(i + 2), h.part(i + 2).len() - r);
            for (k, &v) in si.iter().enumerate() {
                col.set(v, k as u32 + 1);
            }
            for (k, &v) in sl.iter().chain(sr.iter()).enumerate() {
                col.set(v, k as u32 + 1);
            }
            pre = g.set_of(&si).union(&g.set_of(&sl)).union(&g.set_of(&sr));
        }
        let f = b - p;
        let rest = g.vertices().difference(&pre);
        if let Some((sub_col, peeled)) = color_by_peeling(g, &rest, f, cfg) {
            for v in &rest {
                col.set(v, sub_col.as_slice()[v] + p as u32);
            }
            if col.is_proper(g) && col.max_color() as usize <= b {
                return Some(Precolored {
                    coloring: col,
                    peeled,
                    shared: p,
                });
            }
        }
    }
    None
}

/// Colors `g[within]` with at most `f` colors: repeatedly remove a vertex of
/// degree below `f`, color what remains, then color removed vertices last.
/// Returns colors indexed by vertex of `g` (zero outside `within`).
fn color_by_peeling(
    g: &Graph,
    within: &VertexSet,
    f: usize,
    cfg: &EngineConfig,
) -> Option<(Coloring, Vec<(usize, usize)>)> {
    let mut live = within.clone();
    let mut peeled = Vec::new();
    while let Some(v) = live.iter().find(|&v| g.degree_in(v, &live) < f) {
        peeled.push((v, g.degree_in(v, &live)));
        live.remove(v);
    }
    let sub = g.induced_subgraph(&live).expect("subset of g");
    let local = color_residue(&sub.graph, f, cfg)?;
    let mut col = Coloring::uncolored(g.n());
    for (i, &v) in sub.map.iter().enumerate() {
        col.set(v, local.as_slice()[i]);
    }
    for &(v, _) in peeled.iter().rev() {
        let c = col.smallest_free(g, v);
        col.set(v, c);
    }
    (col.max_color() as usize <= f).then_some((col, peeled))
}

fn color_residue(g: &Graph, f: usize, cfg: &EngineConfig) -> Option<Coloring> {
    if g.n() == 0 {
        return Some(Coloring::uncolored(0));
    }
    if let Some(mut peo) = is_chordal(g) {
        peo.reverse();
        let c = greedy(g, &peo);
        return (c.max_color() as usize <= f).then_some(c);
    }
    if let Some(c) = color_hyperhole(g) {
        if c.max_color() as usize <= f {
            return Some(c);
        }
        return None;
    }
    let d = dsatur(g);
    if d.max_color() as usize <= f {
        return Some(d);
    }
    match bounded_k_coloring(g, f, cfg.search_budget) {
        KSearch::Colored(c) => Some(c),
        _ => None,
    }
}

pub enum KSearch {
    Colored(Coloring),
    Impossible,
    OverBudget,
}

/// Backtracking `k`-coloring in DSATUR order with a node budget.
pub fn bounded_k_coloring(g: &Graph, k: usize, budget: u64) -> KSearch {
    let n = g.n();
    let mut colors = vec![0u32; n];
    let mut nodes = 0u64;
    fn go(
        g: &Graph,
        k: usize,
        colors: &mut [u32],
        done: usize,
        nodes: &mut u64,
        budget: u64,
    ) -> Option<bool> {
        *nodes += 1;
        if *nodes > budget {
            return None;
        }
        if done == g.n() {
            return Some(true);
        }
        let mut best = (0usize, 0usize, usize::MAX);
        for v in (0..g.n()).filter(|&v| colors[v] == 0) {
            let mut seen = vec![false; k + 1];
            let mut deg = 0;
            for u in g.neighbors(v) {
                seen[colors[u] as usize] = true;
                deg += (colors[u] == 0) as usize;
            }
            let sat = seen[1..].iter().filter(|&&s| s).count();
            if best.2 == usize::MAX || (sat, deg) > (best.0, best.1) {
                best = (sat, deg, v);
            }
        }
        let v = best.2;
        let used = colors.iter().copied().max().unwrap_or(0) as usize;
        for c in 1..=k.min(used + 1) {
            if g.neighbors(v).iter().any(|u| colors[u] as usize == c) {
                continue;
            }
            colors[v] = c as u32;
            match go(g, k, colors, done + 1, nodes, budget) {
                Some(true) => return Some(true),
                None => return None,
                Some(false) => {}
            }
            colors[v] = 0;
        }
        Some(false)
    }
    match go(g, k, &mut colors, 0, &mut nodes, budget) {
        Some(true) => KSearch::Colored(Coloring::from_vec(colors)),
        Some(false) => KSearch::Impossible,
        None => KSearch::OverBudget,
    }
}

/// Kernel coloring: base families, then the precolor tactic on a maximal
/// nice blowup, then the exact oracle when small enough, then bounded
/// search, then DSATUR.
pub fn color_kernel(
    g: &Graph,
    omega: usize,
    cfg: &EngineConfig,
) -> (Coloring, KernelMethod, Vec<(usize, usize)>) {
    if g.n() == 0 {
        return (Coloring::uncolored(0), KernelMethod::Empty, Vec::new());
    }
    if let Some(b) = color_base(g, cfg) {
        return (b.coloring, b.method, Vec::new());
    }
    let bound = five_quarters(omega);
    if let Some(c) = crate::structure::find_c5(g) {
        if let Ok(h) = find_maximal_nice_blowup(g, &c) {
            if let Some(pc) = precolor_tactic(g, &h, omega, cfg) {
                return (pc.coloring, KernelMethod::Structured, pc.peeled);
            }
        }
    }
    if let Ok(r) = exact_chi(g, &cfg.limits) {
        if let Witness::Coloring(c) = r.witness {
            return (c, KernelMethod::Exact, Vec::new());
        }
    }
    if let KSearch::Colored(c) = bounded_k_coloring(g, bound, cfg.search_budget) {
        return (c, KernelMethod::BoundedSearch, Vec::new());
    }
    (dsatur(g), KernelMethod::Heuristic, Vec::new())
}

/// Colors every kernel and replays the trace. Kernel colorings are computed
/// with `cfg.exec`; the result does not depend on the mode.
pub fn color_reduction(red: &mut Reduction, n: usize, cfg: &EngineConfig) -> Coloring {
    let kernel_results = cfg.exec.map(&red.kernels, |&id| {
        let s = &red.snapshots[id];
        color_kernel(&s.graph, s.omega, cfg)
    });
    let mut kernel_colorings = Vec::new();
    for (&id, (col, method, peeled)) in red.kernels.iter().zip(kernel_results) {
        let s = &red.snapshots[id];
        let budget = five_quarters(s.omega);
        for &(v, degree) in &peeled {
            red.trace.push(TraceStep::DegeneracyVertex {
                snapshot: id,
                vertex: s.origin[v],
                degree,
                budget,
            });
        }
        red.trace.push(TraceStep::Kernel {
            snapshot: id,
            method,
            colors: col.num_colors(),
        });
        kernel_colorings.push((id, col));
    }
    splice(red, &kernel_colorings, n)
}

/// Replays the trace backwards from kernel colorings (local vertex ids) to a
/// coloring of the input graph on `n` vertices.
pub fn splice(red: &Reduction, kernels: &[(usize, Coloring)], n: usize) -> Coloring {
    let mut cols: Vec<Option<Vec<u32>>> = vec![None; red.snapshots.len()];
    for (id, c) in kernels {
        let mut full = vec![0u32; n];
        for (i, &o) in red.snapshots[*id].origin.iter().enumerate() {
            full[o] = c.as_slice()[i];
        }
        cols[*id] = Some(full);
    }
    let max_on = |c: &[u32], s: &Snapshot| s.origin.iter().map(|&o| c[o]).max().unwrap_or(0);
    for step in red.trace.iter().rev() {
        match step {
            TraceStep::UniversalVertex {
                before,
                after,
                vertex,
            } => {
                let mut c = cols[*after].clone().expect("child colored first");
                let top = max_on(&c, &red.snapshots[*after]);
                c[*vertex] = top + 1;
                cols[*before] = Some(c);
            }
            TraceStep::SmallVertex {
                before,
                after,
                vertex,
                ..
            } => {
                let mut c = cols[*after].clone().expect("child colored first");
                let s = &red.snapshots[*before];
                let local = s
                    .origin
                    .iter()
                    .position(|o| o == vertex)
                    .expect("vertex in snapshot");
                let mut used: Vec<u32> = s
                    .graph
                    .neighbors(local)
                    .iter()
                    .map(|u| c[s.origin[u]])
                    .collect();
                used.sort_unstable();
                c[*vertex] = (1..)
                    .find(|x| used.binary_search(x).is_err())
                    .expect("a color is free");
                cols[*before] = Some(c);
            }
            TraceStep::GoodSubgraph {
                before,
                after,
                vertices,
                colors,
                ..
            } => {
                let mut c = cols[*after].clone().expect("child colored first");
                let top = max_on(&c, &red.snapshots[*after]);
                for (v, k) in vertices.iter().zip(colors) {
                    c[*v] = top + k;
                }
                cols[*before] = Some(c);
            }
            TraceStep::CliqueCutset {
                before,
                clique,
                components,
            } => {
                let mut merged = cols[components[0]].clone().expect("child colored first");
                for &comp in &components[1..] {
                    let c = cols[comp].as_ref().expect("child colored first");
                    let s = &red.snapshots[comp];
                    let perm = align_on_clique(c, &merged, clique, s);
                    for &o in &s.origin {
                        merged[o] = perm(c[o]);
                    }
                }
                cols[*before] = Some(merged);
            }
            TraceStep::DegeneracyVertex { .. } | TraceStep::Kernel { .. } => {}
        }
    }
    Coloring::from_vec(cols[0].clone().unwrap_or_else(|| vec![0; n]))
}

/// A color bijection sending `c` on the clique to `base` on the clique, and
/// the other colors of `c` to the smallest colors unused on the clique.
fn align_on_clique<'a>(
    c: &[u32],
    base: &[u32],
    clique: &[usize],
    s: &Snapshot,
) -> impl Fn(u32) -> u32 + 'a {
    let mut map = std::collections::BTreeMap::new();
    let mut taken = std::collections::BTreeSet::new();
    for &v in clique {
        map.insert(c[v], base[v]);
        taken.insert(base[v]);
    }
    let mut others: Vec<u32> = s
        .origin
        .iter()
        .map(|&o| c[o])
        .filter(|x| !map.contains_key(x))
        .collect();
    others.sort_unstable();
    others.dedup();
    let mut next = 1;
    for x in others {
        while taken.contains(&next) {
            next += 1;
        }
        map.insert(x, next);
        next += 1;
    }
    move |x| map[&x]
}

/// Result of the degeneracy check: which vertices may be colored last.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyOutcome {
    pub omega: usize,
    pub p: usize,
    /// `⌈5ω/4⌉ - p`; every removable vertex has scoped degree below it.
    pub threshold: usize,
    pub removable: Vec<usize>,
}

/// Checks the hypotheses on four disjoint cliques `X1, X2, X3, X*`, a set
/// `P ⊆ X1` and a scope `F`, and returns the vertices `v ∈ F ∩ X2` with
/// `N_F(v) ⊆ X1 ∪ X2 ∪ X3 ∪ X*` and `N(v) ∩ (X1 ∪ X2 ∪ X*)` a clique.
/// These have `d_F(v) < ⌈5ω/4⌉ - |P|`.
#[allow(clippy::too_many_arguments)]
pub fn degeneracy_eliminate(
    g: &Graph,
    x1: &VertexSet,
    x2: &VertexSet,
    x3: &VertexSet,
    xstar: &VertexSet,
    p_set: &VertexSet,
    f_scope: &VertexSet,
    limits: &OracleLimits,
) -> Result<DegeneracyOutcome> {
    let fail = |m: &str| Err(Error::Hypothesis(m.to_string()));
    let omega = exact_omega(g, limits)?.value;
    let quarter = omega.div_ceil(4);
    let sets = [x1, x2, x3, xstar];
    if sets.iter().any(|s| !g.is_clique(s)) {
        return fail("X1, X2, X3, X* must be cliques");
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if sets[i].intersects(sets[j]) {
                return fail("X1, X2, X3, X* must be disjoint");
            }
        }
    }
    if x1.len() <= quarter {
        return fail("|X1| > ⌈ω/4⌉");
    }
    if 4 * x2.len() > 3 * omega {
        return fail("|X2| <= 3ω/4");
    }
    if x3.len() != quarter {
        return fail("|X3| = ⌈ω/4⌉");
    }
    let x1s = x1.union(xstar);
    if !g.anticomplete_between(&x1s, x3) {
        return fail("X1 ∪ X* anticomplete to X3");
    }
    let nx2 = |v: usize| g.neighbors(v).intersection(x2);
    for u in &x1s {
        for v in &x1s {
            let (a, b) = (nx2(u), nx2(v));
            if !(a.is_subset(&b) || b.is_subset(&a)) {
                return fail("vertices of X1 ∪ X* have comparable neighborhoods in X2");
            }
        }
    }
    for v in xstar {
        if x1.iter().any(|u| !nx2(v).is_subset(&nx2(u))) {
            return fail("N_X2(v) ⊆ N_X2(u) for v in X*, u in X1");
        }
    }
    let p = p_set.len();
    if !p_set.is_subset(x1) || p == 0 || p > quarter {
        return fail("P ⊆ X1 with 1 <= |P| <= ⌈ω/4⌉");
    }
    let min_p = p_set.iter().map(|v| nx2(v).len()).min().unwrap_or(0);
    if x1.difference(p_set).iter().any(|v| nx2(v).len() > min_p) {
        return fail("P holds the vertices of X1 with largest neighborhoods in X2");
    }
    if f_scope.intersects(p_set) {
        return fail("F ∩ P = ∅");
    }
    let allowed = x1.union(x2).union(x3).union(xstar);
    let core = x1.union(x2).union(xstar);
    let removable = f_scope
        .intersection(x2)
        .iter()
        .filter(|&v| {
            g.neighbors(v).intersection(f_scope).is_subset(&allowed)
                && g.is_clique(&g.neighbors(v).intersection(&core))
        })
        .collect();
    Ok(DegeneracyOutcome {
        omega,
        p,
        threshold: five_quarters(omega) - p,
        removable,
    })
}

/// A coloring claimed to use at most `⌈5ω/4⌉` colors, with its evidence.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundCertificate {
    pub coloring: Coloring,
    pub omega_witness: Vec<usize>,
    pub bound: usize,
    pub colors: usize,
    pub class: ClassReport,
    pub trace: Vec<TraceStep>,
    pub bound_established: bool,
}

/// Colors a graph of the class and certifies the color count against `⌈5ω/4⌉`.
///
/// Refuses graphs outside the class (with the witness in the error) and
/// graphs beyond the oracle limits.
pub fn color_in_class(g: &Graph, cfg: &EngineConfig) -> Result<BoundCertificate> {
    let class = is_in_class(g);
    if let Some(reason) = class.violation() {
        return Err(Error::NotInClass(reason));
    }
    color_with_certificate(g, class, cfg)
}

/// Runs the pipeline without the class check; the certificate records the
/// class report as given.
pub fn color_with_certificate(
    g: &Graph,
    class: ClassReport,
    cfg: &EngineConfig,
) -> Result<BoundCertificate> {
    let om = exact_omega(g, &cfg.limits)?;
    let Witness::Clique(omega_witness) = om.witness else {
        unreachable!("omega oracle returns a clique")
    };
    let mut red = reduce(g, cfg)?;
    let coloring = color_reduction(&mut red, g.n(), cfg);
    let bound = five_quarters(om.value);
    let colors = coloring.num_colors();
    let bound_established = coloring.is_proper(g) && coloring.max_color() as usize <= bound;
    Ok(BoundCertificate {
        coloring,
        omega_witness,
        bound,
        colors,
        class,
        trace: red.trace,
        bound_established,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CertificateFailure {
    WrongLength { expected: usize, found: usize },
    Uncolored { vertex: usize },
    MonochromaticEdge { u: usize, v: usize },
    WitnessOutOfRange { vertex: usize },
    WitnessNotClique { u: usize, v: usize },
    BoundArithmetic { claimed: usize, expected: usize },
    TooManyColors { used: usize, bound: usize },
    ClassNotClaimed,
    ClassMismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateCheck {
    pub ok: bool,
    pub failures: Vec<CertificateFailure>,
}

/// Independent check of a certificate: proper complete coloring, a genuine
/// clique witness, the bound arithmetic, the color count, and (when
/// `recheck_class`) the class report.
pub fn verify_certificate(
    g: &Graph,
    c: &BoundCertificate,
    recheck_class: bool,
) -> CertificateCheck {
    use CertificateFailure::*;
    let mut failures = Vec::new();
    let col = c.coloring.as_slice();
    if col.len() != g.n() {
        failures.push(WrongLength {
            expected: g.n(),
            found: col.len(),
        });
    } else {
        if let Some(v) = col.iter().position(|&x| x == 0) {
            failures.push(Uncolored { vertex: v });
        }
        for u in 0..g.n() {
            if let Some(v) = g
                .neighbors(u)
                .iter()
                .find(|&v| v > u && col[v] == col[u] && col[u] != 0)
            {
                failures.push(MonochromaticEdge { u, v });
                break;
            }
        }
    }
    let w = &c.omega_witness;
    if let Some(&v) = w.iter().find(|&&v| v >= g.n()) {
        failures.push(WitnessOutOfRange { vertex: v });
    } else {
        'outer: for (i, &u) in w.iter().enumerate() {
            for &v in &w[i + 1..] {
                if u == v || !g.has_edge(u, v) {
                    failures.push(WitnessNotClique { u, v });
                    break 'outer;
                }
            }
        }
    }
    let expected = five_quarters(w.len());
    if c.bound != expected {
        failures.push(BoundArithmetic {
            claimed: c.bound,
            expected,
        });
    }
    let used = col.iter().copied().max().unwrap_or(0) as usize;
    if used > c.bound {
        failures.push(TooManyColors {
            used,
            bound: c.bound,
        });
    }
    if !c.class.in_class() {
        failures.push(ClassNotClaimed);
    }
    if recheck_class && is_in_class(g) != c.class {
        failures.push(ClassMismatch);
    }
    CertificateCheck {
        ok: failures.is_empty(),
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blowup::{pattern_m, BlowupSpec};
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    fn cfg() -> EngineConfig {
        EngineConfig::default()
    }

    #[test]
    fn c5_certificate() {
        let g = Graph::cycle(5);
        let c = color_in_class(&g, &cfg()).unwrap();
        assert_eq!((c.colors, c.omega_witness.len(), c.bound), (3, 2, 3));
        assert!(verify_certificate(&g, &c, true).ok);
    }

    #[test]
    fn c5_blowup_three() {
        let h = Hyperhole::new(vec![3; 5]);
        let g = h.realize().unwrap().graph;
        let c = color_in_class(&g, &cfg()).unwrap();
        assert_eq!((c.colors, c.bound), (8, 8));
        assert!(verify_certificate(&g, &c, false).ok);
    }

    #[test]
    fn out_of_class_refused() {
        assert!(matches!(
            color_in_class(&Graph::cycle(6), &cfg()),
            Err(Error::NotInClass(_))
        ));
    }

    #[test]
    fn m_with_unit_parts_uses_good_subgraph() {
        let mut sizes = vec![1; 12];
        sizes[11] = 0;
        sizes[10] = 0;
        let g = BlowupSpec::new(pattern_m(), sizes).realize().unwrap().graph;
        let c = color_in_class(&g, &cfg()).unwrap();
        assert!(c.bound_established);
        assert!(c
            .trace
            .iter()
            .any(|s| matches!(s, TraceStep::GoodSubgraph { .. })));
        assert!(verify_certificate(&g, &c, true).ok);
    }

    #[test]
    fn detects_m_blowups() {
        let r = BlowupSpec::new(pattern_m(), vec![2, 1, 3, 1, 2, 1, 2, 1, 0, 1, 2, 0])
            .realize()
            .unwrap();
        let found = detect_special_m_blowup(&r.graph);
        assert!(found.iter().any(|p| p == &r.parts));
    }

    #[test]
    fn figure_cases_reduce_large_blowups() {
        let r = BlowupSpec::new(pattern_m(), vec![3; 12]).realize().unwrap();
        let omega = exact_omega(&r.graph, &OracleLimits::default())
            .unwrap()
            .value;
        let w = catalog_good_subgraph(&r.graph, omega).unwrap();
        assert_eq!((w.p, w.q), (4, 5));
    }

    #[test]
    fn degeneracy_hypothesis_errors() {
        // X1 = {0,1,2}, X2 = {3,4}, X3 = {5}, ω small.
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (0, 3), (1, 3), (4, 5)])
            .unwrap();
        let s = |v: &[usize]| g.set_of(v);
        let lim = OracleLimits::default();
        let ok = degeneracy_eliminate(
            &g,
            &s(&[0, 1, 2]),
            &s(&[3, 4]),
            &s(&[5]),
            &s(&[]),
            &s(&[0]),
            &s(&[1, 2, 3, 4, 5]),
            &lim,
        );
        assert!(ok.is_ok(), "{ok:?}");
        let bad3 = degeneracy_eliminate(
            &g,
            &s(&[0, 1, 2]),
            &s(&[3, 4]),
            &s(&[]),
            &s(&[]),
            &s(&[0]),
            &s(&[3]),
            &lim,
        );
        assert!(matches!(bad3, Err(Error::Hypothesis(m)) if m.contains("X3")));
        let g2 = Graph::from_edges(
            6,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (3, 4),
                (0, 3),
                (1, 3),
                (4, 5),
                (2, 5),
            ],
        )
        .unwrap();
        let bad = degeneracy_eliminate(
            &g2,
            &s(&[0, 1, 2]),
            &s(&[3, 4]),
            &s(&[5]),
            &s(&[]),
            &s(&[0]),
            &s(&[3]),
            &lim,
        );
        assert!(matches!(bad, Err(Error::Hypothesis(m)) if m.contains("anticomplete")));
    }

    #[test]
    fn chordal_base_uses_omega() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let b = color_base(&g, &cfg()).unwrap();
        assert_eq!(b.method, KernelMethod::Chordal);
        assert_eq!(b.coloring.num_colors(), 3);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn reduction_splices_proper_colorings(g in arb_graph(12)) {
            let mut red = reduce(&g, &cfg()).unwrap();
            let col = color_reduction(&mut red, g.n(), &cfg());
            prop_assert!(col.is_proper(&g), "{:?}", red.trace);
        }

        #[test]
        fn in_class_certificates_verify(g in arb_graph(11)) {
            if let Ok(c) = color_in_class(&g, &cfg()) {
                prop_assert!(c.bound_established);
                prop_assert!(verify_certificate(&g, &c, true).ok);
            }
        }
    }
}
