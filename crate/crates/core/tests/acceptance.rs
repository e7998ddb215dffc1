//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//!
//! Pass criterion numbers as arguments to run a subset.

use chibound::blowup::{
    figure_good_subgraph, hyperhole_chromatic, pattern_m, BlowupSpec, GoodSubgraphCase, Hyperhole,
};
use chibound::cliques::clique_number_by_enumeration;
use chibound::engine::{
    color_base, color_in_class, color_reduction, degeneracy_eliminate, reduce, splice,
    verify_certificate, EngineConfig, KernelMethod, Reduction, TraceStep,
};
use chibound::enumerate::all_graphs;
use chibound::harness::{
    exhaustive_instances, generate, run_lemma_suite, Conclusion, FamilyKind, Instance,
    InstanceFamily,
};
use chibound::oracles::{brute_induced, exact_chi, exact_omega, Witness};
use chibound::recognizers::{
    find_hole, find_induced_path, is_chordal, is_in_class, is_peo, Parity,
};
use chibound::structure::verify_good_subgraph;
use chibound::{five_quarters, Coloring, Execution, Graph, OracleLimits, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

const SEED: u64 = 20_240_601;

struct Outcome {
    checked: usize,
    failures: Vec<String>,
    note: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            checked: 0,
            failures: Vec::new(),
            note: String::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn absorb(&mut self, other: Outcome) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

fn par() -> Execution {
    Execution::Parallel
}

fn seq_cfg() -> EngineConfig {
    EngineConfig {
        exec: Execution::Sequential,
        ..EngineConfig::default()
    }
}

fn limits() -> OracleLimits {
    OracleLimits::default()
}

fn merge(parts: Vec<Outcome>) -> Outcome {
    let mut out = Outcome::new();
    for p in parts {
        out.absorb(p);
    }
    out
}

fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("edges in range")
}

fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}

/// Proper, complete, and using colors `1..=k` only.
fn proper_within(g: &Graph, c: &Coloring, k: usize) -> bool {
    c.len() == g.n() && c.is_complete() && c.is_proper(g) && c.max_color() as usize <= k
}

// Criterion 1: the window coloring of a hyperhole hits exact χ.
fn hyperhole_formula() -> Outcome {
    let mut specs = Vec::new();
    for k in [5usize, 7] {
        let mut sizes = vec![1usize; k];
        loop {
            if sizes.iter().sum::<usize>() <= 13 {
                specs.push(sizes.clone());
            }
            let Some(i) = sizes.iter().position(|&s| s < 3) else {
                break;
            };
            sizes[i] += 1;
            sizes[..i].iter_mut().for_each(|s| *s = 1);
        }
    }
    merge(par().map(&specs, |sizes| {
        let mut o = Outcome::new();
        let h = Hyperhole::new(sizes.clone());
        let g = h.realize().expect("valid hyperhole").graph;
        let (value, coloring) = hyperhole_chromatic(&h).expect("valid hyperhole");
        let chi = exact_chi(&g, &limits()).expect("n <= 13").value;
        o.check(value == chi, || {
            format!("{sizes:?}: formula {value}, exact {chi}")
        });
        o.check(proper_within(&g, &coloring, value), || {
            format!("{sizes:?}: coloring not proper at {value}")
        });
        o
    }))
}

// Criterion 2: equal blowups of C5 attain the bound.
fn five_cycle_tightness() -> Outcome {
    let mut o = Outcome::new();
    for (t, expected) in [(1usize, 3usize), (2, 5), (3, 8)] {
        let g = Hyperhole::new(vec![t; 5]).realize().unwrap().graph;
        let chi = exact_chi(&g, &limits()).unwrap().value;
        let omega = exact_omega(&g, &limits()).unwrap().value;
        o.check(chi == expected, || {
            format!("t={t}: χ = {chi}, expected {expected}")
        });
        o.check(omega == 2 * t, || format!("t={t}: ω = {omega}"));
        o.check(five_quarters(omega) == chi, || {
            format!("t={t}: ⌈5ω/4⌉ = {} vs χ = {chi}", five_quarters(omega))
        });
    }
    o
}

/// In-class instances with at most 16 vertices from the blowup families.
fn bound_corpus() -> Vec<Instance> {
    type Plan<'a> = (FamilyKind, &'a [(&'a str, &'a str)], usize);
    let plan: &[Plan] = &[
        (FamilyKind::Hyperhole, &[("k", "5")], 160),
        (FamilyKind::Hyperhole, &[("k", "7"), ("max_size", "2")], 120),
        (
            FamilyKind::SpecialBlowupM,
            &[("max_size", "1"), ("optional_max", "1")],
            120,
        ),
        (
            FamilyKind::SpecialBlowupM,
            &[("max_size", "2"), ("optional_max", "1")],
            120,
        ),
        (FamilyKind::BlowupM1, &[("max_size", "2")], 120),
        (FamilyKind::BlowupM2, &[("max_size", "2")], 120),
        (FamilyKind::NiceBlowupPlusAttachments, &[], 150),
        (
            FamilyKind::NiceBlowupPlusAttachments,
            &[("kinds", "a3"), ("attachments", "2")],
            100,
        ),
        (
            FamilyKind::NiceBlowupPlusAttachments,
            &[("kinds", "a0,a1,a2,a3"), ("attachments", "3")],
            100,
        ),
        (
            FamilyKind::NiceBlowupPlusAttachments,
            &[("kinds", "a1,a0"), ("attachments", "3")],
            100,
        ),
    ];
    let mut out = Vec::new();
    for (i, (kind, params, count)) in plan.iter().enumerate() {
        let fam = InstanceFamily::new(*kind, params, SEED + i as u64).expect("valid family");
        out.extend(
            generate(&fam, *count, par())
                .expect("family generates")
                .into_iter()
                .filter(|x| x.graph.n() <= 16),
        );
    }
    out
}

// Criterion 3: certified colorings within ⌈5ω/4⌉, never below χ.
fn certified_bound(corpus: &[Instance]) -> Outcome {
    let mut o = Outcome::new();
    o.check(corpus.len() >= 1000, || {
        format!("only {} instances", corpus.len())
    });
    o.note = format!("{} instances", corpus.len());
    o.absorb(merge(par().map(corpus, |inst| {
        let mut o = Outcome::new();
        let g = &inst.graph;
        let id = &inst.id;
        o.check(is_in_class(g).in_class(), || {
            format!("{id}: generated outside the class")
        });
        let cert = match color_in_class(g, &seq_cfg()) {
            Ok(c) => c,
            Err(e) => {
                o.check(false, || format!("{id}: {e}"));
                return o;
            }
        };
        let check = verify_certificate(g, &cert, true);
        o.check(check.ok, || {
            format!("{id}: certificate rejected {:?}", check.failures)
        });
        o.check(cert.bound_established, || {
            format!("{id}: bound not established")
        });
        let omega = clique_number_by_enumeration(g, &g.vertices());
        o.check(cert.colors <= five_quarters(omega), || {
            format!("{id}: {} colors, ω = {omega}", cert.colors)
        });
        let chi = exact_chi(g, &limits()).expect("n <= 16").value;
        o.check(chi <= cert.colors, || {
            format!("{id}: χ = {chi} above {} colors", cert.colors)
        });
        o
    })));
    o
}

// Criterion 4: catalog figures are (4,5)-good and drop ω by at least 4.
fn figure_good_subgraphs() -> Outcome {
    merge(par().map(&GoodSubgraphCase::FIGURES, |&case| {
        let mut o = Outcome::new();
        let id = case.id();
        let mut sizes = vec![3; 12];
        for &i in case.hypothesis().1 {
            sizes[i - 1] = 0;
        }
        let (r, w) = figure_good_subgraph(case, &BlowupSpec::new(pattern_m(), sizes))
            .expect("conforming blowup");
        let g = &r.graph;
        o.check(is_in_class(g).in_class(), || {
            format!("{id}: blowup outside the class")
        });
        o.check((w.p, w.q) == (4, 5), || {
            format!("{id}: (p, q) = ({}, {})", w.p, w.q)
        });
        let omega = exact_omega(g, &limits()).unwrap().value;
        let rep = verify_good_subgraph(g, &w, omega).expect("well-formed witness");
        o.check(rep.good, || format!("{id}: not good: {rep:?}"));
        let rest = g.remove(&w.vertex_set(g.n())).graph;
        let after = exact_omega(&rest, &limits()).unwrap().value;
        o.check(after + 4 <= omega, || format!("{id}: ω {omega} -> {after}"));
        o
    }))
}

fn exact_coloring(g: &Graph) -> Coloring {
    match exact_chi(g, &limits()).expect("within limits").witness {
        Witness::Coloring(c) => c,
        _ => unreachable!("χ oracle returns a coloring"),
    }
}

fn chi_of(g: &Graph) -> usize {
    exact_chi(g, &limits()).expect("within limits").value
}

// Criterion 5: every trace step meets its postcondition and splicing stays proper.
fn reduction_soundness() -> Outcome {
    let graphs: Vec<Graph> = (0..500u64)
        .map(|i| {
            let mut r = rng(5_000 + i);
            let n = r.gen_range(1..=14);
            let p = r.gen_range(0.15..0.9);
            random_graph(n, p, &mut r)
        })
        .collect();
    let per_graph = par().map(&graphs, |g| {
        let mut o = Outcome::new();
        let cfg = seq_cfg();
        let mut red = reduce(g, &cfg).expect("within limits");
        let omega_of = |id: usize| {
            let s = &red.snapshots[id].graph;
            clique_number_by_enumeration(s, &s.vertices())
        };
        for step in &red.trace {
            match step {
                TraceStep::UniversalVertex { before, after, .. } => {
                    let (b, a) = (omega_of(*before), omega_of(*after));
                    o.check(a + 1 == b, || format!("universal vertex: ω {b} -> {a}"));
                }
                TraceStep::CliqueCutset { before, components, .. } => {
                    let whole = chi_of(&red.snapshots[*before].graph);
                    let parts = components.iter().map(|&c| chi_of(&red.snapshots[c].graph)).max().unwrap_or(0);
                    o.check(whole == parts, || format!("clique cutset: χ {whole} vs max component χ {parts}"));
                    let spliced = splice_cutset(&red, step, g.n());
                    let s = &red.snapshots[*before];
                    let local = Coloring::from_vec(s.origin.iter().map(|&v| spliced.as_slice()[v]).collect());
                    o.check(proper_within(&s.graph, &local, parts), || "clique cutset: optimal splice not proper at max χ".into());
                }
                TraceStep::GoodSubgraph { before, after, p, .. } => {
                    let (b, a) = (omega_of(*before), omega_of(*after));
                    o.check(a + p <= b, || format!("good subgraph: ω {b} -> {a} with p = {p}"));
                }
                TraceStep::SmallVertex {
                    before,
                    vertex,
                    degree,
                    threshold,
                    ..
                } => {
                    let s = &red.snapshots[*before];
                    let local = s.origin.iter().position(|o| o == vertex).expect("vertex in snapshot");
                    let real = s.graph.degree(local);
                    o.check(real == *degree && real < five_quarters(omega_of(*before)) && *threshold + 1 == five_quarters(omega_of(*before)), || {
                        format!("small vertex: degree {real} (claimed {degree}), threshold {threshold}")
                    });
                }
                TraceStep::DegeneracyVertex { .. } | TraceStep::Kernel { .. } => {}
            }
        }
        let kinds = red.trace.iter().map(step_kind).collect::<Vec<_>>();
        let col = color_reduction(&mut red, g.n(), &cfg);
        o.check(col.is_complete() && col.is_proper(g), || format!("spliced coloring not proper: {:?}", red.trace));
        (o, kinds)
    });
    let mut seen = std::collections::BTreeMap::new();
    let mut o = Outcome::new();
    for (x, kinds) in per_graph {
        o.absorb(x);
        for k in kinds {
            *seen.entry(k).or_insert(0usize) += 1;
        }
    }
    for k in [
        "universal-vertex",
        "clique-cutset",
        "good-subgraph",
        "small-vertex",
    ] {
        o.check(seen.contains_key(k), || {
            format!("no {k} step in the corpus")
        });
    }
    o.note = format!("steps {seen:?}");
    o
}

fn step_kind(s: &TraceStep) -> &'static str {
    match s {
        TraceStep::UniversalVertex { .. } => "universal-vertex",
        TraceStep::CliqueCutset { .. } => "clique-cutset",
        TraceStep::GoodSubgraph { .. } => "good-subgraph",
        TraceStep::SmallVertex { .. } => "small-vertex",
        TraceStep::DegeneracyVertex { .. } => "degeneracy-vertex",
        TraceStep::Kernel { .. } => "kernel",
    }
}

/// Splices optimal component colorings through a single clique-cutset step.
fn splice_cutset(red: &Reduction, step: &TraceStep, n: usize) -> Coloring {
    let TraceStep::CliqueCutset {
        before,
        clique,
        components,
    } = step
    else {
        unreachable!("called on cutset steps")
    };
    let mut snapshots = vec![red.snapshots[*before].clone()];
    snapshots.extend(components.iter().map(|&c| red.snapshots[c].clone()));
    let ids: Vec<usize> = (1..snapshots.len()).collect();
    let kernels: Vec<(usize, Coloring)> = ids
        .iter()
        .map(|&i| (i, exact_coloring(&snapshots[i].graph)))
        .collect();
    let mini = Reduction {
        snapshots,
        trace: vec![TraceStep::CliqueCutset {
            before: 0,
            clique: clique.clone(),
            components: ids.clone(),
        }],
        kernels: ids,
    };
    splice(&mini, &kernels, n)
}

/// `g` itself is an induced path on all its vertices.
fn is_spanning_path(g: &Graph) -> bool {
    g.is_connected() && g.m() + 1 == g.n() && (0..g.n()).all(|v| g.degree(v) <= 2)
}

fn is_spanning_cycle(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && (0..g.n()).all(|v| g.degree(v) == 2)
}

fn recognizers_agree(g: &Graph) -> Outcome {
    let mut o = Outcome::new();
    let n = g.n();
    let brute = |pat: Graph| {
        brute_induced(g, &pat)
            .expect("pattern within limit")
            .is_some()
    };
    let mut hole_lengths = Vec::new();
    for k in 1..=n {
        let expected = if k <= 8 {
            brute(Graph::path(k))
        } else {
            is_spanning_path(g)
        };
        let found = find_induced_path(g, k);
        o.check(found.is_some() == expected, || {
            format!(
                "P{k} on {:?}: recognizer {}, brute {expected}",
                g.edges(),
                found.is_some()
            )
        });
        if k >= 4 {
            let expected = if k <= 8 {
                brute(Graph::cycle(k))
            } else {
                is_spanning_cycle(g)
            };
            if expected {
                hole_lengths.push(k);
            }
            let found = find_hole(g, Parity::Any, Some(k));
            o.check(found.is_some() == expected, || {
                format!(
                    "C{k} on {:?}: recognizer {}, brute {expected}",
                    g.edges(),
                    found.is_some()
                )
            });
        }
    }
    for (parity, rem) in [(Parity::Even, 0), (Parity::Odd, 1)] {
        let expected = hole_lengths.iter().any(|l| l % 2 == rem);
        let found = find_hole(g, parity, None).is_some();
        o.check(found == expected, || {
            format!(
                "{parity:?} hole on {:?}: recognizer {found}, brute {expected}",
                g.edges()
            )
        });
    }
    o
}

// Criterion 6: recognizers match brute-force induced search.
fn recognizer_equivalence() -> Outcome {
    let random: Vec<Graph> = (0..5000u64)
        .map(|i| {
            let mut r = rng(6_000 + i);
            let n = r.gen_range(1..=9);
            let p = r.gen_range(0.1..0.9);
            random_graph(n, p, &mut r)
        })
        .collect();
    let mut o = merge(par().map(&random, recognizers_agree));
    for n in 1..=7 {
        let all = all_graphs(n, par());
        o.absorb(merge(par().map(&all, recognizers_agree)));
    }
    o
}

// Criterion 7: chordal graphs are colored with exactly ω colors.
fn chordal_exactness() -> Outcome {
    let mut corpus = Vec::new();
    for (i, (n, kmax)) in [(10, 4), (20, 6), (30, 8), (40, 10)]
        .into_iter()
        .enumerate()
    {
        let (n, kmax) = (n.to_string(), kmax.to_string());
        let params = [
            ("n", n.as_str()),
            ("max_clique", kmax.as_str()),
            ("in_class", "false"),
        ];
        let fam =
            InstanceFamily::new(FamilyKind::ChordalRandom, &params, SEED + 70 + i as u64).unwrap();
        corpus.extend(generate(&fam, 250, par()).unwrap());
    }
    merge(par().map(&corpus, |inst| {
        let mut o = Outcome::new();
        let g = &inst.graph;
        let id = &inst.id;
        let peo = is_chordal(g);
        o.check(peo.as_ref().is_some_and(|p| is_peo(g, p)), || {
            format!("{id}: not chordal")
        });
        let omega = exact_omega(g, &limits()).expect("n <= 40").value;
        match color_base(g, &seq_cfg()) {
            Some(b) => {
                o.check(b.method == KernelMethod::Chordal, || {
                    format!("{id}: method {:?}", b.method)
                });
                o.check(
                    proper_within(g, &b.coloring, omega) && b.coloring.num_colors() == omega,
                    || format!("{id}: {} colors, ω = {omega}", b.coloring.num_colors()),
                );
            }
            None => o.check(false, || format!("{id}: no base coloring")),
        }
        o
    }))
}

// Criterion 8: no lemma of the registry is violated.
fn lemma_falsification(corpus: &[Instance]) -> Outcome {
    let mut instances = corpus.to_vec();
    for n in 1..=8 {
        instances.extend(exhaustive_instances(n, par()).expect("n <= 9"));
    }
    let reports = run_lemma_suite(&instances, &[], par()).expect("registry runs");
    let mut o = Outcome::new();
    for r in &reports {
        o.check(!matches!(r.conclusion, Conclusion::Violated { .. }), || {
            format!("{} on {}: {:?}", r.lemma, r.instance, r.conclusion)
        });
    }
    let held = reports
        .iter()
        .filter(|r| matches!(r.conclusion, Conclusion::Held))
        .count();
    o.check(held > 0, || "no lemma conclusion was ever checked".into());
    let sensitive = reports
        .iter()
        .filter(|r| matches!(r.conclusion, Conclusion::ChoiceSensitive { .. }))
        .count();
    o.note = format!(
        "{} instances, {} reports, {held} held, {sensitive} choice-sensitive",
        instances.len(),
        reports.len()
    );
    o
}

/// Cliques `X1, X2, X3, X*` with nested `X2`-neighborhoods, a few extra
/// vertices, and a separate clique pinning `ω` near `w`.
struct DegeneracyInstance {
    g: Graph,
    x: [VertexSet; 4],
    p_set: VertexSet,
    f_scope: VertexSet,
}

fn degeneracy_instance(r: &mut ChaCha8Rng) -> DegeneracyInstance {
    let w = r.gen_range(4..=12usize);
    let q = w.div_ceil(4);
    let sizes = [
        q + r.gen_range(1..=2),
        r.gen_range(1..=3 * w / 4),
        q,
        r.gen_range(0..=2),
    ];
    let extra = r.gen_range(0..=4);
    let mut starts = [0; 4];
    let mut next = 0;
    for (i, s) in sizes.iter().enumerate() {
        starts[i] = next;
        next += s;
    }
    let core_n = next;
    let n = core_n + extra + w;
    let mut edges = Vec::new();
    let range = |i: usize| starts[i]..starts[i] + sizes[i];
    for i in 0..4 {
        for u in range(i) {
            for v in u + 1..starts[i] + sizes[i] {
                edges.push((u, v));
            }
        }
    }
    let x2: Vec<usize> = range(1).collect();
    let reach: Vec<usize> = range(0).map(|_| r.gen_range(0..=x2.len())).collect();
    let min_reach = *reach.iter().min().expect("X1 is nonempty");
    for (u, &k) in range(0).zip(&reach) {
        edges.extend(x2[..k].iter().map(|&v| (u, v)));
    }
    for u in range(3) {
        let k = r.gen_range(0..=min_reach);
        edges.extend(x2[..k].iter().map(|&v| (u, v)));
        edges.extend(range(0).filter(|_| r.gen_bool(0.5)).map(|v| (u, v)));
    }
    for u in range(1) {
        edges.extend(range(2).filter(|_| r.gen_bool(0.5)).map(|v| (u, v)));
    }
    for e in core_n..core_n + extra {
        edges.extend((0..e).filter(|_| r.gen_bool(0.3)).map(|v| (v, e)));
    }
    for u in core_n + extra..n {
        edges.extend((u + 1..n).map(|v| (u, v)));
    }
    let g = Graph::from_edges(n, &edges).expect("edges in range");
    let set = |i: usize| VertexSet::from_iter_in(n, range(i));
    let mut by_reach: Vec<usize> = range(0).collect();
    by_reach.sort_by_key(|&u| std::cmp::Reverse(reach[u - starts[0]]));
    let p = r.gen_range(1..=q);
    let p_set = VertexSet::from_iter_in(n, by_reach[..p].iter().copied());
    let f_scope = VertexSet::from_iter_in(
        n,
        (0..n).filter(|&v| !p_set.contains(v) && r.gen_bool(0.85)),
    );
    DegeneracyInstance {
        g,
        x: [set(0), set(1), set(2), set(3)],
        p_set,
        f_scope,
    }
}

// Criterion 9: vertices the degeneracy check releases have small scoped degree.
fn degeneracy_degrees() -> Outcome {
    let mut o = Outcome::new();
    let mut r = rng(9_000);
    let (mut accepted, mut drawn, mut released) = (0, 0, 0);
    while accepted < 100 && drawn < 20_000 {
        drawn += 1;
        let d = degeneracy_instance(&mut r);
        let [x1, x2, x3, xs] = &d.x;
        let Ok(out) = degeneracy_eliminate(&d.g, x1, x2, x3, xs, &d.p_set, &d.f_scope, &limits())
        else {
            continue;
        };
        accepted += 1;
        let g = &d.g;
        let omega = clique_number_by_enumeration(g, &g.vertices());
        let p = d.p_set.len();
        o.check(out.omega == omega && out.p == p, || {
            format!("ω {} vs {omega}, p {} vs {p}", out.omega, out.p)
        });
        let allowed = x1.union(x2).union(x3).union(xs);
        let core = x1.union(x2).union(xs);
        let expected: Vec<usize> = d
            .f_scope
            .intersection(x2)
            .iter()
            .filter(|&v| {
                g.neighbors(v).intersection(&d.f_scope).is_subset(&allowed)
                    && g.is_clique(&g.neighbors(v).intersection(&core))
            })
            .collect();
        o.check(out.removable == expected, || {
            format!("removable {:?}, expected {expected:?}", out.removable)
        });
        for &v in &out.removable {
            released += 1;
            let scoped = (0..g.n())
                .filter(|&u| d.f_scope.contains(u) && g.has_edge(u, v))
                .count();
            o.check(scoped + p < five_quarters(omega), || {
                format!("vertex {v}: d_F = {scoped}, ω = {omega}, p = {p}")
            });
        }
    }
    o.note = format!("{accepted} instances from {drawn} draws, {released} vertices released");
    o.check(accepted == 100, || {
        format!("only {accepted} instances met the hypotheses in {drawn} draws")
    });
    o.check(released > 0, || "no vertex was ever released".into());
    o
}

fn main() {
    let only: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let wanted = |i: usize| only.is_empty() || only.contains(&i);
    let corpus = if wanted(3) || wanted(8) {
        bound_corpus()
    } else {
        Vec::new()
    };
    type Criterion<'a> = (usize, &'static str, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: [Criterion; 9] = [
        (
            1,
            "hyperhole formula equals exact χ",
            Box::new(hyperhole_formula),
        ),
        (
            2,
            "equal C5 blowups attain ⌈5ω/4⌉",
            Box::new(five_cycle_tightness),
        ),
        (
            3,
            "certified colorings within ⌈5ω/4⌉",
            Box::new(|| certified_bound(&corpus)),
        ),
        (
            4,
            "figure good subgraphs are (4,5)-good",
            Box::new(figure_good_subgraphs),
        ),
        (
            5,
            "reduction steps meet postconditions",
            Box::new(reduction_soundness),
        ),
        (
            6,
            "recognizers agree with brute force",
            Box::new(recognizer_equivalence),
        ),
        (
            7,
            "chordal graphs use ω colors",
            Box::new(chordal_exactness),
        ),
        (
            8,
            "no lemma violated",
            Box::new(|| lemma_falsification(&corpus)),
        ),
        (
            9,
            "degeneracy releases low-degree vertices",
            Box::new(degeneracy_degrees),
        ),
    ];
    let mut failed = 0;
    for (i, name, run) in &criteria {
        if !wanted(*i) {
            continue;
        }
        let t = Instant::now();
        let o = run();
        let verdict = if o.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "criterion {i} [{name}]: {verdict} ({} checks, {} failures, {:.1}s)",
            o.checked,
            o.failures.len(),
            t.elapsed().as_secs_f64()
        );
        if !o.note.is_empty() {
            println!("    {}", o.note);
        }
        for f in o.failures.iter().take(5) {
            println!("    {f}");
        }
        failed += usize::from(!o.failures.is_empty());
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
