use crate::bitset::VertexSet;
use crate::blowup::{pattern_m, pattern_m1, pattern_m2, BlowupSpec, Hyperhole, M_PARTS};
use crate::enumerate::all_graphs;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::Graph;
use crate::recognizers::{is_chordal, is_in_class};
use crate::structure::{all_maximal_nice_blowups, classify_attachments, verify_nice_blowup};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Hyperhole,
    EqualBlowupC5,
    #[serde(rename = "special_blowup_M")]
    SpecialBlowupM,
    #[serde(rename = "blowup_M1")]
    BlowupM1,
    #[serde(rename = "blowup_M2")]
    BlowupM2,
    NiceBlowupPlusAttachments,
    ChordalRandom,
    RandomFiltered,
    Exhaustive,
}

impl FamilyKind {
    pub const GENERATED: [FamilyKind; 8] = [
        FamilyKind::Hyperhole,
        FamilyKind::EqualBlowupC5,
        FamilyKind::SpecialBlowupM,
        FamilyKind::BlowupM1,
        FamilyKind::BlowupM2,
        FamilyKind::NiceBlowupPlusAttachments,
        FamilyKind::ChordalRandom,
        FamilyKind::RandomFiltered,
    ];

    pub fn id(self) -> &'static str {
        match self {
            FamilyKind::Hyperhole => "hyperhole",
            FamilyKind::EqualBlowupC5 => "equal_blowup_c5",
            FamilyKind::SpecialBlowupM => "special_blowup_M",
            FamilyKind::BlowupM1 => "blowup_M1",
            FamilyKind::BlowupM2 => "blowup_M2",
            FamilyKind::NiceBlowupPlusAttachments => "nice_blowup_plus_attachments",
            FamilyKind::ChordalRandom => "chordal_random",
            FamilyKind::RandomFiltered => "random_filtered",
            FamilyKind::Exhaustive => "exhaustive",
        }
    }

    /// Accepted parameters with their defaults.
    fn defaults(self) -> &'static [(&'static str, &'static str)] {
        match self {
            FamilyKind::Hyperhole => &[("k", "5"), ("min_size", "1"), ("max_size", "3")],
            FamilyKind::EqualBlowupC5 => &[("t", "2")],
            FamilyKind::SpecialBlowupM => &[("max_size", "2"), ("optional_max", "1")],
            FamilyKind::BlowupM1 | FamilyKind::BlowupM2 => &[("max_size", "2")],
            FamilyKind::NiceBlowupPlusAttachments => &[
                ("max_size", "3"),
                ("attachments", "2"),
                ("kinds", "a1,a2,a3,a5"),
                ("base", "nested"),
                ("require_kind", "true"),
                ("tries", "200"),
            ],
            FamilyKind::ChordalRandom => &[
                ("n", "12"),
                ("max_clique", "5"),
                ("in_class", "true"),
                ("tries", "500"),
            ],
            FamilyKind::RandomFiltered => &[("n", "8"), ("p", "sweep"), ("tries", "10000")],
            FamilyKind::Exhaustive => &[("n", "6")],
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::GENERATED
            .into_iter()
            .chain([FamilyKind::Exhaustive])
            .find(|k| k.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family {s:?}")))
    }
}

/// Validated `key=value` parameters; unknown keys are rejected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params(BTreeMap<String, String>);

impl Params {
    /// Parses `key=value` items, each possibly a comma-separated list of
    /// items. A comma-separated token without `=` continues the previous
    /// value, so `kinds=a1,a2` keeps its list.
    pub fn parse(kind: FamilyKind, pairs: &[String]) -> Result<Params> {
        let mut map: BTreeMap<String, String> = kind
            .defaults()
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        for item in pairs {
            let mut last: Option<String> = None;
            for p in item.split(',').map(str::trim).filter(|p| !p.is_empty()) {
                let Some((k, v)) = p.split_once('=') else {
                    let k = last.as_ref().ok_or_else(|| {
                        Error::InvalidArgument(format!("parameter {p:?} is not key=value"))
                    })?;
                    let cur = map.get_mut(k).expect("key checked when first seen");
                    cur.push(',');
                    cur.push_str(p);
                    continue;
                };
                let k = k.trim();
                if !map.contains_key(k) {
                    let known: Vec<&str> = kind.defaults().iter().map(|(k, _)| *k).collect();
                    return Err(Error::InvalidArgument(format!(
                        "unknown parameter {k:?} for family {kind} (known: {})",
                        known.join(", ")
                    )));
                }
                map.insert(k.to_string(), v.trim().to_string());
                last = Some(k.to_string());
            }
        }
        Ok(Params(map))
    }

    pub fn from_pairs(kind: FamilyKind, pairs: &[(&str, &str)]) -> Result<Params> {
        let mut p = Params::parse(kind, &[])?;
        for (k, v) in pairs {
            if !p.0.contains_key(*k) {
                return Err(Error::InvalidArgument(format!(
                    "unknown parameter {k:?} for family {kind}"
                )));
            }
            p.0.insert(k.to_string(), v.to_string());
        }
        Ok(p)
    }

    fn raw(&self, key: &str) -> &str {
        self.0
            .get(key)
            .map(String::as_str)
            .expect("key declared in defaults")
    }

    pub fn usize(&self, key: &str) -> Result<usize> {
        let v = self.raw(key);
        v.parse().map_err(|_| {
            Error::InvalidArgument(format!(
                "parameter {key}={v:?} is not a non-negative integer"
            ))
        })
    }

    fn bool(&self, key: &str) -> Result<bool> {
        let v = self.raw(key);
        v.parse()
            .map_err(|_| Error::InvalidArgument(format!("parameter {key}={v:?} is not true/false")))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &String)> {
        self.0.iter()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFamily {
    pub kind: FamilyKind,
    pub params: Params,
    pub seed: u64,
}

impl InstanceFamily {
    pub fn new(kind: FamilyKind, params: &[(&str, &str)], seed: u64) -> Result<Self> {
        Ok(InstanceFamily {
            kind,
            params: Params::from_pairs(kind, params)?,
            seed,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub id: String,
    pub family: FamilyKind,
    pub graph: Graph,
    /// Blowup construction behind the instance, when there is one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spec: Option<BlowupSpec>,
    /// Candidates drawn before acceptance (1 for constructive families).
    pub draws: u64,
}

fn rng_for(seed: u64, index: usize) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(index as u64);
    r
}

/// `count` instances of a family, deterministic in `(kind, params, seed)`
/// and independent of the execution mode.
pub fn generate(family: &InstanceFamily, count: usize, exec: Execution) -> Result<Vec<Instance>> {
    validate(family)?;
    let made = exec.map_range(count, |i| make(family, i));
    let out: Vec<Instance> = made.into_iter().collect::<Result<_>>()?;
    if family.kind == FamilyKind::RandomFiltered && !out.is_empty() {
        let draws: u64 = out.iter().map(|i| i.draws).sum();
        log::info!(
            "random_filtered: accepted {} of {draws} draws ({:.2}%)",
            out.len(),
            100.0 * out.len() as f64 / draws as f64
        );
    }
    Ok(out)
}

fn validate(f: &InstanceFamily) -> Result<()> {
    let p = &f.params;
    let bad = |m: String| Err(Error::Construction(m));
    match f.kind {
        FamilyKind::Hyperhole => {
            let k = p.usize("k")?;
            if k != 5 && k != 7 {
                return bad(format!(
                    "hyperhole k={k}: only k in {{5, 7}} avoids even holes and P7"
                ));
            }
            let (lo, hi) = (p.usize("min_size")?, p.usize("max_size")?);
            if lo == 0 || lo > hi {
                return bad(format!(
                    "hyperhole parts need 1 <= min_size <= max_size, got {lo}..{hi}"
                ));
            }
        }
        FamilyKind::EqualBlowupC5 => {
            if p.usize("t")? == 0 {
                return bad("equal_blowup_c5 needs t >= 1".into());
            }
        }
        FamilyKind::SpecialBlowupM | FamilyKind::BlowupM1 | FamilyKind::BlowupM2 => {
            if p.usize("max_size")? == 0 {
                return bad(format!(
                    "{}: parts L1..L7 must be nonempty, so max_size >= 1",
                    f.kind
                ));
            }
        }
        FamilyKind::NiceBlowupPlusAttachments => {
            if p.usize("max_size")? == 0 {
                return bad("nice blowup parts must be nonempty, so max_size >= 1".into());
            }
            kinds(p)?;
            if !matches!(p.raw("base"), "nested" | "hyperhole") {
                return bad(format!(
                    "base {:?} is not nested or hyperhole",
                    p.raw("base")
                ));
            }
        }
        FamilyKind::ChordalRandom => {
            if p.usize("max_clique")? == 0 {
                return bad("chordal_random needs max_clique >= 1".into());
            }
            p.bool("in_class")?;
        }
        FamilyKind::RandomFiltered => {
            if p.raw("p") != "sweep" {
                let x: f64 = p
                    .raw("p")
                    .parse()
                    .map_err(|_| Error::InvalidArgument("p must be a number or 'sweep'".into()))?;
                if !(0.0..=1.0).contains(&x) {
                    return bad(format!("edge probability {x} outside [0, 1]"));
                }
            }
        }
        FamilyKind::Exhaustive => {
            return Err(Error::InvalidArgument(
                "use exhaustive_instances for exhaustive mode".into(),
            ))
        }
    }
    Ok(())
}

fn kinds(p: &Params) -> Result<Vec<usize>> {
    p.raw("kinds")
        .split([',', '+', ' '])
        .filter(|s| !s.is_empty())
        .map(|s| match s {
            "a0" => Ok(0),
            "a1" => Ok(1),
            "a2" => Ok(2),
            "a3" => Ok(3),
            "a5" => Ok(5),
            o => Err(Error::InvalidArgument(format!(
                "attachment kind {o:?} not in a0,a1,a2,a3,a5"
            ))),
        })
        .collect()
}

fn make(f: &InstanceFamily, index: usize) -> Result<Instance> {
    let mut rng = rng_for(f.seed, index);
    let p = &f.params;
    let id = format!("{}-s{}-{index:05}", f.kind, f.seed);
    let blowup = |spec: BlowupSpec| -> Result<Instance> {
        let graph = spec.realize()?.graph;
        Ok(Instance {
            id: id.clone(),
            family: f.kind,
            graph,
            spec: Some(spec),
            draws: 1,
        })
    };
    let inst = match f.kind {
        FamilyKind::Hyperhole => {
            let (k, lo, hi) = (p.usize("k")?, p.usize("min_size")?, p.usize("max_size")?);
            let sizes = (0..k).map(|_| rng.gen_range(lo..=hi)).collect();
            blowup(Hyperhole::new(sizes).spec()?)?
        }
        FamilyKind::EqualBlowupC5 => blowup(Hyperhole::new(vec![p.usize("t")?; 5]).spec()?)?,
        FamilyKind::SpecialBlowupM => {
            let (hi, opt) = (p.usize("max_size")?, p.usize("optional_max")?);
            let sizes = (0..M_PARTS)
                .map(|j| {
                    if j < 7 {
                        rng.gen_range(1..=hi)
                    } else {
                        rng.gen_range(0..=opt)
                    }
                })
                .collect();
            blowup(BlowupSpec::new(pattern_m(), sizes))?
        }
        FamilyKind::BlowupM1 | FamilyKind::BlowupM2 => {
            let pat = if f.kind == FamilyKind::BlowupM1 {
                pattern_m1()
            } else {
                pattern_m2()
            };
            let hi = p.usize("max_size")?;
            let sizes = (0..pat.n()).map(|_| rng.gen_range(1..=hi)).collect();
            blowup(BlowupSpec::new(pat, sizes))?
        }
        FamilyKind::NiceBlowupPlusAttachments => attachments(f, &mut rng, id)?,
        FamilyKind::ChordalRandom => {
            let (n, kmax, in_class, tries) = (
                p.usize("n")?,
                p.usize("max_clique")?,
                p.bool("in_class")?,
                p.usize("tries")?,
            );
            let mut draws = 0;
            loop {
                draws += 1;
                let g = random_chordal(n, kmax, &mut rng);
                debug_assert!(is_chordal(&g).is_some());
                if !in_class || is_in_class(&g).in_class() {
                    break Instance {
                        id,
                        family: f.kind,
                        graph: g,
                        spec: None,
                        draws,
                    };
                }
                if draws >= tries as u64 {
                    return Err(Error::Construction(format!(
                        "chordal_random: no P7-free chordal graph on {n} vertices in {tries} draws"
                    )));
                }
            }
        }
        FamilyKind::RandomFiltered => {
            const SWEEP: [f64; 5] = [0.25, 0.4, 0.55, 0.7, 0.85];
            let n = p.usize("n")?;
            let prob = match p.raw("p") {
                "sweep" => SWEEP[index % SWEEP.len()],
                x => x.parse().expect("validated"),
            };
            let tries = p.usize("tries")? as u64;
            let mut draws = 0;
            loop {
                draws += 1;
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.gen_bool(prob) {
                            edges.push((u, v));
                        }
                    }
                }
                let g = Graph::from_edges(n, &edges)?;
                if is_in_class(&g).in_class() {
                    break Instance {
                        id,
                        family: f.kind,
                        graph: g,
                        spec: None,
                        draws,
                    };
                }
                if draws >= tries {
                    return Err(Error::Construction(format!(
                        "random_filtered: no in-class graph (n={n}, p={prob}) in {tries} draws"
                    )));
                }
            }
        }
        FamilyKind::Exhaustive => unreachable!("rejected by validate"),
    };
    if f.kind != FamilyKind::ChordalRandom || p.bool("in_class")? {
        let report = is_in_class(&inst.graph);
        if let Some(reason) = report.violation() {
            return Err(Error::Construction(format!(
                "{}: generated graph left the class: {reason}",
                inst.id
            )));
        }
    }
    Ok(inst)
}

/// Grows a chordal graph by adding simplicial vertices: each new vertex
/// attaches to a random clique inside the closed neighborhood of an
/// existing vertex.
fn random_chordal(n: usize, kmax: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in 1..n {
        let u = rng.gen_range(0..v);
        let mut clique = vec![u];
        let mut cand = adj[u].clone();
        cand.shuffle(rng);
        let want = rng.gen_range(1..=kmax.max(1));
        for w in cand {
            if clique.len() >= want {
                break;
            }
            if clique.iter().all(|c| adj[w].contains(c)) {
                clique.push(w);
            }
        }
        for &c in &clique {
            adj[v].push(c);
            adj[c].push(v);
        }
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| adj[u].iter().filter(move |&&w| w > u).map(move |&w| (u, w)))
        .collect();
    Graph::from_edges(n, &edges).expect("constructed edges are valid")
}

/// A random C5 blowup plus attachment vertices. Each attachment gets a
/// support of the requested kind and, inside each supported part, a prefix
/// of the part in a fixed order (or the whole part), plus random edges to
/// earlier attachments; a candidate leaving the class is redrawn.
fn attachments(f: &InstanceFamily, rng: &mut ChaCha8Rng, id: String) -> Result<Instance> {
    let p = &f.params;
    let (hi, count, tries) = (
        p.usize("max_size")?,
        p.usize("attachments")?,
        p.usize("tries")?,
    );
    let kinds = kinds(p)?;
    let require = p.bool("require_kind")?;
    let mut draws = 0u64;
    // Some bases admit no attachment of the requested kind; redraw the base then.
    for _ in 0..BASE_ATTEMPTS {
        let sizes: Vec<usize> = (0..5).map(|_| rng.gen_range(1..=hi)).collect();
        draws += 1;
        let (base_graph, parts, spec) = if p.raw("base") == "hyperhole" {
            let spec = Hyperhole::new(sizes).spec()?;
            let base = spec.realize()?;
            (base.graph, base.parts, Some(spec))
        } else {
            let (g, parts, d) = nested_blowup(&sizes, tries, rng)?;
            draws += d;
            (g, parts, None)
        };
        let mut g = base_graph.clone();
        for _ in 0..count {
            // The kind is fixed per slot so rarely realizable kinds keep their share.
            let kind = *kinds
                .choose(rng)
                .ok_or_else(|| Error::InvalidArgument("empty kinds".into()))?;
            let mut added = false;
            for _ in 0..tries {
                draws += 1;
                let nbrs = attachment_neighbors(&g, &parts, base_graph.n(), kind, rng);
                let candidate = g.with_vertex(&nbrs);
                if is_in_class(&candidate).in_class()
                    && (!require || lands_in_kind(&candidate, kind))
                {
                    g = candidate;
                    added = true;
                    break;
                }
            }
            if !added {
                break;
            }
        }
        if g.n() == base_graph.n() + count {
            return Ok(Instance {
                id,
                family: f.kind,
                graph: g,
                spec,
                draws,
            });
        }
    }
    Err(Error::Construction(format!(
        "nice_blowup_plus_attachments: no in-class attachment of the requested kinds in {BASE_ATTEMPTS} bases x {tries} draws"
    )))
}

const BASE_ATTEMPTS: usize = 20;

/// Random neighborhood with support of size `kind` on the base parts, plus
/// random edges to earlier attachments.
fn attachment_neighbors(
    g: &Graph,
    parts: &[VertexSet],
    base_n: usize,
    kind: usize,
    rng: &mut ChaCha8Rng,
) -> VertexSet {
    let i = rng.gen_range(0..5usize);
    let supp: Vec<usize> = match kind {
        0 => vec![],
        1 => vec![i],
        2 => vec![i, (i + 1) % 5],
        3 => vec![(i + 4) % 5, i, (i + 1) % 5],
        _ => (0..5).collect(),
    };
    let mut nbrs = g.empty_set();
    for &j in &supp {
        let part: Vec<usize> = parts[j].iter().collect();
        let take = if kind == 5 {
            part.len()
        } else {
            rng.gen_range(1..=part.len())
        };
        for &v in part.choose_multiple(rng, take) {
            nbrs.insert(v);
        }
    }
    for v in base_n..g.n() {
        if rng.gen_bool(0.5) {
            nbrs.insert(v);
        }
    }
    nbrs
}

/// The newest vertex has support of size `kind` (A0 vertices must not be isolated) for some maximal nice blowup.
fn lands_in_kind(g: &Graph, kind: usize) -> bool {
    let v = g.n() - 1;
    all_maximal_nice_blowups(g).iter().any(|h| {
        let a = classify_attachments(g, h);
        match kind {
            0 => !g.neighbors(v).is_empty() && a.a0.contains(v),
            1 => a.a1.iter().any(|s| s.contains(v)),
            2 => a.a2.iter().any(|s| s.contains(v)),
            3 => a.a3.iter().any(|s| s.contains(v)),
            _ => a.a5.contains(v),
        }
    })
}

/// A nice blowup of C5 whose consecutive parts are joined by random
/// staircase (nested) adjacency; the first vertex of every part is a hub.
fn nested_blowup(
    sizes: &[usize],
    tries: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(Graph, Vec<VertexSet>, u64)> {
    let n: usize = sizes.iter().sum();
    let offs: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let parts: Vec<VertexSet> = (0..5)
        .map(|i| VertexSet::from_iter_in(n, offs[i]..offs[i] + sizes[i]))
        .collect();
    for draw in 1..=tries as u64 {
        let mut edges = Vec::new();
        for i in 0..5 {
            for a in 0..sizes[i] {
                for b in a + 1..sizes[i] {
                    edges.push((offs[i] + a, offs[i] + b));
                }
            }
            let j = (i + 1) % 5;
            let mut reach = sizes[j];
            for a in 0..sizes[i] {
                if a > 0 {
                    reach = rng.gen_range(1..=reach);
                }
                for c in 0..reach {
                    edges.push((offs[i] + a, offs[j] + c));
                }
            }
        }
        let g = Graph::from_edges(n, &edges)?;
        if verify_nice_blowup(&g, &parts).is_ok() && is_in_class(&g).in_class() {
            return Ok((g, parts, draw));
        }
    }
    Err(Error::Construction(format!(
        "nice_blowup_plus_attachments: no nested base blowup in {tries} draws"
    )))
}

/// Every graph on `n` vertices (up to isomorphism) that lies in the class.
pub fn exhaustive_instances(n: usize, exec: Execution) -> Result<Vec<Instance>> {
    if n > 9 {
        return Err(Error::InvalidArgument(format!(
            "exhaustive enumeration supports n <= 9, got {n}"
        )));
    }
    let graphs = all_graphs(n, exec);
    let keep = exec.map(&graphs, |g| is_in_class(g).in_class());
    Ok(graphs
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .enumerate()
        .map(|(i, (graph, _))| Instance {
            id: format!("exhaustive-n{n}-{i:05}"),
            family: FamilyKind::Exhaustive,
            graph,
            spec: None,
            draws: 1,
        })
        .collect())
}
