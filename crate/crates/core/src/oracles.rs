//! Exact, exponential-time reference computations.
//!
//! These share no search code with the recognizers or the coloring engine
//! so they can serve as independent ground truth in tests.

use crate::bitset::VertexSet;
use crate::coloring::{dsatur, Coloring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Vertex-count ceilings above which the oracles refuse to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleLimits {
    pub omega: usize,
    pub chi: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { omega: 40, chi: 18 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Clique(Vec<usize>),
    StableSet(Vec<usize>),
    Coloring(Coloring),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactResult {
    pub value: usize,
    pub witness: Witness,
    pub method: String,
}

fn check_limit(oracle: &'static str, n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::OracleLimit { oracle, n, limit })
    } else {
        Ok(())
    }
}

/// Maximum clique by branch and bound with a greedy-coloring bound.
pub fn exact_omega(g: &Graph, limits: &OracleLimits) -> Result<ExactResult> {
    check_limit("omega", g.n(), limits.omega)?;
    let c = max_clique(g, &g.vertices());
    Ok(ExactResult {
        value: c.len(),
        witness: Witness::Clique(c),
        method: "branch-and-bound max clique (coloring bound)".into(),
    })
}

/// Maximum stable set: a maximum clique of the complement.
pub fn exact_alpha(g: &Graph, limits: &OracleLimits) -> Result<ExactResult> {
    check_limit("alpha", g.n(), limits.omega)?;
    let c = max_clique(&g.complement(), &g.vertices());
    Ok(ExactResult {
        value: c.len(),
        witness: Witness::StableSet(c),
        method: "branch-and-bound max clique of the complement".into(),
    })
}

/// Clique number without the size guard; internal callers bound `n` themselves.
pub(crate) fn omega_unchecked(g: &Graph, within: &VertexSet) -> Vec<usize> {
    max_clique(g, within)
}

fn max_clique(g: &Graph, within: &VertexSet) -> Vec<usize> {
    let mut best = Vec::new();
    let mut cur = Vec::new();
    expand(g, &mut cur, within.clone(), &mut best);
    best.sort_unstable();
    best
}

fn expand(g: &Graph, cur: &mut Vec<usize>, p: VertexSet, best: &mut Vec<usize>) {
    // Greedy sequential coloring of P; vertices come out in nondecreasing color.
    let mut order = Vec::with_capacity(p.len());
    let mut bounds = Vec::with_capacity(p.len());
    let mut uncolored = p.clone();
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut avail = uncolored.clone();
        while let Some(v) = avail.pop_first() {
            avail.difference_with(g.neighbors(v));
            uncolored.remove(v);
            order.push(v);
            bounds.push(color);
        }
    }
    let mut p = p;
    for i in (0..order.len()).rev() {
        if cur.len() + bounds[i] <= best.len() {
            return;
        }
        let v = order[i];
        cur.push(v);
        let np = p.intersection(g.neighbors(v));
        if np.is_empty() {
            if cur.len() > best.len() {
                *best = cur.clone();
            }
        } else {
            expand(g, cur, np, best);
        }
        cur.pop();
        p.remove(v);
    }
}

/// Chromatic number by DSATUR branch and bound seeded with a maximum clique.
pub fn exact_chi(g: &Graph, limits: &OracleLimits) -> Result<ExactResult> {
    check_limit("chi", g.n(), limits.chi)?;
    let n = g.n();
    if n == 0 {
        return Ok(ExactResult {
            value: 0,
            witness: Witness::Coloring(Coloring::uncolored(0)),
            method: "trivial".into(),
        });
    }
    let clique = max_clique(g, &g.vertices());
    let upper = dsatur(g);
    let ub = upper.num_colors();
    if ub == clique.len() {
        return Ok(ExactResult {
            value: ub,
            witness: Witness::Coloring(upper),
            method: "dsatur matches clique bound".into(),
        });
    }
    let mut s = ChiSearch {
        g,
        colors: vec![0; n],
        classes: vec![g.empty_set(); n + 1],
        best: ub,
        best_colors: upper.as_slice().to_vec(),
        lower: clique.len(),
    };
    for (i, &v) in clique.iter().enumerate() {
        s.assign(v, i + 1);
    }
    s.search(clique.len(), clique.len());
    let mut c = Coloring::from_vec(s.best_colors.clone());
    c.compact();
    Ok(ExactResult {
        value: s.best,
        witness: Witness::Coloring(c),
        method: "dsatur branch and bound".into(),
    })
}

struct ChiSearch<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    classes: Vec<VertexSet>,
    best: usize,
    best_colors: Vec<u32>,
    lower: usize,
}

impl ChiSearch<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        self.classes[c].insert(v);
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.classes[c].remove(v);
        self.colors[v] = 0;
    }

    fn pick(&self, used: usize) -> usize {
        let g = self.g;
        let mut best = (0, 0, usize::MAX);
        for v in (0..g.n()).filter(|&v| self.colors[v] == 0) {
            let nv = g.neighbors(v);
            let sat = (1..=used)
                .filter(|&c| self.classes[c].intersects(nv))
                .count();
            let deg = nv.iter().filter(|&u| self.colors[u] == 0).count();
            if best.2 == usize::MAX || (sat, deg) > (best.0, best.1) {
                best = (sat, deg, v);
            }
        }
        best.2
    }

    fn search(&mut self, colored: usize, used: usize) {
        if self.best == self.lower {
            return;
        }
        if colored == self.g.n() {
            if used < self.best {
                self.best = used;
                self.best_colors = self.colors.iter().map(|&c| c as u32).collect();
            }
            return;
        }
        let v = self.pick(used);
        let top = (used + 1).min(self.best - 1);
        for c in 1..=top {
            if self.classes[c].intersects(self.g.neighbors(v)) {
                continue;
            }
            self.assign(v, c);
            self.search(colored + 1, used.max(c));
            self.unassign(v);
            if self.best == self.lower {
                return;
            }
        }
    }
}

/// Largest pattern accepted by [`brute_induced`].
pub const BRUTE_PATTERN_LIMIT: usize = 8;

/// Searches every `|pattern|`-subset of `V(g)` for one inducing a copy of `pattern`.
///
/// Returns `emb` with `emb[i]` the vertex playing pattern vertex `i`, for the
/// lexicographically first subset that works.
pub fn brute_induced(g: &Graph, pattern: &Graph) -> Result<Option<Vec<usize>>> {
    let k = pattern.n();
    if k > BRUTE_PATTERN_LIMIT {
        return Err(Error::InvalidArgument(format!(
            "pattern has {k} vertices; at most {BRUTE_PATTERN_LIMIT} supported"
        )));
    }
    if k > g.n() {
        return Ok(None);
    }
    let mut pdeg: Vec<usize> = (0..k).map(|v| pattern.degree(v)).collect();
    pdeg.sort_unstable();
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        if let Some(emb) = match_subset(g, pattern, &subset, &pdeg) {
            return Ok(Some(emb));
        }
        // Next k-combination in lexicographic order.
        let n = g.n();
        let mut i = k;
        while i > 0 && subset[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return Ok(None);
        }
        subset[i - 1] += 1;
        for j in i..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

fn match_subset(
    g: &Graph,
    pattern: &Graph,
    subset: &[usize],
    pdeg: &[usize],
) -> Option<Vec<usize>> {
    let k = subset.len();
    let s = g.set_of(subset);
    let mut sdeg: Vec<usize> = subset.iter().map(|&v| g.degree_in(v, &s)).collect();
    sdeg.sort_unstable();
    if sdeg != pdeg {
        return None;
    }
    let mut emb = vec![usize::MAX; k];
    let mut used = vec![false; k];
    if place(g, pattern, subset, 0, &mut emb, &mut used) {
        Some(emb)
    } else {
        None
    }
}

fn place(
    g: &Graph,
    p: &Graph,
    subset: &[usize],
    i: usize,
    emb: &mut [usize],
    used: &mut [bool],
) -> bool {
    if i == p.n() {
        return true;
    }
    for j in 0..subset.len() {
        if used[j] {
            continue;
        }
        let v = subset[j];
        if (0..i).all(|h| p.has_edge(h, i) == g.has_edge(emb[h], v)) {
            used[j] = true;
            emb[i] = v;
            if place(g, p, subset, i + 1, emb, used) {
                return true;
            }
            used[j] = false;
        }
    }
    false
}
