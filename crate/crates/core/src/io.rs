//! Graph and certificate serialization.
//!
//! DIMACS is 1-indexed (`p edge n m` header, `e u v` lines). JSON graphs
//! are `{"n": .., "edges": [[u, v], ..]}` with 0-based ids. Reports keep
//! the id base of the input they came from.

use crate::engine::{BoundCertificate, TraceStep};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognizers::ClassReport;
use serde_json::{json, Map, Value};
use std::path::Path;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dimacs,
    Json,
}

impl GraphFormat {
    /// Offset added to internal vertex ids when reporting to a user.
    pub fn label_base(self) -> usize {
        match self {
            GraphFormat::Dimacs => 1,
            GraphFormat::Json => 0,
        }
    }
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let err = |line: usize, message: String| Error::Parse { line, message };
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last = line;
        let mut tok = raw.split_whitespace();
        let Some(kind) = tok.next() else { continue };
        let num = |tok: &mut std::str::SplitWhitespace<'_>, what: &str| -> Result<usize> {
            let t = tok
                .next()
                .ok_or_else(|| err(line, format!("missing {what}")))?;
            t.parse()
                .map_err(|_| err(line, format!("{what} {t:?} is not a non-negative integer")))
        };
        match kind {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(err(line, "second problem line".into()));
                }
                let fmt = tok
                    .next()
                    .ok_or_else(|| err(line, "missing format after 'p'".into()))?;
                if fmt != "edge" && fmt != "col" {
                    return Err(err(
                        line,
                        format!("unsupported format {fmt:?}, expected 'edge'"),
                    ));
                }
                let n = num(&mut tok, "vertex count")?;
                let m = num(&mut tok, "edge count")?;
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| err(line, "edge before problem line".into()))?;
                let u = num(&mut tok, "first endpoint")?;
                let v = num(&mut tok, "second endpoint")?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(err(line, format!("vertex {x} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(err(line, format!("self-loop on vertex {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            other => return Err(err(line, format!("unknown line type {other:?}"))),
        }
        if tok.next().is_some() {
            return Err(err(line, "trailing tokens".into()));
        }
    }
    let (n, m) =
        header.ok_or_else(|| err(last.max(1), "missing problem line 'p edge n m'".into()))?;
    if edges.len() != m {
        return Err(err(
            last + 1,
            format!(
                "header declares {m} edges but {} were read (truncated file?)",
                edges.len()
            ),
        ));
    }
    Graph::from_edges(n, &edges)
}

pub fn write_dimacs(g: &Graph, comment: Option<&str>) -> String {
    let mut s = String::new();
    if let Some(c) = comment {
        for l in c.lines() {
            s.push_str(&format!("c {l}\n"));
        }
    }
    let edges = g.edges();
    s.push_str(&format!("p edge {} {}\n", g.n(), edges.len()));
    for (u, v) in edges {
        s.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    s
}

pub fn parse_json_graph(text: &str) -> Result<Graph> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })
}

/// Parses by extension (`.json`), falling back to the first non-blank character.
pub fn parse_graph(text: &str, path: Option<&Path>) -> Result<(Graph, GraphFormat)> {
    let is_json = match path.and_then(|p| p.extension()).and_then(|e| e.to_str()) {
        Some("json") => true,
        Some(_) => false,
        None => text.trim_start().starts_with('{'),
    };
    if is_json {
        Ok((parse_json_graph(text)?, GraphFormat::Json))
    } else {
        Ok((parse_dimacs(text)?, GraphFormat::Dimacs))
    }
}

pub fn read_graph(path: &Path) -> Result<(Graph, GraphFormat)> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_graph(&text, Some(path))
}

/// Writes through a temporary file in the target directory and renames it
/// into place, so readers never see a partial file.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    use std::io::Write;
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    std::fs::create_dir_all(dir)?;
    let name = path.file_name().and_then(|s| s.to_str()).unwrap_or("out");
    let tmp = dir.join(format!(".{name}.tmp-{}", std::process::id()));
    {
        let mut f = std::fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
    }
    std::fs::rename(&tmp, path).map_err(|e| {
        let _ = std::fs::remove_file(&tmp);
        Error::from(e)
    })
}

fn relabel(vs: &[usize], base: usize) -> Vec<usize> {
    vs.iter().map(|v| v + base).collect()
}

pub fn class_report_json(r: &ClassReport, base: usize) -> Value {
    let w = &r.witnesses;
    let lab = |o: &Option<Vec<usize>>| o.as_deref().map(|v| relabel(v, base));
    json!({
        "p7_free": r.p7_free,
        "c4_free": r.c4_free,
        "c6_free": r.c6_free,
        "c7_free": r.c7_free,
        "even_hole_free": r.even_hole_free,
        "in_class": r.in_class(),
        "witnesses": {
            "p7": lab(&w.p7),
            "c4": lab(&w.c4),
            "c6": lab(&w.c6),
            "c7": lab(&w.c7),
            "even_hole": lab(&w.even_hole),
        },
    })
}

fn trace_step_json(s: &TraceStep, base: usize) -> Value {
    let mut v = serde_json::to_value(s).expect("trace steps serialize");
    let obj = v.as_object_mut().expect("trace steps are objects");
    for key in ["vertex"] {
        if let Some(x) = obj.get_mut(key) {
            *x = json!(x.as_u64().expect("vertex id") as usize + base);
        }
    }
    for key in ["clique", "vertices"] {
        if let Some(x) = obj.get_mut(key) {
            let ids: Vec<usize> = serde_json::from_value(x.take()).expect("vertex list");
            *x = json!(relabel(&ids, base));
        }
    }
    v
}

/// Certificate JSON: `coloring` maps vertex labels to colors.
pub fn certificate_json(c: &BoundCertificate, base: usize) -> Value {
    let mut coloring = Map::new();
    for (v, &col) in c.coloring.as_slice().iter().enumerate() {
        coloring.insert((v + base).to_string(), json!(col));
    }
    json!({
        "coloring": coloring,
        "omega_witness": relabel(&c.omega_witness, base),
        "omega": c.omega_witness.len(),
        "bound": c.bound,
        "colors": c.colors,
        "bound_established": c.bound_established,
        "vertex_base": base,
        "class": class_report_json(&c.class, base),
        "trace": c.trace.iter().map(|s| trace_step_json(s, base)).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    #[test]
    fn parses_c4() {
        let g = parse_dimacs("c square\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n").unwrap();
        assert_eq!(g, Graph::cycle(4));
    }

    #[test]
    fn diagnostics_name_lines() {
        let cases = [
            ("p edge 3 1\ne 1 4\n", 2),
            ("e 1 2\n", 1),
            ("p edge 3 1\ne 1 x\n", 2),
            ("p edge 3 2\ne 1 2\n", 3),
            ("p edge 3 1\ne 2 2\n", 2),
            ("p edge 2 0\np edge 2 0\n", 2),
            ("", 1),
        ];
        for (text, line) in cases {
            match parse_dimacs(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn json_and_detection() {
        let (g, f) = parse_graph(r#"{"n":3,"edges":[[0,1],[1,2]]}"#, None).unwrap();
        assert_eq!((g, f), (Graph::path(3), GraphFormat::Json));
        assert!(matches!(
            parse_graph(r#"{"n":2,"edges":[[0,5]]}"#, None),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn atomic_write_replaces() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("sub/x.txt");
        write_atomic(&p, b"one").unwrap();
        write_atomic(&p, b"two").unwrap();
        assert_eq!(std::fs::read_to_string(&p).unwrap(), "two");
        assert_eq!(std::fs::read_dir(p.parent().unwrap()).unwrap().count(), 1);
    }

    proptest! {
        #[test]
        fn dimacs_round_trip(g in arb_graph(20)) {
            let once = parse_dimacs(&write_dimacs(&g, Some("x"))).unwrap();
            prop_assert_eq!(&once, &g);
            prop_assert_eq!(parse_dimacs(&write_dimacs(&once, None)).unwrap(), g);
        }
    }
}
