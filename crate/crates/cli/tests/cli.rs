use chibound::blowup::{pattern_m, BlowupSpec, Hyperhole};
use chibound::io::write_dimacs;
use chibound::Graph;
use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_chibound"));
    c.env_remove("CHIBOUND_LOG");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout)
        .unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn write_graph(dir: &Path, name: &str, g: &Graph) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, write_dimacs(g, None)).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn recognize_reports_class_flags() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write_graph(dir.path(), "c5.col", &Graph::cycle(5));
    let o = run(&["recognize", s(&c5)]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["even_hole_free"], true);

    let c4 = write_graph(dir.path(), "c4.col", &Graph::cycle(4));
    let r = json(&run(&["recognize", s(&c4)]));
    assert_eq!(r["even_hole_free"], false);
    let mut w: Vec<u64> = r["witnesses"]["c4"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    w.sort();
    assert_eq!(w, vec![1, 2, 3, 4]);
}

#[test]
fn malformed_input_exits_2_with_line() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("t.col");
    std::fs::write(&p, "p edge 5 5\ne 1 2\ne 2 3\n").unwrap();
    let o = run(&["recognize", s(&p)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));
    let o = run(&["recognize", s(&dir.path().join("missing.col"))]);
    assert_eq!(code(&o), 2);
}

#[test]
fn color_equal_blowup_meets_bound() {
    let dir = tempfile::tempdir().unwrap();
    let g = Hyperhole::new(vec![2; 5]).realize().unwrap().graph;
    let p = write_graph(dir.path(), "c5x2.col", &g);
    let out = dir.path().join("cert.json");
    let o = run(&["color", s(&p), "--out", s(&out)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let cert: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(cert["colors"], 5);
    assert_eq!(cert["bound"], 5);
    assert_eq!(cert["verification"]["ok"], true);
    assert_eq!(cert["coloring"].as_object().unwrap().len(), 10);
    assert!(cert["coloring"].get("1").is_some() && cert["coloring"].get("0").is_none());
}

#[test]
fn color_refuses_or_forces_c6() {
    let dir = tempfile::tempdir().unwrap();
    let p = write_graph(dir.path(), "c6.col", &Graph::cycle(6));
    let o = run(&["color", s(&p)]);
    assert_eq!(code(&o), 4);
    let r = json(&o);
    assert_eq!(r["witnesses"]["even_hole"].as_array().unwrap().len(), 6);
    let o = run(&["color", s(&p), "--force"]);
    assert_eq!(code(&o), 3);
    let cert = json(&o);
    assert_eq!(cert["bound_established"], false);
    assert_eq!(cert["colors"], 2);
}

#[test]
fn generate_is_deterministic_in_the_seed() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        let o = run(&[
            "generate",
            "--family",
            "equal_blowup_c5",
            "--params",
            "t=2",
            "--count",
            "3",
            "--seed",
            "9",
            "--out",
            s(d.path()),
        ]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    }
    let ma = std::fs::read_to_string(a.path().join("manifest.json")).unwrap();
    assert_eq!(
        ma,
        std::fs::read_to_string(b.path().join("manifest.json")).unwrap()
    );
    let m: Value = serde_json::from_str(&ma).unwrap();
    assert_eq!(m["count"], 3);
    for inst in m["instances"].as_array().unwrap() {
        let f = inst["file"].as_str().unwrap();
        let text = std::fs::read_to_string(a.path().join(f)).unwrap();
        assert_eq!(text, std::fs::read_to_string(b.path().join(f)).unwrap());
        assert_eq!(chibound::io::parse_dimacs(&text).unwrap().n(), 10);
    }
}

#[test]
fn generate_needs_out_and_valid_params() {
    assert_eq!(code(&run(&["generate", "--family", "hyperhole"])), 2);
    let d = tempfile::tempdir().unwrap();
    assert_eq!(
        code(&run(&[
            "generate",
            "--family",
            "hyperhole",
            "--params",
            "bogus=1",
            "--out",
            s(d.path())
        ])),
        2
    );
    assert_eq!(
        code(&run(&[
            "generate",
            "--family",
            "no_such_family",
            "--out",
            s(d.path())
        ])),
        2
    );
}

#[test]
fn harness_passes_and_writes_reports() {
    let d = tempfile::tempdir().unwrap();
    let o = run(&[
        "harness",
        "--family",
        "hyperhole",
        "--family",
        "nice_blowup_plus_attachments",
        "--count",
        "4",
        "--seed",
        "3",
        "--out",
        s(d.path()),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let summary = json(&o);
    assert_eq!(summary["violated"], 0);
    let reports: Value =
        serde_json::from_str(&std::fs::read_to_string(d.path().join("reports.json")).unwrap())
            .unwrap();
    let n_lemmas = json(&run(&["harness", "--list"])).as_array().unwrap().len();
    assert_eq!(reports.as_array().unwrap().len(), 8 * n_lemmas);
}

#[test]
fn harness_output_independent_of_jobs() {
    let args = [
        "harness",
        "--family",
        "nice_blowup_plus_attachments",
        "--count",
        "3",
        "--seed",
        "5",
    ];
    let seq = run(&[&args[..], &["--jobs", "1"]].concat());
    let par = run(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(code(&seq), 0);
    assert_eq!(seq.stdout, par.stdout);
}

#[test]
fn harness_rejects_unknown_lemma() {
    assert_eq!(
        code(&run(&[
            "harness",
            "--family",
            "hyperhole",
            "--count",
            "1",
            "--lemma",
            "no-such-lemma"
        ])),
        2
    );
}

/// Largest clique by scanning every vertex subset.
fn brute_omega(g: &Graph) -> usize {
    (0u32..1 << g.n())
        .filter(|&mask| {
            let vs: Vec<usize> = (0..g.n()).filter(|v| mask >> v & 1 == 1).collect();
            vs.iter()
                .enumerate()
                .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap()
}

#[test]
fn oracle_on_m_matches_brute_force() {
    let d = tempfile::tempdir().unwrap();
    let m = pattern_m();
    let p = write_graph(d.path(), "m.col", &m);
    let o = run(&["oracle", s(&p), "--which", "omega,chi"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["omega"]["value"], brute_omega(&m));
    assert_eq!(
        r["omega"]["witness"]["clique"].as_array().unwrap().len(),
        brute_omega(&m)
    );
    assert!(r.get("alpha").is_none());
    let big = BlowupSpec::new(m, vec![2; 12]).realize().unwrap().graph;
    let p = write_graph(d.path(), "big.col", &big);
    assert_eq!(
        code(&run(&[
            "oracle",
            s(&p),
            "--which",
            "chi",
            "--oracle-limit-chi",
            "12"
        ])),
        2
    );
}

#[test]
fn bench_emits_one_row_per_instance() {
    let o = run(&[
        "bench",
        "--family",
        "hyperhole",
        "--params",
        "k=5,max_size=3",
        "--count",
        "4",
    ]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 5);
    let cols = lines[0].split(',').count();
    assert!(lines.iter().all(|l| l.split(',').count() == cols));
    assert!(lines[0].starts_with("instance,n,m"));
}

#[test]
fn json_graphs_use_zero_based_labels() {
    let d = tempfile::tempdir().unwrap();
    let p = d.path().join("c4.json");
    std::fs::write(&p, serde_json::to_string(&Graph::cycle(4)).unwrap()).unwrap();
    let r = json(&run(&["recognize", s(&p)]));
    let mut w: Vec<u64> = r["witnesses"]["c4"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_u64().unwrap())
        .collect();
    w.sort();
    assert_eq!(w, vec![0, 1, 2, 3]);
}
