use crate::{Command, Failure, JobConfig, Quantity};
use chibound::coloring::dsatur;
use chibound::engine::{
    color_with_certificate, verify_certificate, BoundCertificate, EngineConfig,
};
use chibound::harness::{
    exhaustive_instances, generate, registry, run_lemma_suite, write_bundle, Conclusion,
    FamilyKind, Instance, InstanceFamily, Params, SuiteSummary,
};
use chibound::io::{certificate_json, class_report_json, read_graph, write_atomic, write_dimacs};
use chibound::oracles::{exact_alpha, exact_chi, exact_omega, ExactResult, Witness};
use chibound::recognizers::{is_in_class, ClassReport};
use chibound::{five_quarters, Graph, OracleLimits};
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

pub(crate) fn run(cmd: Command, cfg: &JobConfig) -> Result<u8, Failure> {
    match cmd {
        Command::Recognize { path } => recognize(&path, cfg),
        Command::Color { path, force } => color(&path, force, cfg),
        Command::Generate {
            family,
            params,
            count,
        } => generate_cmd(family, &params, count, cfg),
        Command::Harness {
            families,
            params,
            count,
            exhaustive,
            lemmas,
            list,
        } => {
            if list {
                return list_lemmas();
            }
            harness(&families, &params, count, exhaustive, &lemmas, cfg)
        }
        Command::Oracle { path, which } => oracle(&path, &which, cfg),
        Command::Bench {
            family,
            params,
            count,
        } => bench(family, &params, count, cfg),
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize") + "\n"
}

/// Writes to `--out` atomically, or to stdout.
fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => Ok(write_atomic(p, text.as_bytes())?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn recognize(path: &Path, cfg: &JobConfig) -> Result<u8, Failure> {
    let (g, fmt) = read_graph(path)?;
    let report = is_in_class(&g);
    emit(
        cfg.out.as_deref(),
        &pretty(&class_report_json(&report, fmt.label_base())),
    )?;
    Ok(0)
}

fn engine_config(cfg: &JobConfig) -> EngineConfig {
    EngineConfig {
        limits: cfg.limits,
        exec: cfg.exec,
        ..EngineConfig::default()
    }
}

/// DSATUR coloring with the clique witness and no bound claim.
fn forced_certificate(
    g: &Graph,
    class: ClassReport,
    limits: &OracleLimits,
) -> Result<BoundCertificate, Failure> {
    let om = exact_omega(g, limits)?;
    let Witness::Clique(omega_witness) = om.witness else {
        unreachable!("omega oracle returns a clique")
    };
    let coloring = dsatur(g);
    Ok(BoundCertificate {
        colors: coloring.num_colors(),
        coloring,
        omega_witness,
        bound: five_quarters(om.value),
        class,
        trace: Vec::new(),
        bound_established: false,
    })
}

/// The first class witness in file labels.
fn violation_text(class: &ClassReport, base: usize) -> String {
    let w = &class.witnesses;
    match (&w.p7, &w.even_hole) {
        (Some(p), _) => format!("induced P7 {:?}", relabel(p, base)),
        (None, Some(h)) => format!("even hole {:?}", relabel(h, base)),
        (None, None) => String::new(),
    }
}

fn color(path: &Path, force: bool, cfg: &JobConfig) -> Result<u8, Failure> {
    let (g, fmt) = read_graph(path)?;
    let base = fmt.label_base();
    let class = is_in_class(&g);
    let cert = if class.in_class() {
        color_with_certificate(&g, class, &engine_config(cfg))?
    } else if force {
        forced_certificate(&g, class, &cfg.limits)?
    } else {
        print!("{}", pretty(&class_report_json(&class, base)));
        return Err(Failure {
            code: 4,
            message: format!(
                "graph is not (P7, even-hole)-free: {} (use --force to color anyway)",
                violation_text(&class, base)
            ),
        });
    };
    let check = verify_certificate(&g, &cert, true);
    let mut doc = certificate_json(&cert, base);
    doc["verification"] = json!(check);
    emit(cfg.out.as_deref(), &pretty(&doc))?;
    log::info!(
        "{} colors, bound {}, established {}, verified {}",
        cert.colors,
        cert.bound,
        cert.bound_established,
        check.ok
    );
    if check.ok && cert.bound_established {
        Ok(0)
    } else {
        if !force {
            eprintln!("chibound: bound not established");
        }
        Ok(3)
    }
}

fn family_instances(
    kind: FamilyKind,
    params: &[String],
    count: usize,
    cfg: &JobConfig,
) -> Result<Vec<Instance>, Failure> {
    let params = Params::parse(kind, params)?;
    if kind == FamilyKind::Exhaustive {
        let mut all = exhaustive_instances(params.usize("n")?, cfg.exec)?;
        all.truncate(count);
        return Ok(all);
    }
    let family = InstanceFamily {
        kind,
        params,
        seed: cfg.seed,
    };
    Ok(generate(&family, count, cfg.exec)?)
}

fn generate_cmd(
    kind: FamilyKind,
    params: &[String],
    count: usize,
    cfg: &JobConfig,
) -> Result<u8, Failure> {
    let dir = cfg
        .out
        .as_deref()
        .ok_or_else(|| Failure::input("generate needs --out DIR"))?;
    let parsed = Params::parse(kind, params)?;
    let instances = family_instances(kind, params, count, cfg)?;
    let written = cfg.exec.map(&instances, |inst| -> Result<Value, Failure> {
        let file = format!("{}.col", inst.id);
        let comment = format!("{} family={} seed={}", inst.id, kind, cfg.seed);
        write_atomic(
            &dir.join(&file),
            write_dimacs(&inst.graph, Some(&comment)).as_bytes(),
        )?;
        Ok(json!({
            "id": inst.id,
            "file": file,
            "n": inst.graph.n(),
            "m": inst.graph.m(),
            "draws": inst.draws,
            "spec": inst.spec,
        }))
    });
    let entries = written.into_iter().collect::<Result<Vec<_>, _>>()?;
    let manifest = json!({
        "family": kind,
        "params": parsed,
        "seed": cfg.seed,
        "count": entries.len(),
        "instances": entries,
    });
    let path = dir.join("manifest.json");
    write_atomic(&path, pretty(&manifest).as_bytes())?;
    println!("{}", path.display());
    Ok(0)
}

fn list_lemmas() -> Result<u8, Failure> {
    let rows: Vec<Value> = registry()
        .iter()
        .map(|l| json!({ "id": l.id, "statement": l.statement, "requires": l.requires }))
        .collect();
    print!("{}", pretty(&json!(rows)));
    Ok(0)
}

fn harness(
    families: &[FamilyKind],
    params: &[String],
    count: usize,
    exhaustive: Option<usize>,
    lemmas: &[String],
    cfg: &JobConfig,
) -> Result<u8, Failure> {
    let kinds: Vec<FamilyKind> = if families.is_empty() {
        FamilyKind::GENERATED.to_vec()
    } else {
        families.to_vec()
    };
    let mut instances = Vec::new();
    for kind in kinds {
        instances.extend(family_instances(kind, params, count, cfg)?);
    }
    if let Some(n) = exhaustive {
        instances.extend(exhaustive_instances(n, cfg.exec)?);
    }
    log::info!(
        "running the lemma registry on {} instances",
        instances.len()
    );
    let reports = run_lemma_suite(&instances, lemmas, cfg.exec)?;
    let summary = SuiteSummary::of(&reports);
    if let Some(dir) = cfg.out.as_deref() {
        write_atomic(
            &dir.join("reports.json"),
            pretty(&json!(reports)).as_bytes(),
        )?;
        write_atomic(
            &dir.join("summary.json"),
            pretty(&json!(summary)).as_bytes(),
        )?;
        for r in &reports {
            let sub = match r.conclusion {
                Conclusion::Violated { .. } => "counterexamples",
                Conclusion::ChoiceSensitive { .. } => "choice-sensitive",
                _ => continue,
            };
            let inst = instances
                .iter()
                .find(|i| i.id == r.instance)
                .expect("reports name suite instances");
            let at: PathBuf = write_bundle(&dir.join(sub), inst, r)?;
            log::info!("bundle written to {}", at.display());
        }
    }
    print!("{}", pretty(&json!(summary)));
    if summary.violated == 0 {
        Ok(0)
    } else {
        eprintln!("chibound: {} violated lemma reports", summary.violated);
        Ok(1)
    }
}

fn relabel(vs: &[usize], base: usize) -> Vec<usize> {
    vs.iter().map(|v| v + base).collect()
}

fn exact_json(r: &ExactResult, base: usize) -> Value {
    let witness = match &r.witness {
        Witness::Clique(c) => json!({ "clique": relabel(c, base) }),
        Witness::StableSet(s) => json!({ "stable_set": relabel(s, base) }),
        Witness::Coloring(c) => {
            let map: serde_json::Map<String, Value> = c
                .as_slice()
                .iter()
                .enumerate()
                .map(|(v, &col)| ((v + base).to_string(), json!(col)))
                .collect();
            json!({ "coloring": map })
        }
    };
    json!({ "value": r.value, "witness": witness, "method": r.method })
}

fn oracle(path: &Path, which: &[Quantity], cfg: &JobConfig) -> Result<u8, Failure> {
    let (g, fmt) = read_graph(path)?;
    let base = fmt.label_base();
    let mut doc = json!({ "n": g.n(), "m": g.m(), "vertex_base": base });
    for q in which {
        let (key, r) = match q {
            Quantity::Omega => ("omega", exact_omega(&g, &cfg.limits)?),
            Quantity::Alpha => ("alpha", exact_alpha(&g, &cfg.limits)?),
            Quantity::Chi => ("chi", exact_chi(&g, &cfg.limits)?),
        };
        doc[key] = exact_json(&r, base);
    }
    emit(cfg.out.as_deref(), &pretty(&doc))?;
    Ok(0)
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, u128) {
    let t = Instant::now();
    let r = f();
    (r, t.elapsed().as_micros())
}

/// One CSV row per instance. Oracle columns are empty past the oracle limits.
fn bench(
    kind: FamilyKind,
    params: &[String],
    count: usize,
    cfg: &JobConfig,
) -> Result<u8, Failure> {
    let instances = family_instances(kind, params, count, cfg)?;
    let mut csv = String::from(
        "instance,n,m,in_class,omega,alpha,chi,recognize_us,omega_us,alpha_us,chi_us\n",
    );
    for inst in &instances {
        let g = &inst.graph;
        let (class, t_rec) = timed(|| is_in_class(g));
        let (om, t_om) = timed(|| exact_omega(g, &cfg.limits).ok());
        let (al, t_al) = timed(|| exact_alpha(g, &cfg.limits).ok());
        let (ch, t_ch) = timed(|| exact_chi(g, &cfg.limits).ok());
        let val =
            |r: &Option<ExactResult>| r.as_ref().map(|r| r.value.to_string()).unwrap_or_default();
        let us = |r: &Option<ExactResult>, t: u128| {
            r.as_ref().map(|_| t.to_string()).unwrap_or_default()
        };
        writeln!(
            csv,
            "{},{},{},{},{},{},{},{},{},{},{}",
            inst.id,
            g.n(),
            g.m(),
            class.in_class(),
            val(&om),
            val(&al),
            val(&ch),
            t_rec,
            us(&om, t_om),
            us(&al, t_al),
            us(&ch, t_ch)
        )
        .expect("writing to a String");
    }
    emit(cfg.out.as_deref(), &csv)?;
    Ok(0)
}
