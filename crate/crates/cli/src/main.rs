//! `chibound` command-line interface.
//!
//! Exit codes: 0 ok, 1 harness found violations, 2 input or configuration
//! error, 3 coloring produced but the bound is not established, 4 input
//! outside the class.

mod commands;

use chibound::harness::FamilyKind;
use chibound::{Execution, OracleLimits};
use clap::{Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(
    name = "chibound",
    version,
    about = "Recognize, color and certify (P7, even-hole)-free graphs"
)]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for per-instance parallelism (0 = all cores, 1 = sequential).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Largest graph the exact chromatic-number oracle accepts.
    #[arg(long, global = true, default_value_t = OracleLimits::default().chi)]
    oracle_limit_chi: usize,
    /// Largest graph the exact clique and stable-set oracles accept.
    #[arg(long, global = true, default_value_t = OracleLimits::default().omega)]
    oracle_limit_omega: usize,
    /// Output file or directory, depending on the command.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the class report of a DIMACS or JSON graph as JSON.
    Recognize { path: PathBuf },
    /// Color a graph and write a bound certificate.
    Color {
        path: PathBuf,
        /// Color graphs outside the class anyway (no bound is claimed).
        #[arg(long)]
        force: bool,
    },
    /// Write generated instances as DIMACS files plus a manifest.
    Generate {
        #[arg(long)]
        family: FamilyKind,
        /// Family parameters as key=value (repeatable, comma-separated).
        #[arg(long)]
        params: Vec<String>,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Run the structural-lemma registry over generated instances.
    Harness {
        /// Families to draw from (repeatable; default: every generated family).
        #[arg(long = "family")]
        families: Vec<FamilyKind>,
        /// Parameters applied to every selected family.
        #[arg(long)]
        params: Vec<String>,
        /// Instances per family.
        #[arg(long, default_value_t = 25)]
        count: usize,
        /// Also include every in-class graph on this many vertices (at most 9).
        #[arg(long)]
        exhaustive: Option<usize>,
        /// Restrict to these lemma ids (repeatable).
        #[arg(long = "lemma")]
        lemmas: Vec<String>,
        /// List the registry and exit.
        #[arg(long)]
        list: bool,
    },
    /// Print exact clique number, stability number and chromatic number.
    Oracle {
        path: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "omega,alpha,chi")]
        which: Vec<Quantity>,
    },
    /// Time recognizers and oracles over a family; CSV, one row per instance.
    Bench {
        #[arg(long, default_value = "hyperhole")]
        family: FamilyKind,
        #[arg(long)]
        params: Vec<String>,
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Quantity {
    Omega,
    Alpha,
    Chi,
}

/// Settings shared by every command, validated before any work starts.
#[derive(Clone, Debug)]
struct JobConfig {
    seed: u64,
    limits: OracleLimits,
    out: Option<PathBuf>,
    exec: Execution,
}

/// A failed command with its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<chibound::Error> for Failure {
    fn from(e: chibound::Error) -> Self {
        let code = match e {
            chibound::Error::NotInClass(_) => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn init_logging() {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("CHIBOUND_LOG", "error"))
        .format_timestamp(None)
        .init();
}

fn main() -> ExitCode {
    init_logging();
    let cli = Cli::parse();
    let cfg = JobConfig {
        seed: cli.seed,
        limits: OracleLimits {
            omega: cli.oracle_limit_omega,
            chi: cli.oracle_limit_chi,
        },
        out: cli.out.clone(),
        exec: if cli.jobs == 1 {
            Execution::Sequential
        } else {
            Execution::default()
        },
    };
    let result = chibound::exec::with_jobs(cli.jobs, move || commands::run(cli.command, &cfg));
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("chibound: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
