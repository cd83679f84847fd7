mod bench;
mod input;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use oracle_harness::{cases, run_suite, HarnessError, Profile, SuiteOptions};
use pattern_catalog::{enumerate_separations, SeparationIndex};
use serde::Serialize;
use solver::{
    count_directed, count_ind, count_sub, directed_automorphisms, pattern_automorphisms, CountResult, Mode, SolverConfig,
    SolverError, SubgraphMethod,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}: {1}")]
    Io(String, io::Error),
    #[error("{0}: {1}")]
    Parse(String, String),
    #[error("bad argument: {0}")]
    Usage(String),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Harness(#[from] HarnessError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("suite failed: {0} mismatching cases")]
    SuiteFailed(usize),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(..) | CliError::Usage(_) | CliError::Solver(SolverError::BadInput(_)) => 2,
            CliError::Solver(SolverError::NonPlanarHost) | CliError::Harness(HarnessError::Solver(SolverError::NonPlanarHost)) => 3,
            _ => 1,
        }
    }
}

#[derive(Parser)]
#[command(name = "plic", version, about = "Exact pattern counting in planar graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Auto,
    Brute,
    Treewidth,
    /// Full pipeline with the asymptotic thresholds.
    Full,
    /// Full pipeline with thresholds scaled down so that reductions fire on small inputs.
    Desk,
}

impl ModeArg {
    pub fn config(self) -> SolverConfig {
        match self {
            ModeArg::Auto => SolverConfig::default(),
            ModeArg::Brute => SolverConfig::default().with_mode(Mode::Brute),
            ModeArg::Treewidth => SolverConfig::default().with_mode(Mode::Treewidth),
            ModeArg::Full => SolverConfig::literal(),
            ModeArg::Desk => SolverConfig::desk(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Ci,
    Nightly,
}

#[derive(Subcommand)]
enum Command {
    /// Count maps of a pattern into a planar host.
    #[command(group(ArgGroup::new("semantics").args(["induced", "subgraph", "directed"]).required(true)))]
    Count {
        #[arg(long)]
        pattern: Option<PathBuf>,
        #[arg(long)]
        host: Option<PathBuf>,
        #[arg(long)]
        induced: bool,
        #[arg(long)]
        subgraph: bool,
        /// Both files list arcs `u v` meaning `u -> v`.
        #[arg(long)]
        directed: bool,
        #[arg(long, value_enum, default_value_t = ModeArg::Auto)]
        mode: ModeArg,
        /// Count subgraph copies through the induced count of edge gadgets.
        #[arg(long, requires = "subgraph")]
        gadget: bool,
        /// Report vertex sets instead of maps.
        #[arg(long)]
        subsets: bool,
        #[arg(long)]
        json: bool,
        /// Print one line per reduction to stderr.
        #[arg(long)]
        trace_reductions: bool,
        /// Without files, count the first instance the CI suite draws from this seed.
        #[arg(long, conflicts_with_all = ["pattern", "host", "directed"])]
        seed: Option<u64>,
    },
    /// Pairwise non-isomorphic separations of a pattern, one tab-separated record per class:
    /// canonical form, |X|, |Y|, order, multiplicity.
    Catalog {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long, default_value_t = 2)]
        order: usize,
    },
    /// Differential suite against the enumeration oracle.
    Suite {
        #[arg(long, value_enum, default_value_t = ProfileArg::Ci)]
        profile: ProfileArg,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Timings as CSV rows `family,n,k,mode,ms,count`.
    Bench(bench::BenchArgs),
}

#[derive(Serialize)]
struct CountStats {
    subproblems: usize,
    max_table: usize,
    ms: u128,
}

#[derive(Serialize)]
struct CountJson<'a> {
    count: String,
    semantics: solver::Semantics,
    mode: &'a str,
    stats: CountStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
}

struct CountArgs {
    pattern: Option<PathBuf>,
    host: Option<PathBuf>,
    semantics: (bool, bool),
    mode: ModeArg,
    gadget: bool,
    subsets: bool,
    trace: bool,
    seed: Option<u64>,
}

fn count(args: CountArgs) -> Result<CountResult, CliError> {
    let mut cfg = args.mode.config();
    cfg.trace = args.trace;
    if args.gadget {
        cfg.subgraph_method = SubgraphMethod::Gadget;
    }
    let (induced, subgraph) = args.semantics;
    if !induced && !subgraph {
        let (Some(p), Some(h)) = (&args.pattern, &args.host) else {
            return Err(CliError::Usage("--directed needs --pattern and --host".into()));
        };
        let (pattern, host) = (input::digraph(p)?, input::digraph(h)?);
        let result = count_directed(&pattern, &host, &cfg)?;
        return Ok(if args.subsets { result.into_subsets(&directed_automorphisms(&pattern)?)? } else { result });
    }
    let (pattern, host) = match (&args.pattern, &args.host, args.seed) {
        (Some(p), Some(h), _) => (input::pattern(p)?, input::graph(h)?),
        (None, None, Some(seed)) => {
            let spec = &cases(Profile::Ci, seed)[0];
            (spec.pattern_graph(), spec.host_graph()?)
        }
        _ => return Err(CliError::Usage("give --pattern and --host, or --seed alone".into())),
    };
    let result = if induced { count_ind(&pattern, &host, &cfg)? } else { count_sub(&pattern, &host, &cfg)? };
    Ok(if args.subsets { result.into_subsets(&pattern_automorphisms(&pattern))? } else { result })
}

fn run(cli: Cli) -> Result<(), CliError> {
    let mut out = io::stdout().lock();
    let io_err = |e| CliError::Io("stdout".into(), e);
    match cli.command {
        Command::Count { pattern, host, induced, subgraph, directed: _, mode, gadget, subsets, json, trace_reductions, seed } => {
            let args = CountArgs {
                pattern,
                host,
                semantics: (induced, subgraph),
                mode,
                gadget,
                subsets,
                trace: trace_reductions,
                seed,
            };
            let result = count(args)?;
            for line in &result.stats.trace {
                eprintln!("{line}");
            }
            if json {
                let doc = CountJson {
                    count: result.count.to_string(),
                    semantics: result.semantics,
                    mode: &result.stats.mode,
                    stats: CountStats { subproblems: result.stats.subproblems, max_table: result.stats.max_table, ms: result.ms },
                    note: result.note.as_deref(),
                };
                writeln!(out, "{}", serde_json::to_string(&doc).expect("plain data")).map_err(io_err)?;
            } else {
                writeln!(out, "{}", result.count).map_err(io_err)?;
            }
        }
        Command::Catalog { pattern, order } => {
            let pattern = input::pattern(&pattern)?;
            let all = pattern.all();
            let catalog = enumerate_separations(&SeparationIndex::new(pattern), order, all);
            for e in &catalog.entries {
                writeln!(out, "{}\t{}\t{}\t{}\t{}", e.canonical.0, e.x.len(), e.y.len(), e.order(), e.multiplicity)
                    .map_err(io_err)?;
            }
        }
        Command::Suite { profile, seed, json } => {
            let profile = match profile {
                ProfileArg::Ci => Profile::Ci,
                ProfileArg::Nightly => Profile::Nightly,
            };
            let report = run_suite(&cases(profile, seed), &SuiteOptions { seed, fault: None })?;
            if json {
                writeln!(out, "{}", report.to_json()).map_err(io_err)?;
            } else {
                writeln!(
                    out,
                    "{} cases, {} passed, {} reductions, {} strictness and {} structural violations",
                    report.cases,
                    report.passed,
                    report.reductions,
                    report.strictness_violations,
                    report.audit_violations
                )
                .map_err(io_err)?;
            }
            if !report.all_passed() {
                return Err(CliError::SuiteFailed(report.failed.len()));
            }
        }
        Command::Bench(args) => bench::run(&args, &mut out)?,
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(_, e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("plic: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
