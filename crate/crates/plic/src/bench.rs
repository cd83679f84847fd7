use std::io::Write;
use std::ops::RangeInclusive;
use std::time::Instant;

use clap::{Args, ValueEnum};
use oracle_harness::{host, pattern, HostKind, PatternKind};
use pattern_catalog::Pattern;
use planar_core::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use solver::count_ind;

use crate::{CliError, ModeArg};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Family {
    /// Square grid without diagonals; `n` is the side.
    Grid,
    Triangulation,
    Outerplanar,
    Ladder,
    StackedBook,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum PatternArg {
    IndependentSet,
    Path,
    Cycle,
    Matching,
    Triangles,
}

#[derive(Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value_t = Family::Grid)]
    family: Family,
    /// Inclusive pattern size range, `2..8` or `2..=8`.
    #[arg(long, default_value = "2..6", value_parser = parse_range)]
    k_range: RangeInclusive<usize>,
    /// Host sizes; grid sides for the grid family.
    #[arg(long, value_delimiter = ',', default_value = "5")]
    sizes: Vec<usize>,
    #[arg(long, value_delimiter = ',', value_enum, default_value = "treewidth,desk")]
    modes: Vec<ModeArg>,
    #[arg(long, value_enum, default_value_t = PatternArg::IndependentSet)]
    pattern: PatternArg,
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

fn parse_range(text: &str) -> Result<RangeInclusive<usize>, String> {
    let (lo, hi) = text.split_once("..").ok_or("expected `lo..hi`")?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: usize = lo.parse().map_err(|e| format!("{e}"))?;
    let hi: usize = hi.parse().map_err(|e| format!("{e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

#[derive(Serialize)]
struct Row<'a> {
    family: &'a str,
    n: usize,
    k: usize,
    mode: &'a str,
    ms: u128,
    count: String,
}

fn plain_grid(side: usize) -> Graph {
    let at = |r: usize, c: usize| r * side + c;
    let mut edges = Vec::new();
    for r in 0..side {
        for c in 0..side {
            if c + 1 < side {
                edges.push((at(r, c), at(r, c + 1)));
            }
            if r + 1 < side {
                edges.push((at(r, c), at(r + 1, c)));
            }
        }
    }
    Graph::from_edges(side * side, &edges).expect("grid is simple")
}

fn host_for(family: Family, size: usize, rng: &mut ChaCha8Rng) -> Graph {
    let kind = match family {
        Family::Grid => return plain_grid(size),
        Family::Triangulation => HostKind::Triangulation,
        Family::Outerplanar => HostKind::Outerplanar,
        Family::Ladder => HostKind::Ladder,
        Family::StackedBook => HostKind::StackedBook,
    };
    host(kind, size, rng)
}

fn pattern_for(arg: PatternArg, k: usize, rng: &mut ChaCha8Rng) -> Pattern {
    let kind = match arg {
        PatternArg::IndependentSet => PatternKind::IndependentSet,
        PatternArg::Path => PatternKind::Path,
        PatternArg::Cycle => PatternKind::Cycle,
        PatternArg::Matching => PatternKind::Matching,
        PatternArg::Triangles => PatternKind::Triangles,
    };
    pattern(kind, k, rng)
}

fn label<T: ValueEnum>(v: &T) -> String {
    v.to_possible_value().map(|p| p.get_name().to_owned()).unwrap_or_default()
}

pub fn run(args: &BenchArgs, out: &mut impl Write) -> Result<(), CliError> {
    let mut csv = csv::Writer::from_writer(out);
    let family = label(&args.family);
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    for &size in &args.sizes {
        let g = host_for(args.family, size, &mut rng);
        for k in args.k_range.clone() {
            let p = pattern_for(args.pattern, k, &mut rng);
            for mode in &args.modes {
                let start = Instant::now();
                let result = count_ind(&p, &g, &mode.config())?;
                let ms = start.elapsed().as_millis();
                let mode = label(mode);
                csv.serialize(Row { family: &family, n: g.n(), k, mode: &mode, ms, count: result.count.to_string() })?;
                csv.flush().map_err(|e| CliError::Io("stdout".into(), e))?;
            }
        }
    }
    Ok(())
}
