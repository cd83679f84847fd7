use std::collections::BTreeMap;

use counting_kernel::EdgeRule;
use num_bigint::BigUint;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use solver::{count_ind, count_sub, pattern_automorphisms, CountResult, Mode, SolverConfig};

use crate::generators::{HostKind, InstanceSpec, PatternKind};
use crate::oracle::{oracle_count, Constraints};
use crate::HarnessError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    /// 500 instances with `n ≤ 14`, `k ≤ 5`.
    Ci,
    /// 2000 instances of the same sizes.
    Nightly,
}

impl Profile {
    pub fn size(self) -> usize {
        match self {
            Profile::Ci => 500,
            Profile::Nightly => 2000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Adds one to the full-pipeline induced count of this case, to check that faults surface.
    pub fault: Option<usize>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { seed: 1, fault: None }
    }
}

/// Instances cycling through every host and pattern family.
pub fn cases(profile: Profile, seed: u64) -> Vec<InstanceSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..profile.size())
        .map(|i| {
            let host = HostKind::ALL[i % HostKind::ALL.len()];
            let pattern = PatternKind::ALL[(i / HostKind::ALL.len()) % PatternKind::ALL.len()];
            let n = rng.gen_range(4..=14);
            let k = rng.gen_range(1..=5usize.min(n));
            InstanceSpec { host, n, k, pattern, seed: rng.gen() }
        })
        .collect()
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CaseReport {
    pub id: usize,
    pub spec: InstanceSpec,
    pub host_vertices: usize,
    pub host_edges: usize,
    /// Oracle counts by semantics.
    pub oracle: BTreeMap<String, String>,
    /// Solver counts by `semantics/mode`.
    pub counts: BTreeMap<String, String>,
    pub reductions: usize,
    pub strictness_violations: usize,
    pub audit_violations: usize,
    pub mismatches: Vec<String>,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.strictness_violations == 0 && self.audit_violations == 0
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Report {
    pub seed: u64,
    pub cases: usize,
    pub passed: usize,
    pub failed: Vec<usize>,
    pub reductions: usize,
    pub strictness_violations: usize,
    pub audit_violations: usize,
    pub reports: Vec<CaseReport>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.failed.is_empty()
    }

    /// Pretty JSON; contains no timings, so equal inputs give equal bytes.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn configs() -> Vec<(&'static str, SolverConfig)> {
    let seq = |cfg: SolverConfig| SolverConfig { parallel: false, ..cfg };
    vec![
        ("brute", seq(SolverConfig::default().with_mode(Mode::Brute))),
        ("treewidth", seq(SolverConfig::default().with_mode(Mode::Treewidth))),
        ("full", seq(SolverConfig::desk())),
        ("auto", seq(SolverConfig::default())),
    ]
}

fn run_case(id: usize, spec: &InstanceSpec, fault: bool) -> Result<CaseReport, HarnessError> {
    let g = spec.host_graph()?;
    let p = spec.pattern_graph();
    let mut report = CaseReport {
        id,
        spec: spec.clone(),
        host_vertices: g.n(),
        host_edges: g.m(),
        oracle: BTreeMap::new(),
        counts: BTreeMap::new(),
        reductions: 0,
        strictness_violations: 0,
        audit_violations: 0,
        mismatches: Vec::new(),
    };
    let aut = pattern_automorphisms(&p);
    let mut truth = BTreeMap::new();
    for (name, rule) in [("induced", EdgeRule::Induced), ("subgraph", EdgeRule::Subgraph)] {
        let expected = oracle_count(&p, &g, rule, &Constraints::default())?;
        if !(&expected % &aut).is_zero() {
            report.mismatches.push(format!("{name} oracle {expected} not divisible by {aut} automorphisms"));
        }
        for (mode, cfg) in configs() {
            let res: CountResult = match rule {
                EdgeRule::Induced => count_ind(&p, &g, &cfg)?,
                EdgeRule::Subgraph => count_sub(&p, &g, &cfg)?,
            };
            let mut count = res.count;
            if fault && mode == "full" && rule == EdgeRule::Induced {
                count += 1u32;
            }
            report.reductions += res.stats.reductions.values().sum::<usize>();
            report.strictness_violations += res.stats.strictness_violations;
            report.audit_violations += res.stats.audit_violations.len();
            if count != expected {
                report.mismatches.push(format!("{name}/{mode}: {count} != oracle {expected}"));
            }
            report.counts.insert(format!("{name}/{mode}"), count.to_string());
        }
        report.oracle.insert(name.to_string(), expected.to_string());
        truth.insert(name, expected);
    }
    if truth["induced"] > truth["subgraph"] {
        report.mismatches.push("induced count exceeds subgraph count".into());
    }
    Ok(report)
}

/// Runs every case in every mode against the oracle; cases run concurrently, the report is
/// ordered by case id.
pub fn run_suite(specs: &[InstanceSpec], options: &SuiteOptions) -> Result<Report, HarnessError> {
    let reports: Vec<CaseReport> = specs
        .par_iter()
        .enumerate()
        .map(|(id, spec)| run_case(id, spec, options.fault == Some(id)))
        .collect::<Result<_, _>>()?;
    let failed: Vec<usize> = reports.iter().filter(|r| !r.passed()).map(|r| r.id).collect();
    Ok(Report {
        seed: options.seed,
        cases: reports.len(),
        passed: reports.len() - failed.len(),
        failed,
        reductions: reports.iter().map(|r| r.reductions).sum(),
        strictness_violations: reports.iter().map(|r| r.strictness_violations).sum(),
        audit_violations: reports.iter().map(|r| r.audit_violations).sum(),
        reports,
    })
}

/// Exact `|ind|` for a spec, for callers that only need the ground truth.
pub fn ground_truth(spec: &InstanceSpec, rule: EdgeRule) -> Result<BigUint, HarnessError> {
    oracle_count(&spec.pattern_graph(), &spec.host_graph()?, rule, &Constraints::default())
}
