mod common;

use common::*;
use rand::Rng;
use solver::{count_ind, count_sub, Mode, SolverConfig};

fn desk_sequential() -> SolverConfig {
    SolverConfig { parallel: false, ..SolverConfig::desk() }
}

#[test]
fn random_instances_match_the_oracle_in_every_mode() {
    let configs = [
        SolverConfig::default().with_mode(Mode::Brute),
        SolverConfig::default().with_mode(Mode::Treewidth),
        SolverConfig::desk(),
        desk_sequential(),
    ];
    let mut reduced = 0;
    for seed in 0..200u64 {
        let mut rng = rng(seed);
        let n = rng.gen_range(4..=12);
        let k = rng.gen_range(1..=5.min(n));
        let keep = rng.gen_range(0.5..1.0);
        let g = random_planar(&mut rng, n, keep);
        let p = random_pattern(&mut rng, k);
        let induced = rng.gen_bool(0.5);
        let expected = oracle(&p, &g, induced);
        for cfg in &configs {
            let res = if induced { count_ind(&p, &g, cfg) } else { count_sub(&p, &g, cfg) }.unwrap();
            assert_eq!(res.count, expected, "seed {seed} mode {:?} desk {}", cfg.mode, cfg.desk);
            assert_eq!(res.stats.strictness_violations, 0, "seed {seed}");
            assert!(res.stats.audit_violations.is_empty(), "seed {seed}: {:?}", res.stats.audit_violations);
            reduced += res.stats.reductions.values().sum::<usize>();
        }
    }
    assert!(reduced > 200, "the desk pipeline should reduce, saw {reduced} reductions");
}

#[test]
fn literal_thresholds_go_straight_to_the_base_case() {
    let g = grid(3, 4);
    let res = count_ind(&path(4), &g, &SolverConfig::literal()).unwrap();
    assert_eq!(res.count, oracle(&path(4), &g, true));
    assert_eq!(res.stats.base_cases, 1);
    assert!(res.stats.reductions.is_empty());
}

#[test]
fn runs_are_deterministic() {
    let g = grid(4, 4);
    let cfg = SolverConfig { trace: true, ..SolverConfig::desk() };
    let a = count_ind(&path(5), &g, &cfg).unwrap();
    let b = count_ind(&path(5), &g, &cfg).unwrap();
    assert_eq!(a.count, b.count);
    assert_eq!(a.stats, b.stats);
}

#[test]
fn depth_guard_aborts() {
    let g = grid(4, 4);
    let cfg = SolverConfig { max_depth: 0, ..SolverConfig::desk() };
    assert!(matches!(count_ind(&path(5), &g, &cfg), Err(solver::SolverError::DepthExceeded(0))));
}

#[test]
fn memoization_does_not_change_counts() {
    let g = grid(4, 4);
    let on = count_ind(&cycle(4), &g, &SolverConfig::desk()).unwrap();
    let off = count_ind(&cycle(4), &g, &SolverConfig { memoize: false, ..SolverConfig::desk() }).unwrap();
    assert_eq!(on.count, off.count);
    assert_eq!(off.stats.memo_hits, 0);
}

#[test]
fn five_by_five_grid_agrees_with_the_base_case() {
    let g = grid(5, 5);
    for p in [path(5), pattern(5, &[])] {
        let tw = count_ind(&p, &g, &SolverConfig::default().with_mode(Mode::Treewidth)).unwrap();
        let full = count_ind(&p, &g, &SolverConfig::desk()).unwrap();
        assert_eq!(tw.count, full.count);
        assert!(full.stats.reductions.contains_key("Balance"));
    }
}
