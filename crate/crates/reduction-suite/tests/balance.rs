mod common;

use common::*;
use counting_kernel::{EdgeRule, Subproblem};
use proptest::prelude::*;
use reduction_suite::{acquire_balance, balance_on_cycle, Geometry, Leaf, Plan, ReductionParams, Selection, Sparsifier};

fn params(k: usize) -> ReductionParams {
    ReductionParams::desk(k)
}

/// Balance, then the given number of monitored rounds on every leaf with a cycle.
fn reduced(sub: &Subproblem, rounds: usize) -> Plan {
    let p = params(sub.k());
    let (geo, plan) = acquire_balance(sub, &p).unwrap();
    let core = Sparsifier::new(&geo, &p, Selection::Monitored { side: p.side_threshold, cycle: p.cycle_threshold });
    plan.map_leaves(&mut |leaf| if leaf.cycle.is_some() { core.run(leaf, rounds) } else { Plan::Leaf(leaf) })
}

#[test]
fn balance_without_aligned_maps_is_a_split() {
    let g = grid(4, 4, &[true]);
    let sub = top(&g, path_pattern(3), EdgeRule::Induced);
    let (_, plan) = acquire_balance(&sub, &params(3)).unwrap();
    let shape = plan.shape();
    assert_eq!(shape.splits, 1, "{shape}");
    assert_eq!(shape.leaves, 2, "{shape}");
    assert_golden(&plan);
}

/// The 8-cycle around the centre of a 3×3 grid, long enough for four arcs.
fn ring_case(p: pattern_catalog::Pattern, rule: EdgeRule) -> (Subproblem, Geometry, planar_core::Cycle) {
    let g = grid(3, 3, &[true, false]);
    let sub = top(&g, p, rule);
    let geo = Geometry::new(&sub).unwrap();
    let c = geo.cycle(&[0, 1, 2, 5, 8, 7, 6, 3]).unwrap();
    (sub, geo, c)
}

#[test]
fn balance_with_aligned_maps_matches() {
    let (sub, geo, c) = ring_case(pattern(6, &[(4, 5)]), EdgeRule::Induced);
    let mut p = params(6);
    p.balance_side_threshold = 1;
    let plan = balance_on_cycle(&sub, &p, &geo, &c).unwrap();
    assert!(plan.shape().partitions > 1, "{}", plan.shape());
    assert!(plan.leaves().iter().any(|l| l.cycle.is_some()));
    assert!(plan.leaves().iter().filter_map(|l| l.cycle.as_ref()).all(|c| c.is_consistent()));
    assert_golden(&plan);
}

#[test]
fn aligned_balance_then_rounds_matches() {
    let (sub, geo, c) = ring_case(pattern(6, &[(0, 1), (2, 3)]), EdgeRule::Subgraph);
    let mut p = params(6);
    p.balance_side_threshold = 1;
    let plan = balance_on_cycle(&sub, &p, &geo, &c).unwrap();
    let core = Sparsifier::new(&geo, &p, Selection::Monitored { side: 1, cycle: 1 });
    let plan = plan.map_leaves(&mut |leaf| if leaf.cycle.is_some() { core.run(leaf, 2) } else { Plan::Leaf(leaf) });
    assert!(plan.leaves().iter().all(|l| l.cycle.is_none()));
    assert_golden(&plan);
}

#[test]
fn sparsified_balance_matches() {
    let g = grid(3, 4, &[true, false]);
    let sub = top(&g, pattern(5, &[(0, 1)]), EdgeRule::Subgraph);
    let plan = reduced(&sub, 1);
    assert!(plan.leaves().iter().all(|l| l.cycle.is_none()));
    assert_golden(&plan);
}

#[test]
fn mass_selection_matches() {
    let g = grid(3, 4, &[true]);
    let sub = top(&g, pattern(5, &[(1, 2), (3, 4)]), EdgeRule::Induced);
    let p = params(5);
    let geo = Geometry::new(&sub).unwrap();
    let mass = vset(&sub, [0, 1, 2, 3, 4, 5]);
    let c = geo.balanced_cycle(&mass).unwrap();
    let leaf = Leaf { sub: sub.clone(), cycle: Some(reduction_suite::AnnotatedCycle::fresh(geo.globals(&c), sub.universe())) };
    let plan = Sparsifier::new(&geo, &p, Selection::Mass(mass)).run(leaf, 2);
    assert_golden(&plan);
}

#[test]
fn bad_threshold_is_rejected() {
    let g = grid(3, 3, &[true]);
    let sub = top(&g, path_pattern(2), EdgeRule::Induced);
    let mut p = params(2);
    p.theta = 3;
    assert!(acquire_balance(&sub, &p).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_reductions_are_exact(
        n in 6usize..10,
        choices in proptest::collection::vec(0usize..10_000, 40),
        keep in 700usize..=1000,
        k in 4usize..=5,
        coins in proptest::collection::vec(any::<bool>(), 10),
        induced in any::<bool>(),
        rounds in 0usize..=2,
    ) {
        let g = random_planar(n, &choices, keep);
        prop_assume!(g.is_connected());
        let mut edges = Vec::new();
        let mut i = 0;
        for u in 0..k {
            for v in u + 1..k {
                if coins[i % coins.len()] {
                    edges.push((u, v));
                }
                i += 1;
            }
        }
        let rule = if induced { EdgeRule::Induced } else { EdgeRule::Subgraph };
        let sub = top(&g, pattern(k, &edges), rule);
        let plan = reduced(&sub, rounds);
        prop_assert_eq!(evaluated(&plan), counting_kernel::brute_table(&sub));
    }
}

fn border(rows: usize, cols: usize) -> Vec<usize> {
    (0..cols)
        .chain((1..rows).map(|r| r * cols + cols - 1))
        .chain((0..cols - 1).rev().map(|c| (rows - 1) * cols + c))
        .chain((1..rows - 1).rev().map(|r| r * cols))
        .collect()
}

#[test]
fn duality_paths_reach_the_nested_chain() {
    for (rows, cols, k) in [(3, 3, 2), (4, 4, 2), (4, 5, 3)] {
        let g = grid(rows, cols, &[true, false]);
        let base = top(&g, path_pattern(k), EdgeRule::Induced);
        let all = base.verts.clone();
        let sub = with_monitor(&base, all, 0, 1);
        let geo = Geometry::new(&sub).unwrap();
        let c = geo.cycle(&border(rows, cols)).unwrap();
        let mut p = params(k);
        p.p = 4;
        p.q = 4;
        let leaf = Leaf { sub: sub.clone(), cycle: Some(reduction_suite::AnnotatedCycle::fresh(geo.globals(&c), sub.universe())) };
        let plan = Sparsifier::new(&geo, &p, Selection::Mass(sub.verts.clone())).run(leaf, 1);
        assert_eq!(plan.shape().chains, 1, "{rows}x{cols}: {}", plan.shape());
        assert_golden(&plan);
    }
}

#[test]
fn duality_separators_give_split_cycles() {
    let g = grid(4, 4, &[true, false]);
    let sub = top(&g, pattern(4, &[(0, 1)]), EdgeRule::Subgraph);
    let geo = Geometry::new(&sub).unwrap();
    let c = geo.cycle(&border(4, 4)).unwrap();
    let p = params(4);
    let leaf = Leaf { sub: sub.clone(), cycle: Some(reduction_suite::AnnotatedCycle::fresh(geo.globals(&c), sub.universe())) };
    let core = Sparsifier::new(&geo, &p, Selection::Monitored { side: 1, cycle: 1 });
    let once = core.round(leaf.clone());
    let carried: Vec<_> = once.leaves().into_iter().filter_map(|l| l.cycle.clone()).collect();
    assert!(!carried.is_empty(), "{}", once.shape());
    for ann in &carried {
        assert!(ann.is_consistent());
        assert!(ann.heavy.len() < c.len(), "the separator demotes cycle vertices");
    }
    assert_golden(&core.run(leaf, 2));
}
