use counting_kernel::EdgeRule;
use num_bigint::BigUint;
use oracle_harness::*;
use pattern_catalog::{PatSet, Pattern};
use planar_core::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    Graph::from_edges(n, &edges).unwrap()
}

#[test]
fn oracle_examples() {
    let triangle = Pattern::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    assert_eq!(oracle_count(&triangle, &complete(4), EdgeRule::Induced, &Constraints::default()).unwrap(), big(24));
    let matching = Pattern::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    let path4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    assert_eq!(oracle_count(&matching, &path4, EdgeRule::Subgraph, &Constraints::default()).unwrap(), big(8));
}

#[test]
fn pins_count_extensions() {
    let path3 = Pattern::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let host = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)]).unwrap();
    let free = oracle_count(&path3, &host, EdgeRule::Subgraph, &Constraints::default()).unwrap();
    let mut by_pin = BigUint::default();
    for h in 0..5 {
        let c = Constraints { pins: vec![(1, h)], ..Constraints::default() };
        by_pin += oracle_count(&path3, &host, EdgeRule::Subgraph, &c).unwrap();
    }
    assert_eq!(free, by_pin);
    let domain = Constraints { domain: Some(PatSet::single(0)), ..Constraints::default() };
    assert_eq!(oracle_count(&path3, &host, EdgeRule::Subgraph, &domain).unwrap(), big(5));
    let hits = Constraints { hits: vec![(vec![0, 4], 2)], ..Constraints::default() };
    assert_eq!(oracle_count(&path3, &host, EdgeRule::Subgraph, &hits).unwrap(), big(0));
}

#[test]
fn budget_is_enforced() {
    let p = Pattern::from_edges(6, &[]).unwrap();
    let err = oracle_count_within(&p, &complete(4).induced(&[0, 1, 2, 3]), EdgeRule::Induced, &Constraints::default(), 1.0);
    assert!(err.is_ok(), "k > n costs nothing");
    let g = Graph::empty(30);
    assert!(matches!(oracle_count_within(&p, &g, EdgeRule::Induced, &Constraints::default(), 1e6), Err(HarnessError::Budget(_))));
}

#[test]
fn grid_independent_set_examples() {
    assert_eq!(grid_independent_sets(2, 2, 2), big(2));
    assert_eq!(grid_independent_sets(4, 5, 0), big(1));
    assert_eq!(grid_independent_sets(4, 5, 1), big(20));
    for rows in 1..=6 {
        for cols in 1..=6 {
            for k in 0..=6 {
                assert_eq!(
                    grid_independent_sets(rows, cols, k),
                    grid_independent_sets_enumerated(rows, cols, k).unwrap(),
                    "{rows}x{cols} k={k}"
                );
            }
        }
    }
}

#[test]
fn generated_hosts_are_valid_and_seeded() {
    for kind in HostKind::ALL {
        for n in 1..=14 {
            for seed in 0..5 {
                let a = host(kind, n, &mut ChaCha8Rng::seed_from_u64(seed));
                validate_host(&a).unwrap();
                let b = host(kind, n, &mut ChaCha8Rng::seed_from_u64(seed));
                assert_eq!(a, b);
            }
        }
    }
    for kind in PatternKind::ALL {
        for k in 1..=5 {
            let p = pattern(kind, k, &mut ChaCha8Rng::seed_from_u64(k as u64));
            assert_eq!(p.k(), k);
            validate_host(&p.to_graph()).unwrap();
        }
    }
}

#[test]
fn oracle_self_consistency() {
    for spec in cases(Profile::Ci, 3).into_iter().take(60) {
        let ind = ground_truth(&spec, EdgeRule::Induced).unwrap();
        let sub = ground_truth(&spec, EdgeRule::Subgraph).unwrap();
        assert!(ind <= sub, "{spec:?}");
        let aut = solver::pattern_automorphisms(&spec.pattern_graph());
        assert_eq!(&ind % &aut, BigUint::default());
        assert_eq!(&sub % &aut, BigUint::default());
    }
}

#[test]
fn small_suite_passes_and_is_stable() {
    let specs: Vec<_> = cases(Profile::Ci, 11).into_iter().take(40).collect();
    let a = run_suite(&specs, &SuiteOptions { seed: 11, fault: None }).unwrap();
    assert!(a.all_passed(), "{:?}", a.failed);
    let b = run_suite(&specs, &SuiteOptions { seed: 11, fault: None }).unwrap();
    assert_eq!(a.to_json(), b.to_json());
}

#[test]
fn injected_fault_is_detected() {
    let specs: Vec<_> = cases(Profile::Ci, 11).into_iter().take(10).collect();
    let report = run_suite(&specs, &SuiteOptions { seed: 11, fault: Some(4) }).unwrap();
    assert_eq!(report.failed, vec![4]);
}
