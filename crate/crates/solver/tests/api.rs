mod common;

use common::*;
use num_bigint::BigUint;
use planar_core::Graph;
use solver::{
    count_directed, count_ind, count_sub, directed_automorphisms, pattern_automorphisms, Digraph, Mode, Semantics,
    SolverConfig, SolverError,
};

fn modes() -> Vec<SolverConfig> {
    [Mode::Brute, Mode::Treewidth, Mode::Full, Mode::Auto]
        .into_iter()
        .map(|m| SolverConfig::default().with_mode(m))
        .chain([SolverConfig::desk()])
        .collect()
}

#[test]
fn single_vertex_counts_host_vertices() {
    let g = grid(3, 3);
    for cfg in modes() {
        assert_eq!(count_ind(&pattern(1, &[]), &g, &cfg).unwrap().count, BigUint::from(9u32));
    }
}

#[test]
fn independent_pair_in_a_path() {
    let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    for cfg in modes() {
        assert_eq!(count_ind(&pattern(2, &[]), &g, &cfg).unwrap().count, BigUint::from(2u32));
    }
}

#[test]
fn four_cycle_in_grid_matches_oracle() {
    let g = grid(4, 4);
    let p = cycle(4);
    let expected = oracle(&p, &g, true);
    assert_eq!(expected, BigUint::from(72u32));
    for cfg in modes() {
        assert_eq!(count_ind(&p, &g, &cfg).unwrap().count, expected, "{:?}", cfg.mode);
    }
}

#[test]
fn edge_and_short_path_subgraph_counts() {
    let g = grid(3, 3);
    let triangle = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    for cfg in modes() {
        assert_eq!(count_sub(&path(2), &g, &cfg).unwrap().count, BigUint::from(2 * g.m()));
        assert_eq!(count_sub(&path(3), &triangle, &cfg).unwrap().count, BigUint::from(6u32));
    }
}

#[test]
fn directed_examples() {
    let cfg = SolverConfig::default();
    let tri = Digraph::new(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
    assert_eq!(count_directed(&tri, &tri, &cfg).unwrap().count, BigUint::from(3u32));
    let arc = Digraph::new(2, &[(0, 1)]).unwrap();
    let host = Digraph::new(4, &[(0, 1), (1, 2), (3, 2), (2, 0), (0, 3)]).unwrap();
    assert_eq!(count_directed(&arc, &host, &cfg).unwrap().count, BigUint::from(5u32));
    assert_eq!(directed_automorphisms(&tri).unwrap(), BigUint::from(3u32));
}

#[test]
fn directed_path_in_directed_grid() {
    let g = grid(3, 3);
    let arcs: Vec<(usize, usize)> = g.edges().map(|(a, b)| if (a + b) % 3 == 0 { (b, a) } else { (a, b) }).collect();
    let host = Digraph::new(9, &arcs).unwrap();
    let p = Digraph::new(3, &[(0, 1), (1, 2)]).unwrap();
    let expected = directed_oracle(&p, &host);
    assert_eq!(count_directed(&p, &host, &SolverConfig::default()).unwrap().count, expected);
}

#[test]
fn non_planar_inputs() {
    let k5: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let host = Graph::from_edges(5, &k5).unwrap();
    assert!(matches!(count_ind(&path(2), &host, &SolverConfig::default()), Err(SolverError::NonPlanarHost)));
    let res = count_ind(&pattern(5, &k5), &grid(3, 3), &SolverConfig::default()).unwrap();
    assert_eq!(res.count, BigUint::default());
    assert!(res.note.is_some());
}

#[test]
fn vertex_subsets_divide_exactly() {
    let g = grid(3, 4);
    for p in [path(3), cycle(4), pattern(3, &[]), pattern(4, &[(0, 1), (2, 3)])] {
        let maps = count_ind(&p, &g, &SolverConfig::default()).unwrap();
        let aut = pattern_automorphisms(&p);
        let sets = maps.clone().into_subsets(&aut).unwrap();
        assert_eq!(sets.semantics, Semantics::InducedSubsets);
        assert_eq!(sets.count * aut, maps.count);
    }
}

#[test]
fn disconnected_host_combines_components() {
    let g = Graph::from_edges(7, &[(0, 1), (1, 2), (3, 4), (5, 6), (4, 5)]).unwrap();
    for p in [path(2), path(3), pattern(3, &[]), pattern(4, &[(0, 1), (2, 3)])] {
        let expected = oracle(&p, &g, true);
        for cfg in modes() {
            assert_eq!(count_ind(&p, &g, &cfg).unwrap().count, expected, "{:?}", cfg.mode);
        }
    }
}
