mod common;

use common::*;
use counting_kernel::{EdgeRule, Subproblem};
use reduction_suite::{reduce_nearly_disjoint_paths, NestedCycle, Plan, ReductionError};

const SIDE: usize = 7;

fn depth(v: usize) -> usize {
    let (r, c) = (v / SIDE, v % SIDE);
    r.min(c).min(SIDE - 1 - r).min(SIDE - 1 - c)
}

fn rings(sub: &Subproblem, count: usize, extra: &[(usize, usize)]) -> Vec<NestedCycle> {
    (0..count)
        .map(|i| {
            let mut ring = vset(sub, (0..SIDE * SIDE).filter(|&v| depth(v) == i));
            for &(at, v) in extra {
                if at == i {
                    ring.insert(v);
                }
            }
            NestedCycle { ring, region: vset(sub, (0..SIDE * SIDE).filter(|&v| depth(v) >= i)) }
        })
        .collect()
}

fn square() -> planar_core::Graph {
    grid(SIDE, SIDE, &[true, false, false])
}

#[test]
fn disjoint_rings_match() {
    let sub = top(&square(), path_pattern(2), EdgeRule::Induced);
    let plan = reduce_nearly_disjoint_paths(&sub, rings(&sub, 3, &[])).unwrap();
    assert!(matches!(plan, Plan::Chain(_)));
    assert_golden(&plan);
}

#[test]
fn rings_sharing_vertices_match() {
    let sub = top(&square(), pattern(2, &[]), EdgeRule::Subgraph);
    // ring 0 borrows a vertex of ring 1, ring 1 one of ring 2
    let extra = [(0, SIDE + 3), (1, 2 * SIDE + 3)];
    let plan = reduce_nearly_disjoint_paths(&sub, rings(&sub, 3, &extra)).unwrap();
    let Plan::Chain(chain) = &plan else { panic!("chain expected") };
    assert_eq!(chain.public(0).to_vec(), vec![SIDE + 3]);
    assert_golden(&plan);
}

#[test]
fn small_upper_bound_needs_fewer_rings() {
    let base = top(&square(), path_pattern(3), EdgeRule::Subgraph);
    let all = base.verts.clone();
    let sub = with_monitor(&base, all, 0, 1);
    let plan = reduce_nearly_disjoint_paths(&sub, rings(&sub, 2, &[(0, SIDE + 1)])).unwrap();
    assert_golden(&plan);
}

#[test]
fn boundary_vertices_are_kept() {
    let base = top(&square(), path_pattern(2), EdgeRule::Induced);
    let boundary = vset(&base, [0, 24, 3 * SIDE + 1]);
    let sub = base.on(base.verts.clone(), boundary, base.monitors.clone());
    assert_golden(&reduce_nearly_disjoint_paths(&sub, rings(&sub, 3, &[(1, 2 * SIDE + 2)])).unwrap());
}

#[test]
fn too_few_rings_are_rejected() {
    let sub = top(&square(), path_pattern(3), EdgeRule::Induced);
    let err = reduce_nearly_disjoint_paths(&sub, rings(&sub, 3, &[])).unwrap_err();
    assert!(matches!(err, ReductionError::ChainRejected(_)));
}

#[test]
fn non_separating_ring_is_rejected() {
    let sub = top(&square(), path_pattern(2), EdgeRule::Induced);
    let mut cycles = rings(&sub, 3, &[]);
    cycles[1].ring.remove(SIDE + 1);
    let err = reduce_nearly_disjoint_paths(&sub, cycles).unwrap_err();
    assert!(matches!(err, ReductionError::ChainRejected(_)));
}

#[test]
fn regions_must_nest() {
    let sub = top(&square(), path_pattern(2), EdgeRule::Induced);
    let mut cycles = rings(&sub, 3, &[]);
    cycles.swap(1, 2);
    assert!(reduce_nearly_disjoint_paths(&sub, cycles).is_err());
}
