mod common;

use common::*;
use counting_kernel::{brute_table, EdgeRule, Subproblem};
use num_bigint::BigInt;
use pattern_catalog::PatSet;
use planar_core::outerplanarity_index;
use reduction_suite::{reduce_outerplanarity, Layering, Plan, ReductionError};

fn layered(sub: &Subproblem) -> Box<reduction_suite::LayerPlan> {
    match reduce_outerplanarity(sub).unwrap() {
        Plan::Layers(l) => l,
        other => panic!("layers expected, got {}", other.shape()),
    }
}

#[test]
fn grid_with_an_edge_pattern_matches() {
    let g = grid(5, 5, &[true, false]);
    let sub = top(&g, path_pattern(2), EdgeRule::Induced);
    assert!(outerplanarity_index(&sub.plane()) > 2);
    let plan = reduce_outerplanarity(&sub).unwrap();
    assert_golden(&plan);
}

#[test]
fn disconnected_pattern_matches() {
    let g = grid(5, 6, &[true, true, false]);
    let sub = top(&g, pattern(3, &[(0, 1)]), EdgeRule::Subgraph);
    assert_golden(&reduce_outerplanarity(&sub).unwrap());
}

#[test]
fn upper_bound_is_respected() {
    let g = grid(4, 5, &[false, true]);
    let base = top(&g, pattern(3, &[]), EdgeRule::Induced);
    let all = base.verts.clone();
    let sub = with_monitor(&base, all, 0, 2);
    assert_golden(&reduce_outerplanarity(&sub).unwrap());
}

#[test]
fn pieces_are_certified_and_residues_cover() {
    let g = grid(6, 6, &[true]);
    let sub = top(&g, path_pattern(3), EdgeRule::Induced);
    let plan = layered(&sub);
    assert_eq!(plan.layering, Layering::Breadth);
    assert_eq!(plan.residues.len(), 36);
    assert!(plan.residues.iter().all(|&r| r < 4));
    for piece in plan.pieces() {
        assert!(outerplanarity_index(&piece.sub().plane()) <= 3);
    }
}

/// Signed sum over nonempty deleted residue sets, each term counted directly.
#[test]
fn matches_the_explicit_subset_sum() {
    let g = grid(5, 5, &[true, false, true]);
    let sub = top(&g, pattern(3, &[(0, 1), (1, 2)]), EdgeRule::Subgraph);
    let plan = layered(&sub);
    let modulus = plan.modulus;
    let verts = sub.verts.to_vec();
    let mut signed = BigInt::from(0);
    for r in 1u32..(1 << modulus) {
        let kept = vset(&sub, verts.iter().enumerate().filter(|(i, _)| r >> plan.residues[*i] & 1 == 0).map(|(_, &v)| v));
        let part = sub.on(kept.clone(), sub.boundary.clone(), reduction_suite::restricted(&sub.monitors, &kept));
        let count = BigInt::from(brute_table(&part).class_total(&sub.ctx.index, PatSet::full(3), PatSet::EMPTY));
        if r.count_ones() % 2 == 1 {
            signed += count;
        } else {
            signed -= count;
        }
    }
    let direct = BigInt::from(brute_table(&sub).class_total(&sub.ctx.index, PatSet::full(3), PatSet::EMPTY));
    assert_eq!(signed, direct);
    let combined = BigInt::from(evaluated(&Plan::Layers(plan)).class_total(&sub.ctx.index, PatSet::full(3), PatSet::EMPTY));
    assert_eq!(combined, direct);
}

#[test]
fn needs_an_empty_boundary() {
    let g = grid(3, 3, &[]);
    let base = top(&g, path_pattern(2), EdgeRule::Induced);
    let sub = base.on(base.verts.clone(), vset(&base, [4]), base.monitors.clone());
    assert!(matches!(reduce_outerplanarity(&sub), Err(ReductionError::NotApplicable(_))));
}

#[test]
fn needs_covering_monitors() {
    let g = grid(3, 3, &[]);
    let base = top(&g, path_pattern(2), EdgeRule::Induced);
    let sub = with_monitor(&base, vset(&base, [0, 1]), 0, 1);
    assert!(matches!(reduce_outerplanarity(&sub), Err(ReductionError::NotApplicable(_))));
}
