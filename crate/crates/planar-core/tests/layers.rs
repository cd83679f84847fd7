mod common;

use common::{cycle_graph, grid, peel_rounds, random_planar};
use planar_core::{
    baker_slices, bfs_layers, embed, outerplanarity_index, triangulate, FaceScope, Graph, PlaneGraph,
};
use proptest::prelude::*;

#[test]
fn outerplanarity_examples() {
    assert_eq!(outerplanarity_index(&cycle_graph(6)), 1);
    assert_eq!(outerplanarity_index(&grid(3, 3)), 2);
    let g7 = grid(7, 7);
    assert_eq!(peel_rounds(&g7), 4);
    assert_eq!(outerplanarity_index(&g7), 4);
}

#[test]
fn bfs_layer_examples() {
    let path = embed(&Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()).unwrap();
    assert_eq!(bfs_layers(&path, 0, 2).unwrap(), vec![0, 1, 0]);
    let tri = embed(&Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()).unwrap();
    assert_eq!(bfs_layers(&tri, 0, 3).unwrap(), vec![0, 1, 1]);
    assert!(bfs_layers(&tri, 0, 0).is_err());
}

fn without(g: &PlaneGraph, drop: &[bool]) -> PlaneGraph {
    let keep: Vec<usize> = (0..g.n()).filter(|&v| !drop[v]).collect();
    g.induced(&keep)
}

#[test]
fn grid_5x5_residue_removal() {
    let g = grid(5, 5);
    let layer = bfs_layers(&g, 0, 3).unwrap();
    for class in 0..3 {
        let drop: Vec<bool> = layer.iter().map(|&l| l == class).collect();
        assert!(peel_rounds(&without(&g, &drop)) <= 3);
    }
}

#[test]
fn triangulate_examples() {
    let tri = embed(&Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()).unwrap();
    assert!(triangulate(&tri, FaceScope::Inner).unwrap().delta().is_empty());
    let c4 = cycle_graph(4);
    let t = triangulate(&c4, FaceScope::Inner).unwrap();
    assert_eq!(t.delta().len(), 1);
    // wheel with a second rim: 2-outerplanar
    let mut edges = Vec::new();
    for i in 0..6 {
        edges.push((i, (i + 1) % 6));
        edges.push((i, 6 + i));
        edges.push((6 + i, 6 + (i + 1) % 6));
        edges.push((6 + i, 12));
    }
    let edges: Vec<_> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    let wheelish = embed(&Graph::from_edges(13, &edges).unwrap()).unwrap();
    assert!(outerplanarity_index(&wheelish) <= 3);
    let tw = triangulate(&wheelish, FaceScope::Inner).unwrap();
    assert!(outerplanarity_index(&tw) <= outerplanarity_index(&wheelish) + 1);
}

#[test]
fn disconnected_triangulation_is_rejected() {
    let g = embed(&Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()).unwrap();
    assert!(triangulate(&g, FaceScope::Inner).is_err());
}

#[test]
fn baker_examples() {
    let star = embed(&Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap()).unwrap();
    let slices = baker_slices(&star, 2).unwrap();
    for a in 0..6 {
        for b in a + 1..6 {
            assert!(slices.iter().any(|s| s.contains(&a) && s.contains(&b)));
        }
    }
    let g = grid(6, 6);
    let slices = baker_slices(&g, 3).unwrap();
    for a in 0..36 {
        for b in a + 1..36 {
            for c in b + 1..36 {
                assert!(slices.iter().any(|s| s.contains(&a) && s.contains(&b) && s.contains(&c)));
            }
        }
    }
    for s in &slices {
        assert!(outerplanarity_index(&g.induced(s)) <= 3);
    }
    assert!(baker_slices(&g, 0).is_err());
}

proptest! {
    #[test]
    fn face_bfs_levels_match_peeling(n in 3usize..30, choices in prop::collection::vec(0usize..10_000, 1..100), keep in 400usize..1001) {
        let pg = embed(&random_planar(n, &choices, keep)).unwrap();
        prop_assert_eq!(outerplanarity_index(&pg), peel_rounds(&pg));
    }

    #[test]
    fn triangulation_is_complete_and_idempotent(n in 3usize..30, choices in prop::collection::vec(0usize..10_000, 1..100), keep in 400usize..1001) {
        let g = random_planar(n, &choices, keep);
        let pg = embed(&g).unwrap();
        let Some(comp) = pg.components().into_iter().max_by_key(Vec::len) else { return Ok(()) };
        let pg = pg.induced(&comp);
        for scope in [FaceScope::Inner, FaceScope::All] {
            let t = triangulate(&pg, scope).unwrap();
            t.validate().unwrap();
            let faces = t.faces();
            let outer = t.outer_face_ids(&faces);
            for (id, f) in faces.faces.iter().enumerate() {
                if pg.n() >= 3 && (scope == FaceScope::All || !outer.contains(&id)) {
                    prop_assert_eq!(f.len(), 3);
                }
            }
            let mut base = t.graph();
            let delta: Vec<_> = t.delta().to_vec();
            let edges: Vec<_> = base.edges().filter(|e| !delta.contains(e)).collect();
            base = Graph::from_edges(t.n(), &edges).unwrap();
            prop_assert_eq!(base, pg.graph());
            let again = triangulate(&t, scope).unwrap();
            prop_assert_eq!(again.delta().len(), t.delta().len());
            if scope == FaceScope::Inner {
                prop_assert!(outerplanarity_index(&t) <= outerplanarity_index(&pg) + 1);
            }
        }
    }

    #[test]
    fn removing_a_residue_class_bounds_outerplanarity(n in 3usize..30, choices in prop::collection::vec(0usize..10_000, 1..100), modulus in 1usize..5) {
        let pg = embed(&random_planar(n, &choices, 800)).unwrap();
        let root = planar_core::default_root(&pg);
        let layer = bfs_layers(&pg, root, modulus).unwrap();
        for class in 0..modulus {
            let drop: Vec<bool> = layer.iter().map(|&l| l == class).collect();
            prop_assert!(peel_rounds(&without(&pg, &drop)) <= modulus);
        }
    }

    #[test]
    fn baker_slices_cover_small_sets(n in 3usize..12, choices in prop::collection::vec(0usize..10_000, 1..60), k in 1usize..4) {
        let pg = embed(&random_planar(n, &choices, 800)).unwrap();
        let slices = baker_slices(&pg, k).unwrap();
        for s in &slices {
            prop_assert!(peel_rounds(&pg.induced(s)) <= k + 1);
        }
        let n = pg.n();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize <= k {
                let set: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
                prop_assert!(slices.iter().any(|s| set.iter().all(|v| s.contains(v))));
            }
        }
    }
}
