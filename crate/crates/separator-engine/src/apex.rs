use std::collections::BTreeSet;

use planar_core::{Cycle, Graph, PlaneGraph};

use crate::alignment::{Alignment, Direction};
use crate::chain::SeparatorChain;
use crate::menger::{menger_duality, validate_outcome, MengerOutcome};
use crate::noncrossing::sort_noncrossing;
use crate::SeparatorError;

/// A plane graph with one extra vertex per alignment arc, adjacent to that arc and placed in
/// the face bounded by the cycle. Base vertices keep their ids; apexes follow them.
#[derive(Clone, Debug)]
pub struct ApexGraph {
    pub plane: PlaneGraph,
    pub base: usize,
    /// Cycle vertices just before and just after each arc along the face walk.
    flanks: [[usize; 2]; 4],
}

impl ApexGraph {
    pub fn apex(&self, d: Direction) -> usize {
        self.base + d.index()
    }

    /// Underlying graph with the edges of the listed apexes removed (ids unchanged).
    pub fn without(&self, dropped: &[Direction]) -> Graph {
        let gone: Vec<usize> = dropped.iter().map(|&d| self.apex(d)).collect();
        let edges: Vec<(usize, usize)> =
            self.plane.edges().filter(|(u, v)| !gone.contains(u) && !gone.contains(v)).collect();
        Graph::from_edges(self.plane.n(), &edges).expect("subgraph of a simple graph")
    }

    /// [`ApexGraph::without`], with every kept apex also joined to the two cycle vertices
    /// flanking its arc. Still planar (the new edges run through the face holding the apexes).
    /// Non-crossing paths between the dropped apexes form a chain in this graph even when one
    /// of them swallows a whole kept arc.
    pub fn widened(&self, dropped: &[Direction]) -> Graph {
        let mut edges: BTreeSet<(usize, usize)> = self.without(dropped).edges().collect();
        for d in Direction::ALL.into_iter().filter(|d| !dropped.contains(d)) {
            for v in self.flanks[d.index()] {
                edges.insert((v, self.apex(d)));
            }
        }
        let edges: Vec<(usize, usize)> = edges.into_iter().collect();
        Graph::from_edges(self.plane.n(), &edges).expect("flank edges join base vertices to apexes")
    }
}

/// The vertices of `c` in the traversal order of a face of `g` bounded by `c`.
pub fn boundary_walk(g: &PlaneGraph, c: &Cycle) -> Result<Vec<usize>, SeparatorError> {
    let faces = g.faces();
    let mut candidates: Vec<usize> = g.outer_darts().iter().filter_map(|&d| faces.face_of(d)).collect();
    candidates.extend(0..faces.len());
    let len = c.len();
    let verts = c.vertices();
    for id in candidates {
        let walk = faces.vertices(id);
        if walk.len() != len {
            continue;
        }
        let Some(offset) = walk.iter().position(|&v| v == verts[0]) else { continue };
        let forward = (0..len).all(|i| walk[(offset + i) % len] == verts[i]);
        let backward = (0..len).all(|i| walk[(offset + len - i) % len] == verts[i]);
        if forward || backward {
            return Ok(walk);
        }
    }
    Err(SeparatorError::NotOnBoundary)
}

/// Inserts the four apexes into the face bounded by the alignment's cycle.
pub fn apex_graph(g: &PlaneGraph, a: &Alignment) -> Result<ApexGraph, SeparatorError> {
    let walk = boundary_walk(g, a.cycle())?;
    let len = walk.len();
    let pos = |v: usize| walk.iter().position(|&w| w == v).expect("cycle vertex");
    let base = g.n();
    let mut rot: Vec<Vec<usize>> = (0..base).map(|v| g.rotation(v).to_vec()).collect();
    let mut flanks = [[0; 2]; 4];
    for d in Direction::ALL {
        let apex = base + d.index();
        let arc = a.arc(d);
        let first = arc
            .iter()
            .copied()
            .find(|&v| !arc.contains(&walk[(pos(v) + len - 1) % len]))
            .unwrap_or(arc[0]);
        let ordered: Vec<usize> = (0..arc.len()).map(|i| walk[(pos(first) + i) % len]).collect();
        flanks[d.index()] = [walk[(pos(first) + len - 1) % len], walk[(pos(first) + arc.len()) % len]];
        for &u in &ordered {
            let before = walk[(pos(u) + len - 1) % len];
            let at = rot[u].iter().position(|&x| x == before).expect("walk neighbour");
            rot[u].insert(at + 1, apex);
        }
        rot.push(ordered.into_iter().rev().collect());
    }
    Ok(ApexGraph { plane: PlaneGraph::from_rotation(rot)?, base, flanks })
}

/// Duality between the down and up apexes with the side apexes removed. Separators are
/// returned as found; paths are sorted non-crossing, and their interiors must form a chain
/// of (left, right)-separators in [`ApexGraph::widened`] without the down and up apexes.
pub fn menger_plus(g: &PlaneGraph, a: &Alignment, p: usize, q: usize) -> Result<MengerOutcome, SeparatorError> {
    let apexes = apex_graph(g, a)?;
    let [left, down, right, up] = Direction::ALL.map(|d| apexes.apex(d));
    let vertical = apexes.without(&[Direction::Left, Direction::Right]);
    match menger_duality(&vertical, down, up, p, q)? {
        found @ MengerOutcome::DisjointSeparators(_) => Ok(found),
        MengerOutcome::NearlyDisjointPaths { paths, .. } => {
            let sorted = sort_noncrossing(&apexes.plane, &paths, down, up)
                .map_err(|e| SeparatorError::NoOutcome(format!("sorting failed: {e}")))?;
            let horizontal = apexes.widened(&[Direction::Down, Direction::Up]);
            let interiors = |ps: &[Vec<usize>]| ps.iter().map(|p| p[1..p.len() - 1].iter().copied().collect()).collect();
            let forward = SeparatorChain::new(left, right, interiors(&sorted));
            let (paths, chain) = if forward.validate(&horizontal).is_ok() {
                (sorted, forward)
            } else {
                let reversed: Vec<Vec<usize>> = sorted.into_iter().rev().collect();
                let chain = SeparatorChain::new(left, right, interiors(&reversed));
                chain.validate(&horizontal).map_err(|e| SeparatorError::NoOutcome(e.to_string()))?;
                (reversed, chain)
            };
            let outcome = MengerOutcome::NearlyDisjointPaths { paths, chain };
            validate_outcome(&vertical, &outcome, p, q).map_err(|e| SeparatorError::NoOutcome(e.to_string()))?;
            Ok(outcome)
        }
    }
}
