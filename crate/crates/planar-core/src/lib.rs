//! Embedded planar graphs and the structural routines the counting pipeline runs on.

mod cycle;
mod embed;
mod format;
mod graph;
mod layers;
mod plane;
mod treedec;
mod triangulate;
mod vset;

use thiserror::Error;

pub use cycle::{cycle_sides, fundamental_cycle, Cycle, CycleSides, SpanningTree};
pub use embed::{biconnected_blocks, embed};
pub use format::{parse_graph, write_graph, GraphText, ParseError};
pub use graph::{Graph, GraphError};
pub use layers::{baker_slices, bfs_distances_rooted, bfs_layers, default_root, outerplanarity_index, peel_levels};
pub use plane::{Dart, Faces, PlaneGraph};
pub use treedec::{min_fill_decomposition, tree_decomposition_kouterplanar, DecompositionError, TreeDecomposition};
pub use triangulate::{triangulate, FaceScope};
pub use vset::VSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbedError {
    #[error("graph is not planar")]
    NonPlanar,
    #[error("invalid rotation system: {0}")]
    BadRotation(String),
    #[error("Euler's formula fails on a component: {vertices} - {edges} + {faces} != 2")]
    EulerViolated { vertices: usize, edges: usize, faces: usize },
    #[error("operation needs a connected graph")]
    Disconnected,
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("edge {0}-{1} belongs to the spanning tree")]
    TreeEdge(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("rotation system does not match the edge list")]
    RotationMismatch,
}

/// Embedding of parsed text: the given rotation system if present (validated),
/// otherwise a computed one.
pub fn plane_from_text(text: &GraphText) -> Result<PlaneGraph, EmbedError> {
    match &text.rotation {
        Some(rot) => {
            let pg = PlaneGraph::from_rotation(rot.clone())?;
            if pg.graph() != text.graph {
                return Err(EmbedError::RotationMismatch);
            }
            Ok(pg)
        }
        None => embed(&text.graph),
    }
}
