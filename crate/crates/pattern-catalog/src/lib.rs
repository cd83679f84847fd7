//! Pattern graphs, canonical forms and catalogs of pattern separations.

mod canon;
mod pattern;
mod patset;
mod separations;

use thiserror::Error;

pub use canon::{canonical_form, canonize, CanonicalForm, ColoredGraph};
pub use pattern::Pattern;
pub use patset::PatSet;
pub use separations::{
    enumerate_separations, separation_form, sigma_profile, CatalogCache, CatalogEntry, SeparationCatalog,
    SeparationIndex, SeparatorInfo, COLOR_X, COLOR_Y,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CatalogError {
    #[error("patterns are limited to 64 vertices, got {0}")]
    TooLarge(usize),
    #[error("invalid pattern edge {0}-{1}")]
    BadEdge(usize, usize),
    #[error("pattern is not planar")]
    NonPlanar,
}
