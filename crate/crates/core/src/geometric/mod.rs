//! Quandles built from rotations: the 16-, 24- and 600-cell quandles, their
//! conjugation quotients, and the mosaic quandles {3, n}.

mod conjugation;
mod mosaic;
pub mod polytope;
mod rotation;

use thiserror::Error;

pub use conjugation::{
    build_x16, build_x24, build_x600, build_x_set, rotation_quotient, ConjugationQuandle,
    RotationConjugationQuandle,
};
pub use mosaic::{
    eisenstein_subquandle, spherical_mosaic, EisensteinMosaic, GrowthReport, SphericalMosaic,
};
pub use polytope::{build_cell, build_cell16, build_cell24, build_cell600, Cell, PolytopeQuandle};
pub use rotation::{InvariantReport, RotationQuandle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("rotation table defect: {}", .0.summary())]
    Defect(Box<InvariantReport>),
    #[error("structure: {0}")]
    Structure(String),
    #[error("no rotation assigned to vertex {0}")]
    MissingRotation(String),
    #[error("R_w v is not a vertex (v = {vertex}, w = {rotation_of})")]
    NotInVertexSet { vertex: usize, rotation_of: usize },
    #[error("conjugation set not closed: element {y} conjugating element {x}")]
    NotClosed { x: usize, y: usize },
    #[error("rotation solve failed: {0}")]
    Solve(String),
    #[error("{0}")]
    Unsupported(String),
}
