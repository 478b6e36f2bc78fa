//! Hardness gadget: turns a vertex cover instance drawn on the integer
//! grid into a burning domain.
//!
//! An orthogonal drawing of a graph is subdivided so every edge becomes an
//! odd chain of short straight pieces, then thickened into a thin
//! rectilinear domain of width `2 * epsilon`. Covers of the subdivided
//! graph map to site sets whose burn time stays below a threshold, and any
//! site set missing an edge burns strictly above it, so deciding the
//! threshold decides vertex cover.

mod drawing;
mod subdivide;
mod thicken;
mod union;
mod verify;

pub use drawing::Drawing;
pub use subdivide::{subdivide, HGraph};
pub use thicken::{build_gadget, Gadget, DEFAULT_EPSILON, MAX_EPSILON};
pub use verify::{min_vertex_cover, verify_gadget, EdgeMargin, GadgetReport, SWEEP_CAP};

use thiserror::Error;

use crate::geodesic::GeodesicError;
use crate::geom::GeometryError;

#[derive(Debug, Error)]
pub enum GadgetError {
    #[error("invalid drawing: {0}")]
    InvalidDrawing(String),
    #[error("epsilon {0} out of range: need 0 < epsilon < {max}", max = MAX_EPSILON)]
    EpsilonTooLarge(f64),
    #[error("degenerate thickening: {0}")]
    UnionDegenerate(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error(transparent)]
    Geodesic(#[from] GeodesicError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}
