//! Geodesic k-site burning of polygonal domains.
//!
//! Given a polygonal domain (a simple polygon, possibly with holes) and a
//! budget of `k` ignition sites placed on domain vertices, the burn time of
//! a site set is the largest geodesic distance from any point of the domain
//! to its nearest site. This crate provides:
//!
//! - robust-enough planar primitives (orientation, circumcircles, Delaunay
//!   triangulation, convex hulls, bisector chords) in [`geom`];
//! - geodesic shortest paths through visibility graphs, distance matrices,
//!   and diameter estimates in [`geodesic`];
//! - burn-time evaluators (exact on convex polygons, sampled in general)
//!   plus exhaustive and greedy solvers in [`burn`];
//! - a sliceability test, vertex orderings, and exact dynamic programs for
//!   sliceable polygons and collinear instances in [`sliceable`];
//! - a reduction pipeline that thickens orthogonal graph drawings into
//!   burn instances whose optimal site sets encode vertex covers, in
//!   [`gadget`];
//! - JSON instance files, SVG rendering, and CSV benchmarking in [`io`].

pub mod burn;
pub mod gadget;
pub mod geodesic;
pub mod geom;
pub mod io;
pub mod sliceable;
