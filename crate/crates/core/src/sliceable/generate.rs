//! Random sliceable polygons for tests and benchmarks.
//!
//! Vertices are drawn on a flat ellipse: sorting the angles makes the
//! polygon convex, and the flatness pushes circumcenters of the vertex
//! triangulation far above or below the outline. Draws are rejected until
//! one passes the sliceability test.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{is_sliceable, SliceableError};
use crate::geom::{Point, Polygon};

#[derive(Debug, Clone)]
pub struct GenerationParams {
    pub n: usize,
    pub x_radius: f64,
    pub y_radius: f64,
    /// Smallest allowed distance between any two vertices.
    pub min_separation: f64,
    pub max_attempts: usize,
}

impl GenerationParams {
    /// Flat profile that accepts quickly for up to a dozen vertices.
    pub fn flat(n: usize) -> Self {
        GenerationParams {
            n,
            x_radius: 5.0,
            y_radius: 0.3,
            min_separation: 0.35,
            max_attempts: 10_000,
        }
    }
}

/// A random sliceable polygon with `n` vertices.
pub fn generate_sliceable(n: usize, seed: u64) -> Result<Polygon, SliceableError> {
    generate_sliceable_with(&GenerationParams::flat(n), seed)
}

pub fn generate_sliceable_with(
    params: &GenerationParams,
    seed: u64,
) -> Result<Polygon, SliceableError> {
    if params.n < 3 {
        return Err(SliceableError::BadParams(format!(
            "need at least 3 vertices, got {}",
            params.n
        )));
    }
    if !(params.x_radius > 0.0 && params.y_radius > 0.0 && params.min_separation >= 0.0) {
        return Err(SliceableError::BadParams("radii must be positive".into()));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..params.max_attempts {
        let mut angles: Vec<f64> = (0..params.n)
            .map(|_| rng.random_range(0.0..std::f64::consts::TAU))
            .collect();
        angles.sort_by(f64::total_cmp);
        let pts: Vec<Point> = angles
            .iter()
            .map(|a| Point::new(params.x_radius * a.cos(), params.y_radius * a.sin()))
            .collect();
        for i in 0..pts.len() {
            for j in i + 1..pts.len() {
                if pts[i].dist(pts[j]) < params.min_separation {
                    continue 'attempt;
                }
            }
        }
        let Ok(poly) = Polygon::new(pts) else {
            continue;
        };
        match is_sliceable(&poly) {
            Ok(report) if report.sliceable && report.ordering.is_some() => return Ok(poly),
            _ => {}
        }
    }
    Err(SliceableError::GenerationFailed(params.max_attempts))
}
