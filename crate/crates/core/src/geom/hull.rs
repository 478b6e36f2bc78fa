//! Convex hull via Andrew's monotone chain.

use super::{orient, GeometryError, Point, Polygon};

/// Convex hull of a point set as a counter-clockwise polygon of its extreme
/// points. Points interior to hull edges are dropped, so the result is
/// strictly convex. Fails when all points are collinear within tolerance.
pub fn convex_hull(points: &[Point]) -> Result<Polygon, GeometryError> {
    if points.len() < 3 {
        return Err(GeometryError::DegenerateInput(format!(
            "hull needs at least 3 points, got {}",
            points.len()
        )));
    }
    let mut sorted: Vec<Point> = points.to_vec();
    sorted.sort_by(|a, b| a.lex_cmp(b));
    sorted.dedup_by(|a, b| a.dist(*b) <= super::TAU_BOUNDARY);
    if sorted.len() < 3 {
        return Err(GeometryError::DegenerateInput(
            "fewer than 3 distinct points".to_string(),
        ));
    }

    let mut lower: Vec<Point> = Vec::new();
    for &p in &sorted {
        while lower.len() >= 2 && orient(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<Point> = Vec::new();
    for &p in sorted.iter().rev() {
        while upper.len() >= 2 && orient(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    if lower.len() < 3 {
        return Err(GeometryError::DegenerateInput(
            "all points collinear".to_string(),
        ));
    }
    Polygon::new(lower)
}
