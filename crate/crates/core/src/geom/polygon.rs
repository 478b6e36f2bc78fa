//! Simple polygons and point location.

use super::{orient, properly_crosses, GeometryError, Point, Segment, TAU_BOUNDARY};

/// Result of locating a point relative to a polygon (or domain) boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Inside,
    Boundary,
    Outside,
}

/// A simple polygon stored as a counter-clockwise vertex chain.
///
/// Collinear runs of vertices are allowed (axis-aligned unions produce
/// them); coincident consecutive vertices, spikes, self-intersections and
/// zero area are not.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Point>,
}

impl Polygon {
    pub fn new(vertices: Vec<Point>) -> Result<Self, GeometryError> {
        if vertices.len() < 3 {
            return Err(GeometryError::InvalidPolygon(format!(
                "need at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        for (i, v) in vertices.iter().enumerate() {
            if !v.is_finite() {
                return Err(GeometryError::InvalidPolygon(format!(
                    "vertex {i} is not finite"
                )));
            }
        }
        let n = vertices.len();
        for i in 0..n {
            let j = (i + 1) % n;
            if vertices[i].dist(vertices[j]) <= TAU_BOUNDARY {
                return Err(GeometryError::InvalidPolygon(format!(
                    "vertices {i} and {j} coincide"
                )));
            }
        }
        // Spikes: consecutive edges that double back along the same line.
        for i in 0..n {
            let p = vertices[(i + n - 1) % n];
            let c = vertices[i];
            let q = vertices[(i + 1) % n];
            if orient(p, c, q) == 0 {
                let dot = (c.x - p.x) * (q.x - c.x) + (c.y - p.y) * (q.y - c.y);
                if dot < 0.0 {
                    return Err(GeometryError::InvalidPolygon(format!(
                        "spike at vertex {i}"
                    )));
                }
            }
        }
        // Simplicity: non-adjacent edges must stay clear of each other.
        for i in 0..n {
            let (a1, b1) = (vertices[i], vertices[(i + 1) % n]);
            for j in (i + 1)..n {
                if j == i || (j + 1) % n == i || (i + 1) % n == j {
                    continue;
                }
                let (a2, b2) = (vertices[j], vertices[(j + 1) % n]);
                if properly_crosses(a1, b1, a2, b2) {
                    return Err(GeometryError::InvalidPolygon(format!(
                        "edges {i} and {j} cross"
                    )));
                }
                let s1 = Segment::new(a1, b1);
                let s2 = Segment::new(a2, b2);
                // Endpoint contact between non-adjacent edges pinches the
                // chain; only truly shared chain vertices are adjacent.
                if s1.dist_to_point(a2) <= TAU_BOUNDARY
                    || s1.dist_to_point(b2) <= TAU_BOUNDARY
                    || s2.dist_to_point(a1) <= TAU_BOUNDARY
                    || s2.dist_to_point(b1) <= TAU_BOUNDARY
                {
                    return Err(GeometryError::InvalidPolygon(format!(
                        "edges {i} and {j} touch"
                    )));
                }
            }
        }
        let area = signed_area(&vertices);
        if area.abs() <= TAU_BOUNDARY {
            return Err(GeometryError::InvalidPolygon(
                "zero enclosed area".to_string(),
            ));
        }
        let mut vertices = vertices;
        if area < 0.0 {
            vertices.reverse();
        }
        Ok(Polygon { vertices })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertex(&self, i: usize) -> Point {
        self.vertices[i]
    }

    /// Edge from vertex `i` to vertex `i + 1` (cyclic).
    pub fn edge(&self, i: usize) -> Segment {
        Segment::new(
            self.vertices[i],
            self.vertices[(i + 1) % self.vertices.len()],
        )
    }

    pub fn edges(&self) -> impl Iterator<Item = Segment> + '_ {
        (0..self.vertices.len()).map(move |i| self.edge(i))
    }

    pub fn area(&self) -> f64 {
        signed_area(&self.vertices)
    }

    pub fn perimeter(&self) -> f64 {
        self.edges().map(|e| e.len()).sum()
    }

    /// True when every turn is counter-clockwise or straight.
    pub fn is_convex(&self) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| {
            orient(
                self.vertices[i],
                self.vertices[(i + 1) % n],
                self.vertices[(i + 2) % n],
            ) >= 0
        })
    }

    pub fn bbox(&self) -> (Point, Point) {
        let mut lo = self.vertices[0];
        let mut hi = self.vertices[0];
        for v in &self.vertices {
            lo.x = lo.x.min(v.x);
            lo.y = lo.y.min(v.y);
            hi.x = hi.x.max(v.x);
            hi.y = hi.y.max(v.y);
        }
        (lo, hi)
    }
}

fn signed_area(vertices: &[Point]) -> f64 {
    let n = vertices.len();
    let mut acc = 0.0;
    for i in 0..n {
        let p = vertices[i];
        let q = vertices[(i + 1) % n];
        acc += p.x * q.y - q.x * p.y;
    }
    acc / 2.0
}

/// Locate `p` relative to `poly`: points within [`TAU_BOUNDARY`] of an edge
/// are `Boundary`, otherwise an even-odd crossing count decides.
pub fn point_in_polygon(p: Point, poly: &Polygon) -> Location {
    for e in poly.edges() {
        if e.dist_to_point(p) <= TAU_BOUNDARY {
            return Location::Boundary;
        }
    }
    if crossing_parity(p, poly.vertices()) {
        Location::Inside
    } else {
        Location::Outside
    }
}

/// Even-odd ray crossing test with the half-open edge rule, which handles
/// rays through vertices without double counting. Callers must have ruled
/// out boundary contact first.
fn crossing_parity(p: Point, vertices: &[Point]) -> bool {
    let n = vertices.len();
    let mut inside = false;
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        if (a.y > p.y) != (b.y > p.y) {
            let x_at = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if p.x < x_at {
                inside = !inside;
            }
        }
    }
    inside
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_square() -> Polygon {
        Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap()
    }

    #[test]
    fn normalizes_to_ccw() {
        let p = Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(0.0, 1.0),
            Point::new(1.0, 1.0),
            Point::new(1.0, 0.0),
        ])
        .unwrap();
        assert!(p.area() > 0.0);
    }

    #[test]
    fn rejects_degenerate_chains() {
        assert!(Polygon::new(vec![Point::new(0.0, 0.0), Point::new(1.0, 0.0)]).is_err());
        // Coincident consecutive vertices.
        assert!(Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(0.0, 0.0),
            Point::new(1.0, 1.0),
        ])
        .is_err());
        // Self-intersecting bowtie.
        assert!(Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(2.0, 2.0),
            Point::new(2.0, 0.0),
            Point::new(0.0, 2.0),
        ])
        .is_err());
        // Collinear zero-area chain.
        assert!(Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(2.0, 0.0),
        ])
        .is_err());
    }

    #[test]
    fn accepts_collinear_runs() {
        // A rectangle with an extra vertex mid-edge is fine.
        let p = Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(2.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap();
        assert_eq!(p.len(), 5);
        assert!(p.is_convex());
    }

    #[test]
    fn point_location_square() {
        let sq = unit_square();
        assert_eq!(
            point_in_polygon(Point::new(0.5, 0.5), &sq),
            Location::Inside
        );
        assert_eq!(
            point_in_polygon(Point::new(0.5, 0.0), &sq),
            Location::Boundary
        );
        assert_eq!(
            point_in_polygon(Point::new(1.0, 1.0), &sq),
            Location::Boundary
        );
        assert_eq!(
            point_in_polygon(Point::new(1.5, 0.5), &sq),
            Location::Outside
        );
        // Within boundary tolerance.
        assert_eq!(
            point_in_polygon(Point::new(0.5, -1e-12), &sq),
            Location::Boundary
        );
        // Ray level with the top edge, left of the square.
        assert_eq!(
            point_in_polygon(Point::new(-0.5, 0.5), &sq),
            Location::Outside
        );
    }

    #[test]
    fn ray_through_vertex_level() {
        // Diamond: query point level with the left/right vertices.
        let d = Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, -1.0),
            Point::new(2.0, 0.0),
            Point::new(1.0, 1.0),
        ])
        .unwrap();
        assert_eq!(point_in_polygon(Point::new(1.0, 0.0), &d), Location::Inside);
        assert_eq!(
            point_in_polygon(Point::new(-1.0, 0.0), &d),
            Location::Outside
        );
        assert_eq!(
            point_in_polygon(Point::new(3.0, 0.0), &d),
            Location::Outside
        );
    }

    #[test]
    fn convexity_and_measures() {
        let sq = unit_square();
        assert!(sq.is_convex());
        assert!((sq.area() - 1.0).abs() < 1e-12);
        assert!((sq.perimeter() - 4.0).abs() < 1e-12);
        let l_shape = Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(2.0, 0.0),
            Point::new(2.0, 1.0),
            Point::new(1.0, 1.0),
            Point::new(1.0, 2.0),
            Point::new(0.0, 2.0),
        ])
        .unwrap();
        assert!(!l_shape.is_convex());
    }
}
