//! Planar geometry primitives and predicates.
//!
//! Everything downstream (visibility graphs, burn-time evaluation, the
//! dynamic programs, gadget construction) is built on the types and
//! predicates in this module. Inputs are expected at "desk scale", i.e.
//! coordinates that fit comfortably in [0, 100]^2; the absolute tolerances
//! below are calibrated for that range.

mod bisector;
mod delaunay;
mod earclip;
mod hull;
mod polygon;

pub use bisector::bisector_chord;
pub use delaunay::{delaunay, Triangulation};
pub use earclip::triangulate_simple;
pub use hull::convex_hull;
pub use polygon::{point_in_polygon, Location, Polygon};

use thiserror::Error;

/// Orientation predicate tolerance: a cross product with absolute value at
/// or below this is reported as collinear.
pub const TAU_ORIENT: f64 = 1e-9;
/// In-circle predicate tolerance: determinants within this of zero are
/// treated as cocircular.
pub const TAU_INCIRCLE: f64 = 1e-9;
/// Distance within which a point is considered to lie on a boundary.
pub const TAU_BOUNDARY: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum GeometryError {
    #[error("triangle vertices are collinear within tolerance")]
    CollinearTriangle,
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("bisector meets the boundary in fewer than two distinct points")]
    DegenerateChord,
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
}

/// A point in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn dist(&self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn dist_sq(&self, other: Point) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        dx * dx + dy * dy
    }

    pub fn lerp(&self, other: Point, t: f64) -> Point {
        Point::new(
            self.x + (other.x - self.x) * t,
            self.y + (other.y - self.y) * t,
        )
    }

    pub fn midpoint(&self, other: Point) -> Point {
        self.lerp(other, 0.5)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Lexicographic comparison (x first, then y). Total because inputs are
    /// validated to be finite.
    pub fn lex_cmp(&self, other: &Point) -> std::cmp::Ordering {
        self.x
            .total_cmp(&other.x)
            .then_with(|| self.y.total_cmp(&other.y))
    }
}

/// A closed segment between two points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        Segment { a, b }
    }

    pub fn len(&self) -> f64 {
        self.a.dist(self.b)
    }

    /// Euclidean distance from `p` to the closed segment.
    pub fn dist_to_point(&self, p: Point) -> f64 {
        let dx = self.b.x - self.a.x;
        let dy = self.b.y - self.a.y;
        let len_sq = dx * dx + dy * dy;
        if len_sq == 0.0 {
            return self.a.dist(p);
        }
        let t = ((p.x - self.a.x) * dx + (p.y - self.a.y) * dy) / len_sq;
        let t = t.clamp(0.0, 1.0);
        p.dist(Point::new(self.a.x + t * dx, self.a.y + t * dy))
    }
}

/// A triangle given by three corner points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle {
    pub a: Point,
    pub b: Point,
    pub c: Point,
}

impl Triangle {
    pub fn new(a: Point, b: Point, c: Point) -> Self {
        Triangle { a, b, c }
    }

    /// Longest side length.
    pub fn diameter(&self) -> f64 {
        self.a
            .dist(self.b)
            .max(self.b.dist(self.c))
            .max(self.c.dist(self.a))
    }
}

fn raw_cross(p: Point, q: Point, r: Point) -> f64 {
    (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
}

/// Sign of the signed area of the triangle `p q r`: `1` for a counter-
/// clockwise turn, `-1` for clockwise, `0` for collinear within
/// [`TAU_ORIENT`].
///
/// The determinant is evaluated with the three points in lexicographic
/// order and the permutation sign applied afterwards, so swapping any two
/// arguments flips the result exactly.
pub fn orient(p: Point, q: Point, r: Point) -> i32 {
    // Sort the three arguments lexicographically, tracking parity.
    let mut pts = [p, q, r];
    let mut sign = 1.0;
    if pts[0].lex_cmp(&pts[1]) == std::cmp::Ordering::Greater {
        pts.swap(0, 1);
        sign = -sign;
    }
    if pts[1].lex_cmp(&pts[2]) == std::cmp::Ordering::Greater {
        pts.swap(1, 2);
        sign = -sign;
    }
    if pts[0].lex_cmp(&pts[1]) == std::cmp::Ordering::Greater {
        pts.swap(0, 1);
        sign = -sign;
    }
    let det = sign * raw_cross(pts[0], pts[1], pts[2]);
    if det > TAU_ORIENT {
        1
    } else if det < -TAU_ORIENT {
        -1
    } else {
        0
    }
}

/// Center of the circle through the three corners of `t`.
///
/// Fails with [`GeometryError::CollinearTriangle`] when the orientation
/// determinant is within tolerance of zero.
pub fn circumcenter(t: &Triangle) -> Result<Point, GeometryError> {
    if orient(t.a, t.b, t.c) == 0 {
        return Err(GeometryError::CollinearTriangle);
    }
    // Solve relative to `a` to limit cancellation.
    let bx = t.b.x - t.a.x;
    let by = t.b.y - t.a.y;
    let cx = t.c.x - t.a.x;
    let cy = t.c.y - t.a.y;
    let d = 2.0 * (bx * cy - by * cx);
    let b2 = bx * bx + by * by;
    let c2 = cx * cx + cy * cy;
    let ux = (cy * b2 - by * c2) / d;
    let uy = (bx * c2 - cx * b2) / d;
    Ok(Point::new(t.a.x + ux, t.a.y + uy))
}

/// In-circle determinant for the circle through `a`, `b`, `c` (counter-
/// clockwise) and query point `d`: positive when `d` is strictly inside,
/// negative when strictly outside, zero magnitude means cocircular.
pub fn incircle_det(a: Point, b: Point, c: Point, d: Point) -> f64 {
    let adx = a.x - d.x;
    let ady = a.y - d.y;
    let bdx = b.x - d.x;
    let bdy = b.y - d.y;
    let cdx = c.x - d.x;
    let cdy = c.y - d.y;
    let ad2 = adx * adx + ady * ady;
    let bd2 = bdx * bdx + bdy * bdy;
    let cd2 = cdx * cdx + cdy * cdy;
    adx * (bdy * cd2 - cdy * bd2) - ady * (bdx * cd2 - cdx * bd2)
        + ad2 * (bdx * cdy - cdx * bdy)
}

/// True when segments `p1 q1` and `p2 q2` cross at a single point interior
/// to both (shared endpoints and collinear touching do not count).
pub fn properly_crosses(p1: Point, q1: Point, p2: Point, q2: Point) -> bool {
    let o1 = orient(p1, q1, p2);
    let o2 = orient(p1, q1, q2);
    let o3 = orient(p2, q2, p1);
    let o4 = orient(p2, q2, q1);
    o1 * o2 < 0 && o3 * o4 < 0
}

/// True when the closed segments intersect in any way (crossing, touching,
/// or collinear overlap), judged with [`TAU_BOUNDARY`] slack.
pub fn segments_touch(p1: Point, q1: Point, p2: Point, q2: Point) -> bool {
    if properly_crosses(p1, q1, p2, q2) {
        return true;
    }
    let s1 = Segment::new(p1, q1);
    let s2 = Segment::new(p2, q2);
    s1.dist_to_point(p2) <= TAU_BOUNDARY
        || s1.dist_to_point(q2) <= TAU_BOUNDARY
        || s2.dist_to_point(p1) <= TAU_BOUNDARY
        || s2.dist_to_point(q1) <= TAU_BOUNDARY
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orient_basic_turns() {
        let a = Point::new(0.0, 0.0);
        let b = Point::new(1.0, 0.0);
        assert_eq!(orient(a, b, Point::new(0.0, 1.0)), 1);
        assert_eq!(orient(a, b, Point::new(0.0, -1.0)), -1);
        assert_eq!(orient(a, b, Point::new(2.0, 0.0)), 0);
    }

    #[test]
    fn orient_snaps_near_collinear() {
        let a = Point::new(0.0, 0.0);
        let b = Point::new(10.0, 0.0);
        assert_eq!(orient(a, b, Point::new(5.0, 1e-11)), 0);
        assert_eq!(orient(a, b, Point::new(5.0, 1e-6)), 1);
    }

    #[test]
    fn orient_antisymmetric_under_swaps() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let p = Point::new(rng.random_range(0.0..100.0), rng.random_range(0.0..100.0));
            let q = Point::new(rng.random_range(0.0..100.0), rng.random_range(0.0..100.0));
            let r = Point::new(rng.random_range(0.0..100.0), rng.random_range(0.0..100.0));
            let o = orient(p, q, r);
            assert_eq!(orient(q, p, r), -o);
            assert_eq!(orient(p, r, q), -o);
            assert_eq!(orient(r, q, p), -o);
            // Cyclic rotation preserves the sign.
            assert_eq!(orient(q, r, p), o);
        }
    }

    #[test]
    fn circumcenter_flat_triangle() {
        let t = Triangle::new(
            Point::new(0.0, 0.0),
            Point::new(4.0, 0.0),
            Point::new(2.0, 0.5),
        );
        let c = circumcenter(&t).unwrap();
        assert!((c.x - 2.0).abs() < 1e-12);
        assert!((c.y + 3.75).abs() < 1e-12);
        // Equidistance to all three corners.
        let r = c.dist(t.a);
        assert!((c.dist(t.b) - r).abs() < 1e-9);
        assert!((c.dist(t.c) - r).abs() < 1e-9);
    }

    #[test]
    fn circumcenter_rejects_collinear() {
        let t = Triangle::new(
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(2.0, 0.0),
        );
        assert_eq!(circumcenter(&t), Err(GeometryError::CollinearTriangle));
    }

    #[test]
    fn circumcenter_equidistant_on_random_triangles() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut checked = 0;
        while checked < 500 {
            let a = Point::new(rng.random_range(0.0..100.0), rng.random_range(0.0..100.0));
            let b = Point::new(rng.random_range(0.0..100.0), rng.random_range(0.0..100.0));
            let c = Point::new(rng.random_range(0.0..100.0), rng.random_range(0.0..100.0));
            let t = Triangle::new(a, b, c);
            let Ok(cc) = circumcenter(&t) else { continue };
            if cc.dist(a) > 1e6 {
                continue;
            }
            let r = cc.dist(a);
            assert!((cc.dist(b) - r).abs() < 1e-9, "triangle {t:?}");
            assert!((cc.dist(c) - r).abs() < 1e-9, "triangle {t:?}");
            checked += 1;
        }
    }

    #[test]
    fn incircle_sign_convention() {
        // Unit circle through three CCW points; origin is inside.
        let a = Point::new(1.0, 0.0);
        let b = Point::new(0.0, 1.0);
        let c = Point::new(-1.0, 0.0);
        assert!(incircle_det(a, b, c, Point::new(0.0, 0.0)) > 0.0);
        assert!(incircle_det(a, b, c, Point::new(0.0, -2.0)) < 0.0);
        let on = Point::new(0.0, -1.0);
        assert!(incircle_det(a, b, c, on).abs() <= TAU_INCIRCLE);
    }

    #[test]
    fn proper_crossing_cases() {
        let a = Point::new(0.0, 0.0);
        let b = Point::new(2.0, 2.0);
        assert!(properly_crosses(
            a,
            b,
            Point::new(0.0, 2.0),
            Point::new(2.0, 0.0)
        ));
        // Shared endpoint is not a proper crossing.
        assert!(!properly_crosses(
            a,
            b,
            a,
            Point::new(-1.0, 5.0)
        ));
        // Touching at an interior point of one segment only.
        assert!(!properly_crosses(
            a,
            b,
            Point::new(1.0, 1.0),
            Point::new(3.0, 0.0)
        ));
    }

    #[test]
    fn segment_point_distance() {
        let s = Segment::new(Point::new(0.0, 0.0), Point::new(4.0, 0.0));
        assert!((s.dist_to_point(Point::new(2.0, 3.0)) - 3.0).abs() < 1e-12);
        assert!((s.dist_to_point(Point::new(-3.0, 4.0)) - 5.0).abs() < 1e-12);
    }
}
