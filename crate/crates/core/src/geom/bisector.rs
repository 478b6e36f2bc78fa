//! Perpendicular bisector chords of convex polygons.

use super::{GeometryError, Point, Polygon, TAU_BOUNDARY};

/// Intersect the perpendicular bisector of `u v` with the boundary of the
/// convex polygon `poly`, returning the two crossing points with the one to
/// the left of the directed line `u -> v` first.
///
/// `u` and `v` are vertex indices of `poly`. The bisector of two points of
/// a convex polygon always meets the boundary twice (the midpoint of `u v`
/// lies in the closed polygon); if the two crossings coincide within
/// tolerance the chord is degenerate.
pub fn bisector_chord(
    u: usize,
    v: usize,
    poly: &Polygon,
) -> Result<(Point, Point), GeometryError> {
    let n = poly.len();
    if u >= n || v >= n || u == v {
        return Err(GeometryError::DegenerateInput(format!(
            "bad vertex pair ({u}, {v}) for polygon with {n} vertices"
        )));
    }
    let pu = poly.vertex(u);
    let pv = poly.vertex(v);
    let m = pu.midpoint(pv);
    let dx = pv.x - pu.x;
    let dy = pv.y - pu.y;

    // Signed projection onto u->v, zero on the bisector.
    let f = |p: Point| (p.x - m.x) * dx + (p.y - m.y) * dy;

    let mut hits: Vec<Point> = Vec::new();
    let push = |p: Point, hits: &mut Vec<Point>| {
        if hits.iter().all(|q| q.dist(p) > TAU_BOUNDARY) {
            hits.push(p);
        }
    };
    for e in poly.edges() {
        let fa = f(e.a);
        let fb = f(e.b);
        let scale = (dx * dx + dy * dy).sqrt();
        let ta = fa / scale;
        let tb = fb / scale;
        if ta.abs() <= TAU_BOUNDARY && tb.abs() <= TAU_BOUNDARY {
            // Whole edge lies on the bisector; its endpoints are crossings.
            push(e.a, &mut hits);
            push(e.b, &mut hits);
        } else if ta.abs() <= TAU_BOUNDARY {
            push(e.a, &mut hits);
        } else if tb.abs() <= TAU_BOUNDARY {
            push(e.b, &mut hits);
        } else if (fa > 0.0) != (fb > 0.0) {
            let t = fa / (fa - fb);
            push(e.a.lerp(e.b, t), &mut hits);
        }
    }

    if hits.len() < 2 {
        return Err(GeometryError::DegenerateChord);
    }
    if hits.len() > 2 {
        // Convexity limits the line to two boundary crossings; more means
        // duplicates slipped past the dedup radius. Keep the extremes along
        // the bisector direction.
        let g = |p: Point| -(p.x - m.x) * dy + (p.y - m.y) * dx;
        hits.sort_by(|a, b| g(*a).total_cmp(&g(*b)));
        hits = vec![hits[0], *hits.last().unwrap()];
        if hits[0].dist(hits[1]) <= TAU_BOUNDARY {
            return Err(GeometryError::DegenerateChord);
        }
    }

    // Left of u->v first; the cross product is positive on the left.
    let side = |p: Point| dx * (p.y - pu.y) - dy * (p.x - pu.x);
    let (first, second) = if side(hits[0]) >= side(hits[1]) {
        (hits[0], hits[1])
    } else {
        (hits[1], hits[0])
    };
    Ok((first, second))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(p: Point, x: f64, y: f64) -> bool {
        (p.x - x).abs() < 1e-9 && (p.y - y).abs() < 1e-9
    }

    #[test]
    fn unit_square_adjacent_corners() {
        let sq = Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap();
        let (a, b) = bisector_chord(0, 1, &sq).unwrap();
        assert!(close(a, 0.5, 1.0), "{a:?}");
        assert!(close(b, 0.5, 0.0), "{b:?}");
    }

    #[test]
    fn flat_triangle_base_pair() {
        let tri = Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(4.0, 0.0),
            Point::new(2.0, 0.5),
        ])
        .unwrap();
        let (a, b) = bisector_chord(0, 1, &tri).unwrap();
        assert!(close(a, 2.0, 0.5), "{a:?}");
        assert!(close(b, 2.0, 0.0), "{b:?}");
    }

    #[test]
    fn flat_triangle_edge_pair() {
        // u and v adjacent: the chord starts at the shared edge's midpoint.
        let tri = Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(4.0, 0.0),
            Point::new(2.0, 0.5),
        ])
        .unwrap();
        let (a, b) = bisector_chord(0, 2, &tri).unwrap();
        assert!(close(a, 1.0, 0.25), "{a:?}");
        assert!(close(b, 1.0625, 0.0), "{b:?}");
    }

    #[test]
    fn chord_points_equidistant() {
        use rand::prelude::*;
        use crate::geom::convex_hull;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut done = 0;
        while done < 100 {
            let pts: Vec<Point> = (0..8)
                .map(|_| Point::new(rng.random_range(0.0..10.0), rng.random_range(0.0..10.0)))
                .collect();
            let Ok(hull) = convex_hull(&pts) else { continue };
            let n = hull.len();
            let u = rng.random_range(0..n);
            let v = (u + 1 + rng.random_range(0..n - 1)) % n;
            let Ok((a, b)) = bisector_chord(u, v, &hull) else {
                continue;
            };
            for e in [a, b] {
                let du = e.dist(hull.vertex(u));
                let dv = e.dist(hull.vertex(v));
                assert!((du - dv).abs() <= 1e-9, "chord point not equidistant");
            }
            done += 1;
        }
    }

    #[test]
    fn bad_indices_rejected() {
        let sq = Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap();
        assert!(bisector_chord(0, 0, &sq).is_err());
        assert!(bisector_chord(0, 9, &sq).is_err());
    }
}
