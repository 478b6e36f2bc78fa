//! Ear clipping for simple polygons.

use super::{orient, GeometryError, Point, Polygon, Segment, TAU_BOUNDARY};

/// Triangulate a simple polygon by ear clipping, returning index triples
/// into the polygon's vertex list. Straight (collinear) vertices are
/// dropped without emitting a zero-area triangle.
pub fn triangulate_simple(poly: &Polygon) -> Result<Vec<[usize; 3]>, GeometryError> {
    let pts = poly.vertices();
    let mut ring: Vec<usize> = (0..pts.len()).collect();
    let mut out: Vec<[usize; 3]> = Vec::new();

    while ring.len() > 3 {
        let n = ring.len();
        let mut clipped = false;

        // Pass 1: drop straight vertices, which carry no area.
        for k in 0..n {
            let (a, b, c) = (ring[(k + n - 1) % n], ring[k], ring[(k + 1) % n]);
            if orient(pts[a], pts[b], pts[c]) == 0 {
                ring.remove(k);
                clipped = true;
                break;
            }
        }
        if clipped {
            continue;
        }

        // Pass 2: clip a strictly convex ear with an empty interior.
        for k in 0..n {
            let (a, b, c) = (ring[(k + n - 1) % n], ring[k], ring[(k + 1) % n]);
            if orient(pts[a], pts[b], pts[c]) != 1 {
                continue;
            }
            let blocked = ring.iter().any(|&other| {
                if other == a || other == b || other == c {
                    return false;
                }
                in_or_on_triangle(pts[other], pts[a], pts[b], pts[c])
            });
            if blocked {
                continue;
            }
            out.push([a, b, c]);
            ring.remove(k);
            clipped = true;
            break;
        }

        if !clipped {
            return Err(GeometryError::DegenerateInput(
                "no ear found; polygon is not simple".to_string(),
            ));
        }
    }

    let (a, b, c) = (ring[0], ring[1], ring[2]);
    if orient(pts[a], pts[b], pts[c]) != 0 {
        out.push([a, b, c]);
    }
    Ok(out)
}

fn in_or_on_triangle(p: Point, a: Point, b: Point, c: Point) -> bool {
    let o1 = orient(a, b, p);
    let o2 = orient(b, c, p);
    let o3 = orient(c, a, p);
    if o1 >= 0 && o2 >= 0 && o3 >= 0 {
        return true;
    }
    // Conservative: near-boundary contact also blocks the ear.
    Segment::new(a, b).dist_to_point(p) <= TAU_BOUNDARY
        || Segment::new(b, c).dist_to_point(p) <= TAU_BOUNDARY
        || Segment::new(c, a).dist_to_point(p) <= TAU_BOUNDARY
}
