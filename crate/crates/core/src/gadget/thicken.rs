//! Thickening a subdivided drawing into a burning domain.

use std::collections::{HashMap, HashSet};

use super::union::{ring_area, union_outline, Rect};
use super::{subdivide, Drawing, GadgetError, HGraph};
use crate::geodesic::PolygonalDomain;
use crate::geom::{Point, Polygon};

/// Width guard: pieces are at least 1/4 long, and squares of half-width
/// below 1/120 can never bridge between them.
pub const MAX_EPSILON: f64 = 1.0 / 120.0;
pub const DEFAULT_EPSILON: f64 = 1.0 / 128.0;

/// A thickened drawing, ready for burning.
#[derive(Debug, Clone)]
pub struct Gadget {
    pub h: HGraph,
    pub domain: PolygonalDomain,
    pub epsilon: f64,
    /// Claimed cover size carried over from the drawing.
    pub kappa: usize,
    /// Site budget equivalent to the claimed cover: kappa plus the
    /// subdivision increment.
    pub required_sites: usize,
    /// Burn times at most this mean a cover, above it mean none.
    pub threshold: f64,
    /// Chain vertex -> its four square corners among the domain vertices,
    /// in order (-e,-e), (+e,-e), (+e,+e), (-e,+e).
    pub vertex_map: Vec<[usize; 4]>,
}

fn corners(p: Point, eps: f64) -> [Point; 4] {
    [
        Point::new(p.x - eps, p.y - eps),
        Point::new(p.x + eps, p.y - eps),
        Point::new(p.x + eps, p.y + eps),
        Point::new(p.x - eps, p.y + eps),
    ]
}

/// Thickens the subdivided drawing by `epsilon`: a square around every
/// chain vertex, a rectangle along every piece, all unioned. Every square
/// corner is kept as a domain vertex so covers can be planted on them.
pub fn build_gadget(drawing: &Drawing, epsilon: f64) -> Result<Gadget, GadgetError> {
    if !(epsilon > 0.0 && epsilon < MAX_EPSILON) {
        return Err(GadgetError::EpsilonTooLarge(epsilon));
    }
    let h = subdivide(drawing)?;

    let square = |p: Point| Rect {
        x0: p.x - epsilon,
        y0: p.y - epsilon,
        x1: p.x + epsilon,
        y1: p.y + epsilon,
    };
    let mut rects: Vec<Rect> = h.positions.iter().map(|&p| square(p)).collect();
    for &(u, v) in &h.edges {
        let (a, b) = (square(h.positions[u]), square(h.positions[v]));
        rects.push(Rect {
            x0: a.x0.min(b.x0),
            y0: a.y0.min(b.y0),
            x1: a.x1.max(b.x1),
            y1: a.y1.max(b.y1),
        });
    }

    let mut keep = HashSet::new();
    for &p in &h.positions {
        for c in corners(p, epsilon) {
            keep.insert((c.x.to_bits(), c.y.to_bits()));
        }
    }

    let rings = union_outline(&rects, &keep)?;
    let mut outer: Option<Vec<Point>> = None;
    let mut holes = Vec::new();
    for ring in rings {
        if ring_area(&ring) > 0.0 {
            if outer.replace(ring).is_some() {
                return Err(GadgetError::UnionDegenerate(
                    "thickened drawing is disconnected".into(),
                ));
            }
        } else {
            holes.push(ring);
        }
    }
    let outer = outer.ok_or_else(|| {
        GadgetError::UnionDegenerate("thickening produced no boundary".into())
    })?;

    let outer = Polygon::new(outer)?;
    let holes = holes
        .into_iter()
        .map(Polygon::new)
        .collect::<Result<Vec<_>, _>>()?;
    let domain = PolygonalDomain::new(outer, holes)?;

    let mut at: HashMap<(u64, u64), usize> = HashMap::new();
    for (i, &p) in domain.vertices().iter().enumerate() {
        at.insert((p.x.to_bits(), p.y.to_bits()), i);
    }
    let mut vertex_map = Vec::with_capacity(h.positions.len());
    for (v, &p) in h.positions.iter().enumerate() {
        let mut ids = [0usize; 4];
        for (c, corner) in corners(p, epsilon).into_iter().enumerate() {
            ids[c] = *at
                .get(&(corner.x.to_bits(), corner.y.to_bits()))
                .ok_or_else(|| {
                    GadgetError::UnionDegenerate(format!(
                        "corner of chain vertex {v} missing from the boundary"
                    ))
                })?;
        }
        vertex_map.push(ids);
    }

    let kappa = drawing.kappa();
    let required_sites = kappa + h.subdivision_increment;
    Ok(Gadget {
        threshold: 1.0 / 3.0 + 3.0 * epsilon,
        h,
        domain,
        epsilon,
        kappa,
        required_sites,
        vertex_map,
    })
}
