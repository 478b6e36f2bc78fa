//! Deterministic point samples of a polygonal domain.
//!
//! Sample sets are nested under halving of the resolution: boundary edges
//! are split into a power-of-two number of pieces and interior samples come
//! from midpoint refinement (hole-free) or an anchored grid (with holes),
//! so a finer resolution always contains the coarser sample set. Burn
//! times evaluated on these samples are therefore monotone lower bounds
//! that only improve as the resolution shrinks.

use std::collections::BTreeSet;

use crate::geom::{triangulate_simple, Location, Point, Triangle};

use super::{GeodesicIndex, PolygonalDomain};

fn key(p: Point) -> (u64, u64) {
    (p.x.to_bits(), p.y.to_bits())
}

/// Boundary points of every ring at spacing at most `resolution`, vertices
/// included. Each edge is split into the smallest power-of-two piece count
/// that reaches the spacing.
pub fn boundary_samples(domain: &PolygonalDomain, resolution: f64) -> Vec<Point> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for &v in domain.vertices() {
        if seen.insert(key(v)) {
            out.push(v);
        }
    }
    for e in domain.boundary_edges() {
        let pieces = ((e.len() / resolution).log2().ceil().max(0.0) as u32).min(24);
        let pieces = 1usize << pieces;
        for i in 1..pieces {
            let p = e.a.lerp(e.b, i as f64 / pieces as f64);
            if seen.insert(key(p)) {
                out.push(p);
            }
        }
    }
    out
}

/// Interior sample points at density `resolution`.
///
/// Hole-free domains are ear-clipped and each triangle is refined by
/// longest-edge bisection until its diameter is at most `resolution`; the
/// refinement vertices are the samples. Domains with holes fall back to a
/// grid anchored at the bounding-box corner.
pub fn interior_samples(domain: &PolygonalDomain, resolution: f64) -> Vec<Point> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    if domain.holes().is_empty() {
        let poly = domain.outer();
        let tris = triangulate_simple(poly).expect("validated polygon triangulates");
        let mut stack: Vec<Triangle> = tris
            .iter()
            .map(|&[a, b, c]| Triangle::new(poly.vertex(a), poly.vertex(b), poly.vertex(c)))
            .collect();
        while let Some(t) = stack.pop() {
            for p in [t.a, t.b, t.c] {
                if seen.insert(key(p)) {
                    out.push(p);
                }
            }
            if t.diameter() <= resolution {
                continue;
            }
            // Split across the longest edge; midpoints of shared edges
            // coincide bit-for-bit between neighboring triangles.
            let (ab, bc, ca) = (t.a.dist(t.b), t.b.dist(t.c), t.c.dist(t.a));
            let (p, q, r) = if ab >= bc && ab >= ca {
                (t.a, t.b, t.c)
            } else if bc >= ab && bc >= ca {
                (t.b, t.c, t.a)
            } else {
                (t.c, t.a, t.b)
            };
            let m = p.midpoint(q);
            stack.push(Triangle::new(p, m, r));
            stack.push(Triangle::new(m, q, r));
        }
    } else {
        let (lo, hi) = domain.bbox();
        let cols = ((hi.x - lo.x) / resolution).ceil() as usize;
        let rows = ((hi.y - lo.y) / resolution).ceil() as usize;
        for i in 0..=cols {
            for j in 0..=rows {
                let p = Point::new(lo.x + i as f64 * resolution, lo.y + j as f64 * resolution);
                if domain.locate(p) != Location::Outside && seen.insert(key(p)) {
                    out.push(p);
                }
            }
        }
    }
    out.sort_by(|a, b| a.lex_cmp(b));
    out
}

/// Boundary and interior samples combined, deduplicated, in a deterministic
/// order (boundary first).
pub fn sample_points(domain: &PolygonalDomain, resolution: f64) -> Vec<Point> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for p in boundary_samples(domain, resolution) {
        if seen.insert(key(p)) {
            out.push(p);
        }
    }
    for p in interior_samples(domain, resolution) {
        if seen.insert(key(p)) {
            out.push(p);
        }
    }
    out
}

/// A domain sampled at a fixed resolution with per-sample visibility to the
/// domain vertices precomputed, so burn times of many different site sets
/// can be evaluated cheaply.
pub struct SampledDomain {
    resolution: f64,
    samples: Vec<Point>,
    /// Visible `(vertex, Euclidean distance)` pairs per sample.
    visibility: Vec<Vec<(usize, f64)>>,
    /// Geodesic vertex-to-vertex distances.
    matrix: Vec<Vec<f64>>,
}

impl SampledDomain {
    pub fn build(index: &GeodesicIndex, resolution: f64) -> Self {
        let samples = sample_points(index.domain(), resolution);
        let visibility = samples
            .iter()
            .map(|&p| index.visible_vertices(p))
            .collect();
        SampledDomain {
            resolution,
            samples,
            visibility,
            matrix: super::vertex_distance_matrix(index),
        }
    }

    pub fn resolution(&self) -> f64 {
        self.resolution
    }

    pub fn samples(&self) -> &[Point] {
        &self.samples
    }

    pub fn matrix(&self) -> &[Vec<f64>] {
        &self.matrix
    }

    /// Geodesic distance from sample `i` to the nearest site. A geodesic
    /// from an interior point reaches its first domain vertex along a
    /// straight sight line, so minimizing `|s v| + d(v, site)` over visible
    /// vertices `v` is exact (the direct segment is the `v = site` case).
    pub fn sample_to_nearest_site(&self, i: usize, sites: &[usize]) -> f64 {
        let mut best = f64::INFINITY;
        for &(v, d) in &self.visibility[i] {
            for &s in sites {
                let total = d + self.matrix[v][s];
                if total < best {
                    best = total;
                }
            }
        }
        best
    }

    /// Geodesic distance from sample `i` to one specific site.
    pub fn sample_to_nearest_site_single(&self, i: usize, site: usize) -> f64 {
        let mut best = f64::INFINITY;
        for &(v, d) in &self.visibility[i] {
            let total = d + self.matrix[v][site];
            if total < best {
                best = total;
            }
        }
        best
    }

    /// Largest distance-to-nearest-site over all samples; returns the value
    /// with the witness sample index.
    pub fn burn_time(&self, sites: &[usize]) -> (f64, usize) {
        let mut best = f64::NEG_INFINITY;
        let mut witness = 0;
        for i in 0..self.samples.len() {
            let d = self.sample_to_nearest_site(i, sites);
            if d > best {
                best = d;
                witness = i;
            }
        }
        (best, witness)
    }
}
