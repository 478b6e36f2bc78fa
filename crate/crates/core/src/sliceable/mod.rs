//! Sliceable polygons: recognition, slice orderings, and exact dynamic
//! programs for site placement.
//!
//! A convex polygon is sliceable when no vertex of the nearest-site diagram
//! of its vertex set lies strictly inside it. Every site subset then splits
//! the polygon into slices by bisector chords, the vertices line up along a
//! path, and optimal sites follow from a one-dimensional suffix recursion.

mod dp;
mod generate;

pub use dp::{
    solve_dp_1d, solve_dp_1d_with_table, solve_dp_sliceable, solve_dp_sliceable_with_table,
    DpTable, OneDimInstance, OneDimSolution,
};
pub use generate::{generate_sliceable, generate_sliceable_with, GenerationParams};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::geom::{
    bisector_chord, circumcenter, delaunay, point_in_polygon, GeometryError, Location, Point,
    Polygon,
};

#[derive(Debug, Error, PartialEq)]
pub enum SliceableError {
    #[error("polygon is not sliceable: {0}")]
    NotSliceable(String),
    #[error("slice ordering is not a path: {0}")]
    NotAPath(String),
    #[error("k = {0} exceeds site count {1}")]
    BadBudget(usize, usize),
    #[error("invalid positions: {0}")]
    BadPositions(String),
    #[error("invalid generation parameters: {0}")]
    BadParams(String),
    #[error("no sliceable polygon found after {0} attempts")]
    GenerationFailed(usize),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Outcome of [`is_sliceable`].
#[derive(Debug, Clone)]
pub struct SliceabilityReport {
    pub convex: bool,
    /// Triangles of the vertex set's triangulation.
    pub triangles: Vec<[usize; 3]>,
    /// Circumcenter of each triangle with its location relative to the polygon.
    pub circumcenters: Vec<(Point, Location)>,
    pub sliceable: bool,
    /// Slice ordering of vertex indices, when one exists.
    pub ordering: Option<Vec<usize>>,
}

/// Decides sliceability: the polygon must be convex and every circumcenter
/// of the vertex triangulation must lie outside or on the boundary.
pub fn is_sliceable(poly: &Polygon) -> Result<SliceabilityReport, SliceableError> {
    let convex = poly.is_convex();
    let tri = delaunay(poly.vertices())?;
    let mut circumcenters = Vec::with_capacity(tri.triangles.len());
    let mut none_inside = true;
    for t in 0..tri.triangles.len() {
        let c = circumcenter(&tri.triangle(t))?;
        let loc = point_in_polygon(c, poly);
        if loc == Location::Inside {
            none_inside = false;
        }
        circumcenters.push((c, loc));
    }
    let sliceable = convex && none_inside;
    let ordering = if sliceable {
        compute_ordering(poly).ok()
    } else {
        None
    };
    Ok(SliceabilityReport {
        convex,
        triangles: tri.triangles,
        circumcenters,
        sliceable,
        ordering,
    })
}

/// Keeps a vertex pair iff its bisector chord stays jointly nearest to the
/// pair: no third vertex is strictly closer at any interior chord sample.
/// On sliceable polygons a chord is either entirely shared between the two
/// cells or misses them, so nine samples decide membership.
fn chord_kept(u: usize, v: usize, poly: &Polygon) -> bool {
    let (p, q) = match bisector_chord(u, v, poly) {
        Ok(c) => c,
        Err(_) => return false,
    };
    let pu = poly.vertex(u);
    for i in 1..10 {
        let x = p.lerp(q, i as f64 / 10.0);
        let du = x.dist(pu);
        for w in 0..poly.len() {
            if w == u || w == v {
                continue;
            }
            if x.dist(poly.vertex(w)) + 1e-9 < du {
                return false;
            }
        }
    }
    true
}

/// The slice ordering: vertices of the polygon arranged along the path
/// formed by triangulation edges whose bisector chord separates exactly the
/// two cells. Starts from the endpoint with the smaller vertex index.
pub fn compute_ordering(poly: &Polygon) -> Result<Vec<usize>, SliceableError> {
    let n = poly.len();
    let tri = delaunay(poly.vertices())?;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, v) in tri.edges() {
        if chord_kept(u, v, poly) {
            adj[u].push(v);
            adj[v].push(u);
        }
    }

    let mut endpoints = Vec::new();
    for (v, nb) in adj.iter().enumerate() {
        match nb.len() {
            1 => endpoints.push(v),
            2 => {}
            d => {
                return Err(SliceableError::NotAPath(format!(
                    "vertex {v} has degree {d}"
                )))
            }
        }
    }
    if endpoints.len() != 2 {
        return Err(SliceableError::NotAPath(format!(
            "{} endpoints instead of 2",
            endpoints.len()
        )));
    }

    let mut order = Vec::with_capacity(n);
    let mut prev = usize::MAX;
    let mut cur = *endpoints.iter().min().expect("two endpoints");
    loop {
        order.push(cur);
        let next = adj[cur].iter().copied().find(|&w| w != prev);
        match next {
            Some(w) => {
                prev = cur;
                cur = w;
            }
            None => break,
        }
    }
    if order.len() != n {
        return Err(SliceableError::NotAPath(format!(
            "path covers {} of {} vertices",
            order.len(),
            n
        )));
    }
    Ok(order)
}

/// Outcome of [`check_subset_sliceability`].
#[derive(Debug, Clone)]
pub struct SubsetSliceabilityReport {
    pub subsets_checked: usize,
    pub exhaustive: bool,
    /// Site subsets whose diagram has a vertex strictly inside (up to 16 kept).
    pub violations: Vec<Vec<usize>>,
}

impl SubsetSliceabilityReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn subset_violates(poly: &Polygon, subset: &[usize]) -> bool {
    let pts: Vec<Point> = subset.iter().map(|&i| poly.vertex(i)).collect();
    let Ok(tri) = delaunay(&pts) else {
        // Collinear subsets have no diagram vertex; nothing to violate.
        return false;
    };
    for t in 0..tri.triangles.len() {
        let Ok(c) = circumcenter(&tri.triangle(t)) else {
            continue;
        };
        if point_in_polygon(c, poly) == Location::Inside {
            return true;
        }
    }
    false
}

/// Verifies that site subsets keep the polygon sliced: no subset of three
/// or more vertices puts a diagram vertex strictly inside. Exhaustive for
/// up to 12 vertices, otherwise `trials` seeded random subsets.
pub fn check_subset_sliceability(
    poly: &Polygon,
    trials: usize,
    seed: u64,
) -> SubsetSliceabilityReport {
    let n = poly.len();
    let mut checked = 0;
    let mut violations = Vec::new();
    let record = |subset: Vec<usize>, violations: &mut Vec<Vec<usize>>| {
        if violations.len() < 16 {
            violations.push(subset);
        }
    };

    let exhaustive = n <= 12;
    if exhaustive {
        for mask in 0u32..(1 << n) {
            if mask.count_ones() < 3 {
                continue;
            }
            let subset: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            checked += 1;
            if subset_violates(poly, &subset) {
                record(subset, &mut violations);
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        while checked < trials {
            let subset: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
            if subset.len() < 3 {
                continue;
            }
            checked += 1;
            if subset_violates(poly, &subset) {
                record(subset, &mut violations);
            }
        }
    }
    SubsetSliceabilityReport {
        subsets_checked: checked,
        exhaustive,
        violations,
    }
}
