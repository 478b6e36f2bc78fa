//! Geodesic shortest paths inside polygonal domains.
//!
//! Distances are computed over the visibility graph of the domain vertices:
//! a geodesic between two interior points is a straight segment when they
//! see each other and otherwise bends only at domain vertices, so Dijkstra
//! over vertex-to-vertex visibility edges (augmented with the two query
//! points) is exact for polygonal domains.

mod sampling;

pub use sampling::{interior_samples, sample_points, SampledDomain};

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use thiserror::Error;

use crate::geom::{
    point_in_polygon, properly_crosses, Location, Point, Polygon, Segment,
};

#[derive(Debug, Error, PartialEq)]
pub enum GeodesicError {
    #[error("invalid domain: {0}")]
    InvalidDomain(String),
    #[error("point ({0}, {1}) lies outside the domain")]
    PointOutsideDomain(f64, f64),
}

/// A connected polygonal domain: one outer boundary and zero or more holes.
///
/// All rings are stored counter-clockwise; holes are holes by position in
/// the structure, not by orientation. Input orientation is normalized away
/// at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct PolygonalDomain {
    outer: Polygon,
    holes: Vec<Polygon>,
    vertices: Vec<Point>,
}

impl PolygonalDomain {
    pub fn new(outer: Polygon, holes: Vec<Polygon>) -> Result<Self, GeodesicError> {
        for (hi, hole) in holes.iter().enumerate() {
            for (vi, v) in hole.vertices().iter().enumerate() {
                if point_in_polygon(*v, &outer) != Location::Inside {
                    return Err(GeodesicError::InvalidDomain(format!(
                        "hole {hi} vertex {vi} is not strictly inside the outer boundary"
                    )));
                }
            }
            for eo in outer.edges() {
                for eh in hole.edges() {
                    if crate::geom::segments_touch(eo.a, eo.b, eh.a, eh.b) {
                        return Err(GeodesicError::InvalidDomain(format!(
                            "hole {hi} touches the outer boundary"
                        )));
                    }
                }
            }
        }
        for i in 0..holes.len() {
            for j in (i + 1)..holes.len() {
                let disjoint = holes[i]
                    .vertices()
                    .iter()
                    .all(|&v| point_in_polygon(v, &holes[j]) == Location::Outside)
                    && holes[j]
                        .vertices()
                        .iter()
                        .all(|&v| point_in_polygon(v, &holes[i]) == Location::Outside)
                    && holes[i].edges().all(|ei| {
                        holes[j]
                            .edges()
                            .all(|ej| !crate::geom::segments_touch(ei.a, ei.b, ej.a, ej.b))
                    });
                if !disjoint {
                    return Err(GeodesicError::InvalidDomain(format!(
                        "holes {i} and {j} are not disjoint"
                    )));
                }
            }
        }
        let mut vertices: Vec<Point> = outer.vertices().to_vec();
        for h in &holes {
            vertices.extend_from_slice(h.vertices());
        }
        Ok(PolygonalDomain {
            outer,
            holes,
            vertices,
        })
    }

    pub fn simple(outer: Polygon) -> Result<Self, GeodesicError> {
        Self::new(outer, Vec::new())
    }

    pub fn outer(&self) -> &Polygon {
        &self.outer
    }

    pub fn holes(&self) -> &[Polygon] {
        &self.holes
    }

    /// All domain vertices: the outer ring first, then each hole ring.
    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> Point {
        self.vertices[i]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_convex(&self) -> bool {
        self.holes.is_empty() && self.outer.is_convex()
    }

    pub fn bbox(&self) -> (Point, Point) {
        self.outer.bbox()
    }

    /// Every boundary edge of every ring.
    pub fn boundary_edges(&self) -> impl Iterator<Item = Segment> + '_ {
        self.outer
            .edges()
            .chain(self.holes.iter().flat_map(|h| h.edges()))
    }

    /// Locate a point relative to the closed domain.
    pub fn locate(&self, p: Point) -> Location {
        match point_in_polygon(p, &self.outer) {
            Location::Outside => Location::Outside,
            Location::Boundary => Location::Boundary,
            Location::Inside => {
                for h in &self.holes {
                    match point_in_polygon(p, h) {
                        Location::Inside => return Location::Outside,
                        Location::Boundary => return Location::Boundary,
                        Location::Outside => {}
                    }
                }
                Location::Inside
            }
        }
    }

    /// Visibility test: the open segment `a b` must not properly cross any
    /// boundary edge, and its quarter points must stay in the closed
    /// domain (this rules out runs through hole interiors that only touch
    /// the boundary at vertices).
    pub fn sees(&self, a: Point, b: Point) -> bool {
        if a.dist(b) <= crate::geom::TAU_BOUNDARY {
            return self.locate(a) != Location::Outside;
        }
        for e in self.boundary_edges() {
            if properly_crosses(a, b, e.a, e.b) {
                return false;
            }
        }
        for t in [0.25, 0.5, 0.75] {
            if self.locate(a.lerp(b, t)) == Location::Outside {
                return false;
            }
        }
        true
    }
}

/// Precomputed visibility graph over the vertices of a domain.
#[derive(Debug, Clone)]
pub struct GeodesicIndex {
    domain: PolygonalDomain,
    /// Adjacency list: `(vertex, Euclidean length)` per visible pair.
    adjacency: Vec<Vec<(usize, f64)>>,
}

/// Build the vertex visibility graph of `domain`.
pub fn build_index(domain: &PolygonalDomain) -> GeodesicIndex {
    let n = domain.vertex_count();
    let mut adjacency = vec![Vec::new(); n];
    for i in 0..n {
        for j in (i + 1)..n {
            let (a, b) = (domain.vertex(i), domain.vertex(j));
            if domain.sees(a, b) {
                let w = a.dist(b);
                adjacency[i].push((j, w));
                adjacency[j].push((i, w));
            }
        }
    }
    GeodesicIndex {
        domain: domain.clone(),
        adjacency,
    }
}

impl GeodesicIndex {
    pub fn domain(&self) -> &PolygonalDomain {
        &self.domain
    }

    pub fn adjacency(&self) -> &[Vec<(usize, f64)>] {
        &self.adjacency
    }

    /// Shortest path distances from vertex `src` to all vertices.
    pub fn distances_from_vertex(&self, src: usize) -> Vec<f64> {
        dijkstra(self.adjacency.len(), src, |v| {
            self.adjacency[v].iter().copied()
        })
    }

    /// Visible vertices from an arbitrary point of the closed domain, with
    /// Euclidean lengths.
    pub fn visible_vertices(&self, p: Point) -> Vec<(usize, f64)> {
        let mut out = Vec::new();
        for (i, &v) in self.domain.vertices().iter().enumerate() {
            if self.domain.sees(p, v) {
                out.push((i, p.dist(v)));
            }
        }
        out
    }
}

#[derive(PartialEq)]
struct HeapEntry {
    dist: f64,
    node: usize,
}

impl Eq for HeapEntry {}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        // Reversed for a min-heap; ties broken on node index for
        // determinism.
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.node.cmp(&self.node))
    }
}

fn dijkstra<I>(n: usize, src: usize, neighbors: impl Fn(usize) -> I) -> Vec<f64>
where
    I: Iterator<Item = (usize, f64)>,
{
    let mut dist = vec![f64::INFINITY; n];
    dist[src] = 0.0;
    let mut heap = BinaryHeap::new();
    heap.push(HeapEntry {
        dist: 0.0,
        node: src,
    });
    while let Some(HeapEntry { dist: d, node }) = heap.pop() {
        if d > dist[node] {
            continue;
        }
        for (next, w) in neighbors(node) {
            let nd = d + w;
            if nd < dist[next] {
                dist[next] = nd;
                heap.push(HeapEntry {
                    dist: nd,
                    node: next,
                });
            }
        }
    }
    dist
}

/// Geodesic distance between two points of the closed domain.
///
/// Exactly symmetric: the query is canonicalized so `(s, t)` and `(t, s)`
/// run the identical computation.
pub fn geodesic_distance(
    index: &GeodesicIndex,
    s: Point,
    t: Point,
) -> Result<f64, GeodesicError> {
    for p in [s, t] {
        if index.domain.locate(p) == Location::Outside {
            return Err(GeodesicError::PointOutsideDomain(p.x, p.y));
        }
    }
    let (s, t) = match s.lex_cmp(&t) {
        Ordering::Greater => (t, s),
        _ => (s, t),
    };
    if index.domain.sees(s, t) {
        return Ok(s.dist(t));
    }
    let n = index.adjacency.len();
    let vis_s = index.visible_vertices(s);
    let vis_t = index.visible_vertices(t);
    // Nodes 0..n are domain vertices, n is s, n+1 is t.
    let dist = dijkstra(n + 2, n, |v| -> Box<dyn Iterator<Item = (usize, f64)>> {
        if v == n {
            Box::new(vis_s.iter().copied())
        } else if v == n + 1 {
            Box::new(vis_t.iter().copied())
        } else {
            let back_t = vis_t
                .iter()
                .find(|&&(u, _)| u == v)
                .map(|&(_, w)| (n + 1, w));
            Box::new(index.adjacency[v].iter().copied().chain(back_t))
        }
    });
    Ok(dist[n + 1])
}

/// Geodesic distances from an arbitrary point of the closed domain to
/// every domain vertex.
pub fn distances_from_point(
    index: &GeodesicIndex,
    p: Point,
) -> Result<Vec<f64>, GeodesicError> {
    if index.domain.locate(p) == Location::Outside {
        return Err(GeodesicError::PointOutsideDomain(p.x, p.y));
    }
    let n = index.adjacency.len();
    let vis = index.visible_vertices(p);
    let dist = dijkstra(n + 1, n, |v| -> Box<dyn Iterator<Item = (usize, f64)>> {
        if v == n {
            Box::new(vis.iter().copied())
        } else {
            Box::new(index.adjacency[v].iter().copied())
        }
    });
    Ok(dist[..n].to_vec())
}

/// All-pairs geodesic distances between domain vertices. The matrix is
/// exactly symmetric.
pub fn vertex_distance_matrix(index: &GeodesicIndex) -> Vec<Vec<f64>> {
    let n = index.adjacency.len();
    let mut m = vec![vec![0.0; n]; n];
    for i in 0..n {
        let d = index.distances_from_vertex(i);
        for j in (i + 1)..n {
            m[i][j] = d[j];
            m[j][i] = d[j];
        }
    }
    m
}

/// Lower bound on the geodesic diameter: the maximum pairwise geodesic
/// distance over domain vertices plus boundary points sampled at spacing
/// at most `resolution`.
pub fn diameter_estimate(index: &GeodesicIndex, resolution: f64) -> f64 {
    let domain = &index.domain;
    let pts = sampling::boundary_samples(domain, resolution);
    if domain.is_convex() {
        // Geodesic equals Euclidean on convex domains.
        let mut best: f64 = 0.0;
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                best = best.max(pts[i].dist(pts[j]));
            }
        }
        return best;
    }
    // General case: visibility graph over all sampled points.
    let m = pts.len();
    let mut adj: Vec<Vec<(usize, f64)>> = vec![Vec::new(); m];
    for i in 0..m {
        for j in (i + 1)..m {
            if domain.sees(pts[i], pts[j]) {
                let w = pts[i].dist(pts[j]);
                adj[i].push((j, w));
                adj[j].push((i, w));
            }
        }
    }
    let mut best: f64 = 0.0;
    for i in 0..m {
        let d = dijkstra(m, i, |v| adj[v].iter().copied());
        for &dj in &d[i + 1..] {
            best = best.max(dj);
        }
    }
    best
}
