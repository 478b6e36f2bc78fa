//! Route subdivision into odd chains of short pieces.
//!
//! Every unit of route length is cut into three pieces of length 1/3. When
//! a route's total piece count would come out even, its last segment gets
//! one extra cut, giving pieces of m/(3m+1); all piece lengths land in
//! [1/4, 1/3] and every count ends up odd. Splitting an edge into an odd
//! number of pieces adds (pieces - 1)/2 to the minimum vertex cover, which
//! keeps cover sizes in exact correspondence.

use std::collections::HashMap;

use super::{Drawing, GadgetError};
use crate::geom::Point;

/// The subdivided graph, embedded.
#[derive(Debug, Clone)]
pub struct HGraph {
    pub positions: Vec<Point>,
    /// Straight axis-aligned edges between consecutive chain vertices.
    pub edges: Vec<(usize, usize)>,
    /// Original drawing vertex behind each position, for the endpoints.
    pub g_vertex_of: Vec<Option<usize>>,
    /// Number of original drawing vertices.
    pub g_vertex_count: usize,
    /// Sum of (pieces - 1) / 2 over all routes: how much every cover grows.
    pub subdivision_increment: usize,
    /// Exact piece length of each edge as (numerator, denominator).
    pub piece_lengths: Vec<(i64, i64)>,
}

fn key(p: Point) -> (u64, u64) {
    (p.x.to_bits(), p.y.to_bits())
}

/// Subdivides every route of the drawing.
pub fn subdivide(drawing: &Drawing) -> Result<HGraph, GadgetError> {
    let mut positions: Vec<Point> = drawing.vertices().to_vec();
    let mut g_vertex_of: Vec<Option<usize>> = (0..positions.len()).map(Some).collect();
    let mut index_of: HashMap<(u64, u64), usize> = positions
        .iter()
        .enumerate()
        .map(|(i, &p)| (key(p), i))
        .collect();
    let mut edges = Vec::new();
    let mut piece_lengths = Vec::new();
    let mut increment = 0usize;

    for route in drawing.routes() {
        let seg_lengths: Vec<i64> = route
            .windows(2)
            .map(|w| ((w[1].x - w[0].x).abs() + (w[1].y - w[0].y).abs()) as i64)
            .collect();
        let total: i64 = seg_lengths.iter().sum();
        // 3 pieces per unit; odd total piece count via one extra cut at the end.
        let bump_last = (3 * total) % 2 == 0;
        let route_pieces = 3 * total + if bump_last { 1 } else { 0 };
        debug_assert!(route_pieces % 2 == 1);
        increment += ((route_pieces - 1) / 2) as usize;

        let mut prev = index_of[&key(route[0])];
        for (s, w) in route.windows(2).enumerate() {
            let m = seg_lengths[s];
            let last = s + 1 == seg_lengths.len();
            let cuts = 3 * m + if last && bump_last { 1 } else { 0 };
            for i in 1..=cuts {
                let p = if i == cuts {
                    w[1]
                } else {
                    w[0].lerp(w[1], i as f64 / cuts as f64)
                };
                let idx = *index_of.entry(key(p)).or_insert_with(|| {
                    positions.push(p);
                    g_vertex_of.push(None);
                    positions.len() - 1
                });
                edges.push((prev, idx));
                piece_lengths.push((m, cuts));
                prev = idx;
            }
        }
    }

    Ok(HGraph {
        g_vertex_count: drawing.vertices().len(),
        positions,
        edges,
        g_vertex_of,
        subdivision_increment: increment,
        piece_lengths,
    })
}

impl HGraph {
    /// Adjacency lists of the subdivided graph.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.positions.len()];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn unit_edge_becomes_three_pieces() {
        let d = Drawing::new(
            vec![p(0.0, 0.0), p(1.0, 0.0)],
            vec![vec![p(0.0, 0.0), p(1.0, 0.0)]],
            1,
        )
        .unwrap();
        let h = subdivide(&d).unwrap();
        assert_eq!(h.positions.len(), 4);
        assert_eq!(h.edges.len(), 3);
        assert_eq!(h.subdivision_increment, 1);
        assert_eq!(h.piece_lengths, vec![(1, 3); 3]);
        assert!(h.positions[2].dist(p(1.0 / 3.0, 0.0)) < 1e-15);
        assert!(h.positions[3].dist(p(2.0 / 3.0, 0.0)) < 1e-15);
        assert_eq!(h.g_vertex_of, vec![Some(0), Some(1), None, None]);
    }

    #[test]
    fn even_total_gets_bumped() {
        // Length 2: 6 pieces would be even, so the last segment is cut 7 ways.
        let d = Drawing::new(
            vec![p(0.0, 0.0), p(2.0, 0.0)],
            vec![vec![p(0.0, 0.0), p(2.0, 0.0)]],
            1,
        )
        .unwrap();
        let h = subdivide(&d).unwrap();
        assert_eq!(h.edges.len(), 7);
        assert_eq!(h.subdivision_increment, 3);
        assert_eq!(h.piece_lengths, vec![(2, 7); 7]);
        // Pieces lie in [1/4, 1/3]: 4 * 2 >= 7 and 3 * 2 <= 7.
        for &(num, den) in &h.piece_lengths {
            assert!(4 * num >= den && 3 * num <= den);
        }
    }

    #[test]
    fn bent_route_keeps_corner_and_stays_straight() {
        let d = Drawing::new(
            vec![p(0.0, 0.0), p(2.0, 1.0)],
            vec![vec![p(0.0, 0.0), p(2.0, 0.0), p(2.0, 1.0)]],
            1,
        )
        .unwrap();
        let h = subdivide(&d).unwrap();
        // Length 3, odd pieces: 9 edges, 8 interior vertices.
        assert_eq!(h.edges.len(), 9);
        assert_eq!(h.positions.len(), 10);
        assert_eq!(h.subdivision_increment, 4);
        assert!(h.positions.iter().any(|&q| q == p(2.0, 0.0)));
        for &(u, v) in &h.edges {
            let (a, b) = (h.positions[u], h.positions[v]);
            assert!(a.x == b.x || a.y == b.y, "edge not axis-aligned");
        }
    }

    #[test]
    fn shared_vertices_are_not_duplicated() {
        let d = Drawing::new(
            vec![p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0)],
            vec![
                vec![p(0.0, 0.0), p(1.0, 0.0)],
                vec![p(1.0, 0.0), p(1.0, 1.0)],
                vec![p(1.0, 1.0), p(0.0, 1.0)],
                vec![p(0.0, 1.0), p(0.0, 0.0)],
            ],
            2,
        )
        .unwrap();
        let h = subdivide(&d).unwrap();
        assert_eq!(h.positions.len(), 12);
        assert_eq!(h.edges.len(), 12);
        assert_eq!(h.subdivision_increment, 4);
        let adj = h.adjacency();
        assert!(adj.iter().all(|nb| nb.len() == 2));
    }
}
