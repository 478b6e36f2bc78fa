//! Orthogonal graph drawings on the integer grid.

use super::GadgetError;
use crate::geom::{properly_crosses, Point, Segment, TAU_BOUNDARY};

/// A graph drawn with axis-aligned integer routes, plus a claimed vertex
/// cover size.
#[derive(Debug, Clone, PartialEq)]
pub struct Drawing {
    vertices: Vec<Point>,
    routes: Vec<Vec<Point>>,
    /// Endpoint vertex indices of each route.
    endpoints: Vec<(usize, usize)>,
    kappa: usize,
}

fn is_integer(x: f64) -> bool {
    x.is_finite() && x == x.trunc() && x.abs() < 1e9
}

fn err(msg: String) -> GadgetError {
    GadgetError::InvalidDrawing(msg)
}

impl Drawing {
    /// Validates an orthogonal drawing: distinct integer vertex placements,
    /// routes of axis-aligned integer segments that start and end at
    /// vertices, touch each other only at shared endpoint vertices, pass
    /// through no other vertex, and meet at most four to a vertex.
    pub fn new(
        vertices: Vec<Point>,
        routes: Vec<Vec<Point>>,
        kappa: usize,
    ) -> Result<Self, GadgetError> {
        // Positions are deduplicated bitwise later; fold -0.0 into 0.0.
        let canon = |p: Point| Point::new(p.x + 0.0, p.y + 0.0);
        let vertices: Vec<Point> = vertices.into_iter().map(canon).collect();
        let routes: Vec<Vec<Point>> = routes
            .into_iter()
            .map(|r| r.into_iter().map(canon).collect())
            .collect();
        if vertices.is_empty() {
            return Err(err("no vertices".into()));
        }
        if routes.is_empty() {
            return Err(err("no edges".into()));
        }
        if kappa > vertices.len() {
            return Err(err(format!(
                "kappa {kappa} exceeds vertex count {}",
                vertices.len()
            )));
        }
        for (i, v) in vertices.iter().enumerate() {
            if !is_integer(v.x) || !is_integer(v.y) {
                return Err(err(format!("vertex {i} is not on the integer grid")));
            }
            for (j, w) in vertices.iter().enumerate().take(i) {
                if v == w {
                    return Err(err(format!("vertices {j} and {i} coincide")));
                }
            }
        }

        let vertex_at = |p: Point| vertices.iter().position(|&v| v == p);

        let mut endpoints = Vec::with_capacity(routes.len());
        let mut degree = vec![0usize; vertices.len()];
        for (r, route) in routes.iter().enumerate() {
            if route.len() < 2 {
                return Err(err(format!("route {r} has fewer than two points")));
            }
            for (i, p) in route.iter().enumerate() {
                if !is_integer(p.x) || !is_integer(p.y) {
                    return Err(err(format!(
                        "route {r} point {i} is not on the integer grid"
                    )));
                }
            }
            for (i, seg) in route.windows(2).enumerate() {
                let (dx, dy) = (seg[1].x - seg[0].x, seg[1].y - seg[0].y);
                if (dx == 0.0) == (dy == 0.0) {
                    return Err(err(format!(
                        "route {r} segment {i} is not axis-aligned or has zero length"
                    )));
                }
                if i > 0 {
                    let (px, py) = (seg[0].x - route[i - 1].x, seg[0].y - route[i - 1].y);
                    if px * dx + py * dy < 0.0 {
                        return Err(err(format!("route {r} reverses at point {i}")));
                    }
                }
            }
            let u = vertex_at(route[0])
                .ok_or_else(|| err(format!("route {r} does not start at a vertex")))?;
            let v = vertex_at(*route.last().expect("len checked"))
                .ok_or_else(|| err(format!("route {r} does not end at a vertex")))?;
            if u == v {
                return Err(err(format!("route {r} is a self-loop at vertex {u}")));
            }
            let pair = (u.min(v), u.max(v));
            if endpoints.contains(&pair) {
                return Err(err(format!(
                    "routes duplicate the edge between vertices {} and {}",
                    pair.0, pair.1
                )));
            }
            endpoints.push(pair);
            degree[u] += 1;
            degree[v] += 1;

            // Interior route points must avoid every vertex placement.
            for seg in route.windows(2) {
                let s = Segment::new(seg[0], seg[1]);
                for (vi, &vp) in vertices.iter().enumerate() {
                    if s.dist_to_point(vp) > TAU_BOUNDARY {
                        continue;
                    }
                    let terminal = (vp == route[0] && seg[0] == route[0])
                        || (vp == *route.last().expect("len checked")
                            && seg[1] == *route.last().expect("len checked"));
                    if !terminal {
                        return Err(err(format!("route {r} passes through vertex {vi}")));
                    }
                }
            }
        }
        for (v, &d) in degree.iter().enumerate() {
            if d > 4 {
                return Err(err(format!("vertex {v} has degree {d}, limit is 4")));
            }
        }

        check_route_interactions(&routes)?;

        Ok(Drawing {
            vertices,
            routes,
            endpoints,
            kappa,
        })
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn routes(&self) -> &[Vec<Point>] {
        &self.routes
    }

    pub fn endpoints(&self) -> &[(usize, usize)] {
        &self.endpoints
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }
}

fn segments_share_endpoint(a: &Segment, b: &Segment) -> Option<Point> {
    [a.a, a.b].into_iter().find(|&p| p == b.a || p == b.b)
}

fn touch(a: &Segment, b: &Segment) -> bool {
    properly_crosses(a.a, a.b, b.a, b.b)
        || a.dist_to_point(b.a) <= TAU_BOUNDARY
        || a.dist_to_point(b.b) <= TAU_BOUNDARY
        || b.dist_to_point(a.a) <= TAU_BOUNDARY
        || b.dist_to_point(a.b) <= TAU_BOUNDARY
}

fn check_route_interactions(routes: &[Vec<Point>]) -> Result<(), GadgetError> {
    let segs: Vec<(usize, usize, Segment)> = routes
        .iter()
        .enumerate()
        .flat_map(|(r, route)| {
            route
                .windows(2)
                .enumerate()
                .map(move |(i, w)| (r, i, Segment::new(w[0], w[1])))
                .collect::<Vec<_>>()
        })
        .collect();

    for (a, &(ra, ia, ref sa)) in segs.iter().enumerate() {
        for &(rb, ib, ref sb) in segs.iter().skip(a + 1) {
            if ra == rb {
                if ib == ia + 1 {
                    // Consecutive pieces share their corner; anything more is
                    // an overlap (reversals were rejected already).
                    continue;
                }
                if touch(sa, sb) {
                    return Err(err(format!(
                        "route {ra} touches itself (segments {ia} and {ib})"
                    )));
                }
            } else {
                if !touch(sa, sb) {
                    continue;
                }
                let Some(p) = segments_share_endpoint(sa, sb) else {
                    return Err(err(format!("routes {ra} and {rb} cross")));
                };
                // A shared endpoint must be a terminal of both routes, and
                // the segments must leave it in different directions.
                let terminal = |r: &[Point], s: &Segment| {
                    (s.a == p && (p == r[0] || p == *r.last().expect("nonempty")))
                        || (s.b == p && (p == r[0] || p == *r.last().expect("nonempty")))
                };
                if !terminal(&routes[ra], sa) || !terminal(&routes[rb], sb) {
                    return Err(err(format!(
                        "routes {ra} and {rb} touch away from a shared vertex"
                    )));
                }
                let da = if sa.a == p { sa.b } else { sa.a };
                let db = if sb.a == p { sb.b } else { sb.a };
                let (ax, ay) = (da.x - p.x, da.y - p.y);
                let (bx, by) = (db.x - p.x, db.y - p.y);
                if ax * by - ay * bx == 0.0 && ax * bx + ay * by > 0.0 {
                    return Err(err(format!(
                        "routes {ra} and {rb} overlap leaving vertex at ({}, {})",
                        p.x, p.y
                    )));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn single_edge_drawing() {
        let d = Drawing::new(vec![p(0.0, 0.0), p(1.0, 0.0)], vec![vec![p(0.0, 0.0), p(1.0, 0.0)]], 1)
            .unwrap();
        assert_eq!(d.endpoints(), &[(0, 1)]);
        assert_eq!(d.kappa(), 1);
    }

    #[test]
    fn four_cycle_drawing() {
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
        assert_eq!(d.endpoints().len(), 4);
    }

    #[test]
    fn bent_route_allowed() {
        Drawing::new(
            vec![p(0.0, 0.0), p(2.0, 1.0)],
            vec![vec![p(0.0, 0.0), p(2.0, 0.0), p(2.0, 1.0)]],
            1,
        )
        .unwrap();
    }

    #[test]
    fn rejects_bad_drawings() {
        let verts = vec![p(0.0, 0.0), p(2.0, 0.0), p(1.0, 1.0)];
        // Diagonal segment.
        assert!(Drawing::new(
            verts.clone(),
            vec![vec![p(0.0, 0.0), p(1.0, 1.0)]],
            1
        )
        .is_err());
        // Route through a third vertex.
        assert!(Drawing::new(
            vec![p(0.0, 0.0), p(2.0, 0.0), p(1.0, 0.0)],
            vec![vec![p(0.0, 0.0), p(2.0, 0.0)]],
            1
        )
        .is_err());
        // Crossing routes.
        assert!(Drawing::new(
            vec![p(0.0, 0.0), p(2.0, 0.0), p(1.0, 1.0), p(1.0, -1.0)],
            vec![
                vec![p(0.0, 0.0), p(2.0, 0.0)],
                vec![p(1.0, 1.0), p(1.0, -1.0)],
            ],
            2
        )
        .is_err());
        // Self-loop.
        assert!(Drawing::new(
            verts.clone(),
            vec![vec![p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0), p(0.0, 0.0)]],
            1
        )
        .is_err());
        // Duplicate edge.
        assert!(Drawing::new(
            vec![p(0.0, 0.0), p(1.0, 0.0)],
            vec![
                vec![p(0.0, 0.0), p(1.0, 0.0)],
                vec![p(0.0, 0.0), p(0.0, 1.0), p(1.0, 1.0), p(1.0, 0.0)],
            ],
            1
        )
        .is_err());
        // Non-integer vertex.
        assert!(Drawing::new(
            vec![p(0.5, 0.0), p(1.0, 0.0)],
            vec![vec![p(0.5, 0.0), p(1.0, 0.0)]],
            1
        )
        .is_err());
        // Overlapping routes out of a shared vertex.
        assert!(Drawing::new(
            vec![p(0.0, 0.0), p(2.0, 0.0), p(3.0, 0.0)],
            vec![
                vec![p(0.0, 0.0), p(2.0, 0.0)],
                vec![p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(3.0, 1.0), p(3.0, 0.0)],
            ],
            2
        )
        .is_err());
    }
}
