//! Delaunay triangulation by incremental insertion and edge flips.
//!
//! The initial triangulation fans out from the convex hull; interior and
//! on-edge points are inserted with 1->3 / 2->4 splits and every insertion
//! is followed by Lawson legalization. A final flip pass runs until no
//! illegal edge remains, so the result satisfies the empty-circumcircle
//! property regardless of insertion order. Cocircular quads are resolved
//! deterministically: the diagonal with the lexicographically smaller
//! sorted index pair wins.

use std::collections::HashMap;

use super::{
    incircle_det, orient, GeometryError, Point, Triangle, TAU_BOUNDARY, TAU_INCIRCLE,
};

/// A triangulation of a point set. Triangles are index triples into
/// `points`, counter-clockwise, listed in a canonical order.
#[derive(Debug, Clone)]
pub struct Triangulation {
    pub points: Vec<Point>,
    pub triangles: Vec<[usize; 3]>,
}

impl Triangulation {
    pub fn triangle(&self, i: usize) -> Triangle {
        let [a, b, c] = self.triangles[i];
        Triangle::new(self.points[a], self.points[b], self.points[c])
    }

    /// Undirected edges as sorted index pairs, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut set = std::collections::BTreeSet::new();
        for t in &self.triangles {
            for k in 0..3 {
                let a = t[k];
                let b = t[(k + 1) % 3];
                set.insert((a.min(b), a.max(b)));
            }
        }
        set.into_iter().collect()
    }
}

struct Mesh {
    points: Vec<Point>,
    tris: Vec<Option<[usize; 3]>>,
    edge_map: HashMap<(usize, usize), usize>,
}

impl Mesh {
    fn add_tri(&mut self, t: [usize; 3]) -> usize {
        let idx = self.tris.len();
        self.tris.push(Some(t));
        for k in 0..3 {
            self.edge_map.insert((t[k], t[(k + 1) % 3]), idx);
        }
        idx
    }

    fn remove_tri(&mut self, idx: usize) {
        if let Some(t) = self.tris[idx].take() {
            for k in 0..3 {
                self.edge_map.remove(&(t[k], t[(k + 1) % 3]));
            }
        }
    }

    fn apex(&self, tri: usize, a: usize, b: usize) -> usize {
        let t = self.tris[tri].expect("live triangle");
        *t.iter().find(|&&v| v != a && v != b).expect("apex")
    }

    /// Flip the interior edge `(a, b)`; returns the new diagonal `(p, d)`.
    fn flip(&mut self, a: usize, b: usize) -> (usize, usize) {
        let t1 = self.edge_map[&(a, b)];
        let t2 = self.edge_map[&(b, a)];
        let p = self.apex(t1, a, b);
        let d = self.apex(t2, a, b);
        self.remove_tri(t1);
        self.remove_tri(t2);
        self.add_tri([a, d, p]);
        self.add_tri([d, b, p]);
        (p, d)
    }

    /// Whether interior edge `(a, b)` with opposite apexes `p` (left) and
    /// `d` (right) should be flipped.
    fn illegal(&self, a: usize, b: usize, p: usize, d: usize) -> bool {
        let pa = self.points[a];
        let pb = self.points[b];
        let pp = self.points[p];
        let pd = self.points[d];
        // Only strictly convex quads can flip.
        if orient(pp, pd, pa) * orient(pp, pd, pb) >= 0 {
            return false;
        }
        let det = incircle_det(pa, pb, pp, pd);
        if det > TAU_INCIRCLE {
            true
        } else if det < -TAU_INCIRCLE {
            false
        } else {
            // Cocircular: prefer the lexicographically smaller diagonal.
            // The strict comparison keeps tie flips acyclic.
            (p.min(d), p.max(d)) < (a.min(b), a.max(b))
        }
    }

    /// Flip illegal edges from the worklist until none remain.
    fn legalize(&mut self, mut work: Vec<(usize, usize)>) -> Result<(), GeometryError> {
        let cap = 64 * self.points.len() * self.points.len() + 4096;
        let mut steps = 0usize;
        while let Some((a, b)) = work.pop() {
            steps += 1;
            if steps > cap {
                return Err(GeometryError::DegenerateInput(
                    "edge legalization did not converge".to_string(),
                ));
            }
            let (Some(&t1), Some(&t2)) = (self.edge_map.get(&(a, b)), self.edge_map.get(&(b, a)))
            else {
                continue; // boundary edge or already flipped away
            };
            let p = self.apex(t1, a, b);
            let d = self.apex(t2, a, b);
            if self.illegal(a, b, p, d) {
                self.flip(a, b);
                work.push((a, d));
                work.push((d, b));
                work.push((b, p));
                work.push((p, a));
            }
        }
        Ok(())
    }

    /// Locate a live triangle containing `p`; returns `(tri, Some(edge))`
    /// when `p` lies on that edge.
    #[allow(clippy::type_complexity)]
    fn locate(&self, p: Point) -> Option<(usize, Option<(usize, usize)>)> {
        for (idx, t) in self.tris.iter().enumerate() {
            let Some(t) = t else { continue };
            let o: Vec<i32> = (0..3)
                .map(|k| orient(self.points[t[k]], self.points[t[(k + 1) % 3]], p))
                .collect();
            if o.iter().any(|&s| s < 0) {
                continue;
            }
            let zeros: Vec<usize> = (0..3).filter(|&k| o[k] == 0).collect();
            match zeros.len() {
                0 => return Some((idx, None)),
                1 => {
                    let k = zeros[0];
                    return Some((idx, Some((t[k], t[(k + 1) % 3]))));
                }
                _ => continue, // effectively at a vertex; duplicates were rejected
            }
        }
        None
    }
}

/// Convex hull vertex indices, counter-clockwise, extreme points only.
fn hull_indices(points: &[Point]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&a, &b| points[a].lex_cmp(&points[b]));
    let mut lower: Vec<usize> = Vec::new();
    for &i in &idx {
        while lower.len() >= 2
            && orient(
                points[lower[lower.len() - 2]],
                points[lower[lower.len() - 1]],
                points[i],
            ) <= 0
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &i in idx.iter().rev() {
        while upper.len() >= 2
            && orient(
                points[upper[upper.len() - 2]],
                points[upper[upper.len() - 1]],
                points[i],
            ) <= 0
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Delaunay triangulation of `points`.
///
/// Fails with [`GeometryError::DegenerateInput`] when fewer than three
/// points are given, points coincide within tolerance, or all points are
/// collinear.
pub fn delaunay(points: &[Point]) -> Result<Triangulation, GeometryError> {
    let n = points.len();
    if n < 3 {
        return Err(GeometryError::DegenerateInput(format!(
            "triangulation needs at least 3 points, got {n}"
        )));
    }
    for p in points {
        if !p.is_finite() {
            return Err(GeometryError::DegenerateInput(
                "non-finite coordinate".to_string(),
            ));
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            if points[i].dist(points[j]) <= TAU_BOUNDARY {
                return Err(GeometryError::DegenerateInput(format!(
                    "points {i} and {j} coincide"
                )));
            }
        }
    }

    let hull = hull_indices(points);
    if hull.len() < 3 {
        return Err(GeometryError::DegenerateInput(
            "all points collinear".to_string(),
        ));
    }

    let mut mesh = Mesh {
        points: points.to_vec(),
        tris: Vec::new(),
        edge_map: HashMap::new(),
    };
    for k in 1..hull.len() - 1 {
        mesh.add_tri([hull[0], hull[k], hull[k + 1]]);
    }

    let on_hull: std::collections::HashSet<usize> = hull.iter().copied().collect();
    for (pi, &p) in points.iter().enumerate() {
        if on_hull.contains(&pi) {
            continue;
        }
        let Some((tri, on_edge)) = mesh.locate(p) else {
            return Err(GeometryError::DegenerateInput(format!(
                "point {pi} could not be located in the triangulation"
            )));
        };
        let mut suspects: Vec<(usize, usize)> = Vec::new();
        match on_edge {
            None => {
                let t = mesh.tris[tri].unwrap();
                mesh.remove_tri(tri);
                mesh.add_tri([t[0], t[1], pi]);
                mesh.add_tri([t[1], t[2], pi]);
                mesh.add_tri([t[2], t[0], pi]);
                suspects.extend([(t[0], t[1]), (t[1], t[2]), (t[2], t[0])]);
            }
            Some((a, b)) => {
                let c = mesh.apex(tri, a, b);
                mesh.remove_tri(tri);
                mesh.add_tri([a, pi, c]);
                mesh.add_tri([pi, b, c]);
                suspects.extend([(b, c), (c, a)]);
                if let Some(&t2) = mesh.edge_map.get(&(b, a)) {
                    let d = mesh.apex(t2, b, a);
                    mesh.remove_tri(t2);
                    mesh.add_tri([b, pi, d]);
                    mesh.add_tri([pi, a, d]);
                    suspects.extend([(a, d), (d, b)]);
                }
            }
        }
        mesh.legalize(suspects)?;
    }

    // Final sweep: flip until every interior edge is legal. This also
    // settles cocircular ties onto their canonical diagonals.
    let all_edges: Vec<(usize, usize)> = mesh
        .edge_map
        .keys()
        .filter(|&&(a, b)| a < b)
        .copied()
        .collect();
    mesh.legalize(all_edges)?;

    let mut triangles: Vec<[usize; 3]> = mesh
        .tris
        .into_iter()
        .flatten()
        .map(|t| {
            // Rotate the smallest index first, preserving orientation.
            let k = (0..3).min_by_key(|&k| t[k]).unwrap();
            [t[k], t[(k + 1) % 3], t[(k + 2) % 3]]
        })
        .collect();
    triangles.sort();
    Ok(Triangulation {
        points: points.to_vec(),
        triangles,
    })
}
