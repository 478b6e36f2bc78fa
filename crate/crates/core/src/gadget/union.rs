//! Union of axis-aligned rectangles, traced into boundary rings.
//!
//! All rectangle coordinates are overlaid into a lattice; a lattice cell is
//! covered when its center lies in some rectangle. Directed boundary steps
//! (interior on the left) are emitted per covered cell and stitched into
//! cycles: counter-clockwise rings enclose material, clockwise rings are
//! holes. Collinear lattice points are dropped unless explicitly kept.

use std::collections::{BTreeMap, HashSet};

use super::GadgetError;
use crate::geom::Point;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Rect {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl Rect {
    fn contains(&self, x: f64, y: f64) -> bool {
        x > self.x0 && x < self.x1 && y > self.y0 && y < self.y1
    }
}

fn dedup_sorted(mut v: Vec<f64>) -> Vec<f64> {
    v.sort_by(f64::total_cmp);
    v.dedup();
    v
}

/// Traces the union boundary. Returns the rings as point chains; signed
/// area is positive for the outer ring(s), negative for holes. Points in
/// `keep` survive collinear simplification.
pub(crate) fn union_outline(
    rects: &[Rect],
    keep: &HashSet<(u64, u64)>,
) -> Result<Vec<Vec<Point>>, GadgetError> {
    if rects.is_empty() {
        return Err(GadgetError::UnionDegenerate("no rectangles".into()));
    }
    let xs = dedup_sorted(rects.iter().flat_map(|r| [r.x0, r.x1]).collect());
    let ys = dedup_sorted(rects.iter().flat_map(|r| [r.y0, r.y1]).collect());
    let (nx, ny) = (xs.len() - 1, ys.len() - 1);

    let mut covered = vec![vec![false; ny]; nx];
    for (i, w) in xs.windows(2).enumerate() {
        let cx = (w[0] + w[1]) / 2.0;
        for (j, h) in ys.windows(2).enumerate() {
            let cy = (h[0] + h[1]) / 2.0;
            covered[i][j] = rects.iter().any(|r| r.contains(cx, cy));
        }
    }

    // Directed unit steps along cell sides having uncovered neighbors,
    // keyed by start node for deterministic stitching.
    let is_covered = |i: isize, j: isize| -> bool {
        i >= 0 && j >= 0 && (i as usize) < nx && (j as usize) < ny && covered[i as usize][j as usize]
    };
    let mut steps: BTreeMap<(usize, usize), (usize, usize)> = BTreeMap::new();
    let mut add = |from: (usize, usize), to: (usize, usize)| -> Result<(), GadgetError> {
        if steps.insert(from, to).is_some() {
            return Err(GadgetError::UnionDegenerate(format!(
                "boundary pinches at ({}, {})",
                xs[from.0], ys[from.1]
            )));
        }
        Ok(())
    };
    for i in 0..nx {
        for j in 0..ny {
            if !covered[i][j] {
                continue;
            }
            let (ii, jj) = (i as isize, j as isize);
            if !is_covered(ii, jj - 1) {
                add((i, j), (i + 1, j))?;
            }
            if !is_covered(ii + 1, jj) {
                add((i + 1, j), (i + 1, j + 1))?;
            }
            if !is_covered(ii, jj + 1) {
                add((i + 1, j + 1), (i, j + 1))?;
            }
            if !is_covered(ii - 1, jj) {
                add((i, j + 1), (i, j))?;
            }
        }
    }

    let mut rings = Vec::new();
    let mut visited: HashSet<(usize, usize)> = HashSet::new();
    let starts: Vec<(usize, usize)> = steps.keys().copied().collect();
    for start in starts {
        if visited.contains(&start) {
            continue;
        }
        let mut chain = Vec::new();
        let mut cur = start;
        loop {
            visited.insert(cur);
            chain.push(cur);
            cur = steps[&cur];
            if cur == start {
                break;
            }
        }
        rings.push(simplify(&chain, &xs, &ys, keep));
    }
    Ok(rings)
}

/// Drops lattice points interior to straight runs, except kept ones.
fn simplify(
    chain: &[(usize, usize)],
    xs: &[f64],
    ys: &[f64],
    keep: &HashSet<(u64, u64)>,
) -> Vec<Point> {
    let n = chain.len();
    let mut out = Vec::new();
    for c in 0..n {
        let prev = chain[(c + n - 1) % n];
        let here = chain[c];
        let next = chain[(c + 1) % n];
        let straight = (next.0 as isize - here.0 as isize, next.1 as isize - here.1 as isize)
            == (here.0 as isize - prev.0 as isize, here.1 as isize - prev.1 as isize);
        let p = Point::new(xs[here.0], ys[here.1]);
        if !straight || keep.contains(&(p.x.to_bits(), p.y.to_bits())) {
            out.push(p);
        }
    }
    out
}

/// Signed area (positive for counter-clockwise rings).
pub(crate) fn ring_area(ring: &[Point]) -> f64 {
    let mut acc = 0.0;
    for (i, a) in ring.iter().enumerate() {
        let b = ring[(i + 1) % ring.len()];
        acc += a.x * b.y - a.y * b.x;
    }
    acc / 2.0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn no_keep() -> HashSet<(u64, u64)> {
        HashSet::new()
    }

    #[test]
    fn single_rectangle() {
        let rects = [Rect {
            x0: 0.0,
            y0: 0.0,
            x1: 2.0,
            y1: 1.0,
        }];
        let rings = union_outline(&rects, &no_keep()).unwrap();
        assert_eq!(rings.len(), 1);
        assert_eq!(rings[0].len(), 4);
        assert!((ring_area(&rings[0]) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn overlapping_rectangles_form_an_l() {
        let rects = [
            Rect {
                x0: 0.0,
                y0: 0.0,
                x1: 3.0,
                y1: 1.0,
            },
            Rect {
                x0: 0.0,
                y0: 0.0,
                x1: 1.0,
                y1: 3.0,
            },
        ];
        let rings = union_outline(&rects, &no_keep()).unwrap();
        assert_eq!(rings.len(), 1);
        assert_eq!(rings[0].len(), 6);
        assert!((ring_area(&rings[0]) - 5.0).abs() < 1e-12);
    }

    #[test]
    fn frame_produces_a_hole() {
        let rects = [
            Rect { x0: 0.0, y0: 0.0, x1: 3.0, y1: 1.0 },
            Rect { x0: 0.0, y0: 2.0, x1: 3.0, y1: 3.0 },
            Rect { x0: 0.0, y0: 0.0, x1: 1.0, y1: 3.0 },
            Rect { x0: 2.0, y0: 0.0, x1: 3.0, y1: 3.0 },
        ];
        let rings = union_outline(&rects, &no_keep()).unwrap();
        assert_eq!(rings.len(), 2);
        let mut areas: Vec<f64> = rings.iter().map(|r| ring_area(r)).collect();
        areas.sort_by(f64::total_cmp);
        assert!((areas[0] - -1.0).abs() < 1e-12, "hole area {}", areas[0]);
        assert!((areas[1] - 9.0).abs() < 1e-12, "outer area {}", areas[1]);
    }

    #[test]
    fn disjoint_rectangles_give_two_outer_rings() {
        let rects = [
            Rect { x0: 0.0, y0: 0.0, x1: 1.0, y1: 1.0 },
            Rect { x0: 2.0, y0: 0.0, x1: 3.0, y1: 1.0 },
        ];
        let rings = union_outline(&rects, &no_keep()).unwrap();
        assert_eq!(rings.len(), 2);
        assert!(rings.iter().all(|r| ring_area(r) > 0.0));
    }

    #[test]
    fn corner_touch_is_a_pinch() {
        let rects = [
            Rect { x0: 0.0, y0: 0.0, x1: 1.0, y1: 1.0 },
            Rect { x0: 1.0, y0: 1.0, x1: 2.0, y1: 2.0 },
        ];
        assert!(matches!(
            union_outline(&rects, &no_keep()),
            Err(GadgetError::UnionDegenerate(_))
        ));
    }

    #[test]
    fn keep_set_retains_collinear_points() {
        let rects = [
            Rect { x0: 0.0, y0: 0.0, x1: 1.0, y1: 1.0 },
            Rect { x0: 1.0, y0: 0.0, x1: 2.0, y1: 1.0 },
        ];
        let plain = union_outline(&rects, &no_keep()).unwrap();
        assert_eq!(plain[0].len(), 4);
        let mut keep = HashSet::new();
        keep.insert((1.0f64.to_bits(), 0.0f64.to_bits()));
        let rings = union_outline(&rects, &keep).unwrap();
        assert_eq!(rings[0].len(), 5);
        assert!(rings[0].contains(&Point::new(1.0, 0.0)));
    }
}
