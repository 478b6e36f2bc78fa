//! Independent oracles for the acceptance suite: a dense-grid shortest-path
//! oracle for geodesic distances and a subset-enumeration oracle for the
//! collinear solver. Neither touches the library's visibility graph or DP.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use itertools::Itertools;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use polyburn::geodesic::PolygonalDomain;
use polyburn::geom::{Location, Point};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Rejection-samples a point strictly inside the domain.
pub fn random_interior_point(domain: &PolygonalDomain, rng: &mut ChaCha8Rng) -> Point {
    let (lo, hi) = domain.bbox();
    loop {
        let p = Point::new(
            rng.random_range(lo.x..hi.x),
            rng.random_range(lo.y..hi.y),
        );
        if domain.locate(p) == Location::Inside {
            return p;
        }
    }
}

struct HeapItem(f64, usize);

impl PartialEq for HeapItem {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0 && self.1 == other.1
    }
}
impl Eq for HeapItem {}
impl PartialOrd for HeapItem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for HeapItem {
    fn cmp(&self, other: &Self) -> Ordering {
        // Reversed: BinaryHeap pops the smallest distance first.
        other.0.total_cmp(&self.0).then(other.1.cmp(&self.1))
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Shortest path between `s` and `t` through a dense grid graph.
///
/// Nodes are grid points at spacing `h` that lie in the closed domain, plus
/// the two query points. Edges connect nodes within a radius-3 coprime
/// offset neighborhood (metric distortion below 0.3%) when the straight
/// segment between them, sampled at spacing h/2, stays in the domain.
pub fn grid_oracle_distance(domain: &PolygonalDomain, s: Point, t: Point, h: f64) -> f64 {
    let (lo, hi) = domain.bbox();
    let nx = ((hi.x - lo.x) / h).round() as i64 + 1;
    let ny = ((hi.y - lo.y) / h).round() as i64 + 1;
    let at = |ix: i64, iy: i64| Point::new(lo.x + ix as f64 * h, lo.y + iy as f64 * h);

    let mut valid = vec![false; (nx * ny) as usize];
    for iy in 0..ny {
        for ix in 0..nx {
            valid[(iy * nx + ix) as usize] = domain.locate(at(ix, iy)) != Location::Outside;
        }
    }

    let segment_ok = |a: Point, b: Point| -> bool {
        let steps = (a.dist(b) / (h / 2.0)).ceil().max(1.0) as usize;
        (1..steps).all(|i| domain.locate(a.lerp(b, i as f64 / steps as f64)) != Location::Outside)
    };

    let mut offsets = Vec::new();
    for dx in -3i64..=3 {
        for dy in -3i64..=3 {
            if (dx, dy) != (0, 0) && gcd(dx.abs(), dy.abs()) == 1 {
                offsets.push((dx, dy));
            }
        }
    }

    let grid_nodes = (nx * ny) as usize;
    let (s_id, t_id) = (grid_nodes, grid_nodes + 1);
    let point_of = |v: usize| -> Point {
        if v == s_id {
            s
        } else if v == t_id {
            t
        } else {
            at(v as i64 % nx, v as i64 / nx)
        }
    };
    let link_radius = 3.5 * h;

    let mut dist = vec![f64::INFINITY; grid_nodes + 2];
    dist[s_id] = 0.0;
    let mut heap = BinaryHeap::new();
    heap.push(HeapItem(0.0, s_id));
    while let Some(HeapItem(d, u)) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        if u == t_id {
            return d;
        }
        let pu = point_of(u);
        let relax = |v: usize, pv: Point, dist: &mut Vec<f64>, heap: &mut BinaryHeap<HeapItem>| {
            let nd = d + pu.dist(pv);
            if nd < dist[v] && segment_ok(pu, pv) {
                dist[v] = nd;
                heap.push(HeapItem(nd, v));
            }
        };
        if u == s_id {
            // Query points link to every valid grid node nearby.
            let cx = ((s.x - lo.x) / h).round() as i64;
            let cy = ((s.y - lo.y) / h).round() as i64;
            for iy in (cy - 4).max(0)..=(cy + 4).min(ny - 1) {
                for ix in (cx - 4).max(0)..=(cx + 4).min(nx - 1) {
                    let v = (iy * nx + ix) as usize;
                    if valid[v] && s.dist(at(ix, iy)) <= link_radius {
                        relax(v, at(ix, iy), &mut dist, &mut heap);
                    }
                }
            }
            if s.dist(t) <= link_radius {
                relax(t_id, t, &mut dist, &mut heap);
            }
        } else {
            let (ix, iy) = (u as i64 % nx, u as i64 / nx);
            for &(dx, dy) in &offsets {
                let (jx, jy) = (ix + dx, iy + dy);
                if jx >= 0 && jx < nx && jy >= 0 && jy < ny {
                    let v = (jy * nx + jx) as usize;
                    if valid[v] {
                        relax(v, at(jx, jy), &mut dist, &mut heap);
                    }
                }
            }
            if pu.dist(t) <= link_radius {
                relax(t_id, t, &mut dist, &mut heap);
            }
        }
    }
    dist[t_id]
}

/// Burn time of sorted `sites` on sorted collinear `pos`: worst of the two
/// overhangs and half the widest gap between consecutive sites.
pub fn onedim_cost(pos: &[f64], sites: &[usize]) -> f64 {
    let first = pos[sites[0]] - pos[0];
    let last = pos[pos.len() - 1] - pos[sites[sites.len() - 1]];
    let mut worst = first.max(last);
    for pair in sites.windows(2) {
        worst = worst.max((pos[pair[1]] - pos[pair[0]]) / 2.0);
    }
    worst
}

/// Exhaustive optimum over all k-subsets; first lexicographic tie wins.
pub fn onedim_enumerate(pos: &[f64], k: usize) -> (f64, Vec<usize>) {
    let mut best: Option<(f64, Vec<usize>)> = None;
    for combo in (0..pos.len()).combinations(k) {
        let c = onedim_cost(pos, &combo);
        if best.as_ref().is_none_or(|&(b, _)| c < b) {
            best = Some((c, combo));
        }
    }
    best.expect("k <= n")
}
