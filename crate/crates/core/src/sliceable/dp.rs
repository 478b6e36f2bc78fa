//! Exact dynamic programs over a slice ordering.
//!
//! Both solvers share one suffix recursion. With sites restricted to an
//! ordered sequence `w_0 .. w_{n-1}`, a site placement decomposes into a
//! first site `w_i` covering everything before it, consecutive pairs
//! covering the slice between them, and the last site covering the rest:
//!
//! `suffix[i][0]   = last_cost(i)`
//! `suffix[i][r]   = min over j > i of max(pair_cost(i, j), suffix[j][r-1])`
//! `opt            = min over i of max(first_cost(i), suffix[i][k-1])`
//!
//! Ties prefer the smaller index, so results are deterministic.

use super::{is_sliceable, compute_ordering, SliceableError};
use crate::burn::{BurnSolution, Evaluator, Method};
use crate::geom::{bisector_chord, GeometryError, Polygon};

/// Filled-in recursion tables, for inspection and tracing.
#[derive(Debug, Clone)]
pub struct DpTable {
    /// Vertex index at each ordering position (identity for 1-D instances).
    pub ordering: Vec<usize>,
    /// `suffix[i][r]`: burn of the region after position `i` with `r` more sites.
    pub suffix: Vec<Vec<f64>>,
    /// `choices[i][r]`: the position the minimum picked, when any.
    pub choices: Vec<Vec<Option<usize>>>,
}

fn suffix_dp(
    n: usize,
    k: usize,
    first_cost: impl Fn(usize) -> f64,
    pair_cost: impl Fn(usize, usize) -> f64,
    last_cost: impl Fn(usize) -> f64,
) -> (f64, Vec<usize>, Vec<Vec<f64>>, Vec<Vec<Option<usize>>>) {
    let mut suffix = vec![vec![f64::INFINITY; k]; n];
    let mut choices = vec![vec![None; k]; n];
    for i in 0..n {
        suffix[i][0] = last_cost(i);
    }
    for r in 1..k {
        for i in 0..n {
            let mut best = f64::INFINITY;
            let mut arg = None;
            for j in i + 1..n {
                let c = pair_cost(i, j).max(suffix[j][r - 1]);
                if c < best {
                    best = c;
                    arg = Some(j);
                }
            }
            suffix[i][r] = best;
            choices[i][r] = arg;
        }
    }

    let mut opt = f64::INFINITY;
    let mut start = 0;
    for i in 0..n {
        let c = first_cost(i).max(suffix[i][k - 1]);
        if c < opt {
            opt = c;
            start = i;
        }
    }

    let mut picks = vec![start];
    let mut cur = start;
    for r in (1..k).rev() {
        let next = choices[cur][r].expect("finite optimum records a choice");
        picks.push(next);
        cur = next;
    }
    (opt, picks, suffix, choices)
}

/// Optimal sites on a sliceable polygon.
pub fn solve_dp_sliceable(poly: &Polygon, k: usize) -> Result<BurnSolution, SliceableError> {
    solve_dp_sliceable_with_table(poly, k).map(|(sol, _)| sol)
}

/// Optimal sites on a sliceable polygon, with the recursion tables.
pub fn solve_dp_sliceable_with_table(
    poly: &Polygon,
    k: usize,
) -> Result<(BurnSolution, DpTable), SliceableError> {
    let n = poly.len();
    if k == 0 || k > n {
        return Err(SliceableError::BadBudget(k, n));
    }
    let report = is_sliceable(poly)?;
    if !report.convex {
        return Err(SliceableError::NotSliceable("polygon is not convex".into()));
    }
    if !report.sliceable {
        let &(c, _) = report
            .circumcenters
            .iter()
            .find(|&&(_, loc)| loc == crate::geom::Location::Inside)
            .expect("convex non-sliceable polygon has an inside circumcenter");
        return Err(SliceableError::NotSliceable(format!(
            "diagram vertex inside at ({}, {})",
            c.x, c.y
        )));
    }
    let ordering = compute_ordering(poly)?;

    let w = |i: usize| poly.vertex(ordering[i]);
    let mut pair = vec![vec![0.0f64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let site = w(j);
            pair[i][j] = match bisector_chord(ordering[i], ordering[j], poly) {
                // Chord endpoints are equidistant from both sites; the slice
                // between them burns from whichever is handy.
                Ok((p, q)) => site.dist(p).max(site.dist(q)),
                // Bisector only touches the boundary: the touch point is the
                // midpoint, the one place the slice reduces to.
                Err(GeometryError::DegenerateChord) => w(i).dist(site) / 2.0,
                Err(e) => return Err(e.into()),
            };
        }
    }

    let (opt, picks, suffix, choices) = suffix_dp(
        n,
        k,
        |i| w(0).dist(w(i)),
        |i, j| pair[i][j],
        |i| w(i).dist(w(n - 1)),
    );

    let mut sites: Vec<usize> = picks.iter().map(|&p| ordering[p]).collect();
    sites.sort_unstable();
    Ok((
        BurnSolution {
            sites,
            burn_time: opt,
            method: Method::DpSliceable,
            evaluator: Evaluator::ConvexExact,
        },
        DpTable {
            ordering,
            suffix,
            choices,
        },
    ))
}

/// Points on a line, by coordinate.
#[derive(Debug, Clone, PartialEq)]
pub struct OneDimInstance {
    positions: Vec<f64>,
}

impl OneDimInstance {
    /// Sorts the coordinates; they must be finite and pairwise distinct.
    pub fn new(mut positions: Vec<f64>) -> Result<Self, SliceableError> {
        if positions.is_empty() {
            return Err(SliceableError::BadPositions("no positions".into()));
        }
        if positions.iter().any(|p| !p.is_finite()) {
            return Err(SliceableError::BadPositions(
                "positions must be finite".into(),
            ));
        }
        positions.sort_by(f64::total_cmp);
        if positions.windows(2).any(|w| w[0] == w[1]) {
            return Err(SliceableError::BadPositions(
                "positions must be distinct".into(),
            ));
        }
        Ok(OneDimInstance { positions })
    }

    pub fn positions(&self) -> &[f64] {
        &self.positions
    }
}

/// Optimal sites on a line.
#[derive(Debug, Clone, PartialEq)]
pub struct OneDimSolution {
    /// Indices into the sorted positions, ascending.
    pub sites: Vec<usize>,
    pub burn_time: f64,
}

/// Optimal k sites among collinear points: the polygon recursion with
/// interval arithmetic in place of chords.
pub fn solve_dp_1d(inst: &OneDimInstance, k: usize) -> Result<OneDimSolution, SliceableError> {
    solve_dp_1d_with_table(inst, k).map(|(sol, _)| sol)
}

pub fn solve_dp_1d_with_table(
    inst: &OneDimInstance,
    k: usize,
) -> Result<(OneDimSolution, DpTable), SliceableError> {
    let pos = &inst.positions;
    let n = pos.len();
    if k == 0 || k > n {
        return Err(SliceableError::BadBudget(k, n));
    }
    let (opt, mut picks, suffix, choices) = suffix_dp(
        n,
        k,
        |i| pos[i] - pos[0],
        |i, j| (pos[j] - pos[i]) / 2.0,
        |i| pos[n - 1] - pos[i],
    );
    picks.sort_unstable();
    Ok((
        OneDimSolution {
            sites: picks,
            burn_time: opt,
        },
        DpTable {
            ordering: (0..n).collect(),
            suffix,
            choices,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burn::{burn_time_convex_exact, solve_bruteforce};
    use crate::geodesic::{build_index, PolygonalDomain};
    use crate::geom::Point;
    use crate::sliceable::generate_sliceable;

    fn flat_triangle() -> Polygon {
        Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(4.0, 0.0),
            Point::new(2.0, 0.5),
        ])
        .unwrap()
    }

    #[test]
    fn one_dim_small_instances() {
        let inst = OneDimInstance::new(vec![0.0, 1.0, 3.0]).unwrap();
        let s1 = solve_dp_1d(&inst, 1).unwrap();
        assert_eq!(s1.sites, vec![1]);
        assert!((s1.burn_time - 2.0).abs() < 1e-12);

        let s2 = solve_dp_1d(&inst, 2).unwrap();
        assert_eq!(s2.sites, vec![1, 2]);
        assert!((s2.burn_time - 1.0).abs() < 1e-12);

        let pair = OneDimInstance::new(vec![0.0, 1.0]).unwrap();
        let s = solve_dp_1d(&pair, 2).unwrap();
        assert_eq!(s.sites, vec![0, 1]);
        assert!((s.burn_time - 0.5).abs() < 1e-12);

        let single = OneDimInstance::new(vec![5.0]).unwrap();
        assert_eq!(solve_dp_1d(&single, 1).unwrap().burn_time, 0.0);
    }

    #[test]
    fn one_dim_input_validation() {
        assert!(matches!(
            OneDimInstance::new(vec![]),
            Err(SliceableError::BadPositions(_))
        ));
        assert!(matches!(
            OneDimInstance::new(vec![1.0, 1.0]),
            Err(SliceableError::BadPositions(_))
        ));
        assert!(matches!(
            OneDimInstance::new(vec![f64::NAN]),
            Err(SliceableError::BadPositions(_))
        ));
        let inst = OneDimInstance::new(vec![0.0, 1.0]).unwrap();
        assert!(matches!(
            solve_dp_1d(&inst, 3),
            Err(SliceableError::BadBudget(3, 2))
        ));
    }

    #[test]
    fn one_dim_sorts_input() {
        let inst = OneDimInstance::new(vec![3.0, 0.0, 1.0]).unwrap();
        assert_eq!(inst.positions(), &[0.0, 1.0, 3.0]);
        assert_eq!(solve_dp_1d(&inst, 1).unwrap().sites, vec![1]);
    }

    #[test]
    fn flat_triangle_optima() {
        let tri = flat_triangle();
        let root = 4.25f64.sqrt();

        let (s1, table) = solve_dp_sliceable_with_table(&tri, 1).unwrap();
        assert_eq!(table.ordering, vec![0, 2, 1]);
        assert_eq!(s1.sites, vec![2]);
        assert!((s1.burn_time - root).abs() < 1e-12);

        let s2 = solve_dp_sliceable(&tri, 2).unwrap();
        assert!((s2.burn_time - root).abs() < 1e-12);

        let s3 = solve_dp_sliceable(&tri, 3).unwrap();
        assert_eq!(s3.sites, vec![0, 1, 2]);
        assert!((s3.burn_time - 1.0625).abs() < 1e-12);
    }

    #[test]
    fn rejects_unsliceable_polygons() {
        let square = Polygon::new(vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
        ])
        .unwrap();
        assert!(matches!(
            solve_dp_sliceable(&square, 2),
            Err(SliceableError::NotSliceable(_))
        ));
    }

    #[test]
    fn dp_matches_bruteforce_on_generated_polygons() {
        for seed in 0..10u64 {
            let poly = generate_sliceable(4 + (seed as usize % 4), seed).unwrap();
            let idx =
                build_index(&PolygonalDomain::simple(poly.clone()).unwrap());
            for k in 1..=3usize.min(poly.len()) {
                let dp = solve_dp_sliceable(&poly, k).unwrap();
                let brute = solve_bruteforce(&idx, k, 0.1).unwrap();
                assert!(
                    (dp.burn_time - brute.burn_time).abs() <= 1e-9,
                    "seed {seed} k {k}: dp {} vs brute {}",
                    dp.burn_time,
                    brute.burn_time
                );
                let (eval, _) = burn_time_convex_exact(&poly, &dp.sites).unwrap();
                assert!(
                    (dp.burn_time - eval).abs() <= 1e-9,
                    "seed {seed} k {k}: table value {} vs evaluator {}",
                    dp.burn_time,
                    eval
                );
            }
        }
    }
}
