//! Sanity bounds tying burn times to the domain diameter and to the
//! vertex-restricted center problem.

use itertools::Itertools;

use super::solvers::{n_choose_k, solve_bruteforce, COMBINATION_CAP};
use super::{
    burn_time_auto, burn_time_convex_exact, evaluate_sampled, BurnError, BurnSolution,
};
use crate::geodesic::{
    diameter_estimate, vertex_distance_matrix, GeodesicIndex, SampledDomain,
};

/// Outcome of [`check_trivial_bounds`].
#[derive(Debug, Clone)]
pub struct TrivialBoundsReport {
    pub diameter: f64,
    /// Largest burn time over all single-vertex site sets.
    pub max_singleton_burn: f64,
    /// `max_singleton_burn <= diameter` up to sampling slack.
    pub singleton_within_diameter: bool,
    pub k: usize,
    pub burn_time: f64,
    /// `diameter <= 2 k * burn_time` (meaningful when the solution is
    /// optimal or near-optimal).
    pub diameter_within_k_bound: bool,
}

/// Checks two bounds that hold on every domain: a fire lit at any single
/// vertex consumes the domain within its diameter, and the diameter is at
/// most `2k` times the optimal k-site burn time.
pub fn check_trivial_bounds(
    index: &GeodesicIndex,
    solution: &BurnSolution,
    resolution: f64,
) -> Result<TrivialBoundsReport, BurnError> {
    let diameter = diameter_estimate(index, resolution);
    let n = index.domain().vertex_count();

    let mut max_singleton_burn: f64 = 0.0;
    if index.domain().is_convex() {
        for v in 0..n {
            let (t, _) = burn_time_convex_exact(index.domain().outer(), &[v])?;
            max_singleton_burn = max_singleton_burn.max(t);
        }
    } else {
        let sd = SampledDomain::build(index, resolution);
        for v in 0..n {
            max_singleton_burn = max_singleton_burn.max(evaluate_sampled(&sd, &[v]).0);
        }
    }

    let k = solution.sites.len();
    Ok(TrivialBoundsReport {
        diameter,
        max_singleton_burn,
        // Sampled singleton burns and the diameter estimate read different
        // sample sets, so allow discretization slack.
        singleton_within_diameter: max_singleton_burn <= diameter + 2.0 * resolution + 1e-9,
        k,
        burn_time: solution.burn_time,
        diameter_within_k_bound: diameter <= 2.0 * k as f64 * solution.burn_time + 1e-6,
    })
}

/// Outcome of [`kcenter_sandwich_check`].
#[derive(Debug, Clone)]
pub struct KcenterReport {
    /// Optimal vertex k-center, lexicographically smallest among ties.
    pub center_sites: Vec<usize>,
    /// Its largest vertex-to-nearest-center geodesic distance.
    pub center_radius: f64,
    /// Exact optimal burn time from exhaustive search.
    pub opt: f64,
    /// Burn time of the k-center sites.
    pub center_burn: f64,
    pub radius_le_opt: bool,
    pub burn_le_twice_opt: bool,
}

/// Largest geodesic distance from any vertex to its nearest site.
pub fn vertex_radius(matrix: &[Vec<f64>], sites: &[usize]) -> f64 {
    (0..matrix.len())
        .map(|v| {
            sites
                .iter()
                .map(|&s| matrix[v][s])
                .fold(f64::INFINITY, f64::min)
        })
        .fold(0.0, f64::max)
}

/// Verifies the center-problem sandwich: the exact vertex k-center radius
/// `r` (exhaustive max-min over the distance matrix) is at most the optimal
/// burn time, and burning from the optimal center finishes within `2 opt`,
/// because every point reaches a site via its nearest vertex's center.
pub fn kcenter_sandwich_check(
    index: &GeodesicIndex,
    k: usize,
    resolution: f64,
) -> Result<KcenterReport, BurnError> {
    let n = index.domain().vertex_count();
    let optimal = solve_bruteforce(index, k, resolution)?;
    if n_choose_k(n, k) > COMBINATION_CAP {
        return Err(BurnError::TooLarge(format!(
            "{n} choose {k} center candidates exceeds cap {COMBINATION_CAP}"
        )));
    }

    let matrix = vertex_distance_matrix(index);
    let mut best: Option<(f64, Vec<usize>)> = None;
    for combo in (0..n).combinations(k) {
        let r = vertex_radius(&matrix, &combo);
        if best.as_ref().is_none_or(|(br, _)| r < *br) {
            best = Some((r, combo));
        }
    }
    let (center_radius, center_sites) = best.expect("k-subsets exist when 0 < k <= n");
    let (center_burn, _, _) = burn_time_auto(index, &center_sites, resolution)?;

    // Sampled evaluators carry discretization slack; exact ones do not.
    let slack = if index.domain().is_convex() && index.domain().holes().is_empty() {
        0.0
    } else {
        2.0 * resolution
    };
    let opt = optimal.burn_time;
    Ok(KcenterReport {
        center_sites,
        center_radius,
        opt,
        center_burn,
        radius_le_opt: center_radius <= opt + 1e-9,
        burn_le_twice_opt: center_burn <= 2.0 * opt + 1e-6 + slack,
    })
}
