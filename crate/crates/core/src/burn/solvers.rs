//! Site-selection strategies: exhaustive search and farthest-first traversal.

use itertools::Itertools;

use super::{
    burn_time_convex_exact, evaluate_sampled, BurnError, BurnSolution, Evaluator, Method,
};
use crate::geodesic::{vertex_distance_matrix, GeodesicIndex, SampledDomain};

/// Largest number of site subsets the exhaustive solver will enumerate.
pub const COMBINATION_CAP: u128 = 1_000_000;

pub(crate) fn n_choose_k(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

fn check_budget(k: usize, n: usize) -> Result<(), BurnError> {
    if k == 0 || k > n {
        return Err(BurnError::BadBudget(k, n));
    }
    Ok(())
}

struct SiteEvaluator<'a> {
    index: &'a GeodesicIndex,
    sampled: Option<SampledDomain>,
}

impl<'a> SiteEvaluator<'a> {
    fn new(index: &'a GeodesicIndex, resolution: f64) -> Self {
        let sampled = if index.domain().is_convex() {
            None
        } else {
            Some(SampledDomain::build(index, resolution))
        };
        SiteEvaluator { index, sampled }
    }

    fn evaluator(&self) -> Evaluator {
        if self.sampled.is_some() {
            Evaluator::Sampled
        } else {
            Evaluator::ConvexExact
        }
    }

    fn burn_time(&self, sites: &[usize]) -> Result<f64, BurnError> {
        match &self.sampled {
            Some(sd) => Ok(evaluate_sampled(sd, sites).0),
            None => Ok(burn_time_convex_exact(self.index.domain().outer(), sites)?.0),
        }
    }
}

/// Optimal site set by enumerating every k-subset of the vertices.
///
/// Ties are broken toward the lexicographically smallest index set. Refuses
/// instances with more than [`COMBINATION_CAP`] subsets.
pub fn solve_bruteforce(
    index: &GeodesicIndex,
    k: usize,
    resolution: f64,
) -> Result<BurnSolution, BurnError> {
    let n = index.domain().vertex_count();
    check_budget(k, n)?;
    let count = n_choose_k(n, k);
    if count > COMBINATION_CAP {
        return Err(BurnError::TooLarge(format!(
            "{n} choose {k} = {count} site sets exceeds cap {COMBINATION_CAP}"
        )));
    }

    let eval = SiteEvaluator::new(index, resolution);
    let mut best: Option<(f64, Vec<usize>)> = None;
    for combo in (0..n).combinations(k) {
        let t = eval.burn_time(&combo)?;
        if best.as_ref().is_none_or(|(bt, _)| t < *bt) {
            best = Some((t, combo));
        }
    }
    let (burn_time, sites) = best.expect("budget validated, at least one subset");
    Ok(BurnSolution {
        sites,
        burn_time,
        method: Method::BruteForce,
        evaluator: eval.evaluator(),
    })
}

/// Start rule for the farthest-first traversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GonzalezStart {
    /// Seed with this vertex.
    Fixed(usize),
    /// Run from every vertex and keep the set with the lowest burn time
    /// (ties toward the smaller start index).
    Best,
}

fn farthest_first(matrix: &[Vec<f64>], k: usize, start: usize) -> Vec<usize> {
    let mut sites = vec![start];
    let mut dist = matrix[start].clone();
    while sites.len() < k {
        let mut far = 0;
        let mut fd = f64::NEG_INFINITY;
        for (v, &d) in dist.iter().enumerate() {
            if d > fd {
                fd = d;
                far = v;
            }
        }
        sites.push(far);
        for (v, d) in dist.iter_mut().enumerate() {
            *d = d.min(matrix[far][v]);
        }
    }
    sites
}

/// Farthest-first traversal over the vertex geodesic metric.
///
/// Picks the seed, then repeatedly adds the vertex farthest from the chosen
/// set (ties toward the smallest index). The returned set's burn time is at
/// most three times the optimum.
pub fn solve_gonzalez(
    index: &GeodesicIndex,
    k: usize,
    start: GonzalezStart,
    resolution: f64,
) -> Result<BurnSolution, BurnError> {
    let n = index.domain().vertex_count();
    check_budget(k, n)?;
    let starts: Vec<usize> = match start {
        GonzalezStart::Fixed(s) => {
            if s >= n {
                return Err(BurnError::SiteOutOfRange(s, n));
            }
            vec![s]
        }
        GonzalezStart::Best => (0..n).collect(),
    };

    let matrix = vertex_distance_matrix(index);
    let eval = SiteEvaluator::new(index, resolution);
    let mut best: Option<(f64, Vec<usize>)> = None;
    for s0 in starts {
        let mut sites = farthest_first(&matrix, k, s0);
        sites.sort_unstable();
        let t = eval.burn_time(&sites)?;
        if best.as_ref().is_none_or(|(bt, _)| t < *bt) {
            best = Some((t, sites));
        }
    }
    let (burn_time, sites) = best.expect("at least one start");
    Ok(BurnSolution {
        sites,
        burn_time,
        method: Method::Gonzalez,
        evaluator: eval.evaluator(),
    })
}
