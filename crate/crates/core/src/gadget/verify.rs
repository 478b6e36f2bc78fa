//! Checks that a gadget separates covers from non-covers by burn time.
//!
//! Forward: an exhaustively found minimum cover, planted on the squares'
//! lower-left corners, must burn within the threshold. Reverse: for each
//! chain edge, removing both endpoint squares' corners from the site pool
//! must leave the edge midpoint strictly beyond the threshold; since sites
//! only ever shrink the burn time, this bounds every site set that fails
//! to cover that edge. Together the two directions decide the instance.

use itertools::Itertools;

use super::{Gadget, GadgetError};
use crate::burn::evaluate_sampled;
use crate::geodesic::{build_index, distances_from_point, SampledDomain};

/// Exhaustive-subset sweep budget.
pub const SWEEP_CAP: u128 = 100_000;

const MAX_COVER_VERTICES: usize = 20;

/// Smallest vertex cover by exhaustive scan; ties take the mask with the
/// lowest bits. Returns (size, membership mask).
pub fn min_vertex_cover(n: usize, edges: &[(usize, usize)]) -> (usize, u64) {
    assert!(n <= MAX_COVER_VERTICES, "exhaustive cover limited to 20 vertices");
    let mut best = (n, (1u64 << n) - 1);
    for mask in 0u64..(1 << n) {
        let size = mask.count_ones() as usize;
        if size >= best.0 {
            continue;
        }
        if edges.iter().all(|&(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1) {
            best = (size, mask);
        }
    }
    best
}

/// Margin of one reverse check.
#[derive(Debug, Clone)]
pub struct EdgeMargin {
    pub edge: (usize, usize),
    /// Burn time at the edge midpoint with both endpoint squares uncovered.
    pub distance: f64,
}

/// Outcome of [`verify_gadget`].
#[derive(Debug, Clone)]
pub struct GadgetReport {
    pub chain_vertices: usize,
    pub chain_edges: usize,
    pub min_cover_size: usize,
    /// Site budget checked: claimed cover plus the subdivision increment.
    pub site_budget: usize,
    pub threshold: f64,
    /// Whether the subdivided graph has a cover within the budget.
    pub cover_exists: bool,
    /// Sampled burn of the planted minimum cover, when one fits the budget.
    pub forward_burn: Option<f64>,
    pub forward_ok: Option<bool>,
    pub edge_margins: Vec<EdgeMargin>,
    pub reverse_ok: bool,
    /// Exhaustively swept site sets, when the count fit the budget.
    pub swept_subsets: Option<usize>,
    pub sweep_ok: Option<bool>,
}

impl GadgetReport {
    pub fn ok(&self) -> bool {
        self.forward_ok.unwrap_or(true) && self.reverse_ok && self.sweep_ok.unwrap_or(true)
    }
}

fn n_choose_k(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Verifies both directions of the reduction for a claimed cover size.
/// `resolution` drives the sampled forward evaluation; the reverse checks
/// are exact. A full site-subset sweep runs when at most [`SWEEP_CAP`]
/// subsets exist.
pub fn verify_gadget(
    gadget: &Gadget,
    claimed_cover: usize,
    resolution: f64,
) -> Result<GadgetReport, GadgetError> {
    let h = &gadget.h;
    let n = h.positions.len();
    if n > MAX_COVER_VERTICES {
        return Err(GadgetError::TooLarge(format!(
            "{n} chain vertices; exhaustive cover search handles {MAX_COVER_VERTICES}"
        )));
    }
    if claimed_cover > h.g_vertex_count {
        return Err(GadgetError::InvalidDrawing(format!(
            "claimed cover {claimed_cover} exceeds vertex count {}",
            h.g_vertex_count
        )));
    }
    let budget = claimed_cover + h.subdivision_increment;
    let (min_cover_size, cover_mask) = min_vertex_cover(n, &h.edges);
    let cover_exists = min_cover_size <= budget;

    let index = build_index(&gadget.domain);
    let sampled = SampledDomain::build(&index, resolution);

    // Forward: plant the cover on lower-left corners, pad with spare
    // vertices (extra sites only help), and burn.
    let (forward_burn, forward_ok) = if cover_exists {
        let mut sites: Vec<usize> = (0..n)
            .filter(|v| cover_mask >> v & 1 == 1)
            .map(|v| gadget.vertex_map[v][0])
            .collect();
        for v in 0..n {
            if sites.len() == budget {
                break;
            }
            if cover_mask >> v & 1 == 0 {
                sites.push(gadget.vertex_map[v][0]);
            }
        }
        sites.sort_unstable();
        let (burn, _) = evaluate_sampled(&sampled, &sites);
        (Some(burn), Some(burn <= gadget.threshold))
    } else {
        (None, None)
    };

    // Reverse, one edge at a time: every site set failing to cover the
    // edge is a subset of "all corners except the endpoints'", so the
    // midpoint's distance under that pool bounds them all from below.
    let mut edge_margins = Vec::with_capacity(h.edges.len());
    let mut reverse_ok = true;
    for &(u, v) in &h.edges {
        let banned: Vec<usize> = gadget.vertex_map[u]
            .iter()
            .chain(gadget.vertex_map[v].iter())
            .copied()
            .collect();
        let midpoint = h.positions[u].midpoint(h.positions[v]);
        let dists = distances_from_point(&index, midpoint)?;
        let distance = (0..gadget.domain.vertex_count())
            .filter(|i| !banned.contains(i))
            .map(|i| dists[i])
            .fold(f64::INFINITY, f64::min);
        if distance <= gadget.threshold {
            reverse_ok = false;
        }
        edge_margins.push(EdgeMargin {
            edge: (u, v),
            distance,
        });
    }

    // Sweep when small enough: burn time against the threshold must agree
    // with covering, for every possible site set.
    let total = gadget.domain.vertex_count();
    let (swept_subsets, sweep_ok) = if budget >= 1 && n_choose_k(total, budget) <= SWEEP_CAP {
        let owner: Vec<usize> = {
            let mut owner = vec![usize::MAX; total];
            for (v, ids) in gadget.vertex_map.iter().enumerate() {
                for &i in ids {
                    owner[i] = v;
                }
            }
            owner
        };
        let mut count = 0usize;
        let mut all_ok = true;
        for subset in (0..total).combinations(budget) {
            count += 1;
            let mut covered = vec![false; n];
            for &s in &subset {
                covered[owner[s]] = true;
            }
            let is_cover = h.edges.iter().all(|&(u, v)| covered[u] || covered[v]);
            let (burn, _) = evaluate_sampled(&sampled, &subset);
            if (burn <= gadget.threshold) != is_cover {
                all_ok = false;
            }
        }
        (Some(count), Some(all_ok))
    } else {
        (None, None)
    };

    Ok(GadgetReport {
        chain_vertices: n,
        chain_edges: h.edges.len(),
        min_cover_size,
        site_budget: budget,
        threshold: gadget.threshold,
        cover_exists,
        forward_burn,
        forward_ok,
        edge_margins,
        reverse_ok,
        swept_subsets,
        sweep_ok,
    })
}
