//! Corpus benchmarking to CSV.
//!
//! One row per instance per applicable method, in directory order, then
//! summary rows comparing each method's burn times against brute force on
//! the instances where both succeeded. Failures become rows too; a broken
//! or oversized instance never stops the run.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use super::instance::{read_instance, Document};
use super::IoError;
use crate::burn::{
    solve_bruteforce, solve_gonzalez, BurnError, BurnSolution, Evaluator, GonzalezStart, Method,
};
use crate::geodesic::build_index;
use crate::sliceable::{solve_dp_1d, solve_dp_sliceable, SliceableError};

pub const CSV_HEADER: &str = "instance,method,k,burn_time,sites,evaluator,resolution,wall_ms";

#[derive(Debug, Clone)]
pub struct BenchConfig {
    /// Methods to run, in row order.
    pub methods: Vec<Method>,
    /// Sampling resolution for non-convex evaluation.
    pub resolution: f64,
    /// Budget for instances whose document does not carry one.
    pub default_k: Option<usize>,
    /// Zero the wall_ms column so reruns are byte-identical.
    pub stable: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            methods: vec![Method::BruteForce, Method::Gonzalez, Method::DpSliceable],
            resolution: 0.01,
            default_k: Some(2),
            stable: false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchOutcome {
    pub csv: String,
    /// Per-instance rows, error rows included (summary rows excluded).
    pub records: usize,
    pub failures: usize,
}

fn burn_error_tag(e: &BurnError) -> &'static str {
    match e {
        BurnError::EmptySites => "EmptySites",
        BurnError::SiteOutOfRange(..) => "SiteOutOfRange",
        BurnError::DuplicateSite(_) => "DuplicateSite",
        BurnError::TooLarge(_) => "TooLarge",
        BurnError::BadBudget(..) => "BadBudget",
        BurnError::Geometry(_) => "Geometry",
    }
}

fn sliceable_error_tag(e: &SliceableError) -> &'static str {
    match e {
        SliceableError::NotSliceable(_) => "NotSliceable",
        SliceableError::NotAPath(_) => "NotAPath",
        SliceableError::BadBudget(..) => "BadBudget",
        SliceableError::BadPositions(_) => "BadPositions",
        SliceableError::BadParams(_) => "BadParams",
        SliceableError::GenerationFailed(_) => "GenerationFailed",
        SliceableError::Geometry(_) => "Geometry",
    }
}

struct RowWriter<'a> {
    rows: Vec<String>,
    cfg: &'a BenchConfig,
    records: usize,
    failures: usize,
}

impl RowWriter<'_> {
    fn ok(&mut self, id: &str, method: Method, k: usize, sol_sites: &[usize], burn: f64,
          evaluator: Evaluator, wall_ms: u128) {
        let sites = sol_sites
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join("+");
        let wall = if self.cfg.stable { 0 } else { wall_ms };
        self.rows.push(format!(
            "{id},{method},{k},{burn},{sites},{evaluator},{},{wall}",
            self.cfg.resolution
        ));
        self.records += 1;
    }

    fn err(&mut self, id: &str, method: &str, k: Option<usize>, tag: &str) {
        let k = k.map(|k| k.to_string()).unwrap_or_default();
        self.rows.push(format!(
            "{id},{method},{k},,,error:{tag},{},0",
            self.cfg.resolution
        ));
        self.records += 1;
        self.failures += 1;
    }
}

/// Run every configured method over every `.json` document in `dir` and
/// assemble the CSV. Files are processed in name order; per-instance
/// failures are recorded as `error:` rows and the run continues.
pub fn run_bench(dir: &Path, cfg: &BenchConfig) -> Result<BenchOutcome, IoError> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)?
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    paths.sort();

    let mut w = RowWriter {
        rows: Vec::new(),
        cfg,
        records: 0,
        failures: 0,
    };
    // burn time per (instance, method), for the ratio summaries.
    let mut results: BTreeMap<(String, String), f64> = BTreeMap::new();

    for path in &paths {
        let id = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        let doc = match read_instance(path) {
            Ok(doc) => doc,
            Err(e) => {
                let tag = match e {
                    IoError::Parse(_) => "Parse",
                    IoError::Validation(_) => "Validation",
                    IoError::Io(_) => "Io",
                };
                w.err(&id, "-", None, tag);
                continue;
            }
        };
        match doc {
            Document::Domain { domain, k, .. } => {
                let Some(k) = k.or(cfg.default_k) else {
                    w.err(&id, "-", None, "NoBudget");
                    continue;
                };
                let index = build_index(&domain);
                for &method in &cfg.methods {
                    let start = Instant::now();
                    let solved: Result<BurnSolution, String> = match method {
                        Method::BruteForce => solve_bruteforce(&index, k, cfg.resolution)
                            .map_err(|e| burn_error_tag(&e).to_string()),
                        Method::Gonzalez => {
                            solve_gonzalez(&index, k, GonzalezStart::Best, cfg.resolution)
                                .map_err(|e| burn_error_tag(&e).to_string())
                        }
                        Method::DpSliceable => {
                            if domain.holes().is_empty() {
                                solve_dp_sliceable(domain.outer(), k)
                                    .map_err(|e| sliceable_error_tag(&e).to_string())
                            } else {
                                Err("NotSliceable".to_string())
                            }
                        }
                        // Not meaningful on a 2-D domain document.
                        Method::Dp1d | Method::Manual => continue,
                    };
                    let wall = start.elapsed().as_millis();
                    match solved {
                        Ok(sol) => {
                            results.insert((id.clone(), method.to_string()), sol.burn_time);
                            w.ok(&id, method, k, &sol.sites, sol.burn_time, sol.evaluator, wall);
                        }
                        Err(tag) => w.err(&id, &method.to_string(), Some(k), &tag),
                    }
                }
            }
            Document::OneDim { instance, k, .. } => {
                if !cfg.methods.contains(&Method::Dp1d) {
                    continue;
                }
                let Some(k) = k.or(cfg.default_k) else {
                    w.err(&id, "-", None, "NoBudget");
                    continue;
                };
                let start = Instant::now();
                match solve_dp_1d(&instance, k) {
                    Ok(sol) => {
                        let wall = start.elapsed().as_millis();
                        w.ok(&id, Method::Dp1d, k, &sol.sites, sol.burn_time,
                             Evaluator::ConvexExact, wall);
                    }
                    Err(e) => w.err(&id, &Method::Dp1d.to_string(), Some(k),
                                    sliceable_error_tag(&e)),
                }
            }
            // Drawings are gadget inputs, not burn instances.
            Document::Drawing { .. } => {}
        }
    }

    // Ratio summaries against brute force, per non-brute method.
    let brute_tag = Method::BruteForce.to_string();
    let mut ratios: BTreeMap<&str, Vec<f64>> = BTreeMap::new();
    for ((id, method), &burn) in &results {
        if *method == brute_tag {
            continue;
        }
        let Some(&opt) = results.get(&(id.clone(), brute_tag.clone())) else {
            continue;
        };
        if opt > 0.0 {
            ratios.entry(method).or_default().push(burn / opt);
        }
    }
    for (method, rs) in &ratios {
        let max = rs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let mean = rs.iter().sum::<f64>() / rs.len() as f64;
        w.rows.push(format!("__summary__,{method}:ratio_max,,{max},,,,0"));
        w.rows.push(format!("__summary__,{method}:ratio_mean,,{mean},,,,0"));
    }

    let mut csv = String::from(CSV_HEADER);
    csv.push('\n');
    for row in &w.rows {
        csv.push_str(row);
        csv.push('\n');
    }
    Ok(BenchOutcome {
        csv,
        records: w.records,
        failures: w.failures,
    })
}
