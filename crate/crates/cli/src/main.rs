//! Command line front end: solving, checking, rendering, benchmarking, and
//! gadget construction over JSON instance files.
//!
//! Exit codes: 0 success, 2 invalid input or failed verification, 3 solver
//! capacity exceeded.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use polyburn::burn::{
    burn_time_auto, solve_bruteforce, solve_gonzalez, BurnError, BurnSolution, GonzalezStart,
    Method,
};
use polyburn::gadget::{build_gadget, verify_gadget, Drawing, GadgetError, DEFAULT_EPSILON};
use polyburn::geodesic::{build_index, GeodesicError, PolygonalDomain};
use polyburn::geom::{Location, Polygon};
use polyburn::io::{
    read_instance, render_svg, run_bench, serialize_sidecar, write_instance, write_text_atomic,
    BenchConfig, Document, IoError, Sidecar, SvgScene,
};
use polyburn::sliceable::{
    compute_ordering, generate_sliceable, is_sliceable, solve_dp_1d, solve_dp_sliceable,
    SliceableError,
};

#[derive(Parser)]
#[command(name = "polyburn", version, about = "Geodesic k-site burning of polygonal domains")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Exhaustive search over all k-subsets of vertices.
    Brute,
    /// Farthest-first traversal (3-approximation).
    Gonzalez,
    /// Exact dynamic program for sliceable polygons.
    Dp,
    /// Exact dynamic program for collinear positions documents.
    Dp1d,
}

impl MethodArg {
    fn to_method(self) -> Method {
        match self {
            MethodArg::Brute => Method::BruteForce,
            MethodArg::Gonzalez => Method::Gonzalez,
            MethodArg::Dp => Method::DpSliceable,
            MethodArg::Dp1d => Method::Dp1d,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Choose k sites minimizing the burn time.
    Solve {
        /// Instance file (domain or positions document).
        instance: PathBuf,
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Site budget; overrides the document's "k".
        #[arg(long)]
        k: Option<usize>,
        /// Sample spacing for non-convex evaluation.
        #[arg(long, default_value_t = 0.01)]
        resolution: f64,
        /// Fix the greedy start vertex instead of trying every start.
        #[arg(long)]
        start: Option<usize>,
    },
    /// Report convexity, diagram vertices, and sliceability of a polygon.
    CheckSliceable { instance: PathBuf },
    /// Print the slice ordering of a sliceable polygon.
    Ordering { instance: PathBuf },
    /// Evaluate the burn time of an explicit site set.
    Eval {
        instance: PathBuf,
        /// Comma-separated vertex indices.
        #[arg(long, value_delimiter = ',', required = true)]
        sites: Vec<usize>,
        #[arg(long, default_value_t = 0.01)]
        resolution: f64,
    },
    /// Thicken or verify an orthogonal drawing.
    Gadget {
        #[command(subcommand)]
        action: GadgetAction,
    },
    /// Render a domain (with optional sites, regions, chords) to SVG.
    Render {
        instance: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
        /// Comma-separated site vertex indices.
        #[arg(long, value_delimiter = ',')]
        sites: Vec<usize>,
        /// Shade per-site burn regions at this sample spacing.
        #[arg(long)]
        shade: Option<f64>,
        /// Dash the bisector chords between neighboring sites.
        #[arg(long)]
        chords: bool,
        /// Label vertices with the slice ordering.
        #[arg(long)]
        ordering: bool,
    },
    /// Run solvers over a directory of instances and write a CSV.
    Bench {
        corpus: PathBuf,
        #[arg(short, long)]
        out: PathBuf,
        /// Comma-separated methods to run.
        #[arg(long, value_delimiter = ',', default_value = "brute,gonzalez,dp")]
        methods: Vec<MethodArg>,
        #[arg(long, default_value_t = 0.01)]
        resolution: f64,
        /// Budget for instances whose document does not carry one.
        #[arg(long)]
        k: Option<usize>,
        /// Zero timing columns so reruns are byte-identical.
        #[arg(long)]
        stable: bool,
    },
    /// Generate an instance file.
    Gen {
        /// Generate a sliceable polygon (the only supported generator).
        #[arg(long)]
        sliceable: bool,
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Site budget to store in the document.
        #[arg(long)]
        k: Option<usize>,
        #[arg(short, long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum GadgetAction {
    /// Thicken a drawing into a burn instance plus a sidecar record.
    Build {
        drawing: PathBuf,
        #[arg(long, default_value_t = DEFAULT_EPSILON)]
        epsilon: f64,
        /// Output domain document; the sidecar lands next to it.
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Check that covers and only covers burn within the threshold.
    Verify {
        drawing: PathBuf,
        #[arg(long, default_value_t = DEFAULT_EPSILON)]
        epsilon: f64,
        #[arg(long, default_value_t = 1e-3)]
        resolution: f64,
    },
}

enum CliError {
    Validation(String),
    Capacity(String),
    Os(String),
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Io(e) => CliError::Os(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<BurnError> for CliError {
    fn from(e: BurnError) -> Self {
        match e {
            BurnError::TooLarge(msg) => CliError::Capacity(msg),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<SliceableError> for CliError {
    fn from(e: SliceableError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<GadgetError> for CliError {
    fn from(e: GadgetError) -> Self {
        match e {
            GadgetError::TooLarge(msg) => CliError::Capacity(msg),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<GeodesicError> for CliError {
    fn from(e: GeodesicError) -> Self {
        CliError::Validation(e.to_string())
    }
}

fn main() -> ExitCode {
    // Rust masks SIGPIPE, so piping into `head` would panic on the closed pipe.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Capacity(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(CliError::Os(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn join(sites: &[usize]) -> String {
    sites
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("+")
}

fn need_k(flag: Option<usize>, doc: Option<usize>) -> Result<usize, CliError> {
    flag.or(doc).ok_or_else(|| {
        CliError::Validation("no site budget: pass --k or set \"k\" in the document".into())
    })
}

fn positive(name: &str, v: f64) -> Result<f64, CliError> {
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(CliError::Validation(format!("{name} must be positive")))
    }
}

fn load_domain(path: &Path) -> Result<(PolygonalDomain, Option<usize>), CliError> {
    match read_instance(path)? {
        Document::Domain { domain, k, .. } => Ok((domain, k)),
        _ => Err(CliError::Validation(format!(
            "{}: expected a domain document",
            path.display()
        ))),
    }
}

fn load_drawing(path: &Path) -> Result<Drawing, CliError> {
    match read_instance(path)? {
        Document::Drawing { drawing, .. } => Ok(drawing),
        _ => Err(CliError::Validation(format!(
            "{}: expected a drawing document",
            path.display()
        ))),
    }
}

fn simple_polygon(domain: &PolygonalDomain) -> Result<&Polygon, CliError> {
    if domain.holes().is_empty() {
        Ok(domain.outer())
    } else {
        Err(CliError::Validation(
            "domain has holes; this operation needs a simple polygon".into(),
        ))
    }
}

fn print_solution(sol: &BurnSolution) {
    println!("method: {}", sol.method);
    println!("burn_time: {}", sol.burn_time);
    println!("sites: {}", join(&sol.sites));
    println!("evaluator: {}", sol.evaluator);
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Solve {
            instance,
            method,
            k,
            resolution,
            start,
        } => {
            let resolution = positive("--resolution", resolution)?;
            match (read_instance(&instance)?, method) {
                (Document::OneDim { instance, k: dk, .. }, MethodArg::Dp1d) => {
                    let k = need_k(k, dk)?;
                    let sol = solve_dp_1d(&instance, k)?;
                    println!("method: {}", Method::Dp1d);
                    println!("burn_time: {}", sol.burn_time);
                    println!("sites: {}", join(&sol.sites));
                    println!("evaluator: convex_exact");
                }
                (Document::OneDim { .. }, _) => {
                    return Err(CliError::Validation(
                        "positions documents solve with --method dp1d".into(),
                    ))
                }
                (Document::Domain { domain, k: dk, .. }, m) => {
                    let k = need_k(k, dk)?;
                    let sol = match m {
                        MethodArg::Brute => {
                            solve_bruteforce(&build_index(&domain), k, resolution)?
                        }
                        MethodArg::Gonzalez => {
                            let s = match start {
                                Some(s) => GonzalezStart::Fixed(s),
                                None => GonzalezStart::Best,
                            };
                            solve_gonzalez(&build_index(&domain), k, s, resolution)?
                        }
                        MethodArg::Dp => solve_dp_sliceable(simple_polygon(&domain)?, k)?,
                        MethodArg::Dp1d => {
                            return Err(CliError::Validation(
                                "--method dp1d needs a positions document".into(),
                            ))
                        }
                    };
                    print_solution(&sol);
                }
                (Document::Drawing { .. }, _) => {
                    return Err(CliError::Validation(
                        "drawing documents are gadget inputs; use `gadget build`".into(),
                    ))
                }
            }
        }

        Command::CheckSliceable { instance } => {
            let (domain, _) = load_domain(&instance)?;
            let report = is_sliceable(simple_polygon(&domain)?)?;
            let inside = report
                .circumcenters
                .iter()
                .filter(|&&(_, loc)| loc == Location::Inside)
                .count();
            println!("convex: {}", report.convex);
            println!("interior_diagram_vertices: {inside}");
            println!("sliceable: {}", report.sliceable);
            if let Some(ordering) = &report.ordering {
                println!(
                    "ordering: {}",
                    ordering
                        .iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(" ")
                );
            }
        }

        Command::Ordering { instance } => {
            let (domain, _) = load_domain(&instance)?;
            let ordering = compute_ordering(simple_polygon(&domain)?)?;
            println!(
                "{}",
                ordering
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            );
        }

        Command::Eval {
            instance,
            mut sites,
            resolution,
        } => {
            let resolution = positive("--resolution", resolution)?;
            sites.sort_unstable();
            match read_instance(&instance)? {
                Document::Domain { domain, .. } => {
                    let index = build_index(&domain);
                    let (t, detail, evaluator) = burn_time_auto(&index, &sites, resolution)?;
                    println!("burn_time: {t}");
                    println!("sites: {}", join(&sites));
                    println!("evaluator: {evaluator}");
                    println!("witness: ({}, {})", detail.witness.x, detail.witness.y);
                    println!("witness_site: {}", detail.witness_site);
                }
                Document::OneDim { instance, .. } => {
                    let (t, witness) = eval_onedim(instance.positions(), &sites)?;
                    println!("burn_time: {t}");
                    println!("sites: {}", join(&sites));
                    println!("evaluator: convex_exact");
                    println!("witness: {witness}");
                }
                Document::Drawing { .. } => {
                    return Err(CliError::Validation(
                        "drawing documents are gadget inputs; use `gadget build`".into(),
                    ))
                }
            }
        }

        Command::Gadget { action } => match action {
            GadgetAction::Build {
                drawing,
                epsilon,
                out,
            } => {
                let gadget = build_gadget(&load_drawing(&drawing)?, epsilon)?;
                let doc = Document::Domain {
                    k: Some(gadget.required_sites),
                    metadata: None,
                    domain: gadget.domain.clone(),
                };
                write_instance(&out, &doc)?;
                let sidecar_path = out.with_extension("sidecar.json");
                write_text_atomic(
                    &sidecar_path,
                    &serialize_sidecar(&Sidecar::for_gadget(&gadget)),
                )?;
                println!(
                    "domain: {} vertices, {} holes",
                    gadget.domain.vertex_count(),
                    gadget.domain.holes().len()
                );
                println!("K: {}", gadget.required_sites);
                println!("threshold: {}", gadget.threshold);
                println!("wrote: {}", out.display());
                println!("wrote: {}", sidecar_path.display());
            }
            GadgetAction::Verify {
                drawing,
                epsilon,
                resolution,
            } => {
                let resolution = positive("--resolution", resolution)?;
                let drawing = load_drawing(&drawing)?;
                let gadget = build_gadget(&drawing, epsilon)?;
                let report = verify_gadget(&gadget, drawing.kappa(), resolution)?;
                println!("chain_vertices: {}", report.chain_vertices);
                println!("chain_edges: {}", report.chain_edges);
                println!("min_cover_size: {}", report.min_cover_size);
                println!("site_budget: {}", report.site_budget);
                println!("threshold: {}", report.threshold);
                println!("cover_exists: {}", report.cover_exists);
                match (report.forward_burn, report.forward_ok) {
                    (Some(burn), Some(ok)) => {
                        println!("forward: burn {burn} -> {}", if ok { "ok" } else { "FAIL" })
                    }
                    _ => println!("forward: skipped (no cover within budget)"),
                }
                let worst = report
                    .edge_margins
                    .iter()
                    .map(|m| m.distance)
                    .fold(f64::INFINITY, f64::min);
                println!(
                    "reverse: {} edges, min margin {worst} -> {}",
                    report.edge_margins.len(),
                    if report.reverse_ok { "ok" } else { "FAIL" }
                );
                match (report.swept_subsets, report.sweep_ok) {
                    (Some(n), Some(ok)) => {
                        println!("sweep: {n} subsets -> {}", if ok { "ok" } else { "FAIL" })
                    }
                    _ => println!("sweep: skipped (too many subsets)"),
                }
                let ok = report.ok();
                println!("verdict: {}", if ok { "PASS" } else { "FAIL" });
                if !ok {
                    return Err(CliError::Validation("gadget verification failed".into()));
                }
            }
        },

        Command::Render {
            instance,
            out,
            mut sites,
            shade,
            chords,
            ordering,
        } => {
            let svg = match read_instance(&instance)? {
                Document::Domain { domain, .. } => {
                    sites.sort_unstable();
                    sites.dedup();
                    if let Some(&max) = sites.last() {
                        if max >= domain.vertex_count() {
                            return Err(CliError::Validation(format!(
                                "site {max} out of range for {} vertices",
                                domain.vertex_count()
                            )));
                        }
                    }
                    if let Some(r) = shade {
                        positive("--shade", r)?;
                    }
                    let order = if ordering {
                        Some(compute_ordering(simple_polygon(&domain)?)?)
                    } else {
                        None
                    };
                    render_svg(&SvgScene {
                        domain: &domain,
                        sites: &sites,
                        shade_resolution: shade,
                        chords,
                        ordering: order.as_deref(),
                    })
                }
                Document::Drawing { drawing, .. } => {
                    let gadget = build_gadget(&drawing, DEFAULT_EPSILON)?;
                    render_svg(&SvgScene::new(&gadget.domain))
                }
                Document::OneDim { .. } => {
                    return Err(CliError::Validation(
                        "positions documents have no 2-D rendering".into(),
                    ))
                }
            };
            write_text_atomic(&out, &svg)?;
            println!("wrote: {}", out.display());
        }

        Command::Bench {
            corpus,
            out,
            methods,
            resolution,
            k,
            stable,
        } => {
            let cfg = BenchConfig {
                methods: methods.iter().map(|m| m.to_method()).collect(),
                resolution: positive("--resolution", resolution)?,
                default_k: k,
                stable,
            };
            let outcome = run_bench(&corpus, &cfg)?;
            write_text_atomic(&out, &outcome.csv)?;
            println!("records: {} ({} failures)", outcome.records, outcome.failures);
            println!("wrote: {}", out.display());
        }

        Command::Gen {
            sliceable,
            n,
            seed,
            k,
            out,
        } => {
            if !sliceable {
                return Err(CliError::Validation(
                    "only --sliceable generation is supported".into(),
                ));
            }
            let poly = generate_sliceable(n, seed)?;
            let domain = PolygonalDomain::simple(poly)?;
            if let Some(k) = k {
                if k == 0 || k > n {
                    return Err(CliError::Validation(format!(
                        "k = {k} out of range for {n} vertices"
                    )));
                }
            }
            let doc = Document::Domain {
                domain,
                k,
                metadata: Some(serde_json::json!({ "generator": "sliceable", "seed": seed })),
            };
            write_instance(&out, &doc)?;
            println!("wrote: {} (n={n}, seed={seed})", out.display());
        }
    }
    Ok(())
}

/// Burn time of sorted `sites` over the segment spanned by sorted `pos`:
/// the worst of the left overhang, the right overhang, and half the widest
/// gap between consecutive sites. Returns the value and its witness point.
fn eval_onedim(pos: &[f64], sites: &[usize]) -> Result<(f64, f64), CliError> {
    let n = pos.len();
    if sites.is_empty() {
        return Err(CliError::Validation("no sites given".into()));
    }
    for pair in sites.windows(2) {
        if pair[0] == pair[1] {
            return Err(CliError::Validation(format!("duplicate site {}", pair[0])));
        }
    }
    if let Some(&max) = sites.last() {
        if max >= n {
            return Err(CliError::Validation(format!(
                "site {max} out of range for {n} positions"
            )));
        }
    }
    let mut best = (pos[sites[0]] - pos[0], pos[0]);
    let right = pos[n - 1] - pos[sites[sites.len() - 1]];
    if right > best.0 {
        best = (right, pos[n - 1]);
    }
    for pair in sites.windows(2) {
        let (a, b) = (pos[pair[0]], pos[pair[1]]);
        if (b - a) / 2.0 > best.0 {
            best = ((b - a) / 2.0, (a + b) / 2.0);
        }
    }
    Ok(best)
}
