//! `conetool` — distances, horofunctions, and verification suites for
//! symmetric cones.
//!
//! Subcommands: `dist` (Thompson/Hilbert distance between two interior
//! points), `horo` (evaluate a boundary horofunction on probes, optionally
//! against the limit oracle), `detour` (detour distance between two boundary
//! points), `geodesic` (convergence diagnostics along `ψ(t) = exp(tω + ζ)`),
//! and `verify` (the deterministic property suites).
//!
//! Exit codes: 0 success, 2 malformed input, 3 non-interior point,
//! 4 algebra mismatch, 1 anything else (including suite failures).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;

use cone_core::hilbert::{
    detour_distance_variation, exp_extension_hilbert, VariationHorofunction,
};
use cone_core::limits::{
    detour_cost_prelimit, limit_functional, scaled_path_points, LimitMetric, LimitPath, Schedule,
};
use cone_core::order::{hilbert_distance, project_det_one, thompson_distance};
use cone_core::thompson::{
    detour_distance_thompson, eval_norm_horofunction, exp_extension_thompson,
};
use cone_core::{
    config, BoundaryParams, BusemannPath, ConeError, ConePoint, Element, TangentVector,
};
use conetool::{gen, report::VerifyReport, suites};

/// Horizon used when `detour --limit-check` samples the detour-cost
/// prelimit for Thompson horofunctions.  Moderate on purpose: the prelimit
/// is exact in `t` once `t` clears the weights, while the floating-point
/// noise of a generic frame grows like `e^{2t}`.
const DETOUR_CHECK_T: f64 = 8.0;
/// Horizon for the variation-boundary detour check (linear scale, no
/// exponential amplification).
const VARIATION_CHECK_T: f64 = 30.0;

#[derive(Parser)]
#[command(
    name = "conetool",
    about = "Distances and horofunction boundaries of symmetric cones",
    version
)]
struct Cli {
    /// Working tolerance for validation checks (overrides CONETOOL_TOL).
    #[arg(long, global = true)]
    tol: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Distance between two interior points given as element JSON files.
    Dist(DistArgs),
    /// Evaluate a boundary horofunction on probe elements.
    Horo(HoroArgs),
    /// Detour distance between two boundary points.
    Detour(DetourArgs),
    /// Convergence diagnostics along the geodesic ψ(t) = exp(tω + ζ).
    Geodesic(GeodesicArgs),
    /// Run the deterministic property suites and print a JSON report.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct DistArgs {
    /// Which distance to compute.
    #[arg(long, value_enum)]
    metric: MetricArg,
    /// Element JSON file for the first point.
    a: PathBuf,
    /// Element JSON file for the second point.
    b: PathBuf,
}

#[derive(Copy, Clone, ValueEnum)]
enum MetricArg {
    Thompson,
    Hilbert,
}

#[derive(Args)]
struct HoroArgs {
    /// Which boundary the parameters describe.
    #[arg(long, value_enum)]
    mode: HoroMode,
    /// Boundary-parameter JSON file.
    #[arg(long)]
    params: PathBuf,
    /// JSON file with an array of probe elements.
    probes: PathBuf,
    /// Also run the limit oracle and print a convergence-trace CSV with a
    /// closed-form delta column.
    #[arg(long)]
    oracle: bool,
}

#[derive(Copy, Clone, ValueEnum)]
enum HoroMode {
    Thompson,
    Hilbert,
    Norm,
    Variation,
}

#[derive(Args)]
struct DetourArgs {
    /// Which detour distance to compute.
    #[arg(long, value_enum)]
    mode: DetourMode,
    /// Boundary-parameter JSON file for the first point.
    g: PathBuf,
    /// Boundary-parameter JSON file for the second point.
    g2: PathBuf,
    /// Also print the detour-cost limit estimate and its delta.
    #[arg(long)]
    limit_check: bool,
}

#[derive(Copy, Clone, ValueEnum)]
enum DetourMode {
    Thompson,
    Variation,
}

#[derive(Args)]
struct GeodesicArgs {
    /// Boundary-parameter JSON file.
    #[arg(long)]
    params: PathBuf,
    /// Comma-separated sample times (may be empty).
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    t_grid: Vec<f64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, or "all".
    #[arg(long, default_value = "all")]
    suite: String,
    /// Trials per suite.
    #[arg(long, default_value_t = 200)]
    trials: usize,
    /// Run seed; every trial seed derives from it.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Algebras to draw trials from, e.g. sym:3, herm:2, spin:6
    /// (repeatable; defaults to the desk-scale set).
    #[arg(long = "algebra")]
    algebras: Vec<String>,
    /// Write representative convergence-trace CSVs into this directory.
    #[arg(long)]
    trace_dir: Option<PathBuf>,
}

/// A command failure with its contractual exit code.
struct Failure {
    code: u8,
    message: String,
}

type CmdResult = Result<(), Failure>;

fn exit_code(err: &ConeError) -> u8 {
    match err {
        ConeError::NotInterior { .. } | ConeError::NotInCone { .. } => 3,
        ConeError::AlgebraMismatch { .. } => 4,
        ConeError::InvalidElement(_)
        | ConeError::InvalidParams(_)
        | ConeError::InvalidPair(_)
        | ConeError::InvalidPath(_)
        | ConeError::NotIdempotent { .. }
        | ConeError::NotTraceless { .. }
        | ConeError::NotUnitDeterminant { .. } => 2,
        ConeError::DomainViolation { .. }
        | ConeError::EigenFailure { .. }
        | ConeError::ZeroIdempotent
        | ConeError::OutsidePeirceSpace { .. } => 1,
    }
}

fn fail(err: ConeError) -> Failure {
    Failure {
        code: exit_code(&err),
        message: err.to_string(),
    }
}

fn bad_input(message: String) -> Failure {
    Failure { code: 2, message }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| bad_input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| bad_input(format!("cannot parse {}: {e}", path.display())))
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    // Tolerance: default 1e-9, overridden by CONETOOL_TOL, overridden by --tol.
    if let Ok(text) = std::env::var("CONETOOL_TOL") {
        match text.parse::<f64>() {
            Ok(tol) => config::set_tolerance(tol),
            Err(_) => eprintln!("warning: ignoring unparsable CONETOOL_TOL={text:?}"),
        }
    }
    if let Some(tol) = cli.tol {
        config::set_tolerance(tol);
    }

    let result = match cli.command {
        Command::Dist(args) => cmd_dist(args),
        Command::Horo(args) => cmd_horo(args),
        Command::Detour(args) => cmd_detour(args),
        Command::Geodesic(args) => cmd_geodesic(args),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn interior_point(element: Element) -> Result<ConePoint, Failure> {
    ConePoint::interior(element).map_err(fail)
}

fn cmd_dist(args: DistArgs) -> CmdResult {
    let a = interior_point(read_json::<Element>(&args.a)?)?;
    let b = interior_point(read_json::<Element>(&args.b)?)?;
    let d = match args.metric {
        MetricArg::Thompson => thompson_distance(&a, &b),
        MetricArg::Hilbert => hilbert_distance(&a, &b),
    }
    .map_err(fail)?;
    println!("{d:.12}");
    Ok(())
}

fn cmd_horo(args: HoroArgs) -> CmdResult {
    let params: BoundaryParams = read_json(&args.params)?;
    let probes: Vec<Element> = read_json(&args.probes)?;

    // Closed-form values, one per probe.  Hilbert probes are projected to
    // the determinant-one section, variation probes to the traceless
    // hyperplane; both functionals only depend on those representatives.
    let mut closed = Vec::with_capacity(probes.len());
    match args.mode {
        HoroMode::Thompson => {
            let h = exp_extension_thompson(&params).map_err(fail)?;
            for probe in &probes {
                closed.push(h.eval(&interior_point(probe.clone())?).map_err(fail)?);
            }
        }
        HoroMode::Hilbert => {
            let h = exp_extension_hilbert(&params).map_err(fail)?;
            for probe in &probes {
                let x = project_det_one(&interior_point(probe.clone())?).map_err(fail)?;
                closed.push(h.eval(&x).map_err(fail)?);
            }
        }
        HoroMode::Norm => {
            for probe in &probes {
                closed.push(eval_norm_horofunction(&params, probe).map_err(fail)?);
            }
        }
        HoroMode::Variation => {
            let g = VariationHorofunction::new(params.clone()).map_err(fail)?;
            for probe in &probes {
                let v = TangentVector::project(probe).map_err(fail)?;
                closed.push(g.eval(&v).map_err(fail)?);
            }
        }
    }
    for value in &closed {
        println!("{value:.12}");
    }

    if args.oracle {
        let metric = match args.mode {
            HoroMode::Thompson => LimitMetric::Thompson,
            HoroMode::Hilbert => LimitMetric::Hilbert,
            HoroMode::Norm => LimitMetric::Norm,
            HoroMode::Variation => LimitMetric::Variation,
        };
        // The oracle needs representatives in the functional's actual
        // domain: traceless vectors for the variation boundary.
        let oracle_probes: Vec<Element> = match args.mode {
            HoroMode::Variation => probes
                .iter()
                .map(|p| {
                    TangentVector::project(p)
                        .map(|v| v.element().clone())
                        .map_err(fail)
                })
                .collect::<Result<_, _>>()?,
            _ => probes.clone(),
        };
        let path = LimitPath::Busemann(BusemannPath::new(params).map_err(fail)?);
        let reports = limit_functional(&path, &oracle_probes, metric, &Schedule::default())
            .map_err(fail)?;
        println!("probe,t,value,increment,closed,delta,converged");
        for (index, report) in reports.iter().enumerate() {
            for (k, (t, value)) in report.ts.iter().zip(&report.values).enumerate() {
                let increment = if k == 0 {
                    String::new()
                } else {
                    format!("{:.6e}", report.increments[k - 1])
                };
                println!(
                    "{index},{t},{value:.12},{increment},{:.12},{:.6e},{}",
                    closed[index],
                    value - closed[index],
                    report.converged
                );
            }
        }
    }
    Ok(())
}

fn cmd_detour(args: DetourArgs) -> CmdResult {
    let pa: BoundaryParams = read_json(&args.g)?;
    let pb: BoundaryParams = read_json(&args.g2)?;

    let (delta, estimate) = match args.mode {
        DetourMode::Thompson => {
            let ha = exp_extension_thompson(&pa).map_err(fail)?;
            let hb = exp_extension_thompson(&pb).map_err(fail)?;
            let delta = detour_distance_thompson(&ha, &hb).map_err(fail)?;
            let estimate = if args.limit_check {
                let t = DETOUR_CHECK_T;
                let forward =
                    detour_cost_prelimit(&BusemannPath::new(pa).map_err(fail)?, hb.pair(), t)
                        .map_err(fail)?;
                let backward =
                    detour_cost_prelimit(&BusemannPath::new(pb).map_err(fail)?, ha.pair(), t)
                        .map_err(fail)?;
                Some(forward + backward)
            } else {
                None
            };
            (delta, estimate)
        }
        DetourMode::Variation => {
            let ga = VariationHorofunction::new(pa).map_err(fail)?;
            let gb = VariationHorofunction::new(pb).map_err(fail)?;
            let delta = detour_distance_variation(&ga, &gb).map_err(fail)?;
            let estimate = if args.limit_check {
                let cost = |from: &VariationHorofunction,
                            to: &VariationHorofunction|
                 -> Result<f64, Failure> {
                    let xi = from.path_point(VARIATION_CHECK_T).map_err(fail)?;
                    Ok(xi.element().variation_seminorm().map_err(fail)?
                        + to.eval(&xi).map_err(fail)?)
                };
                Some(cost(&ga, &gb)? + cost(&gb, &ga)?)
            } else {
                None
            };
            (delta, estimate)
        }
    };

    println!("{}", fmt_or_inf(delta));
    if let Some(estimate) = estimate {
        println!("limit_estimate {}", fmt_or_inf(estimate));
        let gap = if delta.is_infinite() && estimate.is_infinite() {
            0.0
        } else {
            (delta - estimate).abs()
        };
        if gap.is_infinite() {
            println!("delta inf");
        } else {
            println!("delta {gap:.6e}");
        }
    }
    Ok(())
}

fn fmt_or_inf(value: f64) -> String {
    if value.is_infinite() {
        "inf".to_owned()
    } else {
        format!("{value:.12}")
    }
}

fn cmd_geodesic(args: GeodesicArgs) -> CmdResult {
    let params: BoundaryParams = read_json(&args.params)?;
    let pair = params.to_pair().map_err(fail)?;
    let path = BusemannPath::new(params).map_err(fail)?;
    let unit = interior_point(Element::unit(path.params().algebra()).map_err(fail)?)?;

    println!("t,d_T,err_y,err_z");
    for &t in &args.t_grid {
        let point = path.point(t).map_err(fail)?;
        let d = thompson_distance(&point, &unit).map_err(fail)?;
        let (fwd, bwd) = scaled_path_points(&path, t).map_err(fail)?;
        let err_y = (&fwd - pair.y().element()).norm_inner();
        let err_z = (&bwd - pair.z().element()).norm_inner();
        println!("{t},{d:.12},{err_y:.6e},{err_z:.6e}");
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> CmdResult {
    let algebras = if args.algebras.is_empty() {
        gen::default_algebras()
    } else {
        args.algebras
            .iter()
            .map(|spec| gen::parse_algebra(spec).map_err(bad_input))
            .collect::<Result<Vec<_>, _>>()?
    };
    let names = suites::suite_names();
    let selected: Vec<&str> = if args.suite == "all" {
        names
    } else if names.contains(&args.suite.as_str()) {
        vec![names[names.iter().position(|n| *n == args.suite).unwrap()]]
    } else {
        return Err(bad_input(format!(
            "unknown suite {:?}; available: all, {}",
            args.suite,
            names.join(", ")
        )));
    };

    let cfg = suites::SuiteConfig {
        trials: args.trials,
        seed: args.seed,
        algebras,
    };
    let mut reports = Vec::with_capacity(selected.len());
    for name in selected {
        let report = suites::run_suite(name, &cfg).expect("selection is validated");
        eprintln!(
            "suite {:<30} {:>4} trials  max violation {:>9.3e}  {:>6.2}s  {}",
            report.name,
            report.trials,
            report.max_violation,
            report.elapsed,
            if report.passed { "ok" } else { "FAILED" }
        );
        reports.push(report);
    }

    if let Some(dir) = &args.trace_dir {
        let files = suites::write_traces(dir, &cfg)
            .map_err(|e| bad_input(format!("cannot write traces to {}: {e}", dir.display())))?;
        eprintln!("wrote {} trace files to {}", files.len(), dir.display());
    }

    let report = VerifyReport::new(
        args.seed,
        args.trials,
        config::tolerance(),
        cfg.algebras.iter().map(|a| a.to_string()).collect(),
        reports,
    );
    println!("{}", report.to_json());
    if report.passed {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            message: format!(
                "{} of {} suites failed",
                report.suites.iter().filter(|s| !s.passed).count(),
                report.suites.len()
            ),
        })
    }
}
