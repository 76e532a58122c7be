//! End-to-end tests of the `conetool` binary: worked distance values, the
//! exit-code contract, horofunction evaluation with and without the limit
//! oracle, detour distances, geodesic diagnostics, and determinism of the
//! verify report.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_conetool"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn write(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn sym2(data: [f64; 4]) -> String {
    serde_json::json!({"algebra": {"kind": "sym", "n": 2}, "data": data}).to_string()
}

/// The common 2×2 fixtures: `a = diag(e², e⁻¹)`, the unit, `7·unit`, a
/// non-interior point, a unit of the wrong algebra, and malformed JSON.
struct Fixtures {
    _dir: TempDir,
    a: PathBuf,
    unit: PathBuf,
    seven: PathBuf,
    noninterior: PathBuf,
    unit3: PathBuf,
    malformed: PathBuf,
}

impl Fixtures {
    fn new() -> Self {
        let dir = TempDir::new().unwrap();
        let p = dir.path();
        let a = write(p, "a.json", &sym2([f64::exp(2.0), 0.0, 0.0, f64::exp(-1.0)]));
        let unit = write(p, "u.json", &sym2([1.0, 0.0, 0.0, 1.0]));
        let seven = write(p, "seven.json", &sym2([7.0, 0.0, 0.0, 7.0]));
        let noninterior = write(p, "noninterior.json", &sym2([1.0, 0.0, 0.0, -1.0]));
        let unit3 = write(
            p,
            "u3.json",
            &serde_json::json!({
                "algebra": {"kind": "sym", "n": 3},
                "data": [1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0]
            })
            .to_string(),
        );
        let malformed = write(p, "bad.json", "{ this is not json");
        Fixtures {
            _dir: dir,
            a,
            unit,
            seven,
            noninterior,
            unit3,
            malformed,
        }
    }
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn dist_worked_values() {
    let f = Fixtures::new();
    let out = run(&["dist", "--metric", "thompson", path_str(&f.a), path_str(&f.unit)]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "2.000000000000\n");

    let out = run(&["dist", "--metric", "hilbert", path_str(&f.seven), path_str(&f.unit)]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0.000000000000\n");

    let out = run(&["dist", "--metric", "hilbert", path_str(&f.a), path_str(&f.unit)]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "3.000000000000\n");
}

#[test]
fn dist_exit_codes() {
    let f = Fixtures::new();
    let out = run(&["dist", "--metric", "thompson", path_str(&f.malformed), path_str(&f.unit)]);
    assert_eq!(code(&out), 2, "malformed JSON must exit 2");

    let out = run(&["dist", "--metric", "thompson", path_str(&f.noninterior), path_str(&f.unit)]);
    assert_eq!(code(&out), 3, "non-interior point must exit 3");

    let out = run(&["dist", "--metric", "thompson", path_str(&f.a), path_str(&f.unit3)]);
    assert_eq!(code(&out), 4, "algebra mismatch must exit 4");
}

/// Boundary parameters on the coordinate frame of sym(2): `I = {0}`,
/// `J = {1}`, weights as given.
fn split_params(mode: &str, alpha0: f64, alpha1: f64) -> String {
    serde_json::json!({
        "frame": [
            {"algebra": {"kind": "sym", "n": 2}, "data": [1.0, 0.0, 0.0, 0.0]},
            {"algebra": {"kind": "sym", "n": 2}, "data": [0.0, 0.0, 0.0, 1.0]}
        ],
        "I": [0],
        "J": [1],
        "alpha": {"0": alpha0, "1": alpha1},
        "mode": mode
    })
    .to_string()
}

#[test]
fn horo_worked_values() {
    let dir = TempDir::new().unwrap();
    let params = write(dir.path(), "params.json", &split_params("thompson", 0.0, 0.0));
    let probes = write(
        dir.path(),
        "probes.json",
        &format!("[{},{}]", sym2([2.0, 0.0, 0.0, 3.0]), sym2([1.0, 0.0, 0.0, 1.0])),
    );
    let out = run(&[
        "horo",
        "--mode",
        "thompson",
        "--params",
        path_str(&params),
        path_str(&probes),
    ]);
    assert_eq!(code(&out), 0);
    // log 3 on diag(2,3); exactly 0 at the basepoint.
    assert_eq!(stdout(&out), "1.098612288668\n0.000000000000\n");
}

#[test]
fn horo_variation_worked_value() {
    let dir = TempDir::new().unwrap();
    let params = write(dir.path(), "vparams.json", &split_params("hilbert", 0.0, 0.0));
    let probe = write(
        dir.path(),
        "vprobe.json",
        &format!("[{}]", sym2([1.0, 0.0, 0.0, -1.0])),
    );
    let out = run(&[
        "horo",
        "--mode",
        "variation",
        "--params",
        path_str(&params),
        path_str(&probe),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "-2.000000000000\n");
}

#[test]
fn horo_oracle_trace_converges_to_closed_form() {
    let dir = TempDir::new().unwrap();
    let params = write(dir.path(), "params.json", &split_params("thompson", 0.0, 0.0));
    let probes = write(
        dir.path(),
        "probes.json",
        &format!("[{}]", sym2([2.0, 0.0, 0.0, 3.0])),
    );
    let out = run(&[
        "horo",
        "--mode",
        "thompson",
        "--params",
        path_str(&params),
        path_str(&probes),
        "--oracle",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "1.098612288668");
    assert_eq!(
        lines.next().unwrap(),
        "probe,t,value,increment,closed,delta,converged"
    );
    let last = text.lines().last().unwrap();
    let fields: Vec<&str> = last.split(',').collect();
    assert_eq!(fields.len(), 7);
    let delta: f64 = fields[5].parse().unwrap();
    assert!(delta.abs() < 1e-9, "oracle delta {delta:e}");
    assert_eq!(fields[6], "true");
}

#[test]
fn detour_worked_values() {
    let dir = TempDir::new().unwrap();
    let p = dir.path();
    let base = write(p, "base.json", &split_params("thompson", 0.0, 0.0));
    let shifted = write(p, "shifted.json", &split_params("thompson", 1.0, 0.0));
    let swapped = write(
        p,
        "swapped.json",
        &serde_json::json!({
            "frame": [
                {"algebra": {"kind": "sym", "n": 2}, "data": [1.0, 0.0, 0.0, 0.0]},
                {"algebra": {"kind": "sym", "n": 2}, "data": [0.0, 0.0, 0.0, 1.0]}
            ],
            "I": [1],
            "J": [],
            "alpha": {"1": 0.0},
            "mode": "thompson"
        })
        .to_string(),
    );

    let out = run(&["detour", "--mode", "thompson", path_str(&base), path_str(&base)]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0.000000000000\n");

    let out = run(&["detour", "--mode", "thompson", path_str(&base), path_str(&shifted)]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "1.000000000000\n");

    let out = run(&["detour", "--mode", "thompson", path_str(&base), path_str(&swapped)]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "inf\n");
}

#[test]
fn detour_limit_check_matches_closed_form() {
    let dir = TempDir::new().unwrap();
    let base = write(dir.path(), "base.json", &split_params("thompson", 0.0, 0.0));
    let shifted = write(dir.path(), "shifted.json", &split_params("thompson", 1.0, 0.0));
    let out = run(&[
        "detour",
        "--mode",
        "thompson",
        path_str(&base),
        path_str(&shifted),
        "--limit-check",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "1.000000000000");
    assert!(lines[1].starts_with("limit_estimate "));
    let gap: f64 = lines[2].strip_prefix("delta ").unwrap().parse().unwrap();
    assert!(gap < 1e-9, "limit gap {gap:e}");
}

#[test]
fn geodesic_rows_decay_and_empty_grid_is_header_only() {
    let dir = TempDir::new().unwrap();
    let params = write(dir.path(), "params.json", &split_params("thompson", 0.0, 0.0));

    let out = run(&[
        "geodesic",
        "--params",
        path_str(&params),
        "--t-grid",
        "0,5,10",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "t,d_T,err_y,err_z");
    assert_eq!(lines.len(), 4);
    let mut previous = f64::INFINITY;
    for (row, t) in lines[1..].iter().zip([0.0, 5.0, 10.0]) {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields[0].parse::<f64>().unwrap(), t);
        // With all weights zero the path is exp(t·ω): d_T(ψ(t), u) = t.
        let d: f64 = fields[1].parse().unwrap();
        assert!((d - t).abs() < 1e-9);
        let err_y: f64 = fields[2].parse().unwrap();
        assert!(err_y < previous, "err_y must decay along the grid");
        previous = err_y;
    }

    let out = run(&["geodesic", "--params", path_str(&params)]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "t,d_T,err_y,err_z\n");
}

#[test]
fn verify_rejects_unknown_suite() {
    let out = run(&["verify", "--suite", "no-such-suite", "--trials", "1"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("unknown suite"));
}

#[test]
fn verify_single_suite_is_deterministic_json() {
    let args = [
        "verify",
        "--suite",
        "jordan-identity",
        "--trials",
        "20",
        "--seed",
        "7",
    ];
    let first = run(&args);
    assert_eq!(code(&first), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&first)).unwrap();
    assert_eq!(report["seed"], 7);
    assert_eq!(report["passed"], true);
    assert_eq!(report["suites"][0]["name"], "jordan-identity");
    assert_eq!(report["suites"][0]["trials"], 20);

    let second = run(&args);
    assert_eq!(first.stdout, second.stdout, "reports must be byte-identical");
}
