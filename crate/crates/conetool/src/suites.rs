//! The property suites behind `conetool verify`.
//!
//! Every suite name maps one-to-one to an invariant of the underlying
//! library: kernel identities, metric axioms and isometries, and the
//! closed-form-versus-limit checks for both horofunction boundaries.
//! Suites are deterministic: trial `k` of suite `s` under run seed `S`
//! derives its own RNG seed, which is what failure records report.
//!
//! Thresholds: algebraic identities are compared against the configured
//! tolerance; limit comparisons have fixed floors (their convergence
//! anchors) that the tolerance can loosen but not tighten.

use std::time::Instant;

use cone_core::hilbert::{
    detour_distance_variation, exp_extension_hilbert, same_part_hilbert, VariationHorofunction,
};
use cone_core::limits::{
    detour_cost_prelimit, limit_functional, scaled_path_points, LimitMetric, LimitPath, Schedule,
};
use cone_core::order::{
    hilbert_distance, project_det_one, symmetry, thompson_distance, upper_gauge,
};
use cone_core::spectral::{peirce_lambda_max, Idempotent};
use cone_core::thompson::{detour_distance_thompson, exp_extension_thompson};
use cone_core::{
    config, AlgebraDescriptor, BoundaryMode, BusemannPath, ConePoint, Element, TangentVector,
};
use rand::seq::index::sample;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::gen;
use crate::report::{Failure, SuiteReport};

/// Configuration shared by all suites in one `verify` run.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub trials: usize,
    pub seed: u64,
    pub algebras: Vec<AlgebraDescriptor>,
}

/// Collects violations for one suite run.
pub struct Recorder {
    threshold: f64,
    max_violation: f64,
    failures: Vec<Failure>,
    seed: u64,
    algebra: String,
}

const MAX_RECORDED_FAILURES: usize = 25;

impl Recorder {
    fn new(threshold: f64) -> Self {
        Recorder {
            threshold,
            max_violation: 0.0,
            failures: Vec::new(),
            seed: 0,
            algebra: String::new(),
        }
    }

    fn begin_trial(&mut self, seed: u64, algebra: AlgebraDescriptor) {
        self.seed = seed;
        self.algebra = algebra.to_string();
    }

    /// Records a violation magnitude; anything above the threshold (or not
    /// finite) is a failure.
    fn check(&mut self, magnitude: f64, what: &str) {
        let magnitude = if magnitude.is_finite() {
            magnitude
        } else {
            f64::MAX
        };
        self.max_violation = self.max_violation.max(magnitude);
        if magnitude > self.threshold && self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(Failure {
                seed: self.seed,
                description: format!("{}: {}", self.algebra, what),
                magnitude,
            });
        }
    }

    /// Boolean check: a failed predicate is recorded as a unit violation.
    fn require(&mut self, ok: bool, what: &str) {
        self.check(if ok { 0.0 } else { 1.0 + self.threshold }, what);
    }
}

type SuiteFn = fn(&mut ChaCha8Rng, AlgebraDescriptor, &mut Recorder);

/// Registry: (name, threshold floor, body).
const SUITES: &[(&str, f64, SuiteFn)] = &[
    ("jordan-identity", 0.0, s_jordan_identity),
    ("spectral-reconstruction", 0.0, s_spectral_reconstruction),
    ("quadratic-rep-matrix", 0.0, s_quadratic_rep_matrix),
    ("quadratic-rep-cone", 0.0, s_quadratic_rep_cone),
    ("det-identity", 0.0, s_det_identity),
    ("lambda-shift", 0.0, s_lambda_shift),
    ("peirce-consistency", 0.0, s_peirce_consistency),
    ("triangle-inequality", 0.0, s_triangle_inequality),
    ("gauge-log-consistency", 0.0, s_gauge_log_consistency),
    ("inversion-identity", 0.0, s_inversion_identity),
    ("automorphism-invariance", 0.0, s_automorphism_invariance),
    ("symmetry-isometry", 0.0, s_symmetry_isometry),
    ("hilbert-gauge-sum", 0.0, s_hilbert_gauge_sum),
    ("exp-isometry", 0.0, s_exp_isometry),
    ("horofunction-lower-bound", 0.0, s_horofunction_lower_bound),
    ("horofunction-lipschitz", 0.0, s_horofunction_lipschitz),
    ("busemann-convergence", 1e-7, s_busemann_convergence),
    ("scaling-limits", 1e-8, s_scaling_limits),
    ("detour-consistency", 1e-7, s_detour_consistency),
    ("detour-metric", 0.0, s_detour_metric),
    ("extension-continuity", 1e-6, s_extension_continuity),
    ("variation-convergence", 1e-7, s_variation_convergence),
    (
        "variation-detour-consistency",
        1e-7,
        s_variation_detour_consistency,
    ),
    ("variation-lower-bound", 0.0, s_variation_lower_bound),
    (
        "hilbert-rescale-invariance",
        0.0,
        s_hilbert_rescale_invariance,
    ),
    (
        "hilbert-extension-continuity",
        1e-6,
        s_hilbert_extension_continuity,
    ),
    ("pair-well-definedness", 0.0, s_pair_well_definedness),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(name, _, _)| *name).collect()
}

/// Runs one suite; `None` for an unknown name.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Option<SuiteReport> {
    let index = SUITES.iter().position(|(n, _, _)| *n == name)?;
    let (_, floor, body) = SUITES[index];
    let started = Instant::now();
    let mut rec = Recorder::new(floor.max(config::tolerance()));
    for trial in 0..cfg.trials {
        let algebra = cfg.algebras[trial % cfg.algebras.len()];
        let seed = gen::trial_seed(cfg.seed, index as u64, trial as u64);
        let mut rng = gen::rng_for(seed);
        rec.begin_trial(seed, algebra);
        body(&mut rng, algebra, &mut rec);
    }
    Some(SuiteReport {
        name: name.to_owned(),
        trials: cfg.trials,
        threshold: rec.threshold,
        max_violation: rec.max_violation,
        passed: rec.failures.is_empty(),
        failures: rec.failures,
        elapsed: started.elapsed().as_secs_f64(),
    })
}

/// Runs every suite in registry order.
pub fn run_all(cfg: &SuiteConfig) -> Vec<SuiteReport> {
    suite_names()
        .into_iter()
        .map(|name| run_suite(name, cfg).expect("registry names are valid"))
        .collect()
}

fn interior(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor) -> ConePoint {
    ConePoint::interior(gen::random_interior(rng, algebra)).expect("exp image is interior")
}

/// Writes one representative convergence trace per limit-based suite into
/// `dir` (files `<suite>.csv` with columns `t,value,increment,converged`),
/// reproducing trial 0 of that suite on the first configured algebra.
pub fn write_traces(dir: &std::path::Path, cfg: &SuiteConfig) -> std::io::Result<Vec<String>> {
    use std::io::Write;

    let traced: [(&str, BoundaryMode, LimitMetric, Vec<f64>); 4] = [
        (
            "busemann-convergence",
            BoundaryMode::Thompson,
            LimitMetric::Thompson,
            vec![10.0, 20.0, 40.0],
        ),
        (
            "extension-continuity",
            BoundaryMode::Thompson,
            LimitMetric::Thompson,
            vec![10.0, 20.0, 30.0],
        ),
        (
            "variation-convergence",
            BoundaryMode::Hilbert,
            LimitMetric::Variation,
            vec![10.0, 20.0, 30.0],
        ),
        (
            "hilbert-extension-continuity",
            BoundaryMode::Hilbert,
            LimitMetric::Hilbert,
            vec![10.0, 20.0, 30.0],
        ),
    ];

    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    let bad_data = |context: String| std::io::Error::new(std::io::ErrorKind::InvalidData, context);
    for (name, mode, metric, ts) in traced {
        let index = SUITES
            .iter()
            .position(|(n, _, _)| *n == name)
            .expect("traced suites are registered") as u64;
        let algebra = cfg.algebras[0];
        let mut rng = gen::rng_for(gen::trial_seed(cfg.seed, index, 0));
        let params = gen::random_params(&mut rng, algebra, mode);
        let probe = match metric {
            LimitMetric::Variation => gen::frame_span(&mut rng, &params, true),
            _ => gen::random_interior(&mut rng, algebra),
        };
        let path = LimitPath::Busemann(
            BusemannPath::new(params).map_err(|e| bad_data(e.to_string()))?,
        );
        let schedule = Schedule::new(ts, 1e-6).expect("trace schedules are valid");
        let report = limit_functional(&path, &[probe], metric, &schedule)
            .map_err(|e| bad_data(e.to_string()))?
            .remove(0);

        let file_name = format!("{name}.csv");
        let mut file = std::fs::File::create(dir.join(&file_name))?;
        writeln!(file, "t,value,increment,converged")?;
        for (k, (t, value)) in report.ts.iter().zip(&report.values).enumerate() {
            let increment = if k == 0 {
                String::new()
            } else {
                format!("{:.6e}", report.increments[k - 1])
            };
            writeln!(file, "{t},{value:.12},{increment},{}", report.converged)?;
        }
        written.push(file_name);
    }
    Ok(written)
}

// ---------------------------------------------------------------- kernel --

fn s_jordan_identity(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor, rec: &mut Recorder) {
    let x = gen::random_element(rng, algebra);
    let y = gen::random_element(rng, algebra);
    let x2 = x.jordan_product(&x).unwrap();
    let lhs = x2.jordan_product(&x.jordan_product(&y).unwrap()).unwrap();
    let rhs = x.jordan_product(&x2.jordan_product(&y).unwrap()).unwrap();
    let scale = (1.0 + x.norm_inner()).powi(3) * (1.0 + y.norm_inner());
    rec.check((&lhs - &rhs).norm_inner() / scale, "jordan identity residual");
}

fn s_spectral_reconstruction(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor, rec: &mut Recorder) {
    let x = gen::random_element(rng, algebra);
    let dec = x.spectral_decompose().unwrap();
    let rebuilt = dec.reconstruct();
    rec.check(
        (&rebuilt - &x).norm_inner() / (1.0 + x.norm_inner()),
        "spectral reconstruction residual",
    );
    let eig = dec.eigenvalues();
    let disorder = eig
        .windows(2)
        .map(|w| (w[1] - w[0]).max(0.0))
        .fold(0.0, f64::max);
    rec.check(disorder, "eigenvalues not sorted descending");
    let mut sum = Element::zero(algebra).unwrap();
    for p in dec.frame() {
        sum = &sum + p;
    }
    let unit = Element::unit(algebra).unwrap();
    rec.check((&sum - &unit).norm_inner(), "frame completeness residual");
    // Individual projectors are only well-conditioned away from spectral
    // clusters; reconstruction and completeness cover the clustered case.
    for (k, p) in dec.frame().iter().enumerate() {
        let gap = eig
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, l)| (l - eig[k]).abs())
            .fold(f64::INFINITY, f64::min);
        if gap > 1e-6 {
            let squared = p.jordan_product(p).unwrap();
            rec.check((&squared - p).norm_inner(), "frame member not idempotent");
        }
    }
}

fn s_quadratic_rep_matrix(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor, rec: &mut Recorder) {
    let x = gen::random_element(rng, algebra);
    let y = gen::random_element(rng, algebra);
    let via_jordan = x.quadratic_rep(&y).unwrap();
    let direct = gen::quadratic_rep_oracle(&x, &y);
    let diff = via_jordan
        .coords()
        .iter()
        .zip(&direct)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let scale = (1.0 + x.max_abs_coord()).powi(2) * (1.0 + y.max_abs_coord());
    rec.check(diff / scale, "quadratic representation vs product oracle");
}

fn s_quadratic_rep_cone(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor, rec: &mut Recorder) {
    let x = gen::random_interior(rng, algebra);
    let y = gen::random_interior(rng, algebra);
    let image = x.quadratic_rep(&y).unwrap();
    rec.check(
        (-image.lambda_min().unwrap()).max(0.0),
        "U_x does not preserve the interior cone",
    );
    let unit = Element::unit(algebra).unwrap();
    let x2 = x.jordan_product(&x).unwrap();
    rec.check(
        (&x.quadratic_rep(&unit).unwrap() - &x2).norm_inner() / (1.0 + x2.norm_inner()),
        "U_x(u) differs from x²",
    );
}

fn s_det_identity(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor, rec: &mut Recorder) {
    let x = gen::random_element(rng, algebra);
    let y = gen::random_element(rng, algebra);
    let lhs = x.quadratic_rep(&y).unwrap().determinant().unwrap();
    let rhs = x.determinant().unwrap().powi(2) * y.determinant().unwrap();
    rec.check(
        (lhs - rhs).abs() / (1.0 + rhs.abs()),
        "det(U_x y) differs from det(x)² det(y)",
    );
}

fn s_lambda_shift(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor, rec: &mut Recorder) {
    let x = gen::random_element(rng, algebra);
    let s = rng.gen_range(-3.0..3.0);
    let unit = Element::unit(algebra).unwrap();
    let shifted = (&x + &unit.scale(s)).lambda_max().unwrap();
    let expected = x.lambda_max().unwrap() + s;
    rec.check(
        (shifted - expected).abs() / (1.0 + expected.abs()),
        "Λ(x + s·u) differs from Λ(x) + s",
    );
}

fn s_peirce_consistency(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor, rec: &mut Recorder) {
    let frame = gen::random_frame(rng, algebra);
    let rank = algebra.rank();
    let k = rng.gen_range(1..=rank);
    let picked = sample(rng, rank, k).into_vec();
    let mut sum = Element::zero(algebra).unwrap();
    for &i in &picked {
        sum = &sum + &frame[i];
    }
    let p = Idempotent::new(sum).expect("frame subsets are idempotents");

    // Block elements with known spectra: Λ over the subalgebra is max cᵢ.
    let coeffs: Vec<f64> = picked.iter().map(|_| rng.gen_range(-2.0..2.0)).collect();
    let mut z = Element::zero(algebra).unwrap();
    for (&i, c) in picked.iter().zip(&coeffs) {
        z = &z + &frame[i].scale(*c);
    }
    let expected = coeffs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    rec.check(
        (peirce_lambda_max(&p, &z).unwrap() - expected).abs() / (1.0 + expected.abs()),
        "subalgebra gauge differs from known block spectrum",
    );

    // Shift-independence: the compression gauge must not depend on the
    // penalty constant pushing the complementary block down.
    let z2 = p.element().quadratic_rep(&gen::random_element(rng, algebra)).unwrap();
    let implementation = peirce_lambda_max(&p, &z2).unwrap();
    let unit = Element::unit(algebra).unwrap();
    let penalty = 5.0 + 2.0 * z2.order_unit_norm().unwrap();
    let oracle = (&z2 - &(&unit - p.element()).scale(penalty))
        .lambda_max()
        .unwrap();
    rec.check(
        (implementation - oracle).abs() / (1.0 + oracle.abs()),
        "subalgebra gauge depends on the penalty shift",
    );
}

// ----------------------------------------------------------------- order --

fn s_triangle_inequality(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor, rec: &mut Recorder) {
    let (a, b, c) = (
        interior(rng, algebra),
        interior(rng, algebra),
        interior(rng, algebra),
    );
    for (dist, what) in [
        (
            thompson_distance as fn(&ConePoint, &ConePoint) -> cone_core::Result<f64>,
            "thompson triangle inequality",
        ),
        (hilbert_distance, "hilbert triangle inequality"),
    ] {
        let dab = dist(&a, &b).unwrap();
        let dac = dist(&a, &c).unwrap();
        let dcb = dist(&c, &b).unwrap();
        rec.check((dab - dac - dcb).max(0.0), what);
    }
}

fn s_gauge_log_consistency(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor, rec: &mut Recorder) {
    let x = interior(rng, algebra);
    let y = interior(rng, algebra);
    let m_xy = upper_gauge(x.element(), &y).unwrap();
    let m_yx = upper_gauge(y.element(), &x).unwrap();
    let d = thompson_distance(&x, &y).unwrap();
    rec.check(
        (d - m_xy.ln().max(m_yx.ln())).abs() / (1.0 + d),
        "thompson distance differs from max of log-gauges",
    );
}

fn s_inversion_identity(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor, rec: &mut Recorder) {
    let x = interior(rng, algebra);
    let y = interior(rng, algebra);
    let xi = ConePoint::interior(x.element().inverse().unwrap()).unwrap();
    let yi = ConePoint::interior(y.element().inverse().unwrap()).unwrap();
    let lhs = upper_gauge(xi.element(), &yi).unwrap();
    let rhs = upper_gauge(y.element(), &x).unwrap();
    rec.check(
        (lhs - rhs).abs() / (1.0 + rhs),
        "M(x⁻¹/y⁻¹) differs from M(y/x)",
    );
}

fn s_automorphism_invariance(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor, rec: &mut Recorder) {
    let a = gen::random_interior(rng, algebra);
    let x = interior(rng, algebra);
    let y = interior(rng, algebra);
    let ax = ConePoint::interior(a.quadratic_rep(x.element()).unwrap()).unwrap();
    let ay = ConePoint::interior(a.quadratic_rep(y.element()).unwrap()).unwrap();
    for (dist, what) in [
        (
            thompson_distance as fn(&ConePoint, &ConePoint) -> cone_core::Result<f64>,
            "U_a is not a thompson isometry",
        ),
        (hilbert_distance, "U_a is not a hilbert isometry"),
    ] {
        let before = dist(&x, &y).unwrap();
        let after = dist(&ax, &ay).unwrap();
        rec.check((before - after).abs() / (1.0 + before), what);
    }
}

fn s_symmetry_isometry(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor, rec: &mut Recorder) {
    let z = interior(rng, algebra);
    let x = interior(rng, algebra);
    let y = interior(rng, algebra);
    let sx = symmetry(&z, &x).unwrap();
    let sy = symmetry(&z, &y).unwrap();
    for (dist, what) in [
        (
            thompson_distance as fn(&ConePoint, &ConePoint) -> cone_core::Result<f64>,
            "S_z is not a thompson isometry",
        ),
        (hilbert_distance, "S_z is not a hilbert isometry"),
    ] {
        let before = dist(&x, &y).unwrap();
        let after = dist(&sx, &sy).unwrap();
        rec.check((before - after).abs() / (1.0 + before), what);
    }
    let fixed = symmetry(&z, &z).unwrap();
    rec.check(
        (fixed.element() - z.element()).norm_inner() / (1.0 + z.element().norm_inner()),
        "S_z does not fix z",
    );
}

fn s_hilbert_gauge_sum(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor, rec: &mut Recorder) {
    let x = interior(rng, algebra);
    let y = interior(rng, algebra);
    let d = hilbert_distance(&x, &y).unwrap();
    let m_xy = upper_gauge(x.element(), &y).unwrap();
    let m_yx = upper_gauge(y.element(), &x).unwrap();
    rec.check(
        (d - (m_xy.ln() + m_yx.ln())).abs() / (1.0 + d),
        "hilbert distance differs from the gauge sum",
    );
}

// -------------------------------------------------------------- thompson --

fn s_exp_isometry(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor, rec: &mut Recorder) {
    let frame = gen::random_frame(rng, algebra);
    let rank = algebra.rank();
    let coeff_a: Vec<f64> = (0..rank).map(|_| rng.gen_range(-2.0..2.0)).collect();
    let coeff_b: Vec<f64> = (0..rank).map(|_| rng.gen_range(-2.0..2.0)).collect();
    let span = |coeff: &[f64]| {
        let mut acc = Element::zero(algebra).unwrap();
        for (c, p) in coeff.iter().zip(&frame) {
            acc = &acc + &p.scale(*c);
        }
        acc
    };
    let expected: f64 = coeff_a
        .iter()
        .zip(&coeff_b)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let ea = ConePoint::interior(span(&coeff_a).exp().unwrap()).unwrap();
    let eb = ConePoint::interior(span(&coeff_b).exp().unwrap()).unwrap();
    let d = thompson_distance(&ea, &eb).unwrap();
    rec.check(
        (d - expected).abs() / (1.0 + expected),
        "exp is not an isometry on the frame span",
    );
}

fn s_horofunction_lower_bound(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor, rec: &mut Recorder) {
    let unit = ConePoint::interior(Element::unit(algebra).unwrap()).unwrap();
    let h = exp_extension_thompson(&gen::random_params(rng, algebra, BoundaryMode::Thompson))
        .unwrap();
    let x = interior(rng, algebra);
    let bound = thompson_distance(&unit, &x).unwrap();
    rec.check(
        (h.eval(&x).unwrap().abs() - bound).max(0.0),
        "thompson horofunction exceeds the distance bound",
    );

    let hh = exp_extension_hilbert(&gen::random_params(rng, algebra, BoundaryMode::Hilbert))
        .unwrap();
    let xb = project_det_one(&x).unwrap();
    let hb = hilbert_distance(&unit, &x).unwrap();
    rec.check(
        (hh.eval(&xb).unwrap().abs() - hb).max(0.0),
        "hilbert horofunction exceeds the distance bound",
    );
}

fn s_horofunction_lipschitz(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor, rec: &mut Recorder) {
    let h = exp_extension_thompson(&gen::random_params(rng, algebra, BoundaryMode::Thompson))
        .unwrap();
    let x = interior(rng, algebra);
    let y = interior(rng, algebra);
    let gap = (h.eval(&x).unwrap() - h.eval(&y).unwrap()).abs();
    rec.check(
        (gap - thompson_distance(&x, &y).unwrap()).max(0.0),
        "thompson horofunction is not 1-Lipschitz",
    );

    let hh = exp_extension_hilbert(&gen::random_params(rng, algebra, BoundaryMode::Hilbert))
        .unwrap();
    let gap = (hh.eval(&project_det_one(&x).unwrap()).unwrap()
        - hh.eval(&project_det_one(&y).unwrap()).unwrap())
    .abs();
    rec.check(
        (gap - hilbert_distance(&x, &y).unwrap()).max(0.0),
        "hilbert horofunction is not 1-Lipschitz",
    );
}

fn s_busemann_convergence(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor, rec: &mut Recorder) {
    let params = gen::random_params(rng, algebra, BoundaryMode::Thompson);
    let h = exp_extension_thompson(&params).unwrap();
    let probes: Vec<Element> = (0..2).map(|_| gen::random_interior(rng, algebra)).collect();
    let path = LimitPath::Busemann(BusemannPath::new(params).unwrap());
    let reports =
        limit_functional(&path, &probes, LimitMetric::Thompson, &Schedule::default()).unwrap();
    for (probe, report) in probes.iter().zip(&reports) {
        let closed = h.eval(&ConePoint::interior(probe.clone()).unwrap()).unwrap();
        rec.check(
            (closed - report.last_value()).abs(),
            "closed form differs from the distance limit",
        );
    }
}

fn s_scaling_limits(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor, rec: &mut Recorder) {
    let params = gen::random_params(rng, algebra, BoundaryMode::Thompson);
    let pair = params.to_pair().unwrap();
    let path = BusemannPath::new(params).unwrap();
    let (fwd, bwd) = scaled_path_points(&path, 25.0).unwrap();
    rec.check(
        (&fwd - pair.y().element()).norm_inner(),
        "e^{-t}ψ(t) does not approach y",
    );
    rec.check(
        (&bwd - pair.z().element()).norm_inner(),
        "e^{-t}ψ(t)⁻¹ does not approach z",
    );
}

fn s_detour_consistency(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor, rec: &mut Recorder) {
    // Alternate between shared-frame pairs and different-frame pairs with
    // equal supports; both are detour-finite.
    let (pa, pb) = if rng.gen_bool(0.5) {
        let mut family = gen::same_part_family(rng, algebra, BoundaryMode::Thompson, 2);
        let b = family.pop().unwrap();
        (family.pop().unwrap(), b)
    } else {
        gen::cluster_same_part_pair(rng, algebra, BoundaryMode::Thompson)
    };
    let ha = exp_extension_thompson(&pa).unwrap();
    let hb = exp_extension_thompson(&pb).unwrap();
    let closed = detour_distance_thompson(&ha, &hb).unwrap();
    rec.require(closed.is_finite(), "same-part detour is not finite");

    let t = 8.0;
    let forward =
        detour_cost_prelimit(&BusemannPath::new(pa.clone()).unwrap(), hb.pair(), t).unwrap();
    let backward =
        detour_cost_prelimit(&BusemannPath::new(pb.clone()).unwrap(), ha.pair(), t).unwrap();
    rec.check(
        (closed - (forward + backward)).abs(),
        "detour distance differs from the detour-cost limit",
    );
}

fn s_detour_metric(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor, rec: &mut Recorder) {
    let family = gen::same_part_family(rng, algebra, BoundaryMode::Thompson, 3);
    let hs: Vec<_> = family
        .iter()
        .map(|p| exp_extension_thompson(p).unwrap())
        .collect();
    let d = |a: usize, b: usize| detour_distance_thompson(&hs[a], &hs[b]).unwrap();
    rec.check((-d(0, 1)).max(0.0), "detour distance is negative");
    rec.check((d(0, 1) - d(1, 0)).abs(), "detour distance is not symmetric");
    rec.check(d(0, 0), "detour distance of a point to itself is not zero");
    rec.check(
        (d(0, 2) - d(0, 1) - d(1, 2)).max(0.0),
        "detour distance violates the triangle inequality",
    );

    let (ma, mb) = gen::mismatched_pair(rng, algebra, BoundaryMode::Thompson);
    let da = exp_extension_thompson(&ma).unwrap();
    let db = exp_extension_thompson(&mb).unwrap();
    rec.require(
        detour_distance_thompson(&da, &db).unwrap().is_infinite(),
        "cross-part detour distance is not +∞",
    );
}

fn s_extension_continuity(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor, rec: &mut Recorder) {
    let params = gen::random_params(rng, algebra, BoundaryMode::Thompson);
    let h = exp_extension_thompson(&params).unwrap();
    let probes: Vec<Element> = (0..2).map(|_| gen::random_interior(rng, algebra)).collect();
    let path = LimitPath::Busemann(BusemannPath::new(params).unwrap());
    let schedule = Schedule::new(vec![10.0, 20.0, 30.0], 1e-6).unwrap();
    let reports = limit_functional(&path, &probes, LimitMetric::Thompson, &schedule).unwrap();
    for (probe, report) in probes.iter().zip(&reports) {
        let closed = h.eval(&ConePoint::interior(probe.clone()).unwrap()).unwrap();
        rec.check(
            (closed - report.last_value()).abs(),
            "interior horofunctions do not approach the extension",
        );
    }
}

// --------------------------------------------------------------- hilbert --

fn s_variation_convergence(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor, rec: &mut Recorder) {
    let params = gen::random_params(rng, algebra, BoundaryMode::Hilbert);
    let g = VariationHorofunction::new(params.clone()).unwrap();
    let probes: Vec<Element> = (0..2).map(|_| gen::frame_span(rng, &params, true)).collect();
    let path = LimitPath::Busemann(BusemannPath::new(params).unwrap());
    let schedule = Schedule::new(vec![10.0, 20.0, 30.0], 1e-6).unwrap();
    let reports = limit_functional(&path, &probes, LimitMetric::Variation, &schedule).unwrap();
    for (probe, report) in probes.iter().zip(&reports) {
        let closed = g.eval(&TangentVector::new(probe.clone()).unwrap()).unwrap();
        rec.check(
            (closed - report.last_value()).abs(),
            "variation closed form differs from the straight-line limit",
        );
    }
}

fn s_variation_detour_consistency(
    rng: &mut ChaCha8Rng,
    algebra: AlgebraDescriptor,
    rec: &mut Recorder,
) {
    let (pa, pb) = if rng.gen_bool(0.5) {
        let mut family = gen::same_part_family(rng, algebra, BoundaryMode::Hilbert, 2);
        let b = family.pop().unwrap();
        (family.pop().unwrap(), b)
    } else {
        gen::cluster_same_part_pair(rng, algebra, BoundaryMode::Hilbert)
    };
    let ga = VariationHorofunction::new(pa).unwrap();
    let gb = VariationHorofunction::new(pb).unwrap();
    let closed = detour_distance_variation(&ga, &gb).unwrap();
    rec.require(closed.is_finite(), "same-part variation detour is not finite");

    let t = 30.0;
    let cost = |from: &VariationHorofunction, to: &VariationHorofunction| {
        let xi = from.path_point(t).unwrap();
        xi.element().variation_seminorm().unwrap() + to.eval(&xi).unwrap()
    };
    rec.check(
        (closed - (cost(&ga, &gb) + cost(&gb, &ga))).abs(),
        "variation detour differs from the detour-cost limit",
    );
    rec.check(
        detour_distance_variation(&ga, &ga).unwrap(),
        "variation detour of a point to itself is not zero",
    );

    let (ma, mb) = gen::mismatched_pair(rng, algebra, BoundaryMode::Hilbert);
    let da = VariationHorofunction::new(ma).unwrap();
    let db = VariationHorofunction::new(mb).unwrap();
    rec.require(
        detour_distance_variation(&da, &db).unwrap().is_infinite(),
        "cross-part variation detour is not +∞",
    );
}

fn s_variation_lower_bound(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor, rec: &mut Recorder) {
    let g = VariationHorofunction::new(gen::random_params(rng, algebra, BoundaryMode::Hilbert))
        .unwrap();
    let v = TangentVector::project(&gen::random_element(rng, algebra)).unwrap();
    let w = TangentVector::project(&gen::random_element(rng, algebra)).unwrap();
    rec.check(
        (g.eval(&v).unwrap().abs() - v.element().variation_seminorm().unwrap()).max(0.0),
        "variation horofunction exceeds the seminorm bound",
    );
    let gap = (g.eval(&v).unwrap() - g.eval(&w).unwrap()).abs();
    let dist = (v.element() - w.element()).variation_seminorm().unwrap();
    rec.check(
        (gap - dist).max(0.0),
        "variation horofunction is not 1-Lipschitz",
    );
}

fn s_hilbert_rescale_invariance(
    rng: &mut ChaCha8Rng,
    algebra: AlgebraDescriptor,
    rec: &mut Recorder,
) {
    let params = gen::random_params(rng, algebra, BoundaryMode::Hilbert);
    let pair = params.to_pair().unwrap();
    rec.check(
        (pair.y().element().order_unit_norm().unwrap() - 1.0).abs(),
        "pair component y is not unit-normalised",
    );
    rec.check(
        (pair.z().element().order_unit_norm().unwrap() - 1.0).abs(),
        "pair component z is not unit-normalised",
    );

    let x = gen::random_interior(rng, algebra);
    let probes = vec![x.clone(), x.scale(3.0)];
    let path = LimitPath::Busemann(BusemannPath::new(params).unwrap());
    let schedule = Schedule::new(vec![15.0], 1e-6).unwrap();
    let reports = limit_functional(&path, &probes, LimitMetric::Hilbert, &schedule).unwrap();
    rec.check(
        (reports[0].last_value() - reports[1].last_value()).abs(),
        "hilbert prelimit is not scale-invariant",
    );
}

fn s_hilbert_extension_continuity(
    rng: &mut ChaCha8Rng,
    algebra: AlgebraDescriptor,
    rec: &mut Recorder,
) {
    let params = gen::random_params(rng, algebra, BoundaryMode::Hilbert);
    let h = exp_extension_hilbert(&params).unwrap();
    let probes: Vec<cone_core::ProjectivePoint> = (0..2)
        .map(|_| project_det_one(&interior(rng, algebra)).unwrap())
        .collect();
    let probe_elements: Vec<Element> = probes.iter().map(|p| p.element().clone()).collect();
    let path = LimitPath::Busemann(BusemannPath::new(params).unwrap());
    let schedule = Schedule::new(vec![10.0, 20.0, 30.0], 1e-6).unwrap();
    let reports =
        limit_functional(&path, &probe_elements, LimitMetric::Hilbert, &schedule).unwrap();
    for (probe, report) in probes.iter().zip(&reports) {
        let closed = h.eval(probe).unwrap();
        rec.check(
            (closed - report.last_value()).abs(),
            "projective horofunctions do not approach the extension",
        );
    }
}

fn s_pair_well_definedness(rng: &mut ChaCha8Rng, algebra: AlgebraDescriptor, rec: &mut Recorder) {
    let matrix = !matches!(algebra, AlgebraDescriptor::SpinFactor { .. });
    if matrix && algebra.rank() < 3 {
        return; // rotated twins need a spare index for J
    }
    let (pa, pb) = gen::rotated_twin_params(rng, algebra, BoundaryMode::Thompson);
    let (qa, qb) = (pa.to_pair().unwrap(), pb.to_pair().unwrap());
    rec.check(
        (qa.y().element() - qb.y().element()).norm_inner(),
        "equal-weight rotations change the pair's y component",
    );
    rec.check(
        (qa.z().element() - qb.z().element()).norm_inner(),
        "equal-weight rotations change the pair's z component",
    );
    let (ha, hb) = (
        exp_extension_thompson(&pa).unwrap(),
        exp_extension_thompson(&pb).unwrap(),
    );
    for _ in 0..2 {
        let x = interior(rng, algebra);
        rec.check(
            (ha.eval(&x).unwrap() - hb.eval(&x).unwrap()).abs(),
            "equivalent parameters induce different horofunctions",
        );
    }
    if matrix {
        let (ga, gb) = gen::rotated_twin_params(rng, algebra, BoundaryMode::Hilbert);
        let (ia, ib) = (
            exp_extension_hilbert(&ga).unwrap(),
            exp_extension_hilbert(&gb).unwrap(),
        );
        rec.require(
            same_part_hilbert(&ia, &ib).unwrap(),
            "equivalent hilbert parameters land in different parts",
        );
        let x = project_det_one(&interior(rng, algebra)).unwrap();
        rec.check(
            (ia.eval(&x).unwrap() - ib.eval(&x).unwrap()).abs(),
            "equivalent hilbert parameters induce different horofunctions",
        );
    }
}
