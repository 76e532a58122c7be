//! Numerical limit oracles for horofunction boundaries.
//!
//! A horofunction is the limit of normalised distance (or norm) functionals
//! along a path escaping to infinity:
//!
//! ```text
//! h(x) = lim_{t→∞} d(x, ψ(t)) − d(b, ψ(t)),
//! ```
//!
//! with base point the unit `u` (cone metrics) or `0` (normed space).  This
//! module evaluates those prelimit functionals directly on a schedule of
//! parameter values and reports the increments, giving an oracle for the
//! closed-form boundary evaluations that shares none of their code path:
//! everything here goes through distances and gauges on interior points.
//!
//! For the geodesics `ψ(t) = exp(tω + ζ)` the prelimit gauges are computed
//! in the log domain.  `exp(tω + ζ)` at `t = 40` has eigenvalues spread over
//! `e^{±40}`, so decomposing the point itself destroys the small end of the
//! spectrum; instead `ψ^{-1/2}` and friends are exponentiated from
//! `γ(t) = tω + ζ`, whose spectrum stays at scale `t`, and every gauge is
//! extracted as a *largest* eigenvalue, which keeps full relative accuracy
//! in the presence of the huge spread.

use crate::algebra::Element;
use crate::boundary::{BoundaryMode, HoroPair};
use crate::error::{ConeError, Result};
use crate::order::{hilbert_distance, thompson_distance, ConePoint};
use crate::thompson::BusemannPath;

/// Which limiting geometry a functional is normalised against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitMetric {
    /// Thompson distance on the interior cone, base point `u`.
    Thompson,
    /// Hilbert distance on rays of the interior cone, base point `ū`.
    Hilbert,
    /// Order-unit norm on the ambient space, base point `0`.
    Norm,
    /// Variation seminorm on the traceless subspace, base point `0`.
    Variation,
}

/// A path escaping to infinity along which the functionals are sampled.
#[derive(Debug, Clone)]
pub enum LimitPath {
    /// The geodesic `ψ(t) = exp(tω + ζ)` of a parameter set (cone metrics),
    /// or its linear shadow `tω + ζ` (norm), or the traceless shadow
    /// `tω + ζ − (tr/r)·u` (variation).
    Busemann(BusemannPath),
    /// An explicit sequence of points, one per schedule entry.
    Points(Vec<Element>),
}

/// Sample times and the increment threshold used to certify convergence.
#[derive(Debug, Clone, PartialEq)]
pub struct Schedule {
    ts: Vec<f64>,
    tol: f64,
}

impl Default for Schedule {
    fn default() -> Self {
        Schedule {
            ts: vec![10.0, 20.0, 40.0],
            tol: 1e-8,
        }
    }
}

impl Schedule {
    /// A strictly increasing, finite, nonempty list of sample times and a
    /// positive increment tolerance.
    pub fn new(ts: Vec<f64>, tol: f64) -> Result<Self> {
        if ts.is_empty() {
            return Err(ConeError::InvalidParams(
                "limit schedule needs at least one sample time".to_owned(),
            ));
        }
        if ts.iter().any(|t| !t.is_finite()) {
            return Err(ConeError::InvalidParams(
                "limit schedule times must be finite".to_owned(),
            ));
        }
        if ts.windows(2).any(|w| w[1] <= w[0]) {
            return Err(ConeError::InvalidParams(
                "limit schedule times must be strictly increasing".to_owned(),
            ));
        }
        if !(tol.is_finite() && tol > 0.0) {
            return Err(ConeError::InvalidParams(
                "limit schedule tolerance must be positive".to_owned(),
            ));
        }
        Ok(Schedule { ts, tol })
    }

    pub fn ts(&self) -> &[f64] {
        &self.ts
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }
}

/// The sampled prelimit values for one probe, with convergence diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceReport {
    /// Sample times (copied from the schedule).
    pub ts: Vec<f64>,
    /// Normalised functional values `d(x, ψ(t)) − d(base, ψ(t))`.
    pub values: Vec<f64>,
    /// Absolute successive differences of `values` (one shorter).
    pub increments: Vec<f64>,
    /// The normalisations `d(base, ψ(t))`, recorded for diagnostics.
    pub base_distances: Vec<f64>,
    /// Last increment fell below the schedule tolerance.
    pub converged: bool,
    /// Values are non-finite, or the increments grew substantially instead
    /// of shrinking.
    pub divergent: bool,
}

impl ConvergenceReport {
    pub fn last_value(&self) -> f64 {
        *self.values.last().expect("schedule is nonempty")
    }

    pub fn last_increment(&self) -> Option<f64> {
        self.increments.last().copied()
    }

    fn from_samples(ts: &[f64], values: Vec<f64>, base_distances: Vec<f64>, tol: f64) -> Self {
        let increments: Vec<f64> = values.windows(2).map(|w| (w[1] - w[0]).abs()).collect();
        let finite = values.iter().all(|v| v.is_finite());
        let converged = finite && increments.last().is_some_and(|inc| *inc < tol);
        let worsening = match (increments.first(), increments.last()) {
            (Some(first), Some(last)) => *last > first.max(10.0 * tol) && *last > *first,
            _ => false,
        };
        ConvergenceReport {
            ts: ts.to_vec(),
            values,
            increments,
            base_distances,
            converged,
            divergent: !finite || worsening,
        }
    }
}

/// Evaluates the normalised functionals of `path` at every probe over the
/// schedule.  Returns one report per probe, in order.
///
/// Probe requirements by metric: `Thompson` and `Hilbert` need interior
/// probes (Hilbert comparisons should pass determinant-one representatives,
/// since that is where the boundary functions are evaluated); `Norm` takes
/// any element; `Variation` requires traceless probes.
pub fn limit_functional(
    path: &LimitPath,
    probes: &[Element],
    metric: LimitMetric,
    schedule: &Schedule,
) -> Result<Vec<ConvergenceReport>> {
    let stations = build_stations(path, metric, schedule)?;
    let mut reports = Vec::with_capacity(probes.len());
    for probe in probes {
        let prepared = PreparedProbe::new(probe, metric)?;
        let mut values = Vec::with_capacity(stations.len());
        let mut bases = Vec::with_capacity(stations.len());
        for station in &stations {
            values.push(station.eval(&prepared)?);
            bases.push(station.base);
        }
        reports.push(ConvergenceReport::from_samples(
            schedule.ts(),
            values,
            bases,
            schedule.tol(),
        ));
    }
    Ok(reports)
}

/// The one-sided detour-cost prelimit
///
/// ```text
/// H_t = d_T(u, ψ(t)) + h'(ψ(t)),
/// ```
///
/// where `ψ` is the geodesic of one boundary point and `h'` is the
/// horofunction of the pair `target`.  As `t → ∞` this converges to the
/// detour cost `H(h, h')`; summing both directions gives the detour
/// distance.  Everything is evaluated in the log domain from `γ(t)`, and
/// `d_T(u, ψ(t)) = ‖γ(t)‖_u` exactly.
///
/// Accuracy caveat: the gauges against `y'`, `z'` decay like `e^{-t}` while
/// rounding noise picked up from the complementary Peirce blocks grows like
/// `e^{+t}`, so large `t` is only meaningful when the pair's supports align
/// exactly with the path's coordinate blocks (for example frames rotated
/// within the blocks of a diagonal frame).  For fully generic frames keep
/// `t` moderate; the prelimit is exact in `t` once `t` exceeds the largest
/// weight, so nothing is lost.
pub fn detour_cost_prelimit(path: &BusemannPath, target: &HoroPair, t: f64) -> Result<f64> {
    if path.params().algebra() != target.algebra() {
        return Err(ConeError::AlgebraMismatch {
            expected: path.params().algebra(),
            found: target.algebra(),
        });
    }
    let gamma = path.log_point(t);
    let dec = gamma.spectral_decompose()?;
    let base = dec.lambda_max().max(-dec.lambda_min());
    let mut best = f64::NEG_INFINITY;
    let y = target.y().element();
    if y.norm_inner() > 0.0 {
        let psi_inv_sqrt = dec.apply("exp", |l| (-0.5 * l).exp())?;
        let gauge = psi_inv_sqrt.quadratic_rep(y)?.lambda_max()?;
        if gauge <= 0.0 {
            return Err(ConeError::EigenFailure {
                context: "detour-cost gauge collapsed to a nonpositive value".to_owned(),
            });
        }
        best = best.max(gauge.ln());
    }
    let z = target.z().element();
    if z.norm_inner() > 0.0 {
        let psi_sqrt = dec.apply("exp", |l| (0.5 * l).exp())?;
        let gauge = psi_sqrt.quadratic_rep(z)?.lambda_max()?;
        if gauge <= 0.0 {
            return Err(ConeError::EigenFailure {
                context: "detour-cost gauge collapsed to a nonpositive value".to_owned(),
            });
        }
        best = best.max(gauge.ln());
    }
    Ok(base + best)
}

/// The rescaled geodesic endpoints `(e^{-t}ψ(t), e^{-t}ψ(t)^{-1})`, which
/// converge to the pair `(y, z)` of the parameter set.  Both are
/// exponentiated from `γ(t)`, never from `ψ(t)` itself.
pub fn scaled_path_points(path: &BusemannPath, t: f64) -> Result<(Element, Element)> {
    let dec = path.log_point(t).spectral_decompose()?;
    let forward = dec.apply("exp", |l| (l - t).exp())?;
    let backward = dec.apply("exp", |l| (-l - t).exp())?;
    Ok((forward, backward))
}

/// One schedule entry, with everything probe-independent precomputed.
struct Station {
    metric: LimitMetric,
    /// `d(base, station)`, already subtracted inside `eval`.
    base: f64,
    kind: StationKind,
}

enum StationKind {
    /// Log-domain geodesic data: `ψ(t) = exp γ`, plus `ψ` and `ψ^{-1/2}`
    /// exponentiated from one decomposition of `γ`.
    LogPoint { psi: Element, psi_inv_sqrt: Element },
    /// A linear-space station `tω + ζ` (norm) or its traceless shift
    /// (variation).
    Linear { point: Element },
    /// An explicit interior point (cone metrics).
    Explicit { point: ConePoint },
    /// An explicit ambient point (norm and variation metrics).
    Ambient { point: Element },
}

fn build_stations(
    path: &LimitPath,
    metric: LimitMetric,
    schedule: &Schedule,
) -> Result<Vec<Station>> {
    match path {
        LimitPath::Busemann(path) => {
            if metric == LimitMetric::Hilbert && path.params().mode() != BoundaryMode::Hilbert {
                return Err(ConeError::InvalidParams(
                    "hilbert limits need hilbert-normalised parameters".to_owned(),
                ));
            }
            schedule
                .ts()
                .iter()
                .map(|&t| busemann_station(path, metric, t))
                .collect()
        }
        LimitPath::Points(points) => {
            if points.len() != schedule.ts().len() {
                return Err(ConeError::InvalidPath(format!(
                    "explicit path has {} points but the schedule has {} times",
                    points.len(),
                    schedule.ts().len()
                )));
            }
            points
                .iter()
                .map(|point| explicit_station(point, metric))
                .collect()
        }
    }
}

fn busemann_station(path: &BusemannPath, metric: LimitMetric, t: f64) -> Result<Station> {
    let gamma = path.log_point(t);
    match metric {
        LimitMetric::Thompson | LimitMetric::Hilbert => {
            let dec = gamma.spectral_decompose()?;
            let psi = dec.apply("exp", f64::exp)?;
            let psi_inv_sqrt = dec.apply("exp", |l| (-0.5 * l).exp())?;
            let top = dec.lambda_max();
            let bottom = dec.lambda_min();
            // d_T(u, ψ) = ‖γ‖_u and d_H(u, ψ) = |γ|_u, exactly.
            let base = match metric {
                LimitMetric::Thompson => top.max(-bottom),
                _ => top - bottom,
            };
            Ok(Station {
                metric,
                base,
                kind: StationKind::LogPoint { psi, psi_inv_sqrt },
            })
        }
        LimitMetric::Norm => Ok(Station {
            metric,
            base: gamma.order_unit_norm()?,
            kind: StationKind::Linear { point: gamma },
        }),
        LimitMetric::Variation => {
            let rank = gamma.algebra().rank() as f64;
            let shift = gamma.trace() / rank;
            let xi = &gamma - &Element::unit(gamma.algebra())?.scale(shift);
            Ok(Station {
                metric,
                base: xi.variation_seminorm()?,
                kind: StationKind::Linear { point: xi },
            })
        }
    }
}

fn explicit_station(point: &Element, metric: LimitMetric) -> Result<Station> {
    match metric {
        LimitMetric::Thompson | LimitMetric::Hilbert => {
            let point = ConePoint::interior(point.clone())?;
            let unit = ConePoint::interior(Element::unit(point.element().algebra())?)?;
            let base = match metric {
                LimitMetric::Thompson => thompson_distance(&unit, &point)?,
                _ => hilbert_distance(&unit, &point)?,
            };
            Ok(Station {
                metric,
                base,
                kind: StationKind::Explicit { point },
            })
        }
        LimitMetric::Norm => Ok(Station {
            metric,
            base: point.order_unit_norm()?,
            kind: StationKind::Ambient {
                point: point.clone(),
            },
        }),
        LimitMetric::Variation => Ok(Station {
            metric,
            base: point.variation_seminorm()?,
            kind: StationKind::Ambient {
                point: point.clone(),
            },
        }),
    }
}

/// Probe-side precomputation: interior checks and `x^{-1/2}` for the cone
/// metrics, tracelessness validation for the variation seminorm.
struct PreparedProbe {
    element: Element,
    point: Option<ConePoint>,
    inv_sqrt: Option<Element>,
}

impl PreparedProbe {
    fn new(probe: &Element, metric: LimitMetric) -> Result<Self> {
        match metric {
            LimitMetric::Thompson | LimitMetric::Hilbert => {
                let point = ConePoint::interior(probe.clone())?;
                let inv_sqrt = point.element().inv_sqrt()?;
                Ok(PreparedProbe {
                    element: probe.clone(),
                    point: Some(point),
                    inv_sqrt: Some(inv_sqrt),
                })
            }
            LimitMetric::Norm => Ok(PreparedProbe {
                element: probe.clone(),
                point: None,
                inv_sqrt: None,
            }),
            LimitMetric::Variation => {
                let trace = probe.trace();
                if trace.abs() > crate::config::tolerance() * probe.norm_inner().max(1.0) {
                    return Err(ConeError::NotTraceless { trace });
                }
                Ok(PreparedProbe {
                    element: probe.clone(),
                    point: None,
                    inv_sqrt: None,
                })
            }
        }
    }
}

impl Station {
    fn eval(&self, probe: &PreparedProbe) -> Result<f64> {
        match &self.kind {
            StationKind::LogPoint { psi, psi_inv_sqrt } => {
                let inv_sqrt = probe
                    .inv_sqrt
                    .as_ref()
                    .expect("cone metrics prepare x^{-1/2}");
                // log M(ψ/x): top eigenvalue of U_{x^{-1/2}} ψ.
                let m_psi = inv_sqrt.quadratic_rep(psi)?.lambda_max()?;
                // log M(x/ψ): top eigenvalue of U_{ψ^{-1/2}} x.
                let m_probe = psi_inv_sqrt
                    .quadratic_rep(&probe.element)?
                    .lambda_max()?;
                if m_psi <= 0.0 || m_probe <= 0.0 {
                    return Err(ConeError::EigenFailure {
                        context: "prelimit gauge collapsed to a nonpositive value".to_owned(),
                    });
                }
                let value = match self.metric {
                    LimitMetric::Thompson => m_psi.ln().max(m_probe.ln()),
                    _ => m_psi.ln() + m_probe.ln(),
                };
                Ok(value - self.base)
            }
            StationKind::Linear { point } | StationKind::Ambient { point } => {
                let diff = &probe.element - point;
                let value = match self.metric {
                    LimitMetric::Norm => diff.order_unit_norm()?,
                    _ => diff.variation_seminorm()?,
                };
                Ok(value - self.base)
            }
            StationKind::Explicit { point } => {
                let x = probe.point.as_ref().expect("cone metrics prepare the probe");
                let value = match self.metric {
                    LimitMetric::Thompson => thompson_distance(x, point)?,
                    _ => hilbert_distance(x, point)?,
                };
                Ok(value - self.base)
            }
        }
    }
}
