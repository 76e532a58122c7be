//! Horofunction boundary of the open cone under the Thompson distance,
//! together with the horofunctions of the order-unit norm it extends.
//!
//! A boundary parameter set with Thompson normalisation determines the pair
//! `y = Σ_I e^{-αᵢ} pᵢ`, `z = Σ_J e^{-αⱼ} pⱼ` and the horofunction
//!
//! ```text
//! h(x) = max( log M(y/x), log M(z/x⁻¹) ),
//! ```
//!
//! a zero component contributing nothing to the maximum.  Every such `h` is
//! the Busemann point of the geodesic `ψ(t) = exp(tω + ζ)`,
//! `ω = p_I − p_J`, `ζ = −a_I + a_J`, along which `e^{-t}ψ(t) → y` and
//! `e^{-t}ψ(t)^{-1} → z`.
//!
//! The detour distance between two boundary points is finite exactly when
//! their pairs generate the same parts of the cone (equal support
//! idempotents on both components) and is then the Hilbert distance on the
//! product of the two support subalgebras:
//!
//! ```text
//! δ(h, h′) = max(log M(y′/y), log M(z′/z)) + max(log M(y/y′), log M(z/z′)),
//! ```
//!
//! with every gauge taken inside the common support subalgebra.
//!
//! On the underlying normed space `(A, ‖·‖_u)` the same parameters describe
//! the horofunction
//!
//! ```text
//! g(v) = max( Λ_{A(p_I)}(−U_{p_I} v − a_I), Λ_{A(p_J)}(U_{p_J} v − a_J) ),
//! ```
//!
//! whose composition with `log` is exactly the cone horofunction above.

use crate::algebra::Element;
use crate::boundary::{BoundaryMode, BoundaryParams, HoroPair};
use crate::config;
use crate::error::{ConeError, Result};
use crate::order::{thompson_distance, ConePoint};
use crate::spectral::{peirce_lambda_max, peirce_project, Idempotent};

/// A Thompson-boundary horofunction together with its parametrisation.
#[derive(Debug, Clone, PartialEq)]
pub struct ThompsonHorofunction {
    params: BoundaryParams,
    pair: HoroPair,
}

impl ThompsonHorofunction {
    /// Builds the horofunction of a Thompson-normalised parameter set.
    pub fn new(params: BoundaryParams) -> Result<Self> {
        if params.mode() != BoundaryMode::Thompson {
            return Err(ConeError::InvalidParams(
                "thompson horofunctions require thompson-mode parameters".to_owned(),
            ));
        }
        let pair = params.to_pair()?;
        Ok(ThompsonHorofunction { params, pair })
    }

    pub fn params(&self) -> &BoundaryParams {
        &self.params
    }

    pub fn pair(&self) -> &HoroPair {
        &self.pair
    }

    /// Evaluates the horofunction at an interior point.
    pub fn eval(&self, x: &ConePoint) -> Result<f64> {
        eval_thompson_horofunction(&self.pair, x)
    }
}

/// Evaluates `h(x) = max(log M(y/x), log M(z/x⁻¹))` for a boundary pair.
///
/// Components that are exactly zero are omitted from the maximum; the pair
/// invariant guarantees at least one component is nonzero.
pub fn eval_thompson_horofunction(pair: &HoroPair, x: &ConePoint) -> Result<f64> {
    if pair.algebra() != x.element().algebra() {
        return Err(ConeError::AlgebraMismatch {
            expected: pair.algebra(),
            found: x.element().algebra(),
        });
    }
    if !x.is_interior() {
        return Err(ConeError::NotInterior {
            min_eigenvalue: x.min_eigenvalue(),
        });
    }
    let dec = x.element().spectral_decompose()?;
    let mut best = f64::NEG_INFINITY;
    let y = pair.y().element();
    if y.norm_inner() > 0.0 {
        // M(y/x) = Λ(U_{x^{-1/2}} y)
        let inv_sqrt = dec.apply("inv_sqrt", |l| 1.0 / l.sqrt())?;
        best = best.max(inv_sqrt.quadratic_rep(y)?.lambda_max()?.ln());
    }
    let z = pair.z().element();
    if z.norm_inner() > 0.0 {
        // M(z/x⁻¹) = Λ(U_{x^{1/2}} z)
        let sqrt = dec.apply("sqrt", f64::sqrt)?;
        best = best.max(sqrt.quadratic_rep(z)?.lambda_max()?.ln());
    }
    Ok(best)
}

/// Evaluates the order-unit-norm horofunction `g(v)` of a Thompson-mode
/// parameter set at an arbitrary element `v`.
pub fn eval_norm_horofunction(params: &BoundaryParams, v: &Element) -> Result<f64> {
    if params.mode() != BoundaryMode::Thompson {
        return Err(ConeError::InvalidParams(
            "norm horofunctions require thompson-mode parameters".to_owned(),
        ));
    }
    if params.algebra() != v.algebra() {
        return Err(ConeError::AlgebraMismatch {
            expected: params.algebra(),
            found: v.algebra(),
        });
    }
    let mut best = f64::NEG_INFINITY;
    if !params.set_i().is_empty() {
        let p = params.support_i();
        let arg = &(-&peirce_project(&p, v)?) - &params.weighted_i();
        best = best.max(peirce_lambda_max(&p, &arg)?);
    }
    if !params.set_j().is_empty() {
        let p = params.support_j();
        let arg = &peirce_project(&p, v)? - &params.weighted_j();
        best = best.max(peirce_lambda_max(&p, &arg)?);
    }
    Ok(best)
}

/// The geodesic `ψ(t) = exp(tω + ζ)` attached to a parameter set.
#[derive(Debug, Clone)]
pub struct BusemannPath {
    params: BoundaryParams,
    omega: Element,
    zeta: Element,
}

impl BusemannPath {
    pub fn new(params: BoundaryParams) -> Result<Self> {
        let omega = params.omega();
        let zeta = params.zeta();
        Ok(BusemannPath {
            params,
            omega,
            zeta,
        })
    }

    pub fn params(&self) -> &BoundaryParams {
        &self.params
    }

    pub fn omega(&self) -> &Element {
        &self.omega
    }

    pub fn zeta(&self) -> &Element {
        &self.zeta
    }

    /// The exponent `γ(t) = tω + ζ`; the path point is `exp γ(t)`.
    ///
    /// Downstream computations that need `ψ(t)^{-1}` or `ψ(t)^{-1/2}` at
    /// large `t` should exponentiate multiples of `γ(t)` directly rather
    /// than decompose `ψ(t)`: the eigenvalues of `γ(t)` stay at scale `t`,
    /// while those of `ψ(t)` spread over `e^{±t}` and lose the small end to
    /// roundoff.
    pub fn log_point(&self, t: f64) -> Element {
        &self.omega.scale(t) + &self.zeta
    }

    /// The interior point `ψ(t)`.
    pub fn point(&self, t: f64) -> Result<ConePoint> {
        ConePoint::interior(self.log_point(t).exp()?)
    }
}

/// Extends the norm horofunction `g` to the cone boundary point with the
/// same parameters: the Busemann point of `ψ(t) = exp(tω + ζ)`.
pub fn exp_extension_thompson(params: &BoundaryParams) -> Result<ThompsonHorofunction> {
    ThompsonHorofunction::new(params.clone())
}

/// Whether two Thompson horofunctions lie in the same part of the boundary:
/// equal support idempotents for the `y` components and for the `z`
/// components.
pub fn same_part_thompson(a: &ThompsonHorofunction, b: &ThompsonHorofunction) -> Result<bool> {
    if a.params().algebra() != b.params().algebra() {
        return Err(ConeError::AlgebraMismatch {
            expected: a.params().algebra(),
            found: b.params().algebra(),
        });
    }
    Ok(supports_match(&a.params().support_i(), &b.params().support_i())
        && supports_match(&a.params().support_j(), &b.params().support_j()))
}

fn supports_match(p: &Idempotent, q: &Idempotent) -> bool {
    p.trace_int() == q.trace_int()
        && (p.element() - q.element()).norm_inner() <= config::tolerance()
}

/// Detour distance between two Thompson horofunctions.
///
/// Returns `+∞` when the two points lie in different parts; otherwise the
/// Hilbert distance between the pairs on the product of the support
/// subalgebras.  Identical pairs short-circuit to an exact `0`.
pub fn detour_distance_thompson(
    a: &ThompsonHorofunction,
    b: &ThompsonHorofunction,
) -> Result<f64> {
    if a.params().algebra() != b.params().algebra() {
        return Err(ConeError::AlgebraMismatch {
            expected: a.params().algebra(),
            found: b.params().algebra(),
        });
    }
    if a.pair().y().element() == b.pair().y().element()
        && a.pair().z().element() == b.pair().z().element()
    {
        return Ok(0.0);
    }
    if !same_part_thompson(a, b)? {
        return Ok(f64::INFINITY);
    }
    let support_i = a.params().support_i();
    let support_j = a.params().support_j();
    let mut forward = f64::NEG_INFINITY;
    let mut backward = f64::NEG_INFINITY;
    if !a.params().set_i().is_empty() {
        let (ya, yb) = (a.pair().y().element(), b.pair().y().element());
        forward = forward.max(log_support_gauge(yb, ya, &support_i)?);
        backward = backward.max(log_support_gauge(ya, yb, &support_i)?);
    }
    if !a.params().set_j().is_empty() {
        let (za, zb) = (a.pair().z().element(), b.pair().z().element());
        forward = forward.max(log_support_gauge(zb, za, &support_j)?);
        backward = backward.max(log_support_gauge(za, zb, &support_j)?);
    }
    Ok(forward + backward)
}

/// `log M(x/y)` computed inside the support subalgebra `A(s)`, where `y` is
/// interior relative to `A(s)` and `x` lies in its closed cone.
///
/// The inverse square root of `y` within `A(s)` is its ambient
/// pseudo-inverse square root; the result is re-projected onto `A(s)` to
/// shed roundoff before taking the subalgebra's maximal eigenvalue.
fn log_support_gauge(x: &Element, y: &Element, support: &Idempotent) -> Result<f64> {
    let scaled = y.pseudo_inv_sqrt()?.quadratic_rep(x)?;
    let inside = peirce_project(support, &scaled)?;
    let gauge = peirce_lambda_max(support, &inside)?;
    if gauge <= 0.0 {
        return Err(ConeError::InvalidPair(format!(
            "support gauge must be positive (got {gauge:.3e}); \
             are the two pairs really in the same part?"
        )));
    }
    Ok(gauge.ln())
}

/// A point of the horofunction compactification: either the functional
/// `h_y = d_T(·, y) − d_T(u, y)` of an interior point or a boundary
/// horofunction.  Both are 1-Lipschitz and vanish at the unit.
#[derive(Debug, Clone)]
pub enum MetricFunctional {
    Interior(ConePoint),
    Horofunction(ThompsonHorofunction),
}

impl MetricFunctional {
    pub fn eval(&self, x: &ConePoint) -> Result<f64> {
        match self {
            MetricFunctional::Interior(y) => {
                let u = ConePoint::interior(Element::unit(y.element().algebra())?)?;
                Ok(thompson_distance(x, y)? - thompson_distance(&u, y)?)
            }
            MetricFunctional::Horofunction(h) => h.eval(x),
        }
    }
}
