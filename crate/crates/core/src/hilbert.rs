//! Horofunction boundary of the projective cone under the Hilbert distance,
//! together with the variation-seminorm horofunctions it extends.
//!
//! With Hilbert normalisation (`I`, `J` both nonempty, `min_I α = 0 =
//! min_J α`) a parameter set describes
//!
//! * the horofunction of `(T_u, |·|_u)`, the traceless subspace under the
//!   variation seminorm:
//!
//!   ```text
//!   g(v) = Λ_{A(p_I)}(−U_{p_I} v − a_I) + Λ_{A(p_J)}(U_{p_J} v − a_J),
//!   ```
//!
//!   reached along the traceless paths `ξᵗ = tω + ζ − (tr(tω + ζ)/r)·u`;
//!
//! * the horofunction of the projective cone under `d_H`, determined by the
//!   pair `(y, z)` with `‖y‖_u = ‖z‖_u = 1`:
//!
//!   ```text
//!   h(x̄) = log M(y/x) + log M(z/x⁻¹),
//!   ```
//!
//!   evaluated on determinant-one representatives.
//!
//! The detour distance in the variation geometry is finite exactly on a
//! common part (equal support idempotents componentwise), where it compares
//! the weight elements `a = Σ α p`:
//!
//! ```text
//! δ(g, g′) = Λ_{A(p_I)}(a_I − b_I) + Λ_{A(p_I)}(b_I − a_I)
//!          + Λ_{A(p_J)}(a_J − b_J) + Λ_{A(p_J)}(b_J − a_J).
//! ```

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::Element;
use crate::boundary::{BoundaryMode, BoundaryParams, HoroPair};
use crate::config;
use crate::error::{ConeError, Result};
use crate::order::{ProjectivePoint, TangentVector};
use crate::spectral::{peirce_lambda_max, peirce_project, Idempotent};

/// A horofunction of the variation seminorm on the traceless subspace.
#[derive(Debug, Clone, PartialEq)]
pub struct VariationHorofunction {
    params: BoundaryParams,
}

impl VariationHorofunction {
    /// Wraps a Hilbert-normalised parameter set.
    pub fn new(params: BoundaryParams) -> Result<Self> {
        if params.mode() != BoundaryMode::Hilbert {
            return Err(ConeError::InvalidParams(
                "variation horofunctions require hilbert-mode parameters".to_owned(),
            ));
        }
        Ok(VariationHorofunction { params })
    }

    pub fn params(&self) -> &BoundaryParams {
        &self.params
    }

    /// Evaluates `g(v)` at a traceless vector.
    pub fn eval(&self, v: &TangentVector) -> Result<f64> {
        eval_variation_horofunction(self, v)
    }

    /// The traceless path `ξᵗ = tω + ζ − (tr(tω + ζ)/r)·u` whose
    /// horofunction limit is `g`.
    pub fn path_point(&self, t: f64) -> Result<TangentVector> {
        let line = &self.params.omega().scale(t) + &self.params.zeta();
        TangentVector::project(&line)
    }
}

/// Evaluates the variation-seminorm horofunction (see module docs).
pub fn eval_variation_horofunction(g: &VariationHorofunction, v: &TangentVector) -> Result<f64> {
    let params = g.params();
    if params.algebra() != v.element().algebra() {
        return Err(ConeError::AlgebraMismatch {
            expected: params.algebra(),
            found: v.element().algebra(),
        });
    }
    let pi = params.support_i();
    let arg_i = &(-&peirce_project(&pi, v.element())?) - &params.weighted_i();
    let pj = params.support_j();
    let arg_j = &peirce_project(&pj, v.element())? - &params.weighted_j();
    Ok(peirce_lambda_max(&pi, &arg_i)? + peirce_lambda_max(&pj, &arg_j)?)
}

/// Detour distance between two variation horofunctions: `+∞` across parts,
/// otherwise the componentwise two-sided Peirce gap of the weight elements.
pub fn detour_distance_variation(
    a: &VariationHorofunction,
    b: &VariationHorofunction,
) -> Result<f64> {
    let (pa, pb) = (a.params(), b.params());
    if pa.algebra() != pb.algebra() {
        return Err(ConeError::AlgebraMismatch {
            expected: pa.algebra(),
            found: pb.algebra(),
        });
    }
    if pa == pb {
        return Ok(0.0);
    }
    if !supports_match(&pa.support_i(), &pb.support_i())
        || !supports_match(&pa.support_j(), &pb.support_j())
    {
        return Ok(f64::INFINITY);
    }
    let gap = |support: &Idempotent, wa: &Element, wb: &Element| -> Result<f64> {
        let diff = peirce_project(support, &(wa - wb))?;
        Ok(peirce_lambda_max(support, &diff)? + peirce_lambda_max(support, &(-&diff))?)
    };
    let part_i = gap(&pa.support_i(), &pa.weighted_i(), &pb.weighted_i())?;
    let part_j = gap(&pa.support_j(), &pa.weighted_j(), &pb.weighted_j())?;
    Ok(part_i + part_j)
}

fn supports_match(p: &Idempotent, q: &Idempotent) -> bool {
    p.trace_int() == q.trace_int()
        && (p.element() - q.element()).norm_inner() <= config::tolerance()
}

/// A horofunction of the projective cone `(PA₊°, d_H)`, identified by its
/// pair `(y, z)` of unit-norm orthogonal closed-cone elements.
#[derive(Debug, Clone, PartialEq)]
pub struct HilbertHorofunction {
    pair: HoroPair,
}

impl HilbertHorofunction {
    /// Wraps a Hilbert-normalised pair.
    pub fn new(pair: HoroPair) -> Result<Self> {
        if pair.mode() != BoundaryMode::Hilbert {
            return Err(ConeError::InvalidPair(
                "hilbert horofunctions require hilbert-mode pairs".to_owned(),
            ));
        }
        Ok(HilbertHorofunction { pair })
    }

    /// Builds the pair from raw `y`, `z` elements, validating everything.
    pub fn from_elements(y: Element, z: Element) -> Result<Self> {
        Self::new(HoroPair::new(y, z, BoundaryMode::Hilbert)?)
    }

    pub fn pair(&self) -> &HoroPair {
        &self.pair
    }

    /// Evaluates `h(x̄) = log M(y/x) + log M(z/x⁻¹)` on a determinant-one
    /// representative.
    pub fn eval(&self, x: &ProjectivePoint) -> Result<f64> {
        if self.pair.algebra() != x.element().algebra() {
            return Err(ConeError::AlgebraMismatch {
                expected: self.pair.algebra(),
                found: x.element().algebra(),
            });
        }
        let dec = x.element().spectral_decompose()?;
        let inv_sqrt = dec.apply("inv_sqrt", |l| 1.0 / l.sqrt())?;
        let sqrt = dec.apply("sqrt", f64::sqrt)?;
        let m_y = inv_sqrt
            .quadratic_rep(self.pair.y().element())?
            .lambda_max()?;
        let m_z = sqrt
            .quadratic_rep(self.pair.z().element())?
            .lambda_max()?;
        Ok(m_y.ln() + m_z.ln())
    }
}

/// Extends a variation horofunction to the Hilbert boundary point with the
/// same parameters.
pub fn exp_extension_hilbert(params: &BoundaryParams) -> Result<HilbertHorofunction> {
    if params.mode() != BoundaryMode::Hilbert {
        return Err(ConeError::InvalidParams(
            "the hilbert extension requires hilbert-mode parameters".to_owned(),
        ));
    }
    HilbertHorofunction::new(params.to_pair()?)
}

/// Whether two Hilbert horofunctions lie in the same part: the supports of
/// the `y` components and of the `z` components coincide.
pub fn same_part_hilbert(a: &HilbertHorofunction, b: &HilbertHorofunction) -> Result<bool> {
    if a.pair().algebra() != b.pair().algebra() {
        return Err(ConeError::AlgebraMismatch {
            expected: a.pair().algebra(),
            found: b.pair().algebra(),
        });
    }
    let sy_a = a.pair().y().element().support_idempotent()?;
    let sy_b = b.pair().y().element().support_idempotent()?;
    let sz_a = a.pair().z().element().support_idempotent()?;
    let sz_b = b.pair().z().element().support_idempotent()?;
    Ok(supports_match(&sy_a, &sy_b) && supports_match(&sz_a, &sz_b))
}

#[derive(Serialize, Deserialize)]
struct HilbertRepr {
    y: Element,
    z: Element,
}

impl Serialize for HilbertHorofunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        HilbertRepr {
            y: self.pair.y().element().clone(),
            z: self.pair.z().element().clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HilbertHorofunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = HilbertRepr::deserialize(deserializer)?;
        HilbertHorofunction::from_elements(repr.y, repr.z).map_err(D::Error::custom)
    }
}
