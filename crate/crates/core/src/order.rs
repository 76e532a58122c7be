//! Order structure of the symmetric cone: gauges, norms, and the Thompson
//! and Hilbert distances.
//!
//! The cone `A₊` of squares orders the algebra (`x ≤ y` iff `y − x ∈ A₊`),
//! and the unit `u` is an order unit for it.  For `y` interior the gauges
//!
//! ```text
//! M(x/y) = inf { β : x ≤ βy } = Λ(U_{y^{-1/2}} x)
//! m(x/y) = sup { β : βy ≤ x } = min σ(U_{y^{-1/2}} x)
//! ```
//!
//! produce the two metrics of interest on the interior:
//!
//! * Thompson:  `d_T(x, y) = ‖log U_{y^{-1/2}} x‖_u = max(log M(x/y), log M(y/x))`,
//! * Hilbert:   `d_H(x, y) = |log U_{x^{-1/2}} y|_u = log M(x/y) + log M(y/x)`,
//!
//! where `‖v‖_u = max |σ(v)|` is the order-unit norm and
//! `|v|_u = diam σ(v)` the variation seminorm.  The Hilbert distance is
//! invariant under positive rescaling and is treated as a metric on rays,
//! here represented by determinant-one elements.

use serde::{Deserialize, Serialize};

use crate::algebra::Element;
use crate::config;
use crate::error::{ConeError, Result};
use crate::spectral::peirce_project;

/// Where an element sits relative to the closed cone `A₊`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Classification {
    /// All eigenvalues strictly positive (relative to scale).
    Interior,
    /// In the closed cone with at least one vanishing eigenvalue.
    Boundary,
    /// At least one clearly negative eigenvalue.
    Outside,
}

/// An element together with its cone classification.
#[derive(Debug, Clone, PartialEq)]
pub struct ConePoint {
    element: Element,
    classification: Classification,
    min_eigenvalue: f64,
}

impl ConePoint {
    /// Classifies an arbitrary element against the cone.
    pub fn classify(element: Element) -> Result<Self> {
        let dec = element.spectral_decompose()?;
        let threshold = config::interior_threshold(dec.lambda_max());
        let min = dec.lambda_min();
        let classification = if min > threshold {
            Classification::Interior
        } else if min < -threshold {
            Classification::Outside
        } else {
            Classification::Boundary
        };
        Ok(ConePoint {
            element,
            classification,
            min_eigenvalue: min,
        })
    }

    /// Builds a point of the open cone, rejecting anything else.
    pub fn interior(element: Element) -> Result<Self> {
        let point = Self::classify(element)?;
        if point.is_interior() {
            Ok(point)
        } else {
            Err(ConeError::NotInterior {
                min_eigenvalue: point.min_eigenvalue,
            })
        }
    }

    /// Builds a point of the closed cone (interior or boundary).
    pub fn in_cone(element: Element) -> Result<Self> {
        let point = Self::classify(element)?;
        if point.classification == Classification::Outside {
            Err(ConeError::NotInCone {
                min_eigenvalue: point.min_eigenvalue,
            })
        } else {
            Ok(point)
        }
    }

    pub fn element(&self) -> &Element {
        &self.element
    }

    pub fn into_element(self) -> Element {
        self.element
    }

    pub fn classification(&self) -> Classification {
        self.classification
    }

    pub fn is_interior(&self) -> bool {
        self.classification == Classification::Interior
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.min_eigenvalue
    }

    fn require_interior(&self) -> Result<()> {
        if self.is_interior() {
            Ok(())
        } else {
            Err(ConeError::NotInterior {
                min_eigenvalue: self.min_eigenvalue,
            })
        }
    }
}

/// A determinant-one representative of a ray of the open cone.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjectivePoint {
    point: ConePoint,
}

impl ProjectivePoint {
    /// Accepts an interior point whose determinant is already 1 (within
    /// tolerance); use [`project_det_one`] to normalise first.
    pub fn new(point: ConePoint) -> Result<Self> {
        point.require_interior()?;
        let det = point.element().determinant()?;
        if (det - 1.0).abs() > config::tolerance() {
            return Err(ConeError::NotUnitDeterminant { det });
        }
        Ok(ProjectivePoint { point })
    }

    pub fn point(&self) -> &ConePoint {
        &self.point
    }

    pub fn element(&self) -> &Element {
        self.point.element()
    }
}

/// A tangent vector at the base point: a traceless element.
#[derive(Debug, Clone, PartialEq)]
pub struct TangentVector {
    element: Element,
}

impl TangentVector {
    /// Validates tracelessness (relative to the element's magnitude).
    pub fn new(element: Element) -> Result<Self> {
        let trace = element.trace();
        if trace.abs() > config::tolerance() * element.norm_inner().max(1.0) {
            return Err(ConeError::NotTraceless { trace });
        }
        Ok(TangentVector { element })
    }

    /// Projects out the trace: `v − (tr v / r)·u`.
    pub fn project(element: &Element) -> Result<Self> {
        let r = element.algebra().rank() as f64;
        let u = Element::unit(element.algebra())?;
        Ok(TangentVector {
            element: element - &u.scale(element.trace() / r),
        })
    }

    pub fn element(&self) -> &Element {
        &self.element
    }
}

impl Element {
    /// Order-unit norm `‖x‖_u = max |σ(x)|`.
    pub fn order_unit_norm(&self) -> Result<f64> {
        let dec = self.spectral_decompose()?;
        Ok(dec.lambda_max().abs().max(dec.lambda_min().abs()))
    }

    /// Variation seminorm `|x|_u = Λ(x) − min σ(x)`, the diameter of the
    /// spectrum.  Vanishes exactly on multiples of the unit.
    pub fn variation_seminorm(&self) -> Result<f64> {
        let dec = self.spectral_decompose()?;
        Ok(dec.lambda_max() - dec.lambda_min())
    }
}

/// Upper gauge `M(x/y) = Λ(U_{y^{-1/2}} x)`; `y` must be interior.
pub fn upper_gauge(x: &Element, y: &ConePoint) -> Result<f64> {
    y.require_interior()?;
    y.element()
        .inv_sqrt()?
        .quadratic_rep(x)?
        .lambda_max()
}

/// Lower gauge `m(x/y) = min σ(U_{y^{-1/2}} x)`; `y` must be interior.
pub fn lower_gauge(x: &Element, y: &ConePoint) -> Result<f64> {
    y.require_interior()?;
    y.element()
        .inv_sqrt()?
        .quadratic_rep(x)?
        .lambda_min()
}

/// Thompson distance `d_T(x, y) = ‖log U_{y^{-1/2}} x‖_u` between interior
/// points.
pub fn thompson_distance(x: &ConePoint, y: &ConePoint) -> Result<f64> {
    x.require_interior()?;
    y.require_interior()?;
    y.element()
        .inv_sqrt()?
        .quadratic_rep(x.element())?
        .log()?
        .order_unit_norm()
}

/// Hilbert (projective) distance `d_H(x, y) = |log U_{x^{-1/2}} y|_u`
/// between interior points; invariant under rescaling of either argument.
pub fn hilbert_distance(x: &ConePoint, y: &ConePoint) -> Result<f64> {
    x.require_interior()?;
    y.require_interior()?;
    x.element()
        .inv_sqrt()?
        .quadratic_rep(y.element())?
        .log()?
        .variation_seminorm()
}

/// The symmetry `S_x(y) = U_x y^{-1}`, a `d_T`- and `d_H`-isometry fixing
/// `x` among the interior points.
pub fn symmetry(x: &ConePoint, y: &ConePoint) -> Result<ConePoint> {
    x.require_interior()?;
    y.require_interior()?;
    let image = x.element().quadratic_rep(&y.element().inverse()?)?;
    ConePoint::interior(image)
}

/// Rescales an interior point onto the determinant-one leaf:
/// `x ↦ x / (det x)^{1/r}`.
pub fn project_det_one(x: &ConePoint) -> Result<ProjectivePoint> {
    x.require_interior()?;
    let det = x.element().determinant()?;
    let r = x.element().algebra().rank() as f64;
    let scaled = x.element().scale(det.powf(-1.0 / r));
    // Renormalised determinant is 1 up to roundoff; route through `new`
    // so the invariant is still checked.
    ProjectivePoint::new(ConePoint::interior(scaled)?)
}

/// Order domination within the closed cone: `x ⊴ y` iff `x ≤ βy` for some
/// `β > 0`, equivalently `U_s x = x` for `s` the support idempotent of `y`.
pub fn dominates(y: &ConePoint, x: &ConePoint) -> Result<bool> {
    for p in [x, y] {
        if p.classification() == Classification::Outside {
            return Err(ConeError::NotInCone {
                min_eigenvalue: p.min_eigenvalue(),
            });
        }
    }
    let support = y.element().support_idempotent()?;
    let projected = peirce_project(&support, x.element())?;
    let residual = (&projected - x.element()).norm_inner();
    Ok(residual <= config::tolerance() * x.element().norm_inner().max(1.0))
}

/// Whether `x` and `y` generate the same part of the closed cone
/// (mutual domination), i.e. have equal support idempotents.
pub fn same_part_cone(x: &ConePoint, y: &ConePoint) -> Result<bool> {
    for p in [x, y] {
        if p.classification() == Classification::Outside {
            return Err(ConeError::NotInCone {
                min_eigenvalue: p.min_eigenvalue(),
            });
        }
    }
    let sx = x.element().support_idempotent()?;
    let sy = y.element().support_idempotent()?;
    let diff = (sx.element() - sy.element()).norm_inner();
    Ok(sx.trace_int() == sy.trace_int() && diff <= config::tolerance())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraDescriptor;

    fn sym(n: usize) -> AlgebraDescriptor {
        AlgebraDescriptor::RealSymmetric { n }
    }

    fn spin(dim: usize) -> AlgebraDescriptor {
        AlgebraDescriptor::SpinFactor { dim }
    }

    fn el(a: AlgebraDescriptor, c: &[f64]) -> Element {
        Element::new(a, c.to_vec()).unwrap()
    }

    fn diag2(a: f64, b: f64) -> ConePoint {
        ConePoint::interior(el(sym(2), &[a, 0.0, 0.0, b])).unwrap()
    }

    #[test]
    fn classification_thresholds() {
        let interior = ConePoint::classify(el(sym(2), &[2.0, 0.0, 0.0, 1.0])).unwrap();
        assert_eq!(interior.classification(), Classification::Interior);
        let boundary = ConePoint::classify(el(sym(2), &[1.0, 0.0, 0.0, 0.0])).unwrap();
        assert_eq!(boundary.classification(), Classification::Boundary);
        let outside = ConePoint::classify(el(sym(2), &[1.0, 0.0, 0.0, -0.1])).unwrap();
        assert_eq!(outside.classification(), Classification::Outside);
        assert!(ConePoint::interior(el(sym(2), &[1.0, 0.0, 0.0, 0.0])).is_err());
        assert!(ConePoint::in_cone(el(sym(2), &[1.0, 0.0, 0.0, 0.0])).is_ok());
    }

    #[test]
    fn gauges_on_diagonal_pairs() {
        let x = el(sym(2), &[2.0, 0.0, 0.0, 3.0]);
        let y = diag2(1.0, 6.0);
        // x ≤ βy needs β ≥ max(2/1, 3/6).
        assert!((upper_gauge(&x, &y).unwrap() - 2.0).abs() < 1e-12);
        assert!((lower_gauge(&x, &y).unwrap() - 0.5).abs() < 1e-12);
        // Gauge against a boundary point is rejected.
        let boundary = ConePoint::in_cone(el(sym(2), &[1.0, 0.0, 0.0, 0.0])).unwrap();
        assert!(upper_gauge(&x, &boundary).is_err());
    }

    #[test]
    fn norms_and_seminorms() {
        let x = el(sym(2), &[-4.0, 0.0, 0.0, 3.0]);
        assert!((x.order_unit_norm().unwrap() - 4.0).abs() < 1e-14);
        assert!((x.variation_seminorm().unwrap() - 7.0).abs() < 1e-14);
        let u = Element::unit(sym(3)).unwrap();
        assert_eq!(u.order_unit_norm().unwrap(), 1.0);
        assert_eq!(u.scale(9.0).variation_seminorm().unwrap(), 0.0);
        let s = el(spin(3), &[0.0, 2.0, 0.0]);
        assert!((s.order_unit_norm().unwrap() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn distances_on_diagonal_pairs() {
        let x = diag2(std::f64::consts::E.powi(2), 1.0);
        let u = diag2(1.0, 1.0);
        assert!((thompson_distance(&x, &u).unwrap() - 2.0).abs() < 1e-12);
        assert!((hilbert_distance(&x, &u).unwrap() - 2.0).abs() < 1e-12);

        let a = diag2(2.0, 3.0);
        let b = diag2(1.0, 6.0);
        assert!((thompson_distance(&a, &b).unwrap() - 2.0_f64.ln()).abs() < 1e-12);
        assert!((hilbert_distance(&a, &b).unwrap() - 2.0 * 2.0_f64.ln()).abs() < 1e-12);

        // d_H ignores scale.
        let b5 = ConePoint::interior(b.element().scale(5.0)).unwrap();
        assert!(
            (hilbert_distance(&a, &b5).unwrap() - hilbert_distance(&a, &b).unwrap()).abs()
                < 1e-12
        );
    }

    #[test]
    fn symmetry_at_the_unit_is_inversion() {
        let u = diag2(1.0, 1.0);
        let y = diag2(2.0, 5.0);
        let s = symmetry(&u, &y).unwrap();
        assert!((s.element().coords()[0] - 0.5).abs() < 1e-12);
        assert!((s.element().coords()[3] - 0.2).abs() < 1e-12);
        // S_x is an involution: S_x(S_x(y)) = y.
        let x = diag2(3.0, 1.0);
        let twice = symmetry(&x, &symmetry(&x, &y).unwrap()).unwrap();
        assert!((twice.element() - y.element()).norm_inner() < 1e-12);
    }

    #[test]
    fn determinant_one_projection() {
        let x = diag2(4.0, 1.0);
        let p = project_det_one(&x).unwrap();
        assert!((p.element().determinant().unwrap() - 1.0).abs() < 1e-12);
        assert!((p.element().coords()[0] - 2.0).abs() < 1e-12);
        assert!(ProjectivePoint::new(diag2(4.0, 1.0)).is_err());
    }

    #[test]
    fn domination_and_parts() {
        let face = ConePoint::in_cone(el(sym(2), &[1.0, 0.0, 0.0, 0.0])).unwrap();
        let inside = ConePoint::in_cone(el(sym(2), &[3.0, 0.0, 0.0, 0.0])).unwrap();
        let full = diag2(1.0, 1.0);
        assert!(dominates(&face, &inside).unwrap());
        assert!(dominates(&full, &face).unwrap());
        assert!(!dominates(&face, &full.clone()).unwrap());
        assert!(same_part_cone(&face, &inside).unwrap());
        assert!(!same_part_cone(&face, &full).unwrap());

        // The zero element is dominated by everything and dominates only 0.
        let zero = ConePoint::in_cone(Element::zero(sym(2)).unwrap()).unwrap();
        assert!(dominates(&face, &zero).unwrap());
        assert!(!dominates(&zero, &face).unwrap());
        assert!(dominates(&zero, &zero).unwrap());
    }
}
