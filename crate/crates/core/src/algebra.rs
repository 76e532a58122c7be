//! Euclidean Jordan algebras at desk scale.
//!
//! Three families are supported, each with a fixed coordinate layout:
//!
//! * **real symmetric** `n×n` matrices with `x∘y = (xy + yx)/2`, stored as a
//!   full row-major `n²` array and symmetrised on ingest;
//! * **complex Hermitian** `n×n` matrices with the same product, stored
//!   row-major with interleaved `(re, im)` pairs (`2n²` numbers) and made
//!   Hermitian on ingest;
//! * **spin factors** `ℝ × ℝ^{d-1}` with
//!   `(s,v)∘(t,w) = (st + ⟨v,w⟩, sw + tv)`, stored as `[t, v₁, …, v_{d-1}]`.
//!
//! In every case the squares form a symmetric cone with the identity `u` in
//! its interior, and the algebra carries the trace inner product
//! `(x|y) = tr(x∘y)`.  The quadratic representation
//! `U_x y = 2x∘(x∘y) − x²∘y` is computed from the Jordan product itself so
//! that the matrix identity `U_x y = xyx` can serve as an independent check.
//!
//! Ranks above 64 are out of scope for the dense eigensolvers used here and
//! are rejected when a descriptor is constructed or parsed.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{ConeError, Result};

/// Largest admissible rank (matrix size) or spin dimension.
pub const MAX_SIZE: usize = 64;

/// Identifies one concrete Euclidean Jordan algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlgebraDescriptor {
    /// Real symmetric `n×n` matrices.
    RealSymmetric { n: usize },
    /// Complex Hermitian `n×n` matrices.
    ComplexHermitian { n: usize },
    /// Spin factor `ℝ × ℝ^{dim-1}`.
    SpinFactor { dim: usize },
}

impl AlgebraDescriptor {
    /// Validated constructor for the real symmetric algebra.
    pub fn real_symmetric(n: usize) -> Result<Self> {
        Self::RealSymmetric { n }.validated()
    }

    /// Validated constructor for the complex Hermitian algebra.
    pub fn complex_hermitian(n: usize) -> Result<Self> {
        Self::ComplexHermitian { n }.validated()
    }

    /// Validated constructor for the spin factor of total dimension `dim`.
    pub fn spin_factor(dim: usize) -> Result<Self> {
        Self::SpinFactor { dim }.validated()
    }

    fn validated(self) -> Result<Self> {
        let (label, size, min) = match self {
            Self::RealSymmetric { n } => ("sym", n, 1),
            Self::ComplexHermitian { n } => ("herm", n, 1),
            // A spin factor needs at least one vector coordinate.
            Self::SpinFactor { dim } => ("spin", dim, 2),
        };
        if size < min || size > MAX_SIZE {
            return Err(ConeError::InvalidElement(format!(
                "{label} size {size} out of range {min}..={MAX_SIZE}"
            )));
        }
        Ok(self)
    }

    /// Rank of the algebra: the number of eigenvalues with multiplicity.
    pub fn rank(&self) -> usize {
        match *self {
            Self::RealSymmetric { n } | Self::ComplexHermitian { n } => n,
            Self::SpinFactor { .. } => 2,
        }
    }

    /// Real vector-space dimension of the algebra.
    pub fn dim(&self) -> usize {
        match *self {
            Self::RealSymmetric { n } => n * (n + 1) / 2,
            Self::ComplexHermitian { n } => n * n,
            Self::SpinFactor { dim } => dim,
        }
    }

    /// Number of stored coordinates (the storage is redundant for the
    /// matrix kinds, which keep the full square array).
    pub fn coord_len(&self) -> usize {
        match *self {
            Self::RealSymmetric { n } => n * n,
            Self::ComplexHermitian { n } => 2 * n * n,
            Self::SpinFactor { dim } => dim,
        }
    }
}

impl std::fmt::Display for AlgebraDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Self::RealSymmetric { n } => write!(f, "sym({n})"),
            Self::ComplexHermitian { n } => write!(f, "herm({n})"),
            Self::SpinFactor { dim } => write!(f, "spin({dim})"),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct DescriptorRepr {
    kind: String,
    n: usize,
}

impl Serialize for AlgebraDescriptor {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let (kind, n) = match *self {
            Self::RealSymmetric { n } => ("sym", n),
            Self::ComplexHermitian { n } => ("herm", n),
            Self::SpinFactor { dim } => ("spin", dim),
        };
        DescriptorRepr {
            kind: kind.to_owned(),
            n,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AlgebraDescriptor {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = DescriptorRepr::deserialize(deserializer)?;
        let desc = match repr.kind.as_str() {
            "sym" => Self::RealSymmetric { n: repr.n },
            "herm" => Self::ComplexHermitian { n: repr.n },
            "spin" => Self::SpinFactor { dim: repr.n },
            other => {
                return Err(D::Error::custom(format!(
                    "unknown algebra kind {other:?} (expected \"sym\", \"herm\", or \"spin\")"
                )))
            }
        };
        desc.validated().map_err(D::Error::custom)
    }
}

/// An element of one of the supported Jordan algebras.
///
/// The coordinate array is always kept in canonical (self-adjoint) form, so
/// two elements representing the same point compare equal coordinate-wise.
#[derive(Debug, Clone, PartialEq)]
pub struct Element {
    algebra: AlgebraDescriptor,
    coords: Vec<f64>,
}

impl Element {
    /// Builds an element from raw coordinates, checking the length and
    /// symmetrising matrix layouts (`(a + aᵀ)/2`, resp. the Hermitian part).
    pub fn new(algebra: AlgebraDescriptor, coords: Vec<f64>) -> Result<Self> {
        let algebra = algebra.validated()?;
        if coords.len() != algebra.coord_len() {
            return Err(ConeError::InvalidElement(format!(
                "{algebra} expects {} coordinates, got {}",
                algebra.coord_len(),
                coords.len()
            )));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(ConeError::InvalidElement(
                "non-finite coordinate".to_owned(),
            ));
        }
        let mut element = Element { algebra, coords };
        element.symmetrize();
        Ok(element)
    }

    /// The zero element.
    pub fn zero(algebra: AlgebraDescriptor) -> Result<Self> {
        let algebra = algebra.validated()?;
        Ok(Element {
            algebra,
            coords: vec![0.0; algebra.coord_len()],
        })
    }

    /// The unit `u` (identity matrix, resp. `(1, 0)` for spin factors).
    pub fn unit(algebra: AlgebraDescriptor) -> Result<Self> {
        let algebra = algebra.validated()?;
        let mut coords = vec![0.0; algebra.coord_len()];
        match algebra {
            AlgebraDescriptor::RealSymmetric { n } => {
                for i in 0..n {
                    coords[i * n + i] = 1.0;
                }
            }
            AlgebraDescriptor::ComplexHermitian { n } => {
                for i in 0..n {
                    coords[2 * (i * n + i)] = 1.0;
                }
            }
            AlgebraDescriptor::SpinFactor { .. } => coords[0] = 1.0,
        }
        Ok(Element { algebra, coords })
    }

    pub fn algebra(&self) -> AlgebraDescriptor {
        self.algebra
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Consumes the element, returning its coordinate array.
    pub fn into_coords(self) -> Vec<f64> {
        self.coords
    }

    fn symmetrize(&mut self) {
        match self.algebra {
            AlgebraDescriptor::RealSymmetric { n } => {
                for i in 0..n {
                    for j in (i + 1)..n {
                        let m = 0.5 * (self.coords[i * n + j] + self.coords[j * n + i]);
                        self.coords[i * n + j] = m;
                        self.coords[j * n + i] = m;
                    }
                }
            }
            AlgebraDescriptor::ComplexHermitian { n } => {
                for i in 0..n {
                    self.coords[2 * (i * n + i) + 1] = 0.0;
                    for j in (i + 1)..n {
                        let (ij, ji) = (2 * (i * n + j), 2 * (j * n + i));
                        let re = 0.5 * (self.coords[ij] + self.coords[ji]);
                        let im = 0.5 * (self.coords[ij + 1] - self.coords[ji + 1]);
                        self.coords[ij] = re;
                        self.coords[ij + 1] = im;
                        self.coords[ji] = re;
                        self.coords[ji + 1] = -im;
                    }
                }
            }
            AlgebraDescriptor::SpinFactor { .. } => {}
        }
    }

    fn check_same_algebra(&self, other: &Element) -> Result<()> {
        if self.algebra == other.algebra {
            Ok(())
        } else {
            Err(ConeError::AlgebraMismatch {
                expected: self.algebra,
                found: other.algebra,
            })
        }
    }

    /// Scalar multiple `c·x`.
    pub fn scale(&self, c: f64) -> Element {
        Element {
            algebra: self.algebra,
            coords: self.coords.iter().map(|x| c * x).collect(),
        }
    }

    /// Jordan product `x∘y`.
    ///
    /// For the matrix kinds this is `(xy + yx)/2`; for spin factors it is
    /// the closed form `(st + ⟨v,w⟩, sw + tv)`.
    pub fn jordan_product(&self, other: &Element) -> Result<Element> {
        self.check_same_algebra(other)?;
        match self.algebra {
            AlgebraDescriptor::RealSymmetric { .. } => {
                let (x, y) = (self.sym_matrix(), other.sym_matrix());
                let xy = &x * &y;
                Ok(Element::from_sym_matrix(
                    self.algebra,
                    &((&xy + xy.transpose()) * 0.5),
                ))
            }
            AlgebraDescriptor::ComplexHermitian { .. } => {
                let (x, y) = (self.herm_matrix(), other.herm_matrix());
                let xy = &x * &y;
                Ok(Element::from_herm_matrix(
                    self.algebra,
                    &((&xy + xy.adjoint()) * Complex64::new(0.5, 0.0)),
                ))
            }
            AlgebraDescriptor::SpinFactor { dim } => {
                let (s, v) = self.spin_split();
                let (t, w) = other.spin_split();
                let mut coords = Vec::with_capacity(dim);
                coords.push(s * t + dot(v, w));
                for k in 0..dim - 1 {
                    coords.push(s * w[k] + t * v[k]);
                }
                Ok(Element {
                    algebra: self.algebra,
                    coords,
                })
            }
        }
    }

    /// Quadratic representation `U_x y = 2x∘(x∘y) − x²∘y`.
    ///
    /// Deliberately computed through the Jordan product for every kind, so
    /// that the matrix identity `U_x y = xyx` remains an independent test.
    pub fn quadratic_rep(&self, y: &Element) -> Result<Element> {
        self.check_same_algebra(y)?;
        let xy = self.jordan_product(y)?;
        let x_xy = self.jordan_product(&xy)?;
        let x2 = self.jordan_product(self)?;
        let x2y = x2.jordan_product(y)?;
        Ok(&x_xy.scale(2.0) - &x2y)
    }

    /// Trace inner product `(x|y) = tr(x∘y)`.
    pub fn inner_product(&self, other: &Element) -> Result<f64> {
        self.check_same_algebra(other)?;
        Ok(match self.algebra {
            AlgebraDescriptor::RealSymmetric { .. } | AlgebraDescriptor::ComplexHermitian { .. } => {
                // tr(x∘y) = Σ xᵢⱼ ȳᵢⱼ for self-adjoint matrices; the
                // interleaved layout makes this the plain dot product.
                dot(&self.coords, &other.coords)
            }
            AlgebraDescriptor::SpinFactor { .. } => 2.0 * dot(&self.coords, &other.coords),
        })
    }

    /// Jordan trace: sum of eigenvalues.
    pub fn trace(&self) -> f64 {
        match self.algebra {
            AlgebraDescriptor::RealSymmetric { n } => {
                (0..n).map(|i| self.coords[i * n + i]).sum()
            }
            AlgebraDescriptor::ComplexHermitian { n } => {
                (0..n).map(|i| self.coords[2 * (i * n + i)]).sum()
            }
            AlgebraDescriptor::SpinFactor { .. } => 2.0 * self.coords[0],
        }
    }

    /// Norm induced by the trace inner product.
    pub fn norm_inner(&self) -> f64 {
        self.inner_product(self)
            .expect("same algebra by construction")
            .max(0.0)
            .sqrt()
    }

    /// Maximum absolute coordinate; a cheap layout-level magnitude used in
    /// relative residual checks.
    pub fn max_abs_coord(&self) -> f64 {
        self.coords.iter().fold(0.0_f64, |m, c| m.max(c.abs()))
    }

    pub(crate) fn spin_split(&self) -> (f64, &[f64]) {
        (self.coords[0], &self.coords[1..])
    }

    pub(crate) fn sym_matrix(&self) -> DMatrix<f64> {
        let AlgebraDescriptor::RealSymmetric { n } = self.algebra else {
            unreachable!("sym_matrix on non-symmetric layout");
        };
        DMatrix::from_row_slice(n, n, &self.coords)
    }

    pub(crate) fn from_sym_matrix(algebra: AlgebraDescriptor, m: &DMatrix<f64>) -> Element {
        let AlgebraDescriptor::RealSymmetric { n } = algebra else {
            unreachable!("from_sym_matrix on non-symmetric layout");
        };
        let mut coords = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                coords[i * n + j] = 0.5 * (m[(i, j)] + m[(j, i)]);
            }
        }
        Element { algebra, coords }
    }

    pub(crate) fn herm_matrix(&self) -> DMatrix<Complex64> {
        let AlgebraDescriptor::ComplexHermitian { n } = self.algebra else {
            unreachable!("herm_matrix on non-Hermitian layout");
        };
        DMatrix::from_fn(n, n, |i, j| {
            let k = 2 * (i * n + j);
            Complex64::new(self.coords[k], self.coords[k + 1])
        })
    }

    pub(crate) fn from_herm_matrix(algebra: AlgebraDescriptor, m: &DMatrix<Complex64>) -> Element {
        let AlgebraDescriptor::ComplexHermitian { n } = algebra else {
            unreachable!("from_herm_matrix on non-Hermitian layout");
        };
        let mut coords = vec![0.0; 2 * n * n];
        for i in 0..n {
            for j in 0..n {
                let z = 0.5 * (m[(i, j)] + m[(j, i)].conj());
                let k = 2 * (i * n + j);
                coords[k] = z.re;
                coords[k + 1] = if i == j { 0.0 } else { z.im };
            }
        }
        Element { algebra, coords }
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl std::ops::Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        assert_eq!(self.algebra, rhs.algebra, "algebra mismatch in +");
        Element {
            algebra: self.algebra,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl std::ops::Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        assert_eq!(self.algebra, rhs.algebra, "algebra mismatch in -");
        Element {
            algebra: self.algebra,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl std::ops::Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(-1.0)
    }
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    algebra: AlgebraDescriptor,
    data: Vec<f64>,
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ElementRepr {
            algebra: self.algebra,
            data: self.coords.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ElementRepr::deserialize(deserializer)?;
        Element::new(repr.algebra, repr.data).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> AlgebraDescriptor {
        AlgebraDescriptor::RealSymmetric { n }
    }

    fn herm(n: usize) -> AlgebraDescriptor {
        AlgebraDescriptor::ComplexHermitian { n }
    }

    fn spin(dim: usize) -> AlgebraDescriptor {
        AlgebraDescriptor::SpinFactor { dim }
    }

    #[test]
    fn descriptor_dimensions() {
        assert_eq!(sym(3).rank(), 3);
        assert_eq!(sym(3).dim(), 6);
        assert_eq!(sym(3).coord_len(), 9);
        assert_eq!(herm(3).rank(), 3);
        assert_eq!(herm(3).dim(), 9);
        assert_eq!(herm(3).coord_len(), 18);
        assert_eq!(spin(6).rank(), 2);
        assert_eq!(spin(6).dim(), 6);
        assert_eq!(spin(6).coord_len(), 6);
    }

    #[test]
    fn descriptor_rejects_out_of_range_sizes() {
        assert!(AlgebraDescriptor::real_symmetric(0).is_err());
        assert!(AlgebraDescriptor::real_symmetric(65).is_err());
        assert!(AlgebraDescriptor::spin_factor(1).is_err());
        assert!(AlgebraDescriptor::spin_factor(2).is_ok());
    }

    #[test]
    fn unit_is_the_identity() {
        let u = Element::unit(sym(2)).unwrap();
        assert_eq!(u.coords(), &[1.0, 0.0, 0.0, 1.0]);
        let u = Element::unit(herm(3)).unwrap();
        assert_eq!(u.trace(), 3.0);
        let u = Element::unit(spin(4)).unwrap();
        assert_eq!(u.coords(), &[1.0, 0.0, 0.0, 0.0]);
        assert_eq!(u.trace(), 2.0);
    }

    #[test]
    fn ingest_symmetrises() {
        let x = Element::new(sym(2), vec![1.0, 3.0, 1.0, 2.0]).unwrap();
        assert_eq!(x.coords(), &[1.0, 2.0, 2.0, 2.0]);

        // Hermitian part: off-diagonal (re, im) pairs must be conjugate, the
        // diagonal must be real.
        let h = Element::new(herm(2), vec![1.0, 0.5, 2.0, 1.0, 4.0, 3.0, 5.0, -0.5]).unwrap();
        assert_eq!(h.coords(), &[1.0, 0.0, 3.0, -1.0, 3.0, 1.0, 5.0, 0.0]);
    }

    #[test]
    fn jordan_product_offdiagonal_example() {
        let x = Element::new(sym(2), vec![0.0, 1.0, 1.0, 0.0]).unwrap();
        let y = Element::new(sym(2), vec![1.0, 0.0, 0.0, 0.0]).unwrap();
        let p = x.jordan_product(&y).unwrap();
        assert_eq!(p.coords(), &[0.0, 0.5, 0.5, 0.0]);
    }

    #[test]
    fn jordan_product_spin_example() {
        let a = Element::new(spin(3), vec![2.0, 1.0, 0.0]).unwrap();
        let b = Element::new(spin(3), vec![1.0, 0.0, 1.0]).unwrap();
        let p = a.jordan_product(&b).unwrap();
        assert_eq!(p.coords(), &[2.0, 1.0, 2.0]);
    }

    #[test]
    fn jordan_product_rejects_mismatch() {
        let x = Element::unit(sym(2)).unwrap();
        let y = Element::unit(sym(3)).unwrap();
        assert!(matches!(
            x.jordan_product(&y),
            Err(ConeError::AlgebraMismatch { .. })
        ));
    }

    #[test]
    fn quadratic_rep_fixes_unit() {
        for alg in [sym(3), herm(2), spin(5)] {
            let u = Element::unit(alg).unwrap();
            let x = Element::new(
                alg,
                (0..alg.coord_len()).map(|k| 0.1 * k as f64).collect(),
            )
            .unwrap();
            let uy = u.quadratic_rep(&x).unwrap();
            for (a, b) in uy.coords().iter().zip(x.coords()) {
                assert!((a - b).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn inner_product_examples() {
        let u = Element::unit(sym(3)).unwrap();
        assert_eq!(u.inner_product(&u).unwrap(), 3.0);

        let x = Element::new(sym(2), vec![1.0, 2.0, 2.0, 3.0]).unwrap();
        let y = Element::new(sym(2), vec![1.0, 1.0, 1.0, 2.0]).unwrap();
        // tr(x∘y) = 1 + 2 + 2 + 6
        assert_eq!(x.inner_product(&y).unwrap(), 11.0);

        let p = Element::new(spin(3), vec![0.5, 0.5, 0.0]).unwrap();
        let q = Element::new(spin(3), vec![0.5, -0.5, 0.0]).unwrap();
        assert_eq!(p.inner_product(&q).unwrap(), 0.0);
    }

    #[test]
    fn trace_examples() {
        let x = Element::new(sym(2), vec![1.0, 9.0, 9.0, 2.0]).unwrap();
        assert_eq!(x.trace(), 3.0);
        let s = Element::new(spin(3), vec![2.0, 1.0, 0.0]).unwrap();
        assert_eq!(s.trace(), 4.0);
    }

    #[test]
    fn element_json_round_trip() {
        let x = Element::new(herm(2), vec![1.0, 0.0, 0.0, -2.0, 0.0, 2.0, 3.0, 0.0]).unwrap();
        let text = serde_json::to_string(&x).unwrap();
        assert!(text.contains("\"kind\":\"herm\""));
        let back: Element = serde_json::from_str(&text).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn element_json_rejects_bad_payloads() {
        let bad_len: std::result::Result<Element, _> =
            serde_json::from_str(r#"{"algebra":{"kind":"sym","n":2},"data":[1.0,2.0]}"#);
        assert!(bad_len.is_err());
        let bad_kind: std::result::Result<Element, _> =
            serde_json::from_str(r#"{"algebra":{"kind":"oct","n":3},"data":[]}"#);
        assert!(bad_kind.is_err());
    }
}
