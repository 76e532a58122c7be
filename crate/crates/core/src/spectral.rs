//! Spectral decomposition, functional calculus, and Peirce projections.
//!
//! Every element of a Euclidean Jordan algebra of rank `r` splits as
//! `x = Σ λᵢ pᵢ` with real eigenvalues `λ₁ ≥ … ≥ λ_r` and a Jordan frame
//! `p₁, …, p_r` of mutually orthogonal primitive idempotents summing to the
//! unit.  The matrix kinds obtain the frame from a dense self-adjoint
//! eigensolver (rank-one projectors onto eigenvectors), refined by cyclic
//! Jacobi rotations: the library solver intermittently returns eigenvectors
//! of *well-separated* eigenvalues mixed at far above machine precision,
//! and the refinement restores the optimal `ε·‖x‖/gap` direction accuracy
//! that every projector-based formula downstream relies on.  Spin factors
//! use the closed form
//!
//! ```text
//! (t, v) = (t + ‖v‖)·½(1, v/‖v‖) + (t − ‖v‖)·½(1, −v/‖v‖).
//! ```
//!
//! The decomposition powers the functional calculus `x ↦ Σ f(λᵢ) pᵢ`
//! (`exp`, `log`, square roots, inverses) and the two Peirce helpers used
//! throughout the boundary modules: the projection `U_p` onto the
//! subalgebra `A(p) = { x : p∘x = x }` and the maximal eigenvalue *inside*
//! `A(p)`, computed by the ambient shift
//!
//! ```text
//! Λ_{A(p)}(z) = Λ(z − C·(u − p)),   C = 1 + ‖z‖_u,
//! ```
//!
//! which pushes the spurious complement spectrum strictly below every
//! eigenvalue of `z` in `A(p)`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::algebra::{AlgebraDescriptor, Element};
use crate::config;
use crate::error::{ConeError, Result};

/// Iteration cap handed to the dense eigensolver; generous for rank ≤ 64.
const EIGEN_MAX_ITER: usize = 100_000;

/// Hard cap on cyclic Jacobi sweeps.  Warm-started refinement converges in
/// 2–4 sweeps; even a cold start on rank 64 needs well under 20.
const JACOBI_MAX_SWEEPS: usize = 64;

/// Relative size below which the vector part of a spin element is treated
/// as zero and an arbitrary axis is used for the (then non-unique) frame.
const SPIN_DEGENERACY: f64 = 1e-12;

/// A full spectral decomposition `x = Σ λᵢ pᵢ`.
///
/// Eigenvalues are sorted in descending order; ties keep the eigensolver's
/// ordering, which is unspecified but reproducible for identical input.
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    algebra: AlgebraDescriptor,
    eigenvalues: Vec<f64>,
    frame: Vec<Element>,
}

impl SpectralDecomposition {
    /// Eigenvalues in descending order, with multiplicity (`rank` many).
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// The Jordan frame matching [`Self::eigenvalues`] index by index.
    pub fn frame(&self) -> &[Element] {
        &self.frame
    }

    pub fn algebra(&self) -> AlgebraDescriptor {
        self.algebra
    }

    pub fn lambda_max(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn lambda_min(&self) -> f64 {
        *self.eigenvalues.last().expect("rank ≥ 1")
    }

    /// `Σ λᵢ pᵢ` — reconstructs the decomposed element.
    pub fn reconstruct(&self) -> Element {
        self.map_eigenvalues(|l| l)
    }

    /// `Σ f(λᵢ) pᵢ` without any domain checking.
    fn map_eigenvalues(&self, f: impl Fn(f64) -> f64) -> Element {
        let mut acc = Element::zero(self.algebra).expect("validated descriptor");
        for (l, p) in self.eigenvalues.iter().zip(&self.frame) {
            acc = &acc + &p.scale(f(*l));
        }
        acc
    }

    /// Functional calculus `Σ f(λᵢ) pᵢ`, failing if `f` leaves the reals.
    pub fn apply(&self, op: &'static str, f: impl Fn(f64) -> f64) -> Result<Element> {
        for &l in &self.eigenvalues {
            if !f(l).is_finite() {
                return Err(ConeError::DomainViolation { op, eigenvalue: l });
            }
        }
        Ok(self.map_eigenvalues(f))
    }
}

impl Element {
    /// Computes the spectral decomposition of `self`.
    ///
    /// # Errors
    ///
    /// Fails only if the iterative eigensolver does not converge; the error
    /// carries the matrix size and magnitude for diagnosis.
    pub fn spectral_decompose(&self) -> Result<SpectralDecomposition> {
        match self.algebra() {
            AlgebraDescriptor::RealSymmetric { n } => {
                let (vals, vecs) = refined_eigen_real(&self.sym_matrix()).ok_or_else(|| {
                    ConeError::EigenFailure {
                        context: format!(
                            "sym({n}), max |coord| {:.3e}",
                            self.max_abs_coord()
                        ),
                    }
                })?;
                let order = descending(&vals);
                let mut eigenvalues = Vec::with_capacity(n);
                let mut frame = Vec::with_capacity(n);
                for &k in &order {
                    eigenvalues.push(vals[k]);
                    let v = vecs.column(k);
                    let p: DMatrix<f64> = v * v.transpose();
                    frame.push(Element::from_sym_matrix(self.algebra(), &p));
                }
                Ok(SpectralDecomposition {
                    algebra: self.algebra(),
                    eigenvalues,
                    frame,
                })
            }
            AlgebraDescriptor::ComplexHermitian { n } => {
                let (vals, vecs) = refined_eigen_herm(&self.herm_matrix()).ok_or_else(|| {
                    ConeError::EigenFailure {
                        context: format!(
                            "herm({n}), max |coord| {:.3e}",
                            self.max_abs_coord()
                        ),
                    }
                })?;
                let order = descending(&vals);
                let mut eigenvalues = Vec::with_capacity(n);
                let mut frame = Vec::with_capacity(n);
                for &k in &order {
                    eigenvalues.push(vals[k]);
                    let v = vecs.column(k);
                    let p: DMatrix<Complex64> = v * v.adjoint();
                    frame.push(Element::from_herm_matrix(self.algebra(), &p));
                }
                Ok(SpectralDecomposition {
                    algebra: self.algebra(),
                    eigenvalues,
                    frame,
                })
            }
            AlgebraDescriptor::SpinFactor { dim } => {
                let (t, v) = self.spin_split();
                let norm_v = v.iter().map(|x| x * x).sum::<f64>().sqrt();
                // Direction of the frame; an arbitrary axis once ‖v‖ is
                // negligible relative to |t| (the frame is not unique there).
                let mut dir = vec![0.0; dim - 1];
                if norm_v <= SPIN_DEGENERACY * t.abs() + 1e-300 {
                    dir[0] = 1.0;
                } else {
                    for (d, x) in dir.iter_mut().zip(v) {
                        *d = x / norm_v;
                    }
                }
                let mut plus = vec![0.5];
                plus.extend(dir.iter().map(|d| 0.5 * d));
                let mut minus = vec![0.5];
                minus.extend(dir.iter().map(|d| -0.5 * d));
                Ok(SpectralDecomposition {
                    algebra: self.algebra(),
                    eigenvalues: vec![t + norm_v, t - norm_v],
                    frame: vec![
                        Element::new(self.algebra(), plus)?,
                        Element::new(self.algebra(), minus)?,
                    ],
                })
            }
        }
    }

    /// Functional calculus `Σ f(λᵢ) pᵢ`.
    ///
    /// # Errors
    ///
    /// Fails if the eigensolver fails or if `f` returns a non-finite value
    /// on some eigenvalue.
    pub fn apply_spectral(&self, f: impl Fn(f64) -> f64) -> Result<Element> {
        self.spectral_decompose()?.apply("apply_spectral", f)
    }

    /// Largest eigenvalue `Λ(x)`.
    pub fn lambda_max(&self) -> Result<f64> {
        Ok(self.spectral_decompose()?.lambda_max())
    }

    /// Smallest eigenvalue.
    pub fn lambda_min(&self) -> Result<f64> {
        Ok(self.spectral_decompose()?.lambda_min())
    }

    /// Jordan determinant: the product of all eigenvalues.
    pub fn determinant(&self) -> Result<f64> {
        Ok(self
            .spectral_decompose()?
            .eigenvalues()
            .iter()
            .product())
    }

    /// Exponential `exp(x) = Σ e^{λᵢ} pᵢ`; always lands in the open cone.
    pub fn exp(&self) -> Result<Element> {
        self.spectral_decompose()?.apply("exp", f64::exp)
    }

    /// Logarithm; requires `x` in the open cone.
    pub fn log(&self) -> Result<Element> {
        self.interior_calculus("log", f64::ln)
    }

    /// Square root; requires `x` in the open cone.
    pub fn sqrt(&self) -> Result<Element> {
        self.interior_calculus("sqrt", f64::sqrt)
    }

    /// Inverse; requires `x` in the open cone.
    pub fn inverse(&self) -> Result<Element> {
        self.interior_calculus("inverse", |l| 1.0 / l)
    }

    /// Inverse square root `x^{-1/2}`; requires `x` in the open cone.
    pub fn inv_sqrt(&self) -> Result<Element> {
        self.interior_calculus("inv_sqrt", |l| 1.0 / l.sqrt())
    }

    fn interior_calculus(&self, op: &'static str, f: impl Fn(f64) -> f64) -> Result<Element> {
        let dec = self.spectral_decompose()?;
        if dec.lambda_min() <= config::interior_threshold(dec.lambda_max()) {
            return Err(ConeError::DomainViolation {
                op,
                eigenvalue: dec.lambda_min(),
            });
        }
        dec.apply(op, f)
    }

    /// Inverse square root within the support subalgebra: eigenvalues above
    /// the support cutoff are mapped to `λ^{-1/2}`, the rest to zero.
    ///
    /// This is the inverse square root of `x` seen as an interior point of
    /// the cone of `A(s)`, `s` its support idempotent.
    ///
    /// # Errors
    ///
    /// Fails if `x` has an eigenvalue below `-threshold`, i.e. is outside
    /// the closed cone.
    pub fn pseudo_inv_sqrt(&self) -> Result<Element> {
        let dec = self.spectral_decompose()?;
        let lam_max = dec.lambda_max();
        if dec.lambda_min() < -config::interior_threshold(lam_max.max(0.0)) {
            return Err(ConeError::NotInCone {
                min_eigenvalue: dec.lambda_min(),
            });
        }
        let cut = config::support_threshold(lam_max.max(0.0));
        dec.apply("pseudo_inv_sqrt", |l| if l > cut { 1.0 / l.sqrt() } else { 0.0 })
    }

    /// Support idempotent of an element of the closed cone: the sum of the
    /// frame members whose eigenvalue exceeds the support cutoff.
    pub fn support_idempotent(&self) -> Result<Idempotent> {
        let dec = self.spectral_decompose()?;
        let lam_max = dec.lambda_max();
        if dec.lambda_min() < -config::interior_threshold(lam_max.max(0.0)) {
            return Err(ConeError::NotInCone {
                min_eigenvalue: dec.lambda_min(),
            });
        }
        let cut = config::support_threshold(lam_max.max(0.0));
        let mut acc = Element::zero(self.algebra())?;
        let mut count = 0usize;
        for (l, p) in dec.eigenvalues().iter().zip(dec.frame()) {
            if *l > cut {
                acc = &acc + p;
                count += 1;
            }
        }
        Ok(Idempotent {
            element: acc,
            trace: count,
        })
    }
}

/// Indices sorting `vals` into descending order (stable under ties).
fn descending(vals: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..vals.len()).collect();
    idx.sort_by(|&a, &b| vals[b].total_cmp(&vals[a]).then(a.cmp(&b)));
    idx
}

/// Rotation parameters `(c, s)`, `c² + s² = 1`, zeroing the off-diagonal of
/// the symmetric block `[[a, m],[m, d]]` under `Wᵀ·block·W` with
/// `W = [[c, −s],[s, c]]`.  Of the two zeroing angles this picks the smaller
/// (`|s| ≤ c`), so a nearly diagonal matrix is only nudged and eigenvalues
/// never swap places mid-sweep.
fn jacobi_rotation(a: f64, d: f64, m: f64) -> (f64, f64) {
    let tau = (d - a) / (2.0 * m);
    let t = -tau.signum() / (tau.abs() + tau.hypot(1.0));
    let c = 1.0 / t.hypot(1.0);
    (c, t * c)
}

/// Eigen-decomposition of a dense symmetric matrix: the library solver as a
/// warm start, then cyclic Jacobi rotations until every off-diagonal entry
/// is negligible against its diagonal pair.  From a near-diagonal start the
/// polish costs a couple of sweeps and pins each eigenvector to the optimal
/// `ε·‖m‖/gap` accuracy; the warm start alone intermittently mixes the
/// eigenvectors of eigenvalues separated by large gaps.  Returns `None`
/// only if the sweep cap is exhausted.
fn refined_eigen_real(m: &DMatrix<f64>) -> Option<(Vec<f64>, DMatrix<f64>)> {
    let n = m.nrows();
    let mut q = match m.clone().try_symmetric_eigen(f64::EPSILON, EIGEN_MAX_ITER) {
        Some(eig) => eig.eigenvectors,
        None => DMatrix::identity(n, n),
    };
    let mut b = q.transpose() * m * &q;
    // The congruence preserves symmetry only up to rounding.
    for i in 0..n {
        for j in (i + 1)..n {
            let avg = 0.5 * (b[(i, j)] + b[(j, i)]);
            b[(i, j)] = avg;
            b[(j, i)] = avg;
        }
    }
    for _ in 0..JACOBI_MAX_SWEEPS {
        let mut rotated = false;
        for i in 0..n {
            for j in (i + 1)..n {
                let off = b[(i, j)];
                if off.abs() <= f64::EPSILON * (b[(i, i)].abs() + b[(j, j)].abs()) {
                    continue;
                }
                rotated = true;
                let (c, s) = jacobi_rotation(b[(i, i)], b[(j, j)], off);
                for k in 0..n {
                    let (bki, bkj) = (b[(k, i)], b[(k, j)]);
                    b[(k, i)] = c * bki + s * bkj;
                    b[(k, j)] = c * bkj - s * bki;
                }
                for k in 0..n {
                    let (bik, bjk) = (b[(i, k)], b[(j, k)]);
                    b[(i, k)] = c * bik + s * bjk;
                    b[(j, k)] = c * bjk - s * bik;
                }
                b[(i, j)] = 0.0;
                b[(j, i)] = 0.0;
                for k in 0..n {
                    let (qki, qkj) = (q[(k, i)], q[(k, j)]);
                    q[(k, i)] = c * qki + s * qkj;
                    q[(k, j)] = c * qkj - s * qki;
                }
            }
        }
        if !rotated {
            return Some(((0..n).map(|i| b[(i, i)]).collect::<Vec<f64>>(), q));
        }
    }
    None
}

/// Hermitian counterpart of [`refined_eigen_real`].  Each pivot factors out
/// the phase of `b_ij = |b_ij|·e^{iφ}`, reducing the 2×2 block to the real
/// case conjugated by `diag(1, e^{iφ})`; the rotation applied is
/// `W = [[c, −s],[e^{−iφ}s, e^{−iφ}c]]` with `(c, s)` as in the real pivot.
fn refined_eigen_herm(m: &DMatrix<Complex64>) -> Option<(Vec<f64>, DMatrix<Complex64>)> {
    let n = m.nrows();
    let mut q = match m.clone().try_symmetric_eigen(f64::EPSILON, EIGEN_MAX_ITER) {
        Some(eig) => eig.eigenvectors,
        None => DMatrix::identity(n, n),
    };
    let mut b = q.adjoint() * m * &q;
    for i in 0..n {
        b[(i, i)] = Complex64::new(b[(i, i)].re, 0.0);
        for j in (i + 1)..n {
            let avg = 0.5 * (b[(i, j)] + b[(j, i)].conj());
            b[(i, j)] = avg;
            b[(j, i)] = avg.conj();
        }
    }
    for _ in 0..JACOBI_MAX_SWEEPS {
        let mut rotated = false;
        for i in 0..n {
            for j in (i + 1)..n {
                let off = b[(i, j)];
                let (aii, ajj) = (b[(i, i)].re, b[(j, j)].re);
                if off.norm() <= f64::EPSILON * (aii.abs() + ajj.abs()) {
                    continue;
                }
                rotated = true;
                let (c, s) = jacobi_rotation(aii, ajj, off.norm());
                let p = (off / off.norm()).conj(); // e^{−iφ}
                let (ps, pc) = (p * s, p * c);
                for k in 0..n {
                    let (bki, bkj) = (b[(k, i)], b[(k, j)]);
                    b[(k, i)] = c * bki + ps * bkj;
                    b[(k, j)] = pc * bkj - s * bki;
                }
                let (qs, qc) = (ps.conj(), pc.conj());
                for k in 0..n {
                    let (bik, bjk) = (b[(i, k)], b[(j, k)]);
                    b[(i, k)] = c * bik + qs * bjk;
                    b[(j, k)] = qc * bjk - s * bik;
                }
                b[(i, j)] = Complex64::new(0.0, 0.0);
                b[(j, i)] = Complex64::new(0.0, 0.0);
                b[(i, i)] = Complex64::new(b[(i, i)].re, 0.0);
                b[(j, j)] = Complex64::new(b[(j, j)].re, 0.0);
                for k in 0..n {
                    let (qki, qkj) = (q[(k, i)], q[(k, j)]);
                    q[(k, i)] = c * qki + ps * qkj;
                    q[(k, j)] = pc * qkj - s * qki;
                }
            }
        }
        if !rotated {
            return Some(((0..n).map(|i| b[(i, i)].re).collect(), q));
        }
    }
    None
}

/// A validated idempotent `p∘p = p` together with its integral trace.
#[derive(Debug, Clone, PartialEq)]
pub struct Idempotent {
    element: Element,
    trace: usize,
}

impl Idempotent {
    /// Validates `p∘p = p` (within the working tolerance, relative to the
    /// magnitude of `p`) and that `tr p` is an integer in `0..=rank`.
    pub fn new(element: Element) -> Result<Self> {
        let tol = config::tolerance();
        let square = element.jordan_product(&element)?;
        let residual = (&square - &element).norm_inner();
        let scale = element.norm_inner().max(1.0);
        if residual > tol * scale {
            return Err(ConeError::NotIdempotent { residual });
        }
        let trace = element.trace();
        let rounded = trace.round();
        if (trace - rounded).abs() > tol * element.algebra().rank() as f64
            || rounded < -0.5
            || rounded > element.algebra().rank() as f64 + 0.5
        {
            return Err(ConeError::NotIdempotent {
                residual: (trace - rounded).abs(),
            });
        }
        Ok(Idempotent {
            element,
            trace: rounded as usize,
        })
    }

    /// The zero idempotent.
    pub fn zero(algebra: AlgebraDescriptor) -> Result<Self> {
        Ok(Idempotent {
            element: Element::zero(algebra)?,
            trace: 0,
        })
    }

    /// The unit idempotent.
    pub fn unit(algebra: AlgebraDescriptor) -> Result<Self> {
        Ok(Idempotent {
            element: Element::unit(algebra)?,
            trace: algebra.rank(),
        })
    }

    pub(crate) fn new_unchecked(element: Element, trace: usize) -> Self {
        Idempotent { element, trace }
    }

    pub fn element(&self) -> &Element {
        &self.element
    }

    /// Trace of the idempotent, i.e. the rank of its Peirce subalgebra.
    pub fn trace_int(&self) -> usize {
        self.trace
    }

    pub fn is_zero(&self) -> bool {
        self.trace == 0
    }

    pub fn is_unit(&self) -> bool {
        self.trace == self.element.algebra().rank()
    }

    /// The complementary idempotent `u − p`.
    pub fn complement(&self) -> Result<Self> {
        let u = Element::unit(self.element.algebra())?;
        Ok(Idempotent {
            element: &u - &self.element,
            trace: self.element.algebra().rank() - self.trace,
        })
    }
}

/// Projection `U_p x` of `x` onto the Peirce subalgebra `A(p)`.
pub fn peirce_project(p: &Idempotent, x: &Element) -> Result<Element> {
    p.element().quadratic_rep(x)
}

/// Largest eigenvalue of `z` within the Peirce subalgebra `A(p)`.
///
/// Requires `p ≠ 0` and `p∘z = z` (membership in `A(p)`, within tolerance).
/// The value is computed by the ambient shift `Λ(z − C(u − p))`,
/// `C = 1 + ‖z‖_u`, which is exact because the complement block contributes
/// only the eigenvalue `−C < −‖z‖_u ≤ Λ_{A(p)}(z)`.
pub fn peirce_lambda_max(p: &Idempotent, z: &Element) -> Result<f64> {
    if p.is_zero() {
        return Err(ConeError::ZeroIdempotent);
    }
    let pz = p.element().jordan_product(z)?;
    let residual = (&pz - z).norm_inner();
    if residual > config::tolerance() * z.norm_inner().max(1.0) {
        return Err(ConeError::OutsidePeirceSpace { residual });
    }
    if p.is_unit() {
        return z.lambda_max();
    }
    let dec = z.spectral_decompose()?;
    let norm_u = dec.lambda_max().abs().max(dec.lambda_min().abs());
    let c = 1.0 + norm_u;
    let shifted = z - &p.complement()?.element().scale(c);
    shifted.lambda_max()
}
