//! Shared parametrisation of horofunction-boundary points.
//!
//! Every boundary point handled by this crate — Thompson, Hilbert, or the
//! associated normed-space boundaries — is described by the same data:
//! a Jordan frame `p₁, …, p_r`, two disjoint index sets `I` and `J` into
//! the frame (not both empty), and nonnegative weights `α` on `I ∪ J`.
//! The pair of closed-cone elements
//!
//! ```text
//! y = Σ_{i∈I} e^{-αᵢ} pᵢ,     z = Σ_{j∈J} e^{-αⱼ} pⱼ
//! ```
//!
//! then identifies the boundary point.  The two geometries differ only in
//! their normalisation:
//!
//! * `thompson`: `min α = 0` over `I ∪ J` (so `max(‖y‖_u, ‖z‖_u) = 1`);
//!   `I` or `J` may be empty, making `y` or `z` zero;
//! * `hilbert`: both sets nonempty and `min_I α = 0 = min_J α` (so
//!   `‖y‖_u = ‖z‖_u = 1`).

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{AlgebraDescriptor, Element};
use crate::config;
use crate::error::{ConeError, Result};
use crate::order::ConePoint;
use crate::spectral::Idempotent;

/// Which boundary normalisation a parameter set obeys.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryMode {
    Thompson,
    Hilbert,
}

impl std::fmt::Display for BoundaryMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoundaryMode::Thompson => write!(f, "thompson"),
            BoundaryMode::Hilbert => write!(f, "hilbert"),
        }
    }
}

/// Frame, index sets, and weights describing one boundary point.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryParams {
    algebra: AlgebraDescriptor,
    frame: Vec<Element>,
    set_i: Vec<usize>,
    set_j: Vec<usize>,
    alpha: BTreeMap<usize, f64>,
    mode: BoundaryMode,
}

impl BoundaryParams {
    /// Validates and assembles a parameter set.
    ///
    /// The frame must be complete: `rank` many primitive idempotents,
    /// mutually orthogonal, summing to the unit (all within the working
    /// tolerance).  `I` and `J` must be disjoint, in range, not both empty,
    /// and `alpha` must carry exactly the keys `I ∪ J` with the
    /// mode-specific normalisation described at module level.
    pub fn new(
        frame: Vec<Element>,
        set_i: Vec<usize>,
        set_j: Vec<usize>,
        alpha: BTreeMap<usize, f64>,
        mode: BoundaryMode,
    ) -> Result<Self> {
        let tol = config::tolerance();
        let first = frame
            .first()
            .ok_or_else(|| ConeError::InvalidParams("empty frame".to_owned()))?;
        let algebra = first.algebra();
        let rank = algebra.rank();
        if frame.len() != rank {
            return Err(ConeError::InvalidParams(format!(
                "frame must be complete: expected {rank} members for {algebra}, got {}",
                frame.len()
            )));
        }
        for (k, p) in frame.iter().enumerate() {
            if p.algebra() != algebra {
                return Err(ConeError::AlgebraMismatch {
                    expected: algebra,
                    found: p.algebra(),
                });
            }
            let idem = Idempotent::new(p.clone())
                .map_err(|e| ConeError::InvalidParams(format!("frame member {k}: {e}")))?;
            if idem.trace_int() != 1 {
                return Err(ConeError::InvalidParams(format!(
                    "frame member {k} is not primitive (trace {})",
                    idem.trace_int()
                )));
            }
        }
        // Orthogonality: for cone idempotents (p|q) = 0 already forces
        // p∘q = 0, so the inner product is a sufficient (and cheap) test.
        for a in 0..frame.len() {
            for b in (a + 1)..frame.len() {
                let ip = frame[a].inner_product(&frame[b])?;
                if ip.abs() > tol {
                    return Err(ConeError::InvalidParams(format!(
                        "frame members {a} and {b} are not orthogonal ((p|q) = {ip:.3e})"
                    )));
                }
            }
        }
        let mut sum = Element::zero(algebra)?;
        for p in &frame {
            sum = &sum + p;
        }
        let unit_residual = (&sum - &Element::unit(algebra)?).norm_inner();
        if unit_residual > tol * rank as f64 {
            return Err(ConeError::InvalidParams(format!(
                "frame does not sum to the unit (residual {unit_residual:.3e})"
            )));
        }

        let mut set_i = set_i;
        let mut set_j = set_j;
        set_i.sort_unstable();
        set_j.sort_unstable();
        for (label, set) in [("I", &set_i), ("J", &set_j)] {
            if set.windows(2).any(|w| w[0] == w[1]) {
                return Err(ConeError::InvalidParams(format!(
                    "duplicate index in {label}"
                )));
            }
            if set.iter().any(|&k| k >= rank) {
                return Err(ConeError::InvalidParams(format!(
                    "index out of range in {label} (rank {rank})"
                )));
            }
        }
        if set_i.iter().any(|k| set_j.binary_search(k).is_ok()) {
            return Err(ConeError::InvalidParams(
                "I and J must be disjoint".to_owned(),
            ));
        }
        if set_i.is_empty() && set_j.is_empty() {
            return Err(ConeError::InvalidParams(
                "I and J must not both be empty".to_owned(),
            ));
        }

        let mut expected: Vec<usize> = set_i.iter().chain(&set_j).copied().collect();
        expected.sort_unstable();
        let keys: Vec<usize> = alpha.keys().copied().collect();
        if keys != expected {
            return Err(ConeError::InvalidParams(
                "alpha must carry exactly the keys of I ∪ J".to_owned(),
            ));
        }
        for (&k, &a) in &alpha {
            if !a.is_finite() || a < -tol {
                return Err(ConeError::InvalidParams(format!(
                    "alpha[{k}] = {a} must be finite and nonnegative"
                )));
            }
        }
        let min_over = |set: &[usize]| {
            set.iter()
                .map(|k| alpha[k])
                .fold(f64::INFINITY, f64::min)
        };
        match mode {
            BoundaryMode::Thompson => {
                let m = min_over(&expected);
                if m.abs() > tol {
                    return Err(ConeError::InvalidParams(format!(
                        "thompson normalisation needs min α = 0 over I ∪ J (got {m:.3e})"
                    )));
                }
            }
            BoundaryMode::Hilbert => {
                if set_i.is_empty() || set_j.is_empty() {
                    return Err(ConeError::InvalidParams(
                        "hilbert mode requires both I and J nonempty".to_owned(),
                    ));
                }
                let (mi, mj) = (min_over(&set_i), min_over(&set_j));
                if mi.abs() > tol || mj.abs() > tol {
                    return Err(ConeError::InvalidParams(format!(
                        "hilbert normalisation needs min_I α = 0 = min_J α (got {mi:.3e}, {mj:.3e})"
                    )));
                }
            }
        }

        Ok(BoundaryParams {
            algebra,
            frame,
            set_i,
            set_j,
            alpha,
            mode,
        })
    }

    pub fn algebra(&self) -> AlgebraDescriptor {
        self.algebra
    }

    pub fn frame(&self) -> &[Element] {
        &self.frame
    }

    pub fn set_i(&self) -> &[usize] {
        &self.set_i
    }

    pub fn set_j(&self) -> &[usize] {
        &self.set_j
    }

    pub fn alpha(&self) -> &BTreeMap<usize, f64> {
        &self.alpha
    }

    pub fn mode(&self) -> BoundaryMode {
        self.mode
    }

    fn indexed_sum(&self, set: &[usize], weight: impl Fn(f64) -> f64) -> Element {
        let mut acc = Element::zero(self.algebra).expect("validated descriptor");
        for &k in set {
            acc = &acc + &self.frame[k].scale(weight(self.alpha[&k]));
        }
        acc
    }

    /// `p_I = Σ_{i∈I} pᵢ`, the support idempotent of `y`.
    pub fn support_i(&self) -> Idempotent {
        Idempotent::new_unchecked(self.indexed_sum(&self.set_i, |_| 1.0), self.set_i.len())
    }

    /// `p_J = Σ_{j∈J} pⱼ`, the support idempotent of `z`.
    pub fn support_j(&self) -> Idempotent {
        Idempotent::new_unchecked(self.indexed_sum(&self.set_j, |_| 1.0), self.set_j.len())
    }

    /// Weighted sum `a_I = Σ_{i∈I} αᵢ pᵢ`.
    pub fn weighted_i(&self) -> Element {
        self.indexed_sum(&self.set_i, |a| a)
    }

    /// Weighted sum `a_J = Σ_{j∈J} αⱼ pⱼ`.
    pub fn weighted_j(&self) -> Element {
        self.indexed_sum(&self.set_j, |a| a)
    }

    /// Direction `ω = p_I − p_J` of the associated geodesic.
    pub fn omega(&self) -> Element {
        let (pi, pj) = (self.support_i(), self.support_j());
        pi.element() - pj.element()
    }

    /// Offset `ζ = −a_I + a_J`.
    pub fn zeta(&self) -> Element {
        &self.weighted_j() - &self.weighted_i()
    }

    /// The boundary pair `(y, z) = (Σ_I e^{-αᵢ} pᵢ, Σ_J e^{-αⱼ} pⱼ)`.
    pub fn to_pair(&self) -> Result<HoroPair> {
        let y = self.indexed_sum(&self.set_i, |a| (-a).exp());
        let z = self.indexed_sum(&self.set_j, |a| (-a).exp());
        HoroPair::new(y, z, self.mode)
    }
}

#[derive(Serialize, Deserialize)]
struct ParamsRepr {
    frame: Vec<Element>,
    #[serde(rename = "I")]
    set_i: Vec<usize>,
    #[serde(rename = "J")]
    set_j: Vec<usize>,
    alpha: BTreeMap<usize, f64>,
    mode: BoundaryMode,
}

impl Serialize for BoundaryParams {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ParamsRepr {
            frame: self.frame.clone(),
            set_i: self.set_i.clone(),
            set_j: self.set_j.clone(),
            alpha: self.alpha.clone(),
            mode: self.mode,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BoundaryParams {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ParamsRepr::deserialize(deserializer)?;
        BoundaryParams::new(repr.frame, repr.set_i, repr.set_j, repr.alpha, repr.mode)
            .map_err(D::Error::custom)
    }
}

/// The pair `(y, z)` of orthogonal closed-cone elements identifying a
/// boundary point.
#[derive(Debug, Clone, PartialEq)]
pub struct HoroPair {
    y: ConePoint,
    z: ConePoint,
    mode: BoundaryMode,
}

impl HoroPair {
    /// Validates orthogonality (`y∘z = 0`) and the mode's normalisation.
    pub fn new(y: Element, z: Element, mode: BoundaryMode) -> Result<Self> {
        if y.algebra() != z.algebra() {
            return Err(ConeError::AlgebraMismatch {
                expected: y.algebra(),
                found: z.algebra(),
            });
        }
        let tol = config::tolerance();
        let product = y.jordan_product(&z)?.norm_inner();
        if product > tol * y.norm_inner().max(1.0) * z.norm_inner().max(1.0) {
            return Err(ConeError::InvalidPair(format!(
                "y∘z must vanish (‖y∘z‖ = {product:.3e})"
            )));
        }
        let ny = y.order_unit_norm()?;
        let nz = z.order_unit_norm()?;
        match mode {
            BoundaryMode::Thompson => {
                if (ny.max(nz) - 1.0).abs() > tol {
                    return Err(ConeError::InvalidPair(format!(
                        "thompson pair needs max(‖y‖_u, ‖z‖_u) = 1 (got {:.6})",
                        ny.max(nz)
                    )));
                }
            }
            BoundaryMode::Hilbert => {
                if (ny - 1.0).abs() > tol || (nz - 1.0).abs() > tol {
                    return Err(ConeError::InvalidPair(format!(
                        "hilbert pair needs ‖y‖_u = ‖z‖_u = 1 (got {ny:.6}, {nz:.6})"
                    )));
                }
            }
        }
        Ok(HoroPair {
            y: ConePoint::in_cone(y)?,
            z: ConePoint::in_cone(z)?,
            mode,
        })
    }

    pub fn y(&self) -> &ConePoint {
        &self.y
    }

    pub fn z(&self) -> &ConePoint {
        &self.z
    }

    pub fn mode(&self) -> BoundaryMode {
        self.mode
    }

    pub fn algebra(&self) -> AlgebraDescriptor {
        self.y.element().algebra()
    }
}
