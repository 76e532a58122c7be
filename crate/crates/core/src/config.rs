//! Global numerical configuration.
//!
//! A single working tolerance governs the soft consistency checks performed
//! when validating user-supplied data (idempotency residuals, frame
//! completeness, normalisation of boundary parameters, …).  It defaults to
//! `1e-9` on unit-scale quantities and is meant to be configured once at
//! process start-up; apart from it the crate keeps no mutable state.
//!
//! Two further thresholds are fixed constants rather than configuration:
//! interiority and support detection are scale-relative cutoffs whose values
//! are part of the numerical contract of the crate.

use std::sync::atomic::{AtomicU64, Ordering};

/// Default working tolerance for validation checks.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

static TOLERANCE_BITS: AtomicU64 = AtomicU64::new(0x3E112E0BE826D695); // 1e-9

/// Returns the current working tolerance.
pub fn tolerance() -> f64 {
    f64::from_bits(TOLERANCE_BITS.load(Ordering::Relaxed))
}

/// Sets the working tolerance.
///
/// Intended to be called once during initialisation (e.g. from a CLI flag
/// or the `CONETOOL_TOL` environment variable) before any geometry is
/// computed.  Non-finite or non-positive values are ignored.
pub fn set_tolerance(tol: f64) {
    if tol.is_finite() && tol > 0.0 {
        TOLERANCE_BITS.store(tol.to_bits(), Ordering::Relaxed);
    }
}

/// Scale-relative cutoff below which an eigenvalue no longer counts as
/// strictly positive: `x` is interior iff `min σ(x) > 1e-12 · max(1, Λ(x))`.
pub fn interior_threshold(lambda_max: f64) -> f64 {
    1e-12 * lambda_max.max(1.0)
}

/// Eigenvalue cutoff used when reading off the support idempotent of an
/// element of the closed cone: eigenvalues `> 1e-10 · Λ(x)` belong to the
/// support.
pub fn support_threshold(lambda_max: f64) -> f64 {
    1e-10 * lambda_max
}
