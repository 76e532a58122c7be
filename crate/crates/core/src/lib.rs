//! Symmetric-cone geometry over Euclidean Jordan algebras.
//!
//! This crate implements the finite-dimensional kernel needed to compute in
//! the interior of a symmetric cone `A₊°` and on its horofunction boundaries:
//!
//! * [`algebra`] — three concrete Euclidean Jordan algebras (real symmetric
//!   matrices, complex Hermitian matrices, spin factors), their Jordan
//!   product, quadratic representation, and spectral decomposition;
//! * [`order`] — order-unit and variation (semi)norms, the gauges `M(x/y)`
//!   and `m(x/y)`, and the Thompson and Hilbert distances together with
//!   their standard isometries;
//! * [`boundary`] — the shared parametrisation of boundary points by a
//!   Jordan frame, two index sets, and a weight vector;
//! * [`thompson`] — Thompson-metric horofunctions, Busemann paths, the
//!   detour distance between Busemann points, and the horofunctions of the
//!   order-unit norm;
//! * [`hilbert`] — Hilbert-metric horofunctions on the projective cone and
//!   the variation-seminorm horofunctions on the traceless subspace;
//! * [`limits`] — a direct limit evaluator used as an independent oracle
//!   for every closed-form boundary formula above.
//!
//! All computations are dense `f64` at "desk scale" (rank ≤ 64); nothing in
//! the crate is randomised, so every function is deterministic for a fixed
//! input.

pub mod algebra;
pub mod boundary;
pub mod config;
pub mod error;
pub mod hilbert;
pub mod limits;
pub mod order;
pub mod spectral;
pub mod thompson;

pub use algebra::{AlgebraDescriptor, Element};
pub use boundary::{BoundaryMode, BoundaryParams, HoroPair};
pub use error::{ConeError, Result};
pub use hilbert::{HilbertHorofunction, VariationHorofunction};
pub use limits::{ConvergenceReport, LimitMetric, LimitPath, Schedule};
pub use order::{Classification, ConePoint, ProjectivePoint, TangentVector};
pub use spectral::{Idempotent, SpectralDecomposition};
pub use thompson::{BusemannPath, MetricFunctional, ThompsonHorofunction};
