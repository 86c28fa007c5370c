//! Curvature and generalized Ricci solitons on three-dimensional Lie groups.
//!
//! Everything is computed in a fixed left-invariant (pseudo-)orthonormal frame
//! `{e1, e2, e3}`, so tensors are plain 3x3 matrices and the soliton equation
//!
//! ```text
//! L_X g + 2 alpha X^flat (.) X^flat - 2 beta Ric = 2 lambda g
//! ```
//!
//! becomes a system of six quadratic equations in the components of `X`
//! (and `lambda`, when it is left free).
//!
//! Module map:
//! - [`algebra`]: the catalog of metric Lie algebra families, bracket tables,
//!   unimodularity, the cross-product endomorphism and group identification.
//! - [`curvature`]: Levi-Civita connection, curvature tensors, Einstein /
//!   flatness / null-recurrence predicates.
//! - [`grs`]: the soliton residual, the per-family scalar systems, and the
//!   named-equation classifier.
//! - [`solver`]: multistart damped least-squares search for soliton vectors,
//!   plus parameter sweeps.
//! - [`atlas`]: the closed-form solution families and corollary witnesses,
//!   with randomized verification harnesses.

// `!(x > 0)` in admissibility checks is deliberate: NaN must be rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod algebra;
pub mod atlas;
pub mod curvature;
pub mod grs;
pub mod solver;
#[doc(hidden)]
pub mod test_support;

use thiserror::Error;

/// 3-vector in the fixed frame.
pub type Vec3 = nalgebra::Vector3<f64>;
/// 3x3 matrix in the fixed frame.
pub type Mat3 = nalgebra::Matrix3<f64>;

/// Version stamp carried by every JSON report emitted by the CLI.
pub const SCHEMA_VERSION: &str = "1";

/// Default residual acceptance tolerance.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Errors surfaced by catalog validation, solver configuration and the atlas.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("{family}: {message}")]
    ParamSchema { family: String, message: String },
    #[error("{family}: constraint violated: {constraint}")]
    Constraint { family: String, constraint: String },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("unknown theorem case `{0}`")]
    UnknownCase(String),
    #[error("unknown corollary claim `{0}`")]
    UnknownClaim(String),
    #[error("inadmissible parameters for `{case}`: {violated}")]
    Inadmissible { case: String, violated: String },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Max absolute entry of a matrix.
pub(crate) fn inf_norm(m: &Mat3) -> f64 {
    m.iter().fold(0.0, |acc, v| acc.max(v.abs()))
}

/// Relative tolerance with an absolute floor, scaled to the magnitude of the
/// quantities involved.
pub(crate) fn scaled_tol(rel: f64, scale: f64) -> f64 {
    (rel * scale).max(1e-12)
}
