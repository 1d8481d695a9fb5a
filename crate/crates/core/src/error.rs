//! Error types shared across the crate.

use thiserror::Error;

/// Everything that can go wrong when validating inputs or running one of the
/// constructions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix data has {actual} entries, expected {rows}x{cols}")]
    BadShape {
        rows: usize,
        cols: usize,
        actual: usize,
    },

    #[error("non-finite entry encountered in {context}")]
    NonFinite { context: &'static str },

    #[error("dimension mismatch in {context}: {left} vs {right}")]
    DimensionMismatch {
        context: &'static str,
        left: usize,
        right: usize,
    },

    #[error("matrix is not Hermitian: max |M - M'| = {residual:e}")]
    NotHermitian { residual: f64 },

    #[error("matrix is not positive semidefinite: min eigenvalue {min_eigenvalue:e}")]
    NotPositive { min_eigenvalue: f64 },

    #[error("trace is {trace}, expected 1")]
    TraceNotOne { trace: f64 },

    #[error("matrix is not unitary: max |U'U - I| = {residual:e}")]
    NotUnitary { residual: f64 },

    #[error("eigensolver did not converge: off-diagonal residual {off_diagonal:e} after {sweeps} sweeps")]
    EigenNoConvergence { off_diagonal: f64, sweeps: usize },

    #[error("singular value decomposition did not converge after {sweeps} sweeps")]
    SvdNoConvergence { sweeps: usize },

    #[error("weights are not a probability distribution: sum = {sum}")]
    NotDistribution { sum: f64 },

    #[error("negative entry {value:e} below tolerance")]
    NegativeEntry { value: f64 },

    #[error("vector sums differ: {left} vs {right}")]
    SumMismatch { left: f64, right: f64 },

    #[error("majorization fails: partial sum {index} exceeds bound by {violation:e}")]
    NotMajorized { index: usize, violation: f64 },

    #[error("measurement matrices violate completeness: residual {residual:e}")]
    IncompleteMeasurement { residual: f64 },

    #[error("projectors do not resolve the identity: residual {residual:e}")]
    NotResolutionOfIdentity { residual: f64 },

    #[error("k = {k} out of range for dimension {dim}")]
    KOutOfRange { k: usize, dim: usize },

    #[error("operation supports dimension {supported} only, got {got}")]
    UnsupportedDimension { supported: usize, got: usize },

    #[error("target spectrum needs {needed} dimensions but only {available} are available")]
    TargetTooLarge { needed: usize, available: usize },

    #[error("protocol does not match the supplied state: {context}")]
    PlanMismatch { context: &'static str },

    #[error("invalid parameter: {context}")]
    InvalidParameter { context: &'static str },

    #[error("internal invariant violated: {context}")]
    Defect { context: &'static str },
}
