//! Central numerical tolerance configuration.
//!
//! Every validating constructor and every verification routine reads its
//! thresholds from a [`Tolerances`] record. The defaults are the ones used
//! throughout the test suite; callers (notably the CLI) can override
//! individual fields.

/// Numerical thresholds used by constructors, checks and constructions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Max allowed `|M - M†|` entry when accepting a Hermitian matrix.
    pub hermitian_symmetry: f64,
    /// Max allowed `|tr - 1|` when accepting a density matrix.
    pub trace_one: f64,
    /// Eigenvalues of a PSD matrix may dip this far below zero.
    pub psd_floor: f64,
    /// Max allowed `|U†U - I|` entry when accepting a unitary.
    pub unitary_residual: f64,
    /// Max allowed `|Σ Eᵢ†Eᵢ - I|` entry for a generalized measurement.
    pub completeness_residual: f64,
    /// Eigenvalues above this threshold count as part of the support.
    pub support_cutoff: f64,
    /// Slack allowed on majorization partial sums and totals.
    pub majorization_slack: f64,
    /// Spectrum entries in `[-spectrum_floor, 0)` are clamped to zero.
    pub spectrum_floor: f64,
    /// Coordinates this close to their target are snapped during T-transform
    /// chain construction.
    pub chain_snap: f64,
    /// Permutation-mixture weights below this are pruned (then renormalized).
    pub mixture_prune: f64,
    /// Jacobi eigensolver stops once the largest off-diagonal modulus is
    /// below this.
    pub jacobi_off_diagonal: f64,
    /// Sweep cap for the Jacobi eigensolver.
    pub jacobi_max_sweeps: usize,
    /// Residual below which a brute-force grid search accepts a witness.
    pub grid_acceptance: f64,
    /// Outcome probabilities at or below this count as null outcomes.
    pub zero_probability: f64,
}

impl Tolerances {
    /// The default thresholds.
    pub const DEFAULT: Tolerances = Tolerances {
        hermitian_symmetry: 1e-10,
        trace_one: 1e-10,
        psd_floor: 1e-10,
        unitary_residual: 1e-9,
        completeness_residual: 1e-9,
        support_cutoff: 1e-10,
        majorization_slack: 1e-9,
        spectrum_floor: 1e-12,
        chain_snap: 1e-11,
        mixture_prune: 1e-12,
        jacobi_off_diagonal: 1e-12,
        jacobi_max_sweeps: 100,
        grid_acceptance: 1e-6,
        zero_probability: 1e-12,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}
