//! Numerical tolerances shared by every module.
//!
//! All thresholds live in one record so that callers (and the CLI) can
//! override them consistently.

/// Tolerance record. Absolute tolerances are scaled by the relevant matrix
/// norm where the comparison is between matrices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Generic matrix comparison, scaled by the Frobenius norm.
    pub matrix: f64,
    /// Unitarity check applied to gate inputs.
    pub unitary: f64,
    /// Schmidt rank threshold, relative to the sum of the Schmidt vector.
    pub rank: f64,
    /// Hermiticity / PSD / trace checks on density matrices.
    pub state: f64,
    /// Distance from the hull boundary that still counts as a boundary
    /// perfect entangler.
    pub pe_boundary: f64,
    /// Chamber membership and orbit comparisons of interaction content.
    pub chamber: f64,
    /// Componentwise agreement of canonical interaction content.
    pub local_equivalence: f64,
    /// Agreement between the analytic and SVD Schmidt vectors.
    pub self_check: f64,
    /// Slack on the complete-positivity inequalities.
    pub cp: f64,
    /// Slack on the unistochasticity inequalities.
    pub unistochastic: f64,
    /// Largest matrix dimension a tensor product may produce.
    pub dimension_cap: usize,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        matrix: 1e-10,
        unitary: 1e-8,
        rank: 1e-10,
        state: 1e-8,
        pe_boundary: 1e-9,
        chamber: 1e-9,
        local_equivalence: 1e-7,
        self_check: 1e-6,
        cp: 1e-12,
        unistochastic: 1e-10,
        dimension_cap: 4096,
    };
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}
