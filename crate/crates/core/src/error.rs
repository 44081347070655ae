//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, QesError>;

/// Everything that can go wrong while building or verifying a spectrum.
#[derive(Debug, Clone, Error)]
pub enum QesError {
    /// Physical parameters outside the admissible domain.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// Requested energy lies inside the mass gap; the terminating ansatz
    /// only covers |E| >= m.
    #[error("|E| = {energy_abs} is below the mass m = {mass}; no terminating solution there")]
    SubMassEnergy { energy_abs: f64, mass: f64 },

    /// The quadratic for the n = 2 energies degenerates at this coupling.
    #[error("coupling Zα = {z_alpha} sits at the n=2 critical value {critical} for l = {l}; no polynomial solution")]
    CriticalCoupling { l: i32, z_alpha: f64, critical: f64 },

    /// No critical coupling exists in (0, 1/2) for this angular number.
    #[error("no n=2 critical coupling in (0, 1/2) for l = {l}")]
    NoCritical { l: i32 },

    /// Leading coefficient of the three-term recursion vanished.
    #[error("degenerate recursion at order {n}: leading factor {factor}")]
    DegenerateRecursion { n: usize, factor: f64 },

    /// Leading polynomial coefficient too small to form the node ratios.
    #[error("leading coefficient {value} too small for node-ratio analysis")]
    DegenerateLeadingCoefficient { value: f64 },

    /// A formula was asked for outside its stated domain.
    #[error("formula domain violation: {0}")]
    FormulaDomain(String),

    /// Bad scan or shooting configuration.
    #[error("configuration error: {0}")]
    Config(String),

    /// Numerical integration could not proceed.
    #[error("integration failure at r = {r}: {reason}")]
    Integration { r: f64, reason: String },

    /// Iterative solver did not converge.
    #[error("solver failed to converge: {0}")]
    NonConvergence(String),

    /// Internal consistency check failed; indicates a bug, not bad input.
    #[error("internal error: {0}")]
    Internal(String),
}
