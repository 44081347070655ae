//! Physical configuration and the indicial exponent derived from it.

use crate::error::{QesError, Result};

/// Coupling and quantum numbers of the bound electron.
///
/// `z_alpha` is the dimensionless Coulomb coupling Zα, `l` the integer
/// angular number of the upper spinor component, and `m` the electron mass.
/// Only the conserved combination j = l + 1/2 is physical; `l` itself labels
/// the ansatz.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    z_alpha: f64,
    l: i32,
    m: f64,
}

impl Params {
    /// Strict constructor: requires 0 < Zα < 1/2 and m > 0.
    ///
    /// Couplings at or above 1/2 make the radial solution oscillate as
    /// r → 0 for l = 0, −1 and the power-law ansatz breaks down. Zα = 0 is
    /// excluded as well: the lower-component seed β₀ vanishes identically
    /// there and the coupled ansatz degenerates.
    pub fn new(z_alpha: f64, l: i32, m: f64) -> Result<Self> {
        if !z_alpha.is_finite() || z_alpha <= 0.0 || z_alpha >= 0.5 {
            return Err(QesError::InvalidParams(format!(
                "need 0 < Zα < 1/2, got Zα = {z_alpha}"
            )));
        }
        if !m.is_finite() || m <= 0.0 {
            return Err(QesError::InvalidParams(format!("need m > 0, got m = {m}")));
        }
        Ok(Self { z_alpha, l, m })
    }

    /// Unit-mass convenience constructor.
    pub fn unit_mass(z_alpha: f64, l: i32) -> Result<Self> {
        Self::new(z_alpha, l, 1.0)
    }

    pub fn z_alpha(&self) -> f64 {
        self.z_alpha
    }

    pub fn l(&self) -> i32 {
        self.l
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    /// Conserved total angular momentum eigenvalue j = l + 1/2.
    pub fn j(&self) -> f64 {
        self.l as f64 + 0.5
    }
}

/// Indicial exponent γ = √((l+1/2)² − (Zα)²) of the radial solutions at
/// r → 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Gamma {
    value: f64,
}

impl Gamma {
    /// Computes γ for the given parameters.
    ///
    /// Guards against Zα ≥ |l + 1/2| even though valid [`Params`] cannot
    /// reach it (Zα < 1/2 ≤ |l + 1/2|).
    pub fn compute(params: &Params) -> Result<Self> {
        let j = params.j();
        let z = params.z_alpha();
        let disc = j * j - z * z;
        if disc <= 0.0 {
            return Err(QesError::InvalidParams(format!(
                "Zα = {z} >= |l + 1/2| = {}; radial exponent would be imaginary",
                j.abs()
            )));
        }
        Ok(Self { value: disc.sqrt() })
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    /// Γ = γ + l + 1/2, the combination the recursions are written in.
    /// Negative (in [−1/2, 0)) for l < 0, positive for l ≥ 0.
    pub fn big_gamma(&self, params: &Params) -> f64 {
        self.value + params.j()
    }
}
