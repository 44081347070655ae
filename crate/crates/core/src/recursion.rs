//! Series coefficients of the radial ansatz.
//!
//! Both radial functions are products of the r → 0 and r → ∞ asymptotics
//! with a power series,
//!
//! ```text
//! F(r) = r^γ exp(-a r²/2) Σ αₙ rⁿ,   G(r) = r^γ exp(-a r²/2) Σ βₙ rⁿ,
//! ```
//!
//! and the coupled first-order system turns the coefficients into a chain:
//! β₀ follows from α₀, α₁ from the n = 1 equations, every later βₙ from
//! (αₙ, αₙ₋₁), and the αₙ obey a three-term recursion. Everything here is a
//! pure function of (E, a) and the physical parameters; the solver and the
//! shooting oracle both build on these and on nothing else of each other.

use crate::error::{QesError, Result};
use crate::params::{Gamma, Params};

/// Relative size below which a trailing coefficient counts as zero when
/// testing termination. The scale is max(1, running max |α_k|) so the
/// criterion survives coefficient growth.
pub const TERMINATION_RELATIVE_THRESHOLD: f64 = 1e-10;

/// Normalization adopted throughout: the series start at α₀ = 1.
pub const ALPHA0: f64 = 1.0;

/// β₀ in terms of α₀ = 1.
///
/// Two closed forms exist, Zα/(γ+l+1/2) and −(γ−l−1/2)/Zα; they agree
/// identically because γ² = (l+1/2)² − (Zα)². Both are evaluated and the
/// better-conditioned quotient form is returned after a cross-check.
pub fn beta0_from_alpha0(params: &Params, gamma: &Gamma) -> Result<f64> {
    let z = params.z_alpha();
    let gg = gamma.big_gamma(params);
    if gg == 0.0 {
        // Impossible for Zα > 0; γ + l + 1/2 only vanishes at Zα = 0, l < 0.
        return Err(QesError::Internal(
            "γ + l + 1/2 vanished for valid parameters".into(),
        ));
    }
    let primary = z / gg * ALPHA0;
    let alternate = -(gamma.value() - params.j()) / z * ALPHA0;
    let scale = primary.abs().max(alternate.abs()).max(1e-300);
    if ((primary - alternate) / scale).abs() > 1e-12 {
        return Err(QesError::Internal(format!(
            "β₀ closed forms disagree: {primary} vs {alternate}"
        )));
    }
    Ok(primary)
}

/// α₁ in terms of α₀ = 1, from the n = 1 pair of coupled equations:
///
/// ```text
/// α₁ = -Zα [Γ(E-m) + (Γ+1)(E+m)] / [(2γ+1) Γ],    Γ = γ + l + 1/2.
/// ```
pub fn alpha1(params: &Params, gamma: &Gamma, energy: f64) -> f64 {
    let z = params.z_alpha();
    let m = params.m();
    let g = gamma.value();
    let gg = gamma.big_gamma(params);
    let bracket = gg * (energy - m) + (gg + 1.0) * (energy + m);
    -z * bracket / ((2.0 * g + 1.0) * gg) * ALPHA0
}

/// βₙ for n ≥ 1 from (αₙ, αₙ₋₁):
///
/// ```text
/// βₙ = [Zα αₙ + (E-m) αₙ₋₁] / (n + γ + l + 1/2).
/// ```
pub fn beta_n(
    n: usize,
    alpha_n: f64,
    alpha_prev: f64,
    energy: f64,
    params: &Params,
    gamma: &Gamma,
) -> f64 {
    debug_assert!(n >= 1);
    let denom = n as f64 + gamma.big_gamma(params);
    // Γ >= -1/2 for every admissible l, so the denominator is >= 1/2.
    debug_assert!(denom > 0.0);
    (params.z_alpha() * alpha_n + (energy - params.m()) * alpha_prev) / denom
}

/// αₙ for n ≥ 2 from the three-term recursion
///
/// ```text
/// (n-1+Γ)(n² + 2nγ) αₙ
///   + Zα [(n-1+Γ)(E-m) + (n+Γ)(E+m)] αₙ₋₁
///   + (n+Γ) [E² - m² - 2a(n-1+Γ)] αₙ₋₂ = 0.
/// ```
pub fn alpha_n_recursion(
    n: usize,
    alpha_prev: f64,
    alpha_prev2: f64,
    energy: f64,
    field_param: f64,
    params: &Params,
    gamma: &Gamma,
) -> Result<f64> {
    debug_assert!(n >= 2);
    let nf = n as f64;
    let g = gamma.value();
    let gg = gamma.big_gamma(params);
    let m = params.m();

    let leading = (nf - 1.0 + gg) * (nf * nf + 2.0 * nf * g);
    if leading == 0.0 || !leading.is_finite() {
        return Err(QesError::DegenerateRecursion { n, factor: leading });
    }
    let middle = params.z_alpha()
        * ((nf - 1.0 + gg) * (energy - m) + (nf + gg) * (energy + m));
    let last = (nf + gg)
        * (energy * energy - m * m - 2.0 * field_param * (nf - 1.0 + gg));
    Ok(-(middle * alpha_prev + last * alpha_prev2) / leading)
}

/// Residual of the three-term recursion for a candidate αₙ, together with
/// the magnitude scale of its terms. Used by the invariant tests.
pub fn recursion_residual(
    n: usize,
    alpha_n: f64,
    alpha_prev: f64,
    alpha_prev2: f64,
    energy: f64,
    field_param: f64,
    params: &Params,
    gamma: &Gamma,
) -> (f64, f64) {
    let nf = n as f64;
    let g = gamma.value();
    let gg = gamma.big_gamma(params);
    let m = params.m();
    let t1 = (nf - 1.0 + gg) * (nf * nf + 2.0 * nf * g) * alpha_n;
    let t2 = params.z_alpha()
        * ((nf - 1.0 + gg) * (energy - m) + (nf + gg) * (energy + m))
        * alpha_prev;
    let t3 = (nf + gg)
        * (energy * energy - m * m - 2.0 * field_param * (nf - 1.0 + gg))
        * alpha_prev2;
    let scale = t1.abs().max(t2.abs()).max(t3.abs());
    (t1 + t2 + t3, scale)
}

/// The full coefficient table of a candidate (E, a).
#[derive(Debug, Clone)]
pub struct CoefficientTable {
    alphas: Vec<f64>,
    betas: Vec<f64>,
    gamma: Gamma,
    params: Params,
    energy: f64,
    field_param: f64,
}

impl CoefficientTable {
    /// Builds α₀..α_N and β₀..β_N through the chain β₀ → α₁ → (three-term
    /// recursion) → βₙ. Deterministic in all inputs.
    pub fn build(params: &Params, energy: f64, field_param: f64, max_order: usize) -> Result<Self> {
        Self::build_scaled(params, energy, field_param, max_order, ALPHA0)
    }

    /// Same as [`CoefficientTable::build`] but with an arbitrary nonzero α₀;
    /// every entry is proportional to it.
    pub fn build_scaled(
        params: &Params,
        energy: f64,
        field_param: f64,
        max_order: usize,
        alpha0: f64,
    ) -> Result<Self> {
        if max_order < 2 {
            return Err(QesError::Config(format!(
                "table order must be >= 2, got {max_order}"
            )));
        }
        if !(field_param >= 0.0) {
            return Err(QesError::Config(format!(
                "field parameter a must be >= 0, got {field_param}"
            )));
        }
        let gamma = Gamma::compute(params)?;
        let mut alphas = Vec::with_capacity(max_order + 1);
        let mut betas = Vec::with_capacity(max_order + 1);

        alphas.push(alpha0);
        betas.push(beta0_from_alpha0(params, &gamma)? * alpha0);
        alphas.push(alpha1(params, &gamma, energy) * alpha0);
        betas.push(beta_n(1, alphas[1], alphas[0], energy, params, &gamma));

        for n in 2..=max_order {
            let a_n = alpha_n_recursion(
                n,
                alphas[n - 1],
                alphas[n - 2],
                energy,
                field_param,
                params,
                &gamma,
            )?;
            alphas.push(a_n);
            betas.push(beta_n(n, alphas[n], alphas[n - 1], energy, params, &gamma));
        }

        Ok(Self {
            alphas,
            betas,
            gamma,
            params: *params,
            energy,
            field_param,
        })
    }

    pub fn alphas(&self) -> &[f64] {
        &self.alphas
    }

    pub fn betas(&self) -> &[f64] {
        &self.betas
    }

    pub fn gamma(&self) -> &Gamma {
        &self.gamma
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    /// a = eB/2, the parameter of the Gaussian tail exp(-a r²/2).
    pub fn field_param(&self) -> f64 {
        self.field_param
    }

    pub fn max_order(&self) -> usize {
        self.alphas.len() - 1
    }

    /// max(1, max |α_k|) over k ≤ upto — the scale for termination checks.
    pub fn alpha_scale(&self, upto: usize) -> f64 {
        let upto = upto.min(self.max_order());
        self.alphas[..=upto]
            .iter()
            .fold(1.0_f64, |acc, a| acc.max(a.abs()))
    }

    /// Whether the α series terminates at index `n`: |α_k| below the relative
    /// threshold for all k in n..=max_order.
    pub fn terminates_at(&self, n: usize) -> bool {
        let tol = TERMINATION_RELATIVE_THRESHOLD * self.alpha_scale(self.max_order());
        self.alphas[n.min(self.max_order())..]
            .iter()
            .all(|a| a.abs() <= tol)
    }
}
