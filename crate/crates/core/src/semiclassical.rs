//! Zero-field exact spectrum and the weak-field semiclassical limits.
//!
//! These cover the other side of the problem: the 0 < E < m bound states of
//! the pure Coulomb field and their linear Zeeman splitting in a weak
//! magnetic field, obtained from the WKB quantization of the radial action.
//! Unlike the terminating-series solvers, the formulas remain meaningful up
//! to and including Zα = 1/2, so couplings are validated against (0, 1/2]
//! here.

use crate::error::{QesError, Result};

/// Which formula family produced a level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    ZeroField,
    WeakField,
    NonRelativistic,
}

impl Regime {
    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::ZeroField => "zero_field",
            Regime::WeakField => "weak_field",
            Regime::NonRelativistic => "nonrelativistic",
        }
    }
}

/// A weak-field or zero-field level.
#[derive(Debug, Clone, Copy)]
pub struct SemiclassicalLevel {
    pub n_r: u32,
    pub l: i32,
    pub energy: f64,
    pub field_param: f64,
    pub regime: Regime,
}

fn check_coupling(z_alpha: f64) -> Result<()> {
    if !z_alpha.is_finite() || z_alpha <= 0.0 || z_alpha > 0.5 {
        return Err(QesError::InvalidParams(format!(
            "semiclassical formulas need 0 < Zα <= 1/2, got {z_alpha}"
        )));
    }
    Ok(())
}

fn check_mass(m: f64) -> Result<()> {
    if !(m > 0.0) {
        return Err(QesError::InvalidParams(format!("need m > 0, got {m}")));
    }
    Ok(())
}

/// Radial quantum number range: n_r ≥ 0 for l ≥ 0 but n_r ≥ 1 for l < 0.
fn check_range_rule(n_r: u32, l: i32) -> Result<()> {
    if l < 0 && n_r == 0 {
        return Err(QesError::FormulaDomain(format!(
            "n_r = 0 is not in the spectrum for l = {l} < 0"
        )));
    }
    Ok(())
}

/// √((l+1/2)² − (Zα)²), the zero-field indicial exponent. Zero is allowed
/// here (it happens at Zα = 1/2, l ∈ {0, -1}).
fn coulomb_gamma(z_alpha: f64, l: i32) -> Result<f64> {
    let j = l as f64 + 0.5;
    let disc = j * j - z_alpha * z_alpha;
    if disc < 0.0 {
        return Err(QesError::InvalidParams(format!(
            "Zα = {z_alpha} exceeds |l + 1/2| = {}",
            j.abs()
        )));
    }
    Ok(disc.sqrt())
}

/// The shared bracket factor [1 + (Zα)²/(n_r + γ)²]^(-1/2).
fn coulomb_bracket(z_alpha: f64, l: i32, n_r: u32) -> Result<f64> {
    let g = coulomb_gamma(z_alpha, l)?;
    let denom = n_r as f64 + g;
    Ok((1.0 + (z_alpha / denom).powi(2)).powf(-0.5))
}

/// Zero-field Coulomb spectrum, E = m [1 + (Zα)²/(n_r + γ)²]^(-1/2).
///
/// The ground level (n_r = l = 0) reduces to m√(1 − (2Zα)²) and reaches
/// zero exactly at Zα = 1/2, where the point-charge problem loses meaning.
pub fn coulomb_spectrum(z_alpha: f64, l: i32, m: f64, n_r: u32) -> Result<f64> {
    check_coupling(z_alpha)?;
    check_mass(m)?;
    check_range_rule(n_r, l)?;
    Ok(m * coulomb_bracket(z_alpha, l, n_r)?)
}

/// Weak-field spectrum for l ≠ 0:
/// E = [m + (eB/2m)(l+1/2)] · [1 + (Zα)²/(n_r + γ)²]^(-1/2), eB = 2a.
///
/// At a = 0 this is bit-identical to [`coulomb_spectrum`] because the same
/// bracket factor is multiplied by exactly m. The Zeeman shift is linear in
/// the field with slope set by the "magnetic quantum number" l + 1/2.
pub fn weak_field_spectrum(z_alpha: f64, l: i32, m: f64, n_r: u32, a: f64) -> Result<f64> {
    if l == 0 {
        return Err(QesError::FormulaDomain(
            "the weak-field formula is stated for l != 0 only".into(),
        ));
    }
    check_coupling(z_alpha)?;
    check_mass(m)?;
    check_range_rule(n_r, l)?;
    if !(a >= 0.0) {
        return Err(QesError::InvalidParams(format!("need a >= 0, got {a}")));
    }
    let zeeman = m + (a / m) * (l as f64 + 0.5);
    Ok(zeeman * coulomb_bracket(z_alpha, l, n_r)?)
}

/// Nonrelativistic spectrum,
/// E = -(Zα)² m / (2 (n_r + |l+1/2|)²) + (eB/2m)(l+1/2).
pub fn nonrel_spectrum(z_alpha: f64, l: i32, m: f64, n_r: u32, a: f64) -> Result<f64> {
    check_coupling(z_alpha)?;
    check_mass(m)?;
    check_range_rule(n_r, l)?;
    let nn = n_r as f64 + (l as f64 + 0.5).abs();
    Ok(-z_alpha * z_alpha * m / (2.0 * nn * nn) + (a / m) * (l as f64 + 0.5))
}

/// Magnetic length l_B = 1/√(eB) = 1/√(2a).
pub fn magnetic_length(a: f64) -> f64 {
    (2.0 * a).sqrt().recip()
}

/// Bohr radius of the hydrogen-like atom, 1/(Zα m).
pub fn bohr_radius(z_alpha: f64, m: f64) -> f64 {
    (z_alpha * m).recip()
}

/// Critical field parameter a_cr = (Zα)² m²/2, at which the magnetic length
/// equals the Bohr radius.
pub fn critical_field_param(z_alpha: f64, m: f64) -> f64 {
    0.5 * (z_alpha * m).powi(2)
}

/// Whether a is deep in the weak-field regime (two decades under a_cr).
pub fn is_weak_field(z_alpha: f64, m: f64, a: f64) -> bool {
    a <= 1e-2 * critical_field_param(z_alpha, m)
}

/// The semiclassical momentum-squared Q(r). With `keep_field_sq` the exact
/// -(eBr)²/4 confining term is retained; the quantization integral drops it,
/// matching the closed form the spectrum was derived from.
#[allow(clippy::too_many_arguments)]
pub fn action_integrand(
    z_alpha: f64,
    l: i32,
    m: f64,
    energy: f64,
    a: f64,
    r: f64,
    keep_field_sq: bool,
) -> f64 {
    let j = l as f64 + 0.5;
    let mut q = energy * energy - m * m - 2.0 * a * j + 2.0 * energy * z_alpha / r
        + (z_alpha * z_alpha - j * j) / (r * r);
    if keep_field_sq {
        q -= (a * r).powi(2);
    }
    q
}

/// The two positive turning points of Q (field-squared term dropped).
pub fn turning_points(z_alpha: f64, l: i32, m: f64, energy: f64, a: f64) -> Result<(f64, f64)> {
    let j = l as f64 + 0.5;
    // Q = (-A r² + 2B r - C)/r².
    let big_a = m * m + 2.0 * a * j - energy * energy;
    let big_b = energy * z_alpha;
    let big_c = j * j - z_alpha * z_alpha;
    if !(big_a > 0.0) || !(big_b > 0.0) {
        return Err(QesError::FormulaDomain(format!(
            "no bound classical region: A = {big_a}, B = {big_b}"
        )));
    }
    let disc = big_b * big_b - big_a * big_c;
    if disc <= 0.0 {
        return Err(QesError::FormulaDomain(
            "turning points are complex: no classically allowed region".into(),
        ));
    }
    let root = disc.sqrt();
    Ok(((big_b - root) / big_a, (big_b + root) / big_a))
}

/// ∫ √Q dr between the turning points (field-squared term dropped), by the
/// trigonometric substitution r = c + h sinθ that absorbs the square-root
/// endpoint singularities, then composite Simpson in θ.
pub fn quantization_integral(
    z_alpha: f64,
    l: i32,
    m: f64,
    energy: f64,
    a: f64,
) -> Result<f64> {
    let (r_lo, r_hi) = turning_points(z_alpha, l, m, energy, a)?;
    let big_a = m * m + 2.0 * a * (l as f64 + 0.5) - energy * energy;
    let c = 0.5 * (r_hi + r_lo);
    let h = 0.5 * (r_hi - r_lo);
    // √Q = √A √((r-r_lo)(r_hi-r)) / r, so the integrand in θ is
    // √A h² cos²θ / (c + h sinθ), smooth on [-π/2, π/2].
    let integrand = |theta: f64| {
        let cos = theta.cos();
        big_a.sqrt() * h * h * cos * cos / (c + h * theta.sin())
    };
    let n = 4000usize;
    let step = std::f64::consts::PI / n as f64;
    let mut acc = integrand(-std::f64::consts::FRAC_PI_2) + integrand(std::f64::consts::FRAC_PI_2);
    for i in 1..n {
        let theta = -std::f64::consts::FRAC_PI_2 + step * i as f64;
        acc += integrand(theta) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    Ok(acc * step / 3.0)
}
