//! Real-root extraction for small dense polynomials.
//!
//! Node counting works on the exact stored series coefficients, so the roots
//! of interest come from polynomials of low degree with ordinary scaling.
//! Eigenvalues of the companion matrix are accurate and multiplicity-aware
//! at these sizes.

use nalgebra::DMatrix;

/// Imaginary part below this (relative to 1 + |λ|) counts as real.
const IM_TOL: f64 = 1e-7;

/// Roots smaller than this in magnitude (relative to the coefficient scale)
/// are treated as sitting at the origin, i.e. not strictly positive.
const POS_TOL: f64 = 1e-9;

/// Strips trailing near-zero coefficients. `coeffs[k]` multiplies x^k.
fn trim(coeffs: &[f64]) -> Vec<f64> {
    let scale = coeffs.iter().fold(0.0_f64, |acc, c| acc.max(c.abs()));
    if scale == 0.0 {
        return vec![];
    }
    let mut out: Vec<f64> = coeffs.to_vec();
    while let Some(&last) = out.last() {
        if last.abs() <= 1e-12 * scale && out.len() > 1 {
            out.pop();
        } else {
            break;
        }
    }
    out
}

/// All real roots (with multiplicity) of Σ coeffs[k] x^k.
pub fn real_roots(coeffs: &[f64]) -> Vec<f64> {
    let c = trim(coeffs);
    let deg = c.len().saturating_sub(1);
    if deg == 0 {
        return vec![];
    }
    if deg == 1 {
        return vec![-c[0] / c[1]];
    }
    // Companion matrix of the monic polynomial.
    let lead = c[deg];
    let mut m = DMatrix::<f64>::zeros(deg, deg);
    for i in 1..deg {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..deg {
        m[(i, deg - 1)] = -c[i] / lead;
    }
    let eig = m.complex_eigenvalues();
    let mut roots: Vec<f64> = eig
        .iter()
        .filter(|ev| ev.im.abs() <= IM_TOL * (1.0 + ev.re.abs()))
        .map(|ev| ev.re)
        .collect();
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots
}

/// Strictly positive real roots (with multiplicity).
pub fn positive_real_roots(coeffs: &[f64]) -> Vec<f64> {
    real_roots(coeffs)
        .into_iter()
        .filter(|r| *r > POS_TOL)
        .collect()
}

/// Number of strictly positive real roots, counted with multiplicity.
pub fn count_positive_roots(coeffs: &[f64]) -> usize {
    positive_real_roots(coeffs).len()
}
