//! Radial profiles of solved levels: closed-form evaluation, norms and the
//! nodal structure of the polynomial parts.

use crate::error::{QesError, Result};
use crate::polyroot;
use crate::solver::QesLevel;

/// Horner evaluation of Σ c_k r^k.
fn horner(coeffs: &[f64], r: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c)
}

/// Horner evaluation of the derivative Σ k c_k r^(k-1).
fn horner_deriv(coeffs: &[f64], r: f64) -> f64 {
    let mut acc = 0.0;
    for (k, c) in coeffs.iter().enumerate().skip(1).rev() {
        acc = acc * r + k as f64 * c;
    }
    acc
}

/// Length scale of a level's profile: 1/√a, or 1/m at the a = 0 boundary.
pub fn radial_scale(level: &QesLevel) -> f64 {
    if level.field_param > 0.0 {
        level.field_param.sqrt().recip()
    } else {
        level.params.m().recip()
    }
}

/// (F, G) at radius r from the stored series,
/// F = r^γ exp(-a r²/2) Σ α_k r^k and likewise for G with β.
pub fn evaluate(level: &QesLevel, r: f64) -> Result<(f64, f64)> {
    if !(r > 0.0) {
        return Err(QesError::FormulaDomain(format!(
            "radial evaluation needs r > 0, got {r}"
        )));
    }
    let weight = r.powf(level.gamma.value()) * (-0.5 * level.field_param * r * r).exp();
    Ok((
        weight * horner(level.table.alphas(), r),
        weight * horner(level.table.betas(), r),
    ))
}

/// Scale-normalized residuals of the two coupled radial equations at r,
/// with dF/dr and dG/dr taken analytically from the closed form. Returns
/// the larger of the two.
pub fn ode_residual(level: &QesLevel, r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(QesError::FormulaDomain(format!(
            "residual evaluation needs r > 0, got {r}"
        )));
    }
    let p = &level.params;
    let (z, m, e, a) = (p.z_alpha(), p.m(), level.energy, level.field_param);
    let kappa = p.j();
    let g = level.gamma.value();

    let weight = r.powf(g) * (-0.5 * a * r * r).exp();
    let pf = horner(level.table.alphas(), r);
    let pg = horner(level.table.betas(), r);
    let f = weight * pf;
    let gg = weight * pg;
    let df = weight * (horner_deriv(level.table.alphas(), r) + (g / r - a * r) * pf);
    let dg = weight * (horner_deriv(level.table.betas(), r) + (g / r - a * r) * pg);

    let coeff = kappa / r + a * r;
    let pot_plus = e + m + z / r;
    let pot_minus = e - m + z / r;

    let res_f = df - coeff * f + pot_plus * gg;
    let scale_f = df.abs().max((coeff * f).abs()).max((pot_plus * gg).abs());
    let res_g = dg + coeff * gg - pot_minus * f;
    let scale_g = dg.abs().max((coeff * gg).abs()).max((pot_minus * f).abs());

    let rf = res_f.abs() / scale_f.max(1e-300);
    let rg = res_g.abs() / scale_g.max(1e-300);
    Ok(rf.max(rg))
}

/// A sampled radial profile with its quadrature norm.
#[derive(Debug, Clone)]
pub struct RadialProfile {
    pub grid: Vec<f64>,
    pub f_values: Vec<f64>,
    pub g_values: Vec<f64>,
    /// ∫ (|f|² + |g|²) r dr = ∫ (F² + G²) dr over the grid (trapezoid).
    pub norm: f64,
}

/// Samples the profile on a log-spaced grid. Defaults: 2000 points on
/// [1e-4, 12] in units of the radial scale, which resolves both the r^γ
/// region and the Gaussian tail.
pub fn sample_profile(level: &QesLevel, points: usize, lo: f64, hi: f64) -> Result<RadialProfile> {
    if points < 2 || !(lo > 0.0) || !(hi > lo) {
        return Err(QesError::Config(format!(
            "bad profile grid: {points} points on [{lo}, {hi}]"
        )));
    }
    let scale = radial_scale(level);
    let (log_lo, log_hi) = ((lo * scale).ln(), (hi * scale).ln());
    let step = (log_hi - log_lo) / (points - 1) as f64;
    let grid: Vec<f64> = (0..points).map(|i| (log_lo + step * i as f64).exp()).collect();
    let mut f_values = Vec::with_capacity(points);
    let mut g_values = Vec::with_capacity(points);
    for &r in &grid {
        let (f, g) = evaluate(level, r)?;
        f_values.push(f);
        g_values.push(g);
    }
    let norm = trapezoid_norm(&grid, &f_values, &g_values, f64::INFINITY);
    Ok(RadialProfile {
        grid,
        f_values,
        g_values,
        norm,
    })
}

pub fn default_profile(level: &QesLevel) -> Result<RadialProfile> {
    sample_profile(level, 2000, 1e-4, 12.0)
}

/// Trapezoid quadrature of F² + G² restricted to grid points ≤ r_cut.
/// Sharing one grid between cutoffs isolates the genuine tail contribution
/// when testing norm convergence.
pub fn trapezoid_norm(grid: &[f64], f: &[f64], g: &[f64], r_cut: f64) -> f64 {
    let mut acc = 0.0;
    for i in 1..grid.len() {
        if grid[i] > r_cut {
            break;
        }
        let h = grid[i] - grid[i - 1];
        let d0 = f[i - 1] * f[i - 1] + g[i - 1] * g[i - 1];
        let d1 = f[i] * f[i] + g[i] * g[i];
        acc += 0.5 * h * (d0 + d1);
    }
    acc
}

/// Node counts (strictly positive real zeros, with multiplicity) of the
/// polynomial parts of F and G.
///
/// At a terminated level the F polynomial has degree n-1 and the G
/// polynomial degree n; counting on the exact stored coefficients rather
/// than grid sign changes keeps multiple and near-boundary zeros honest.
pub fn count_nodes(level: &QesLevel) -> (usize, usize) {
    let n = level.n;
    let f_poly = &level.table.alphas()[..n];
    let g_poly = &level.table.betas()[..=n];
    (
        polyroot::count_positive_roots(f_poly),
        polyroot::count_positive_roots(g_poly),
    )
}

/// Node positions of F's polynomial part, for cross-checks against the
/// integrated profile.
pub fn f_node_positions(level: &QesLevel) -> Vec<f64> {
    polyroot::positive_real_roots(&level.table.alphas()[..level.n])
}

/// The coefficient ratios (α₁/α₂, α₀/α₂) that control the n = 3 nodal
/// structure near |E| = m.
pub fn node_ratios_n3(level: &QesLevel) -> Result<(f64, f64)> {
    if level.n != 3 {
        return Err(QesError::FormulaDomain(format!(
            "node ratios are an n = 3 diagnostic, level has n = {}",
            level.n
        )));
    }
    let a = level.table.alphas();
    let scale = level.table.alpha_scale(2);
    if a[2].abs() <= 1e-12 * scale {
        return Err(QesError::DegenerateLeadingCoefficient { value: a[2] });
    }
    Ok((a[1] / a[2], a[0] / a[2]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::Params;
    use crate::solver::{solve_n1, solve_n2, solve_n3};
    use approx::assert_relative_eq;

    fn n1_level() -> QesLevel {
        solve_n1(&Params::unit_mass(0.3, -1).unwrap())
            .unwrap()
            .remove(0)
    }

    #[test]
    fn leading_behaviour_at_origin() {
        let lvl = n1_level();
        let r = 1e-9;
        let (f, _) = evaluate(&lvl, r).unwrap();
        assert_relative_eq!(f / r.powf(0.4), 1.0, max_relative = 1e-8);
    }

    #[test]
    fn rejects_nonpositive_radius() {
        let lvl = n1_level();
        assert!(evaluate(&lvl, 0.0).is_err());
        assert!(evaluate(&lvl, -1.0).is_err());
    }

    #[test]
    fn closed_form_solves_the_radial_system() {
        // Pointwise residual of both first-order equations stays at the
        // floating floor across the whole sampling window.
        let mut levels = vec![n1_level()];
        levels.extend(solve_n2(&Params::unit_mass(0.2, 0).unwrap()).unwrap());
        levels.extend(solve_n3(&Params::unit_mass(0.1, 1).unwrap()).unwrap());
        for lvl in &levels {
            let scale = radial_scale(lvl);
            for i in 0..60 {
                let r = scale * 1e-3 * (10.0f64 / 1e-3).powf(i as f64 / 59.0);
                let res = ode_residual(lvl, r).unwrap();
                assert!(
                    res <= 1e-8,
                    "residual {res:.2e} at r = {r} for n = {}",
                    lvl.n
                );
            }
        }
    }

    #[test]
    fn norm_is_tail_converged() {
        // The Gaussian factor makes everything past 10/√a irrelevant: the
        // norm grows by less than 1e-10 relative between R = 10/√a and
        // R = 15/√a on a shared grid.
        for lvl in [n1_level()]
            .into_iter()
            .chain(solve_n2(&Params::unit_mass(0.3, 0).unwrap()).unwrap())
        {
            let profile = sample_profile(&lvl, 2500, 1e-4, 15.0).unwrap();
            let scale = radial_scale(&lvl);
            let at_10 = trapezoid_norm(
                &profile.grid,
                &profile.f_values,
                &profile.g_values,
                10.0 * scale,
            );
            let at_15 = trapezoid_norm(
                &profile.grid,
                &profile.f_values,
                &profile.g_values,
                15.0 * scale,
            );
            assert!(at_10 > 0.0 && at_15.is_finite());
            assert!((at_15 - at_10).abs() / at_15 < 1e-10);
        }
    }

    #[test]
    fn g_polynomial_is_one_degree_higher() {
        let mut levels = vec![n1_level()];
        for z in [0.1, 0.2, 0.3] {
            for l in [-2, -1, 0, 1] {
                levels.extend(solve_n2(&Params::unit_mass(z, l).unwrap()).unwrap());
            }
        }
        for lvl in &levels {
            let n = lvl.n;
            let scale = lvl.table.alpha_scale(n + 1);
            // α_{n-1} is the last nonzero α; β_n the last nonzero β.
            assert!(lvl.table.alphas()[n - 1].abs() > 1e-8 * scale);
            assert!(lvl.table.betas()[n].abs() > 1e-8 * scale);
            assert!(lvl.table.betas()[n + 1].abs() <= 1e-10 * scale);
        }
    }

    #[test]
    fn n2_positive_levels_have_one_node() {
        for z in [0.05, 0.1] {
            for l in [0, 1] {
                let levels = solve_n2(&Params::unit_mass(z, l).unwrap()).unwrap();
                let positive = levels.iter().find(|v| v.energy > 0.0).unwrap();
                let (nf, ng) = count_nodes(positive);
                assert_eq!(nf, 1, "z = {z}, l = {l}");
                assert!(ng <= 2);
            }
        }
    }

    #[test]
    fn n3_node_counts_split_by_angular_sign() {
        for z in [0.05, 0.1] {
            for l in [-2, -1] {
                let levels = solve_n3(&Params::unit_mass(z, l).unwrap()).unwrap();
                let positive = levels.iter().find(|v| v.energy > 0.0).unwrap();
                assert_eq!(count_nodes(positive).0, 1, "z = {z}, l = {l}");
            }
            for l in [0, 1] {
                let levels = solve_n3(&Params::unit_mass(z, l).unwrap()).unwrap();
                let positive = levels.iter().find(|v| v.energy > 0.0).unwrap();
                assert_eq!(count_nodes(positive).0, 2, "z = {z}, l = {l}");
            }
        }
    }

    #[test]
    fn n3_ratio_signs_near_the_mass_shell() {
        for l in [0, 1] {
            let levels = solve_n3(&Params::unit_mass(0.05, l).unwrap()).unwrap();
            let positive = levels.iter().find(|v| v.energy > 0.0).unwrap();
            let (r12, r02) = node_ratios_n3(positive).unwrap();
            assert!(r12 < 0.0, "α₁/α₂ should be negative for l = {l}");
            assert!(r02 > 0.0, "α₀/α₂ should be positive for l = {l}");
            assert!(r12 * r12 > 4.0 * r02, "two positive zeros need discriminant");
        }
        for l in [-2, -1] {
            let levels = solve_n3(&Params::unit_mass(0.05, l).unwrap()).unwrap();
            let positive = levels.iter().find(|v| v.energy > 0.0).unwrap();
            let (_, r02) = node_ratios_n3(positive).unwrap();
            assert!(r02 < 0.0, "α₀/α₂ should be negative for l = {l}");
        }
    }

    #[test]
    fn ratio_limits_track_the_low_energy_forms() {
        // α₁/α₂ → -E Zα / a and α₀/α₂ → -(2γ+1)Γ/(2 E Zα (Γ+1)) · (α₁/α₂)
        // as E → m.
        let p = Params::unit_mass(0.03, 0).unwrap();
        let levels = solve_n3(&p).unwrap();
        let lvl = levels.iter().find(|v| v.energy > 0.0).unwrap();
        let (r12, r02) = node_ratios_n3(lvl).unwrap();
        let gg = lvl.gamma.big_gamma(&p);
        let expected_r12 = -lvl.energy * p.z_alpha() / lvl.field_param;
        let expected_r02 = -(2.0 * lvl.gamma.value() + 1.0) * gg
            / (2.0 * lvl.energy * p.z_alpha() * (gg + 1.0))
            * r12;
        assert_relative_eq!(r12, expected_r12, max_relative = 2e-2);
        assert_relative_eq!(r02, expected_r02, max_relative = 2e-2);
    }
}
