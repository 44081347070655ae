//! Independent verification of solved levels by direct integration of the
//! coupled radial system
//!
//! ```text
//! dF/dr = ( (l+1/2)/r + a r ) F - ( E + m + Zα/r ) G
//! dG/dr = -( (l+1/2)/r + a r ) G + ( E - m + Zα/r ) F
//! ```
//!
//! A genuine bound state is a solution that carries the r^γ behaviour from
//! the origin into the Gaussian decay at infinity. The oracle integrates
//! outward from a small-r series seed and inward from a Gaussian tail seed
//! and measures the Wronskian-style mismatch of the two at a matching
//! radius. It shares the raw recursion formulas with the rest of the crate
//! (for the seed) and nothing else: no root-polish or K-evaluation code, so
//! its verdicts are independent of the solver path.

use crate::error::{QesError, Result};
use crate::params::{Gamma, Params};
use crate::recursion;
use crate::solver::QesLevel;
use crate::wavefunction;

/// Matching residual below which a candidate passes as a bound state.
pub const PASS_RESIDUAL: f64 = 1e-6;

/// Allowed relative deviation of the fitted tail exponent from -a/2.
pub const TAIL_BAND: f64 = 0.05;

/// Geometry and tolerances of a shooting run, in units of the radial scale
/// 1/√a.
#[derive(Debug, Clone, Copy)]
pub struct ShootingConfig {
    pub r_min_factor: f64,
    pub r_match_factor: f64,
    pub r_max_factor: f64,
    pub rel_tol: f64,
    pub abs_tol: f64,
}

impl Default for ShootingConfig {
    fn default() -> Self {
        Self {
            r_min_factor: 1e-4,
            r_match_factor: 1.5,
            r_max_factor: 12.0,
            rel_tol: 1e-10,
            abs_tol: 1e-12,
        }
    }
}

impl ShootingConfig {
    fn validate(&self) -> Result<()> {
        if !(self.r_min_factor > 0.0
            && self.r_min_factor < self.r_match_factor
            && self.r_match_factor < self.r_max_factor)
        {
            return Err(QesError::Config(format!(
                "need 0 < r_min < r_match < r_max, got {self:?}"
            )));
        }
        if !(self.rel_tol > 0.0 && self.abs_tol > 0.0) {
            return Err(QesError::Config("tolerances must be positive".into()));
        }
        Ok(())
    }
}

/// Verdict of one shooting run.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub n: usize,
    pub l: i32,
    pub z_alpha: f64,
    pub m: f64,
    pub energy: f64,
    pub field_param: f64,
    /// Normalized mismatch of inward and outward solutions at r_match.
    pub matching_residual: f64,
    /// Fitted coefficient of r² in ln |F| over the outer tail.
    pub tail_slope: f64,
    /// The Gaussian prediction -a/2.
    pub tail_expected: f64,
    pub tail_rel_dev: f64,
    /// Sign changes of F along the matched trajectory.
    pub nodes_f: usize,
    pub pass: bool,
}

#[derive(Clone, Copy)]
struct Radial {
    kappa: f64,
    a: f64,
    z: f64,
    e_plus_m: f64,
    e_minus_m: f64,
}

impl Radial {
    fn new(params: &Params, energy: f64, a: f64) -> Self {
        Self {
            kappa: params.j(),
            a,
            z: params.z_alpha(),
            e_plus_m: energy + params.m(),
            e_minus_m: energy - params.m(),
        }
    }

    #[inline]
    fn rhs(&self, r: f64, y: [f64; 2]) -> [f64; 2] {
        let coeff = self.kappa / r + self.a * r;
        let inv_r = 1.0 / r;
        [
            coeff * y[0] - (self.e_plus_m + self.z * inv_r) * y[1],
            -coeff * y[1] + (self.e_minus_m + self.z * inv_r) * y[0],
        ]
    }
}

/// Dormand–Prince 5(4) step. Returns (y5, error estimate).
#[allow(clippy::excessive_precision)]
fn dp54_step(sys: &Radial, r: f64, y: [f64; 2], h: f64) -> ([f64; 2], [f64; 2]) {
    const C: [f64; 7] = [0.0, 0.2, 0.3, 0.8, 8.0 / 9.0, 1.0, 1.0];
    const A: [[f64; 6]; 7] = [
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        [0.2, 0.0, 0.0, 0.0, 0.0, 0.0],
        [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
        [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
        [
            19372.0 / 6561.0,
            -25360.0 / 2187.0,
            64448.0 / 6561.0,
            -212.0 / 729.0,
            0.0,
            0.0,
        ],
        [
            9017.0 / 3168.0,
            -355.0 / 33.0,
            46732.0 / 5247.0,
            49.0 / 176.0,
            -5103.0 / 18656.0,
            0.0,
        ],
        [
            35.0 / 384.0,
            0.0,
            500.0 / 1113.0,
            125.0 / 192.0,
            -2187.0 / 6784.0,
            11.0 / 84.0,
        ],
    ];
    const B5: [f64; 7] = [
        35.0 / 384.0,
        0.0,
        500.0 / 1113.0,
        125.0 / 192.0,
        -2187.0 / 6784.0,
        11.0 / 84.0,
        0.0,
    ];
    const B4: [f64; 7] = [
        5179.0 / 57600.0,
        0.0,
        7571.0 / 16695.0,
        393.0 / 640.0,
        -92097.0 / 339200.0,
        187.0 / 2100.0,
        1.0 / 40.0,
    ];

    let mut k = [[0.0f64; 2]; 7];
    k[0] = sys.rhs(r, y);
    for s in 1..7 {
        let mut ys = y;
        for (j, kj) in k.iter().enumerate().take(s) {
            ys[0] += h * A[s][j] * kj[0];
            ys[1] += h * A[s][j] * kj[1];
        }
        k[s] = sys.rhs(r + C[s] * h, ys);
    }
    let mut y5 = y;
    let mut y4 = y;
    for (s, ks) in k.iter().enumerate() {
        y5[0] += h * B5[s] * ks[0];
        y5[1] += h * B5[s] * ks[1];
        y4[0] += h * B4[s] * ks[0];
        y4[1] += h * B4[s] * ks[1];
    }
    (y5, [y5[0] - y4[0], y5[1] - y4[1]])
}

/// Adaptive integration from r_start to r_end (either direction), recording
/// every accepted step. The step size is capped so the trajectory is sampled
/// densely enough for node counting.
fn integrate(
    sys: &Radial,
    r_start: f64,
    r_end: f64,
    y0: [f64; 2],
    rel_tol: f64,
    abs_tol: f64,
) -> Result<Vec<(f64, f64, f64)>> {
    let span = r_end - r_start;
    let dir = span.signum();
    let h_max = span.abs() / 200.0;
    let mut h = dir * (span.abs() / 1e4).min(h_max);
    let h_min = span.abs() * 1e-14;

    let mut r = r_start;
    let mut y = y0;
    let mut out = vec![(r, y[0], y[1])];
    let mut steps = 0usize;

    while (r_end - r) * dir > 0.0 {
        if (r_end - r).abs() < h.abs() {
            h = r_end - r;
        }
        if h.abs() < h_min {
            return Err(QesError::Integration {
                r,
                reason: format!(
                    "step size underflow (h = {h:.3e}); coupling too singular near the origin \
                     or r_min too small"
                ),
            });
        }
        steps += 1;
        if steps > 2_000_000 {
            return Err(QesError::Integration {
                r,
                reason: "step budget exhausted".into(),
            });
        }

        let (y_new, err) = dp54_step(sys, r, y, h);
        let mut err_norm = 0.0f64;
        for i in 0..2 {
            let sc = abs_tol + rel_tol * y[i].abs().max(y_new[i].abs());
            err_norm = err_norm.max((err[i] / sc).abs());
        }
        if err_norm <= 1.0 {
            r += h;
            y = y_new;
            out.push((r, y[0], y[1]));
        }
        let factor = if err_norm > 0.0 {
            (0.9 * err_norm.powf(-0.2)).clamp(0.2, 5.0)
        } else {
            5.0
        };
        h = dir * (h.abs() * factor).min(h_max);
    }
    Ok(out)
}

/// Series seed at small r: F ≈ r^γ (α₀ + α₁ r), G ≈ r^γ (β₀ + β₁ r), from
/// the raw recursion closed forms.
fn series_seed(params: &Params, gamma: &Gamma, energy: f64, r: f64) -> Result<[f64; 2]> {
    let b0 = recursion::beta0_from_alpha0(params, gamma)?;
    let a1 = recursion::alpha1(params, gamma, energy);
    let b1 = recursion::beta_n(1, a1, recursion::ALPHA0, energy, params, gamma);
    let w = r.powf(gamma.value());
    Ok([
        w * (recursion::ALPHA0 + a1 * r),
        w * (b0 + b1 * r),
    ])
}

/// Tail seed at large r along the decaying direction. The component ratio
/// G/F → 2 a r / (E + m) follows from the leading balance of the system;
/// the overall scale is irrelevant.
fn tail_seed(params: &Params, energy: f64, a: f64, r: f64) -> [f64; 2] {
    let denom = energy + params.m();
    let (f, g) = if denom.abs() > 1e-12 * params.m() {
        (1.0, 2.0 * a * r / denom)
    } else {
        (0.0, 1.0)
    };
    let norm = f.hypot(g);
    [f / norm, g / norm]
}

/// Outward trajectory of the radial system from the series seed at r_min to
/// r_max. At a true level this reproduces the closed-form profile.
pub fn integrate_radial(
    params: &Params,
    energy: f64,
    a: f64,
    config: &ShootingConfig,
) -> Result<Vec<(f64, f64, f64)>> {
    config.validate()?;
    if !(a > 0.0) {
        return Err(QesError::Config(format!(
            "shooting verification needs a > 0, got a = {a}"
        )));
    }
    let gamma = Gamma::compute(params)?;
    let scale = a.sqrt().recip();
    let r_min = config.r_min_factor * scale;
    let r_max = config.r_max_factor * scale;
    let y0 = series_seed(params, &gamma, energy, r_min)?;
    let sys = Radial::new(params, energy, a);
    integrate(&sys, r_min, r_max, y0, config.rel_tol, config.abs_tol)
}

fn count_sign_changes<'a, I: Iterator<Item = &'a (f64, f64, f64)>>(samples: I) -> usize {
    let mut count = 0usize;
    let mut prev: Option<f64> = None;
    for &(_, f, _) in samples {
        if f == 0.0 {
            continue;
        }
        if let Some(p) = prev {
            if p * f < 0.0 {
                count += 1;
            }
        }
        prev = Some(f);
    }
    count
}

/// Least-squares slope of ln|F| - (γ + deg)·ln r against r² over the outer
/// part of the inward trajectory; the Gaussian tail predicts -a/2.
fn fit_tail_slope(
    inward: &[(f64, f64, f64)],
    r_max: f64,
    gamma_plus_deg: f64,
) -> f64 {
    let (lo, hi) = (0.75 * r_max, 0.95 * r_max);
    let mut pts: Vec<(f64, f64)> = inward
        .iter()
        .filter(|(r, f, _)| *r >= lo && *r <= hi && f.abs() > 0.0)
        .map(|(r, f, _)| (r * r, f.abs().ln() - gamma_plus_deg * r.ln()))
        .collect();
    if pts.len() < 3 {
        return f64::NAN;
    }
    pts.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

/// Shooting verification of an arbitrary (E, a) candidate at termination
/// index n. `n` only enters the tail-exponent correction through the
/// polynomial degree.
pub fn verify_candidate(
    params: &Params,
    n: usize,
    energy: f64,
    a: f64,
    config: &ShootingConfig,
) -> Result<VerificationReport> {
    config.validate()?;
    if !(a > 0.0) {
        return Err(QesError::Config(format!(
            "shooting verification needs a > 0, got a = {a}"
        )));
    }
    let gamma = Gamma::compute(params)?;
    let scale = a.sqrt().recip();
    let r_min = config.r_min_factor * scale;
    let r_match = config.r_match_factor * scale;
    let r_max = config.r_max_factor * scale;

    let sys = Radial::new(params, energy, a);
    let outward = integrate(
        &sys,
        r_min,
        r_match,
        series_seed(params, &gamma, energy, r_min)?,
        config.rel_tol,
        config.abs_tol,
    )?;
    let inward = integrate(
        &sys,
        r_max,
        r_match,
        tail_seed(params, energy, a, r_max),
        config.rel_tol,
        config.abs_tol,
    )?;

    let (_, f_out, g_out) = *outward.last().expect("outward trajectory nonempty");
    let (_, f_in, g_in) = *inward.last().expect("inward trajectory nonempty");
    let det = f_out * g_in - g_out * f_in;
    let residual =
        det.abs() / (f_out.abs().max(g_out.abs()) * f_in.abs().max(g_in.abs())).max(1e-300);

    let tail_slope = fit_tail_slope(&inward, r_max, gamma.value() + n.saturating_sub(1) as f64);
    let tail_expected = -0.5 * a;
    let tail_rel_dev = ((tail_slope - tail_expected) / tail_expected).abs();

    // Nodes: outward sign changes up to the match point, inward ones beyond
    // it (the inward list runs from r_max down, so reverse for orientation).
    let nodes_f =
        count_sign_changes(outward.iter()) + count_sign_changes(inward.iter().rev());

    Ok(VerificationReport {
        n,
        l: params.l(),
        z_alpha: params.z_alpha(),
        m: params.m(),
        energy,
        field_param: a,
        matching_residual: residual,
        tail_slope,
        tail_expected,
        tail_rel_dev,
        nodes_f,
        pass: residual <= PASS_RESIDUAL && tail_rel_dev <= TAIL_BAND,
    })
}

/// Shooting verification of a solved level.
pub fn verify(level: &QesLevel, config: &ShootingConfig) -> Result<VerificationReport> {
    verify_candidate(
        &level.params,
        level.n,
        level.energy,
        level.field_param,
        config,
    )
}

/// Brute-force sign-change scan of K(E) = αₙ(E, a(E)) over an explicit
/// energy grid; returns the bracketing intervals. This is the independent
/// oracle used to mint expected values: it reuses the raw recursions only
/// and performs no polishing.
pub fn grid_scan_oracle(params: &Params, n: usize, e_grid: &[f64]) -> Result<Vec<(f64, f64)>> {
    let gamma = Gamma::compute(params)?;
    let m = params.m();
    let denom = 2.0 * (n as f64 + gamma.big_gamma(params));
    let mut brackets = Vec::new();
    let mut prev: Option<(f64, f64)> = None;
    for &e in e_grid {
        if e.abs() < m {
            prev = None;
            continue;
        }
        let a = (e * e - m * m) / denom;
        let table = recursion::CoefficientTable::build(params, e, a, n.max(2))?;
        let k = table.alphas()[n];
        if let Some((ep, kp)) = prev {
            if kp * k < 0.0 {
                brackets.push((ep, e));
            }
        }
        prev = Some((e, k));
    }
    Ok(brackets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{solve_n1, solve_n2};
    use crate::wavefunction::evaluate;

    fn n1_level() -> QesLevel {
        solve_n1(&Params::unit_mass(0.3, -1).unwrap())
            .unwrap()
            .remove(0)
    }

    #[test]
    fn outward_integration_matches_closed_form() {
        let lvl = n1_level();
        let cfg = ShootingConfig::default();
        let traj = integrate_radial(&lvl.params, lvl.energy, lvl.field_param, &cfg).unwrap();
        let scale = wavefunction::radial_scale(&lvl);
        let r_match = cfg.r_match_factor * scale;
        // The integrated and closed-form profiles share the seed at r_min,
        // so they agree in absolute normalization up to the match radius.
        for &(r, f, g) in traj.iter().filter(|(r, _, _)| *r <= r_match) {
            let (f_exact, g_exact) = evaluate(&lvl, r).unwrap();
            let scale_f = f_exact.abs().max(g_exact.abs());
            assert!(
                (f - f_exact).abs() / scale_f < 1e-6,
                "F mismatch at r = {r}: {f} vs {f_exact}"
            );
            assert!(
                (g - g_exact).abs() / scale_f < 1e-6,
                "G mismatch at r = {r}: {g} vs {g_exact}"
            );
        }
    }

    #[test]
    fn true_level_passes_and_perturbed_fails() {
        let lvl = n1_level();
        let cfg = ShootingConfig::default();
        let report = verify(&lvl, &cfg).unwrap();
        assert!(report.pass, "n=1 level must verify: {report:?}");
        assert!(report.matching_residual <= 1e-8);

        let perturbed = verify_candidate(
            &lvl.params,
            lvl.n,
            lvl.energy * 1.001,
            lvl.field_param,
            &cfg,
        )
        .unwrap();
        assert!(perturbed.matching_residual > 1e-3);
        assert!(!perturbed.pass);
        assert!(perturbed.matching_residual >= 1e3 * report.matching_residual);
    }

    #[test]
    fn random_non_solutions_fail() {
        let params = Params::unit_mass(0.25, 0).unwrap();
        let cfg = ShootingConfig::default();
        for (e, a) in [(1.7, 0.3), (-2.1, 1.0), (3.0, 0.05)] {
            let report = verify_candidate(&params, 2, e, a, &cfg).unwrap();
            assert!(!report.pass, "arbitrary (E, a) = ({e}, {a}) must fail");
        }
    }

    #[test]
    fn oracle_brackets_match_n2_roots() {
        let params = Params::unit_mass(0.3, 0).unwrap();
        let levels = solve_n2(&params).unwrap();
        let grid: Vec<f64> = (0..4000)
            .map(|i| -8.0 + 16.0 * i as f64 / 3999.0)
            .collect();
        let brackets = grid_scan_oracle(&params, 2, &grid).unwrap();
        assert_eq!(brackets.len(), levels.len());
        for lvl in &levels {
            assert!(
                brackets
                    .iter()
                    .any(|&(lo, hi)| lo <= lvl.energy && lvl.energy <= hi),
                "no bracket around E = {}",
                lvl.energy
            );
        }
    }

    #[test]
    fn oracle_finds_nothing_for_n1_with_nonnegative_l() {
        let params = Params::unit_mass(0.3, 0).unwrap();
        let grid: Vec<f64> = (0..2000)
            .map(|i| -20.0 + 40.0 * i as f64 / 1999.0)
            .collect();
        assert!(grid_scan_oracle(&params, 1, &grid).unwrap().is_empty());
    }

    #[test]
    fn oracle_bracket_count_at_most_one_per_branch_for_n2() {
        for z in [0.1, 0.2, 0.3] {
            for l in [-1, 0, 1] {
                let params = Params::unit_mass(z, l).unwrap();
                let pos: Vec<f64> = (0..3000).map(|i| 1.0 + 19.0 * i as f64 / 2999.0).collect();
                let neg: Vec<f64> = pos.iter().map(|e| -e).rev().collect();
                assert!(grid_scan_oracle(&params, 2, &pos).unwrap().len() <= 1);
                assert!(grid_scan_oracle(&params, 2, &neg).unwrap().len() <= 1);
            }
        }
    }
}
