//! The quasi-exactly-solvable part of the spectrum.
//!
//! A candidate (E, a) produces a normalizable polynomial-type solution iff
//! the series terminates at some index n, which takes two conditions:
//!
//! ```text
//! K(l, n, E, a, Z) = 0         (αₙ written as K·α₀ must vanish)
//! E² - m² = 2a (n + γ + l + 1/2)
//! ```
//!
//! The second fixes a ≥ 0 in terms of E, so for each n the problem reduces
//! to the real roots of the one-variable function K(E) ≡ αₙ(E, a(E)) on the
//! two branches E ≥ m and E ≤ -m. n = 1 has a closed form, n = 2 reduces to
//! a quadratic, n = 3 to a cubic handled numerically, and `solve_general`
//! scans any n.

use crate::error::{QesError, Result};
use crate::params::{Gamma, Params};
use crate::recursion::{CoefficientTable, TERMINATION_RELATIVE_THRESHOLD};

/// Sign of the energy of a solved level.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    PositiveEnergy,
    NegativeEnergy,
}

impl Branch {
    pub fn of(energy: f64) -> Self {
        if energy >= 0.0 {
            Branch::PositiveEnergy
        } else {
            Branch::NegativeEnergy
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::PositiveEnergy => "positive",
            Branch::NegativeEnergy => "negative",
        }
    }
}

/// One terminating solution: the pair (E, a) at termination index n,
/// together with its coefficient table.
#[derive(Debug, Clone)]
pub struct QesLevel {
    pub n: usize,
    pub params: Params,
    pub gamma: Gamma,
    pub energy: f64,
    pub field_param: f64,
    pub branch: Branch,
    /// True when the level sits exactly on |E| = m, forcing a = 0 (the
    /// pure-Coulomb boundary case).
    pub zero_field: bool,
    pub table: CoefficientTable,
}

impl QesLevel {
    /// |αₙ| and |αₙ₊₁| relative to the running coefficient scale.
    pub fn termination_residual(&self) -> f64 {
        let scale = self.table.alpha_scale(self.n + 1);
        let a_n = self.table.alphas()[self.n].abs();
        let a_n1 = self.table.alphas()[self.n + 1].abs();
        a_n.max(a_n1) / scale
    }

    /// Relative residual of E² - m² = 2a(n + Γ).
    pub fn field_relation_residual(&self) -> f64 {
        let m = self.params.m();
        let lhs = self.energy * self.energy - m * m;
        let rhs = 2.0 * self.field_param * (self.n as f64 + self.gamma.big_gamma(&self.params));
        (lhs - rhs).abs() / lhs.abs().max(m * m)
    }
}

/// E-scan window used by [`solve_general`] and the n = 3 solver. Energies
/// are swept over [m, e_max·m] and [-e_max·m, -m].
#[derive(Debug, Clone, Copy)]
pub struct ScanConfig {
    /// Upper end of the scan in units of m.
    pub e_max: f64,
    /// Grid points per sign branch.
    pub samples_per_branch: usize,
    /// Roots closer than this (in units of m) are considered duplicates.
    pub dedup_tol: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            e_max: 20.0,
            samples_per_branch: 4000,
            dedup_tol: 1e-8,
        }
    }
}

impl ScanConfig {
    fn validate(&self) -> Result<()> {
        if !(self.e_max > 1.0) {
            return Err(QesError::Config(format!(
                "scan range must extend beyond |E| = m, got e_max = {}",
                self.e_max
            )));
        }
        if self.samples_per_branch < 2 {
            return Err(QesError::Config(
                "scan resolution must be at least 2 samples".into(),
            ));
        }
        Ok(())
    }
}

/// a from the second termination condition, a = (E² - m²)/(2(n + Γ)).
///
/// The right-hand side denominator is positive for every n ≥ 1, so a ≥ 0
/// exactly when |E| ≥ m; energies inside the mass gap are rejected.
pub fn field_from_energy(n: usize, params: &Params, gamma: &Gamma, energy: f64) -> Result<f64> {
    let m = params.m();
    if energy.abs() < m * (1.0 - 1e-12) {
        return Err(QesError::SubMassEnergy {
            energy_abs: energy.abs(),
            mass: m,
        });
    }
    let denom = 2.0 * (n as f64 + gamma.big_gamma(params));
    let a = (energy * energy - m * m) / denom;
    Ok(a.max(0.0))
}

/// K(E) = αₙ(E, a(E)) with α₀ = 1: the quantity whose zeros are the QES
/// energies at termination index n.
pub fn k_function(n: usize, params: &Params, gamma: &Gamma, energy: f64) -> Result<f64> {
    let a = field_from_energy(n, params, gamma, energy)?;
    let table = CoefficientTable::build(params, energy, a, n.max(2))?;
    Ok(table.alphas()[n])
}

/// Assembles a level at (n, E): computes a, builds the table two orders past
/// n, and checks both termination conditions.
fn make_level(n: usize, params: &Params, gamma: &Gamma, energy: f64) -> Result<QesLevel> {
    let m = params.m();
    let a = field_from_energy(n, params, gamma, energy)?;
    let table = CoefficientTable::build(params, energy, a, n + 3)?;
    let zero_field = a == 0.0 || (energy.abs() - m).abs() <= 1e-14 * m;

    let level = QesLevel {
        n,
        params: *params,
        gamma: *gamma,
        energy,
        field_param: a,
        branch: Branch::of(energy),
        zero_field,
        table,
    };
    let term = level.termination_residual();
    if term > TERMINATION_RELATIVE_THRESHOLD {
        return Err(QesError::Internal(format!(
            "candidate E = {energy} at n = {n} does not terminate (residual {term:.3e})"
        )));
    }
    Ok(level)
}

/// A few secant steps on K(E) to polish a root to the floating-point floor.
fn polish_root(n: usize, params: &Params, gamma: &Gamma, e0: f64) -> f64 {
    let m = params.m();
    let h = 1e-7 * e0.abs().max(m);
    let mut x0 = e0;
    let mut x1 = e0 + h;
    if x1.abs() < m {
        x1 = e0 - h;
    }
    let mut f0 = match k_function(n, params, gamma, x0) {
        Ok(v) => v,
        Err(_) => return e0,
    };
    for _ in 0..40 {
        let f1 = match k_function(n, params, gamma, x1) {
            Ok(v) => v,
            Err(_) => break,
        };
        if f1 == f0 {
            break;
        }
        let x2 = x1 - f1 * (x1 - x0) / (f1 - f0);
        if !x2.is_finite() || x2.abs() < m {
            break;
        }
        x0 = x1;
        f0 = f1;
        x1 = x2;
        if (x1 - x0).abs() <= 1e-15 * x1.abs() {
            break;
        }
    }
    x1
}

/// Closed-form n = 1 solution.
///
/// α₁ = 0 forces E = -m/(2(γ+l+1)), which is negative and below -m exactly
/// when l < 0 (γ < |l+1/2| gives 0 < γ+l+1 < 1/2). For l ≥ 0 the magnitude
/// falls inside the mass gap and no terminating solution exists, so the
/// result is an empty list rather than an error.
pub fn solve_n1(params: &Params) -> Result<Vec<QesLevel>> {
    let gamma = Gamma::compute(params)?;
    if params.l() >= 0 {
        return Ok(vec![]);
    }
    let denom = 2.0 * (gamma.value() + params.l() as f64 + 1.0);
    debug_assert!(denom > 0.0 && denom < 1.0);
    let energy = -params.m() / denom;
    Ok(vec![make_level(1, params, &gamma, energy)?])
}

/// Coefficients (A, B, C) of the n = 2 quadratic A E² + B E + C = 0.
fn n2_quadratic(params: &Params, gamma: &Gamma) -> (f64, f64, f64) {
    let z = params.z_alpha();
    let m = params.m();
    let g = gamma.value();
    let gg = gamma.big_gamma(params);
    let ratio = (2.0 * g + 1.0) * gg / (z * z);
    let a = (2.0 * gg + 1.0) * (2.0 * gg + 3.0) - ratio;
    let b = 4.0 * m * (gg + 1.0);
    let c = m * m * (1.0 + ratio);
    (a, b, c)
}

/// Critical coupling at which the n = 2 quadratic loses its E² term, found
/// by bisection of A(Zα) on (0, 1/2) to 1e-10.
///
/// Exists for l = 0 and l = 1; for larger l the coefficient stays negative
/// across the whole interval and `NoCritical` is returned.
pub fn critical_zalpha_n2(l: i32) -> Result<f64> {
    if l < 0 {
        return Err(QesError::NoCritical { l });
    }
    let coeff_a = |z: f64| -> f64 {
        let p = Params::unit_mass(z, l).expect("z inside (0, 1/2)");
        let g = Gamma::compute(&p).expect("valid");
        n2_quadratic(&p, &g).0
    };
    let (mut lo, mut hi) = (1e-9, 0.5 - 1e-12);
    let (f_lo, f_hi) = (coeff_a(lo), coeff_a(hi));
    if f_lo.signum() == f_hi.signum() {
        return Err(QesError::NoCritical { l });
    }
    while hi - lo > 1e-10 {
        let mid = 0.5 * (lo + hi);
        if coeff_a(mid).signum() == f_lo.signum() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// How close (relative) a coupling must sit to the critical value before the
/// n = 2 quadratic is treated as degenerate.
const CRITICAL_BAND: f64 = 1e-3;

/// Closed-form n = 2 solutions from the quadratic in E.
///
/// Keeps real roots with |E| ≥ m; for l < 0 only E ≤ -m survives (the
/// positive root falls in the mass gap). Reports `CriticalCoupling` when the
/// coupling sits on the degenerate value where the E² coefficient vanishes.
pub fn solve_n2(params: &Params) -> Result<Vec<QesLevel>> {
    let gamma = Gamma::compute(params)?;
    let (a, b, c) = n2_quadratic(params, &gamma);

    if params.l() >= 0 {
        if let Ok(critical) = critical_zalpha_n2(params.l()) {
            if (params.z_alpha() - critical).abs() <= CRITICAL_BAND * critical {
                return Err(QesError::CriticalCoupling {
                    l: params.l(),
                    z_alpha: params.z_alpha(),
                    critical,
                });
            }
        }
    }

    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        return Ok(vec![]);
    }
    // b = 4m(Γ+1) > 0 always; the stable quadratic split avoids cancellation.
    let q = -0.5 * (b + disc.sqrt());
    let roots = [q / a, c / q];

    let m = params.m();
    let mut levels = Vec::new();
    for &root in &roots {
        if !root.is_finite() || root.abs() < m * (1.0 - 1e-12) {
            continue;
        }
        if params.l() < 0 && root > 0.0 {
            continue;
        }
        let polished = polish_root(2, params, &gamma, root);
        levels.push(make_level(2, params, &gamma, polished)?);
    }
    levels.sort_by(|p, q| p.energy.partial_cmp(&q.energy).unwrap());
    Ok(levels)
}

/// Sign-change bracketing of K(E) over one energy branch.
fn bracket_roots(
    n: usize,
    params: &Params,
    gamma: &Gamma,
    e_lo: f64,
    e_hi: f64,
    samples: usize,
) -> Vec<(f64, f64)> {
    let mut brackets = Vec::new();
    let step = (e_hi - e_lo) / (samples as f64 - 1.0);
    let mut prev: Option<(f64, f64)> = None;
    for i in 0..samples {
        let e = e_lo + step * i as f64;
        let k = match k_function(n, params, gamma, e) {
            Ok(v) if v.is_finite() => v,
            _ => {
                prev = None;
                continue;
            }
        };
        if let Some((ep, kp)) = prev {
            if kp == 0.0 {
                brackets.push((ep, ep));
            } else if kp * k < 0.0 {
                brackets.push((ep, e));
            }
        }
        prev = Some((e, k));
    }
    brackets
}

/// Bisection to the floating floor inside a sign-change bracket.
fn bisect_root(n: usize, params: &Params, gamma: &Gamma, lo0: f64, hi0: f64) -> f64 {
    let (mut lo, mut hi) = (lo0, hi0);
    let mut f_lo = k_function(n, params, gamma, lo).unwrap_or(f64::NAN);
    if !f_lo.is_finite() {
        return 0.5 * (lo + hi);
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = k_function(n, params, gamma, mid).unwrap_or(f64::NAN);
        if !f_mid.is_finite() {
            break;
        }
        if f_mid == 0.0 {
            return mid;
        }
        if f_lo * f_mid < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            f_lo = f_mid;
        }
    }
    0.5 * (lo + hi)
}

/// All terminating solutions at index n found by scanning both energy
/// branches, polishing every sign change, and deduplicating.
///
/// Completeness is only claimed within the scan window; for n > 3 several
/// (E, a) pairs per branch are expected and all found ones are reported.
pub fn solve_general(n: usize, params: &Params, scan: &ScanConfig) -> Result<Vec<QesLevel>> {
    if n < 1 {
        return Err(QesError::Config("termination index n must be >= 1".into()));
    }
    scan.validate()?;
    let gamma = Gamma::compute(params)?;
    let m = params.m();

    let mut energies: Vec<f64> = Vec::new();
    for (lo, hi) in [(m, scan.e_max * m), (-scan.e_max * m, -m)] {
        for (b_lo, b_hi) in bracket_roots(n, params, &gamma, lo, hi, scan.samples_per_branch) {
            let e = bisect_root(n, params, &gamma, b_lo, b_hi);
            let e = polish_root(n, params, &gamma, e);
            if e.is_finite() && e.abs() >= m * (1.0 - 1e-12) {
                energies.push(e);
            }
        }
    }
    energies.sort_by(|a, b| a.partial_cmp(b).unwrap());
    energies.dedup_by(|a, b| (*a - *b).abs() <= scan.dedup_tol * m);

    let mut levels = Vec::new();
    for e in energies {
        match make_level(n, params, &gamma, e) {
            Ok(level) => levels.push(level),
            // A bracket that fails the termination check after polish is a
            // spurious sign change (e.g. through a pole), not a level.
            Err(QesError::Internal(_)) => {}
            Err(other) => return Err(other),
        }
    }
    Ok(levels)
}

/// n = 3 solutions: the elimination of α₁, α₂ against a(E) leaves a cubic
/// in E, evaluated here through the recursion itself (K₃ on a(E)) and
/// solved by bracketing plus polish over the default scan window.
pub fn solve_n3(params: &Params) -> Result<Vec<QesLevel>> {
    solve_general(3, params, &ScanConfig::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn unit(z: f64, l: i32) -> Params {
        Params::unit_mass(z, l).unwrap()
    }

    #[test]
    fn field_from_energy_reference_values() {
        let p = unit(0.3, -1);
        let g = Gamma::compute(&p).unwrap();
        assert_abs_diff_eq!(
            field_from_energy(1, &p, &g, -1.25).unwrap(),
            0.3125,
            epsilon = 1e-14
        );
        assert_abs_diff_eq!(field_from_energy(1, &p, &g, 1.0).unwrap(), 0.0);
        assert_abs_diff_eq!(field_from_energy(1, &p, &g, -1.0).unwrap(), 0.0);
        assert!(matches!(
            field_from_energy(1, &p, &g, 0.5),
            Err(QesError::SubMassEnergy { .. })
        ));
    }

    #[test]
    fn n1_closed_form() {
        let levels = solve_n1(&unit(0.3, -1)).unwrap();
        assert_eq!(levels.len(), 1);
        let lvl = &levels[0];
        assert_abs_diff_eq!(lvl.energy, -1.25, epsilon = 1e-13);
        assert_abs_diff_eq!(lvl.field_param, 0.3125, epsilon = 1e-13);
        assert_eq!(lvl.branch, Branch::NegativeEnergy);
        assert!(lvl.termination_residual() <= 1e-12);
    }

    #[test]
    fn n1_empty_for_nonnegative_l() {
        for z in [0.1, 0.2, 0.45] {
            assert!(solve_n1(&unit(z, 0)).unwrap().is_empty());
            assert!(solve_n1(&unit(z, 3)).unwrap().is_empty());
        }
    }

    #[test]
    fn n1_always_survives_for_negative_l() {
        // For l = -1 every admissible coupling gives γ < 1/2, hence
        // E = -m/(2γ) < -m; the level must never be filtered out.
        for i in 1..20 {
            let z = 0.025 * i as f64;
            let levels = solve_n1(&unit(z, -1)).unwrap();
            assert_eq!(levels.len(), 1, "missing n=1 level at z = {z}");
            assert!(levels[0].energy < -1.0);
        }
    }

    #[test]
    fn critical_couplings_match_quoted_values() {
        let c0 = critical_zalpha_n2(0).unwrap();
        let c1 = critical_zalpha_n2(1).unwrap();
        assert_relative_eq!(c0, 1.0 / 2.936, max_relative = 1e-3);
        assert_relative_eq!(c1, 1.0 / 2.316, max_relative = 1e-3);
        assert!(c1 > c0);
    }

    #[test]
    fn critical_coupling_error_for_large_l() {
        assert!(matches!(
            critical_zalpha_n2(2),
            Err(QesError::NoCritical { l: 2 })
        ));
    }

    #[test]
    fn n2_reports_critical_coupling() {
        assert!(matches!(
            solve_n2(&unit(1.0 / 2.936, 0)),
            Err(QesError::CriticalCoupling { l: 0, .. })
        ));
        assert!(matches!(
            solve_n2(&unit(1.0 / 2.316, 1)),
            Err(QesError::CriticalCoupling { l: 1, .. })
        ));
    }

    #[test]
    fn n2_small_coupling_tracks_linearized_energies() {
        // Exact roots against the |E| ≈ m expansions. The expansions drop
        // the O(1) part of the quadratic's E² coefficient, so they carry a
        // relative error of order (Zα)² on the offset from ±m — a couple of
        // percent here, not machine precision.
        let p = unit(0.05, 0);
        let g = Gamma::compute(&p).unwrap();
        let gg = g.big_gamma(&p);
        let two_g1 = 2.0 * g.value() + 1.0;
        let levels = solve_n2(&p).unwrap();
        assert_eq!(levels.len(), 2);
        let (e_minus, e_plus) = (levels[0].energy, levels[1].energy);

        let approx_plus =
            1.0 + 2.0 * 0.05f64.powi(2) * (gg + 1.0) * (gg + 2.0) / (two_g1 * gg);
        let approx_minus = -(1.0 + 2.0 * 0.05f64.powi(2) * (gg + 1.0) / two_g1);
        assert!((e_plus - approx_plus).abs() / (e_plus - 1.0) < 2.5e-2);
        assert!((e_minus - approx_minus).abs() / (e_minus.abs() - 1.0) < 2.5e-2);
    }

    #[test]
    fn n2_negative_l_yields_only_sub_negative_mass() {
        for z in [0.1, 0.2, 0.3, 0.45] {
            for l in [-1, -2] {
                let levels = solve_n2(&unit(z, l)).unwrap();
                assert_eq!(levels.len(), 1, "z = {z}, l = {l}");
                let e = levels[0].energy;
                assert!(e <= -1.0, "E = {e} must lie at or below -m");
                // Stays close to -m across the whole coupling range.
                assert!(e > -1.5, "E = {e} drifted far from -m");
            }
        }
    }

    #[test]
    fn n2_termination_residuals_are_clean() {
        for z in [0.1, 0.2, 0.3] {
            for l in [-2, -1, 0, 1] {
                for lvl in solve_n2(&unit(z, l)).unwrap() {
                    assert!(lvl.termination_residual() <= 1e-10);
                    assert!(lvl.field_relation_residual() <= 1e-10);
                }
            }
        }
    }

    #[test]
    fn general_scan_reproduces_closed_forms() {
        let scan = ScanConfig::default();

        let p = unit(0.3, -1);
        let closed = solve_n1(&p).unwrap();
        let scanned = solve_general(1, &p, &scan).unwrap();
        assert_eq!(scanned.len(), 1);
        assert_abs_diff_eq!(scanned[0].energy, closed[0].energy, epsilon = 1e-10);
        assert_abs_diff_eq!(scanned[0].field_param, closed[0].field_param, epsilon = 1e-10);

        let p = unit(0.3, 0);
        let closed = solve_n2(&p).unwrap();
        let scanned = solve_general(2, &p, &scan).unwrap();
        assert_eq!(scanned.len(), closed.len());
        for (s, c) in scanned.iter().zip(closed.iter()) {
            assert_abs_diff_eq!(s.energy, c.energy, epsilon = 1e-10);
        }
    }

    #[test]
    fn low_index_levels_are_unique_per_branch() {
        // For n ≤ 2 at most one level per sign branch, for any (Z, l).
        let scan = ScanConfig::default();
        for n in [1usize, 2] {
            for z in [0.1, 0.25, 0.4] {
                for l in [-2, -1, 0, 1, 2] {
                    let p = unit(z, l);
                    if n == 2 {
                        if let Ok(c) = critical_zalpha_n2(l) {
                            if (z - c).abs() <= 2.0 * CRITICAL_BAND * c {
                                continue;
                            }
                        }
                    }
                    let levels = solve_general(n, &p, &scan).unwrap();
                    let pos = levels.iter().filter(|v| v.energy > 0.0).count();
                    let neg = levels.iter().filter(|v| v.energy < 0.0).count();
                    assert!(pos <= 1 && neg <= 1, "n={n} z={z} l={l}: {pos}+{neg}");
                }
            }
        }
    }

    #[test]
    fn n3_small_coupling_matches_resummed_expansions() {
        // The |E| ≈ m fractions for n = 3 are resummed into an inverse
        // square root and are accurate to ~(Zα)² · (E - m) here.
        for l in [0, 1] {
            let p = unit(0.05, l);
            let g = Gamma::compute(&p).unwrap();
            let gg = g.big_gamma(&p);
            let two_g1 = 2.0 * g.value() + 1.0;
            let z2 = 0.05f64.powi(2);

            let t = (gg + 1.0) * (gg + 2.0) * (gg + 3.0);
            let d_plus = two_g1 * gg * (gg + 2.0) + 2.0 * (g.value() + 1.0) * (gg + 1.0).powi(2);
            let e6_plus = (1.0 - 2.0 * z2 * t / d_plus).powf(-0.5);
            let d_minus = two_g1 * (gg + 2.0).powi(2)
                + 2.0 * (g.value() + 1.0) * (gg + 1.0) * (gg + 3.0);
            let e6_minus = -(1.0 - 2.0 * z2 * t / d_minus).powf(-0.5);

            let levels = solve_n3(&p).unwrap();
            let e_plus = levels
                .iter()
                .map(|v| v.energy)
                .filter(|e| *e > 0.0)
                .fold(f64::INFINITY, f64::min);
            let e_minus = levels
                .iter()
                .map(|v| v.energy)
                .filter(|e| *e < 0.0)
                .fold(f64::NEG_INFINITY, f64::max);

            assert!((e_plus - e6_plus).abs() / (e_plus - 1.0) < 5e-3, "l = {l}");
            assert!(
                (e_minus - e6_minus).abs() / (e_minus.abs() - 1.0) < 5e-3,
                "l = {l}"
            );
        }
    }

    #[test]
    fn n3_high_energy_branch_window_for_l_minus_one() {
        // Exact structure of the n = 3 cubic for l = -1: the pair of
        // high-|E| roots exists at Zα = 0.35 (E ≈ +1.67 and E ≈ -3.65 next
        // to the low-energy root near -m) and is gone by Zα = 0.40, where
        // only the low-energy root survives. The transition sits near
        // Zα ≈ 0.378, where the cubic's leading coefficient changes sign.
        let at_035 = solve_n3(&unit(0.35, -1)).unwrap();
        assert_eq!(at_035.len(), 3, "three real roots at Zα = 0.35");
        assert!(at_035.iter().any(|v| (v.energy - 1.672).abs() < 5e-3));
        assert!(at_035.iter().any(|v| (v.energy + 3.646).abs() < 5e-3));
        assert!(at_035.iter().any(|v| v.energy > -1.1 && v.energy < -1.0));

        let at_040 = solve_n3(&unit(0.40, -1)).unwrap();
        assert_eq!(at_040.len(), 1, "only the low-energy root at Zα = 0.40");
        assert!(at_040[0].energy > -1.1 && at_040[0].energy < -1.0);
    }

    #[test]
    fn scan_config_is_validated() {
        let p = unit(0.3, 0);
        let bad = ScanConfig {
            e_max: 0.5,
            ..Default::default()
        };
        assert!(matches!(
            solve_general(2, &p, &bad),
            Err(QesError::Config(_))
        ));
        let bad = ScanConfig {
            samples_per_branch: 1,
            ..Default::default()
        };
        assert!(matches!(
            solve_general(2, &p, &bad),
            Err(QesError::Config(_))
        ));
    }
}
