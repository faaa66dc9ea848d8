//! Reduced Green function `g(z, z')` of `(−∂_z² + k²) g = δ(z − z')` on
//! `[0, L]`, summed over modes and in closed form.

use std::f64::consts::PI;

use super::{CompensatedSum, SeriesBudget};
use crate::error::{domain, Result};
use crate::geometry::ScalarBc;

fn check_args(function: &'static str, k: f64, z: f64, zp: f64, gap: f64) -> Result<()> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(domain(function, format!("need k > 0, got {k}")));
    }
    if !(gap > 0.0 && gap.is_finite()) {
        return Err(domain(function, format!("need L > 0, got {gap}")));
    }
    for p in [z, zp] {
        if !(0.0..=gap).contains(&p) {
            return Err(domain(function, format!("need 0 ≤ z ≤ L = {gap}, got {p}")));
        }
    }
    Ok(())
}

/// Dirichlet form `sinh(k z_<) sinh(k(L − z_>)) / (k sinh kL)`.
///
/// Written with decaying exponentials only, so it is finite for any `kL`.
pub fn green_closed(k: f64, z: f64, zp: f64, gap: f64) -> Result<f64> {
    check_args("green_closed", k, z, zp, gap)?;
    let (lo, hi) = if z <= zp { (z, zp) } else { (zp, z) };
    let near = -(-2.0 * k * lo).exp_m1();
    let far = -(-2.0 * k * (gap - hi)).exp_m1();
    let whole = -(-2.0 * k * gap).exp_m1();
    Ok((-k * (hi - lo)).exp() * near * far / (2.0 * k * whole))
}

/// Neumann form `cosh(k z_<) cosh(k(L − z_>)) / (k sinh kL)`, which
/// includes the constant `n = 0` mode.
pub fn green_closed_neumann(k: f64, z: f64, zp: f64, gap: f64) -> Result<f64> {
    check_args("green_closed_neumann", k, z, zp, gap)?;
    let (lo, hi) = if z <= zp { (z, zp) } else { (zp, z) };
    let near = 1.0 + (-2.0 * k * lo).exp();
    let far = 1.0 + (-2.0 * k * (gap - hi)).exp();
    let whole = -(-2.0 * k * gap).exp_m1();
    Ok((-k * (hi - lo)).exp() * near * far / (2.0 * k * whole))
}

fn mode_term(k: f64, z: f64, zp: f64, gap: f64, bc: ScalarBc, n: usize) -> f64 {
    let m = n as f64 * PI / gap;
    let shape = match bc {
        ScalarBc::Dirichlet => (m * z).sin() * (m * zp).sin(),
        ScalarBc::Neumann => (m * z).cos() * (m * zp).cos(),
    };
    2.0 / gap * shape / (k * k + m * m)
}

/// Cumulative partial sums `S_1, …, S_N` of the mode series with
/// `N = max_modes`. For Neumann every `S_n` contains the `n = 0` term
/// `1/(L k²)`.
pub fn green_mode_partial_sums(
    k: f64,
    z: f64,
    zp: f64,
    gap: f64,
    bc: ScalarBc,
    budget: &SeriesBudget,
) -> Result<Vec<f64>> {
    check_args("green_mode_sum", k, z, zp, gap)?;
    let mut acc = CompensatedSum::default();
    if bc == ScalarBc::Neumann {
        acc.add(1.0 / (gap * k * k));
    }
    Ok((1..=budget.max_modes())
        .map(|n| {
            acc.add(mode_term(k, z, zp, gap, bc, n));
            acc.value()
        })
        .collect())
}

/// `(2/L) Σ_{n=1}^{N} φ_n(z) φ_n(z') / (k² + (nπ/L)²)` with sines for
/// Dirichlet and cosines (plus the `n = 0` term) for Neumann.
pub fn green_mode_sum(k: f64, z: f64, zp: f64, gap: f64, bc: ScalarBc, budget: &SeriesBudget) -> Result<f64> {
    check_args("green_mode_sum", k, z, zp, gap)?;
    let mut acc: CompensatedSum = (1..=budget.max_modes())
        .map(|n| mode_term(k, z, zp, gap, bc, n))
        .collect();
    if bc == ScalarBc::Neumann {
        acc.add(1.0 / (gap * k * k));
    }
    Ok(acc.value())
}
