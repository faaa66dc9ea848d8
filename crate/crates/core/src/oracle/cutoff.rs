//! Exponentially regulated zero-point energy `½ Σ ω e^{−αω}` and extraction
//! of its finite part.

use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};

use super::{CompensatedSum, CutoffSchedule, SeriesBudget};
use crate::error::{Error, Result};

/// Regulated modes are dropped once `α ω` exceeds this.
const DECAY_LIMIT: f64 = 60.0;
/// Step of the trapezoid rule in the rapidity `t`, `k = m sinh t`.
const RAPIDITY_STEP: f64 = 0.1;
/// Highest positive power of `α` carried in the fit.
const ANALYTIC_ORDER: i32 = 4;

fn mode_cap(alpha: f64, gap: f64, budget: &SeriesBudget) -> Result<usize> {
    let needed = (DECAY_LIMIT * gap / (alpha * PI)).ceil() as usize;
    if needed > budget.max_modes() {
        return Err(Error::BudgetExhausted(format!(
            "α = {alpha} needs {needed} modes, budget allows {}",
            budget.max_modes()
        )));
    }
    Ok(needed)
}

/// `∫₀^∞ cosh²t · e^{−x cosh t} dt` by the trapezoid rule, which converges
/// geometrically for this entire, doubly-exponentially decaying integrand.
fn rapidity_integral(x: f64) -> f64 {
    let t_max = (DECAY_LIMIT / x).max(1.0).acosh() + RAPIDITY_STEP;
    let steps = (t_max / RAPIDITY_STEP).ceil() as usize;
    let g = |t: f64| {
        let c = t.cosh();
        c * c * (-x * c).exp()
    };
    let mut acc = CompensatedSum::default();
    acc.add(0.5 * g(0.0));
    for i in 1..=steps {
        acc.add(g(i as f64 * RAPIDITY_STEP));
    }
    RAPIDITY_STEP * acc.value()
}

/// Regulated energy per unit transverse area at one value of `α`.
fn regulated_energy(dim: u32, gap: f64, alpha: f64, budget: &SeriesBudget) -> Result<f64> {
    let cap = mode_cap(alpha, gap, budget)?;
    let acc: CompensatedSum = (1..=cap)
        .map(|n| {
            let m = n as f64 * PI / gap;
            match dim {
                2 => 0.5 * m * (-alpha * m).exp(),
                // ½ ∫ dk/2π ω e^{−αω} with k = m sinh t
                _ => m * m / (2.0 * PI) * rapidity_integral(alpha * m),
            }
        })
        .collect();
    Ok(acc.value())
}

/// Least-squares fit of `E(α)` on `{α^{−p} : p ∈ fit_powers} ∪ {1, α, …, α⁴}`;
/// returns the coefficient of `1`.
fn finite_part(alphas: &[f64], energies: &[f64], fit_powers: &[u32]) -> Result<f64> {
    let span = alphas[0] / alphas[alphas.len() - 1];
    if span < 10.0 * (1.0 - 1e-12) {
        return Err(Error::IllConditionedFit(format!(
            "cutoff values span a factor {span:.3}, need at least one decade"
        )));
    }
    let exponents: Vec<i32> = fit_powers
        .iter()
        .map(|&p| -(p as i32))
        .chain(0..=ANALYTIC_ORDER)
        .collect();
    if exponents.len() > alphas.len() {
        return Err(Error::IllConditionedFit(format!(
            "{} basis functions but only {} cutoff values",
            exponents.len(),
            alphas.len()
        )));
    }
    let constant_col = fit_powers.len();
    let mut design = DMatrix::from_fn(alphas.len(), exponents.len(), |i, j| alphas[i].powi(exponents[j]));
    let norms: Vec<f64> = design.column_iter().map(|c| c.norm()).collect();
    for (j, norm) in norms.iter().enumerate() {
        design.column_mut(j).unscale_mut(*norm);
    }
    let svd = design.svd(true, true);
    let (s_max, s_min) = (svd.singular_values.max(), svd.singular_values.min());
    if !(s_min > 1e-14 * s_max) {
        return Err(Error::IllConditionedFit(format!(
            "design matrix condition number {:.3e}",
            s_max / s_min
        )));
    }
    let coeffs = svd
        .solve(&DVector::from_column_slice(energies), 0.0)
        .map_err(|e| Error::IllConditionedFit(e.to_string()))?;
    Ok(coeffs[constant_col] / norms[constant_col])
}

/// Finite part of the cutoff-regulated Casimir energy per unit transverse
/// area for a Dirichlet scalar, `D ∈ {2, 3}`.
///
/// `D = 2` sums `½ Σ ω_n e^{−αω_n}` directly. `D = 3` integrates the single
/// transverse momentum mode by mode in rapidity. The divergent powers
/// `α^{−p}` from `schedule` and the analytic terms up to `α⁴` are removed by
/// least squares and the constant is returned.
pub fn cutoff_casimir_energy(dim: u32, gap: f64, schedule: &CutoffSchedule, budget: &SeriesBudget) -> Result<f64> {
    if !(2..=3).contains(&dim) {
        return Err(Error::UnsupportedDimension {
            theory: "cutoff mode sum",
            dim,
            reason: "implemented for D = 2 and D = 3 only",
        });
    }
    if !(gap > 0.0 && gap.is_finite()) {
        return Err(Error::InvalidParameter(format!("plate separation must be positive, got {gap}")));
    }
    let energies = schedule
        .alphas()
        .iter()
        .map(|&a| regulated_energy(dim, gap, a, budget))
        .collect::<Result<Vec<_>>>()?;
    finite_part(schedule.alphas(), &energies, schedule.fit_powers())
}
