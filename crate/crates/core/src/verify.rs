//! End-to-end consistency checks: every closed form against an oracle or a
//! second closed form, reported as worst residual against tolerance.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::energy::{base_energy_density, density_scale, pressure, total_energy_per_area};
use crate::error::{Error, Result};
use crate::geometry::{EmBc, ScalarBc, Spacetime, Theory};
use crate::maxwell::{em_fluctuations, em_stress, single_plate_stress, subtracted_profile};
use crate::oracle::{
    cutoff_casimir_energy, finite_difference_second_derivative, green_closed, green_closed_neumann,
    green_mode_partial_sums, green_mode_sum, image_sum_f, profile_energy_integral, CutoffSchedule, SeriesBudget,
};
use crate::position::{f_profile, f_profile_cot, F_theta};
use crate::slab::{interior_profile, midpoint_grid, stress_at};
use crate::specfun;
use crate::stress::StressTensor;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Budgets cut 100×, tolerances relaxed 100×.
    pub quick: bool,
    /// Deliberately corrupts one input (a sign) so that the suite must fail.
    pub tamper: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    /// Set when the check could not be evaluated.
    pub error: Option<String>,
}

impl CheckOutcome {
    /// `residual / tolerance`, infinite for errors.
    pub fn severity(&self) -> f64 {
        if self.error.is_some() {
            f64::INFINITY
        } else if self.tolerance == 0.0 {
            if self.residual == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            self.residual / self.tolerance
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    /// The check closest to (or furthest past) its tolerance.
    pub fn worst(&self) -> Option<&CheckOutcome> {
        self.checks
            .iter()
            .max_by(|a, b| a.severity().total_cmp(&b.severity()))
    }
}

struct Ctx {
    quick: bool,
    tamper: bool,
}

impl Ctx {
    fn tol(&self, t: f64) -> f64 {
        if self.quick {
            t * 100.0
        } else {
            t
        }
    }

    fn budget(&self, full: usize) -> usize {
        if self.quick {
            (full / 100).max(crate::oracle::MIN_SERIES_BUDGET)
        } else {
            full
        }
    }
}

/// Residual and tolerance of one check.
type Measured = Result<(f64, f64)>;
type CheckFn = fn(&Ctx) -> Measured;

const CHECKS: &[(&str, CheckFn)] = &[
    ("gamma_recurrence", gamma_recurrence),
    ("zeta_even_values", zeta_even_values),
    ("hurwitz_polygamma", hurwitz_polygamma),
    ("hurwitz_half_shift", hurwitz_half_shift),
    ("f_image_sum", f_image_sum),
    ("f_cotangent_form", f_cotangent_form),
    ("green_dirichlet_modes", green_dirichlet_modes),
    ("green_neumann_modes", green_neumann_modes),
    ("green_ode_residual", green_ode_residual),
    ("green_mode_convergence", green_mode_convergence),
    ("cutoff_energy_d2", cutoff_energy_d2),
    ("cutoff_energy_d3", cutoff_energy_d3),
    ("cutoff_regulator_independence", cutoff_regulator_independence),
    ("image_derivative_pattern", image_derivative_pattern),
    ("pressure_uniformity", pressure_uniformity),
    ("pressure_energy_slope", pressure_energy_slope),
    ("conformal_constancy", conformal_constancy),
    ("improved_traceless", improved_traceless),
    ("maxwell_trace_identity", maxwell_trace_identity),
    ("maxwell_assembled_stress", maxwell_assembled_stress),
    ("d4_fluctuation_displays", d4_fluctuation_displays),
    ("d4_em_duality", d4_em_duality),
    ("subtracted_energy_cancellation", subtracted_energy_cancellation),
    ("single_plate_limit", single_plate_limit),
    ("single_plate_approach_rate", single_plate_approach_rate),
];

/// Names of all checks, in report order.
pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(n, _)| *n).collect()
}

/// Runs every check. Checks run in parallel; the report keeps the fixed order.
pub fn run(options: VerifyOptions) -> VerifyReport {
    let ctx = Ctx {
        quick: options.quick,
        tamper: options.tamper,
    };
    let checks = CHECKS
        .par_iter()
        .map(|(name, check)| match check(&ctx) {
            Ok((residual, tolerance)) => CheckOutcome {
                name,
                residual,
                tolerance,
                passed: residual <= tolerance,
                error: None,
            },
            Err(e) => CheckOutcome {
                name,
                residual: f64::INFINITY,
                tolerance: 0.0,
                passed: false,
                error: Some(e.to_string()),
            },
        })
        .collect();
    VerifyReport { checks }
}

fn rel(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

fn worst<I: IntoIterator<Item = Result<f64>>>(items: I) -> Result<f64> {
    let mut w = 0.0f64;
    for r in items {
        let r = r?;
        if r.is_nan() {
            return Err(Error::InvalidParameter("residual is NaN".into()));
        }
        w = w.max(r);
    }
    Ok(w)
}

fn st(dim: u32) -> Result<Spacetime> {
    Spacetime::new(dim, 1.0)
}

fn theories(dim: u32) -> Vec<Theory> {
    let mut t = vec![
        Theory::ScalarCanonical(ScalarBc::Dirichlet),
        Theory::ScalarCanonical(ScalarBc::Neumann),
    ];
    if dim >= 3 {
        t.push(Theory::Maxwell(EmBc::Metallic));
        t.push(Theory::Maxwell(EmBc::Mit));
    }
    t
}

/// Deterministic, well-spread `(k, z, z')` with `k ∈ [0.1, 10]` log-uniform,
/// `|z − z'| ≥ 0.1` and `0.1 ≤ z + z' ≤ 1.9` (`L = 1`).
pub fn green_test_points(count: usize) -> Vec<(f64, f64, f64)> {
    // Additive recurrence on the generalized golden ratio in 3D.
    let phi = 1.220_744_084_605_759_5_f64;
    let a = [1.0 / phi, 1.0 / (phi * phi), 1.0 / (phi * phi * phi)];
    let mut out = Vec::with_capacity(count);
    let mut i = 0usize;
    while out.len() < count {
        i += 1;
        let u: Vec<f64> = a.iter().map(|ai| (0.5 + ai * i as f64).fract()).collect();
        let (k, z, zp) = (0.1 * 100f64.powf(u[0]), u[1], u[2]);
        if (z - zp).abs() >= 0.1 && (0.1..=1.9).contains(&(z + zp)) {
            out.push((k, z, zp));
        }
    }
    out
}

fn gamma_recurrence(ctx: &Ctx) -> Measured {
    let w = worst([0.3, 1.7, 4.25, 11.5, 23.1, 31.7].iter().map(|&x| {
        Ok(rel(specfun::gamma(x + 1.0)?, x * specfun::gamma(x)?))
    }))?;
    Ok((w, ctx.tol(1e-13)))
}

fn zeta_even_values(ctx: &Ctx) -> Measured {
    let expected = [
        (2.0, PI.powi(2) / 6.0),
        (4.0, PI.powi(4) / 90.0),
        (6.0, PI.powi(6) / 945.0),
        (8.0, PI.powi(8) / 9450.0),
        (10.0, PI.powi(10) / 93555.0),
    ];
    let w = worst(expected.iter().map(|&(s, v)| Ok(rel(specfun::riemann_zeta(s)?, v))))?;
    Ok((w, ctx.tol(1e-14)))
}

fn hurwitz_polygamma(ctx: &Ctx) -> Measured {
    let mut items = Vec::new();
    for n in 1..=6u32 {
        for &a in &[0.2, 0.5, 1.7, 9.3] {
            let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
            let nf = (1..=n).map(f64::from).product::<f64>();
            items.push((|| {
                let via_psi = sign * specfun::polygamma(n, a)? / nf;
                Ok(rel(specfun::hurwitz_zeta(f64::from(n + 1), a)?, via_psi))
            })());
        }
    }
    Ok((worst(items)?, ctx.tol(1e-12)))
}

fn hurwitz_half_shift(ctx: &Ctx) -> Measured {
    let w = worst([2.5, 4.0, 7.3, 12.0].iter().map(|&s: &f64| {
        Ok(rel(
            specfun::hurwitz_zeta(s, 0.5)?,
            (2f64.powf(s) - 1.0) * specfun::riemann_zeta(s)?,
        ))
    }))?;
    Ok((w, ctx.tol(1e-13)))
}

const F_POINTS: [f64; 4] = [0.05, 0.1, 0.25, 0.5];

fn f_image_sum(ctx: &Ctx) -> Measured {
    let budget = SeriesBudget::new(ctx.budget(1_000_000), 1_000, 1)?;
    let mut items = Vec::new();
    for dim in 3..=12 {
        for &x in &F_POINTS {
            items.push((|| Ok(rel(image_sum_f(dim, x, &budget)?, f_profile(&st(dim)?, x)?)))());
        }
    }
    Ok((worst(items)?, ctx.tol(1e-10)))
}

fn f_cotangent_form(ctx: &Ctx) -> Measured {
    let mut items = Vec::new();
    for dim in (4..=12).step_by(2) {
        for &x in &F_POINTS {
            items.push((|| Ok(rel(f_profile_cot(&st(dim)?, x)?, f_profile(&st(dim)?, x)?)))());
        }
    }
    Ok((worst(items)?, ctx.tol(1e-10)))
}

fn green_modes(ctx: &Ctx, bc: ScalarBc) -> Measured {
    let budget = SeriesBudget::new(1_000, ctx.budget(10_000), 0)?;
    let w = worst(green_test_points(20).into_iter().map(|(k, z, zp)| {
        let closed = match bc {
            ScalarBc::Dirichlet => green_closed(k, z, zp, 1.0)?,
            ScalarBc::Neumann => green_closed_neumann(k, z, zp, 1.0)?,
        };
        Ok((green_mode_sum(k, z, zp, 1.0, bc, &budget)? - closed).abs())
    }))?;
    Ok((w, ctx.tol(1e-6)))
}

fn green_dirichlet_modes(ctx: &Ctx) -> Measured {
    green_modes(ctx, ScalarBc::Dirichlet)
}

fn green_neumann_modes(ctx: &Ctx) -> Measured {
    green_modes(ctx, ScalarBc::Neumann)
}

/// `g″ = k² g` off the source, unit jump of `−g′` at the source and the
/// boundary condition at `z = 0`, all by finite differences.
fn green_ode_residual(ctx: &Ctx) -> Measured {
    let h = 1e-3;
    let mut items = Vec::new();
    for (k, _, zp) in green_test_points(12).into_iter().filter(|p| (0.01..=0.99).contains(&p.2)) {
        for neumann in [false, true] {
            let g = |z: f64| {
                if neumann {
                    green_closed_neumann(k, z, zp, 1.0)
                } else {
                    green_closed(k, z, zp, 1.0)
                }
            };
            items.push((|| {
                // Interior point well away from the source and the plates.
                let z = if zp > 0.5 { zp / 2.0 } else { (1.0 + zp) / 2.0 };
                let g0 = g(z)?;
                let second = finite_difference_second_derivative(|x| g(x).expect("inside slab"), z, h)?;
                let ode = (second - k * k * g0).abs() / (k * k * g0.abs()).max(second.abs());

                let slope = |x0: f64, dir: f64| -> Result<f64> {
                    // One-sided, fourth order.
                    let at = |i: f64| g(x0 + dir * i * h);
                    let sum = -25.0 * at(0.0)? + 48.0 * at(1.0)? - 36.0 * at(2.0)? + 16.0 * at(3.0)? - 3.0 * at(4.0)?;
                    Ok(dir * sum / (12.0 * h))
                };
                let jump = (slope(zp, 1.0)? - slope(zp, -1.0)? + 1.0).abs();

                let boundary = if neumann {
                    slope(0.0, 1.0)?.abs() / g(0.0)?.abs().max(1.0)
                } else {
                    g(0.0)?.abs()
                };
                Ok(ode.max(jump).max(boundary))
            })());
        }
    }
    Ok((worst(items)?, ctx.tol(1e-6)))
}

fn window_rms(sums: &[f64], exact: f64, from: usize, to: usize) -> f64 {
    // sums[n − 1] is the partial sum through mode n.
    let sq: f64 = sums[from - 1..to - 1].iter().map(|s| (s - exact).powi(2)).sum();
    (sq / (to - from) as f64).sqrt()
}

/// RMS error of the Dirichlet mode sum over truncations `[N, 2N)` against
/// `[2N, 4N)`; `≈ 4` for `1/N²` convergence.
pub fn mode_doubling_ratio(k: f64, z: f64, zp: f64, n: usize) -> Result<f64> {
    let budget = SeriesBudget::new(1_000, (4 * n).max(1_000), 0)?;
    let sums = green_mode_partial_sums(k, z, zp, 1.0, ScalarBc::Dirichlet, &budget)?;
    let exact = green_closed(k, z, zp, 1.0)?;
    Ok(window_rms(&sums, exact, n, 2 * n) / window_rms(&sums, exact, 2 * n, 4 * n))
}

fn green_mode_convergence(ctx: &Ctx) -> Measured {
    let n = if ctx.quick { 1_000 } else { 2_000 };
    let w = worst(
        green_test_points(20)
            .into_iter()
            .map(|(k, z, zp)| Ok((mode_doubling_ratio(k, z, zp, n)? - 4.0).abs() / 4.0)),
    )?;
    // Relative deviation of the observed ratio from 4.
    Ok((w, if ctx.quick { 0.1 } else { 0.02 }))
}

fn cutoff_relative(dim: u32, factor: f64) -> Result<f64> {
    let budget = SeriesBudget::default();
    let schedule = CutoffSchedule::standard(dim, 1.0)?.scaled(factor)?;
    let finite = cutoff_casimir_energy(dim, 1.0, &schedule, &budget)?;
    Ok(finite)
}

fn cutoff_energy(ctx: &Ctx, dim: u32) -> Measured {
    let reference = base_energy_density(&st(dim)?);
    let finite = cutoff_relative(dim, 1.0)?;
    Ok((rel(finite, reference), ctx.tol(1e-3)))
}

fn cutoff_energy_d2(ctx: &Ctx) -> Measured {
    cutoff_energy(ctx, 2)
}

fn cutoff_energy_d3(ctx: &Ctx) -> Measured {
    cutoff_energy(ctx, 3)
}

fn cutoff_regulator_independence(ctx: &Ctx) -> Measured {
    let w = worst([2u32, 3].iter().map(|&dim| {
        let base = cutoff_relative(dim, 1.0)?;
        Ok(rel(cutoff_relative(dim, 2.0)?, base).max(rel(cutoff_relative(dim, 0.5)?, base)))
    }))?;
    Ok((w, ctx.tol(2e-3)))
}

/// `∂_z² Σ_j V_D(|z + z₀ − 2jL|)` at `z = z₀` against `(D−1)·S·f_D/2`, and the
/// `j ≠ 0` sum over `z − z₀ − 2jL` against `(D−1)·S·ζ(D)`.
fn image_derivative_pattern(ctx: &Ctx) -> Measured {
    let cap = ctx.budget(20_000) as i64;
    let h = 2e-3;
    let mut items = Vec::new();
    for dim in [4u32, 5, 6, 8] {
        for &z0 in &[0.2, 0.37, 0.5] {
            items.push((|| {
                let s = st(dim)?;
                let v1 = specfun::coulomb_potential(dim, 1.0)?;
                let power = 2 - dim as i32;
                let mirrored = |z: f64| (-cap..=cap).map(|j| v1 * (z + z0 - 2.0 * j as f64).abs().powi(power)).sum::<f64>();
                let direct = |z: f64| {
                    (-cap..=cap)
                        .filter(|&j| j != 0)
                        .map(|j| v1 * (z - z0 - 2.0 * j as f64).abs().powi(power))
                        .sum::<f64>()
                };
                let d = f64::from(dim);
                let scale = density_scale(&s);
                let zeta = specfun::riemann_zeta(d)?;
                let a = rel(
                    finite_difference_second_derivative(mirrored, z0, h)?,
                    (d - 1.0) * scale * f_profile(&s, z0)? / 2.0,
                );
                let b = rel(finite_difference_second_derivative(direct, z0, h)?, (d - 1.0) * scale * zeta);
                Ok(a.max(b))
            })());
        }
    }
    Ok((worst(items)?, ctx.tol(1e-7)))
}

const PROFILE_SAMPLES: usize = 64;

fn pressure_uniformity(ctx: &Ctx) -> Measured {
    let mut items = Vec::new();
    for dim in 2..=12 {
        for th in theories(dim) {
            items.push((|| {
                let s = st(dim)?;
                let p = interior_profile(&s, &th, PROFILE_SAMPLES)?;
                let first = p.samples()[0].tensor.tzz;
                Ok(p.samples().iter().map(|x| rel(x.tensor.tzz, first)).fold(0.0, f64::max))
            })());
        }
    }
    Ok((worst(items)?, ctx.tol(1e-10)))
}

fn pressure_energy_slope(ctx: &Ctx) -> Measured {
    let mut items = Vec::new();
    for dim in 2..=12 {
        for th in theories(dim) {
            items.push((|| {
                let l = 1.0;
                let h = 1e-3;
                let e = |gap: f64| -> Result<f64> { Ok(total_energy_per_area(&Spacetime::new(dim, gap)?, &th)) };
                let slope = (-e(l + 2.0 * h)? + 8.0 * e(l + h)? - 8.0 * e(l - h)? + e(l - 2.0 * h)?) / (12.0 * h);
                let s = st(dim)?;
                let tzz = stress_at(&s, &th, 0.37)?.tzz;
                Ok(rel(-slope, tzz).max(rel(tzz, pressure(&s, &th))))
            })());
        }
    }
    Ok((worst(items)?, ctx.tol(1e-7)))
}

/// Exact equality across the slab, no tolerance.
fn conformal_constancy(_ctx: &Ctx) -> Measured {
    let mut residual = 0.0f64;
    let cases = [
        (4u32, Theory::Maxwell(EmBc::Metallic)),
        (4, Theory::Maxwell(EmBc::Mit)),
        (2, Theory::ScalarCanonical(ScalarBc::Dirichlet)),
        (2, Theory::ScalarCanonical(ScalarBc::Neumann)),
    ];
    for (dim, th) in cases {
        let p = interior_profile(&st(dim)?, &th, PROFILE_SAMPLES)?;
        let first = p.samples()[0].tensor;
        for s in p.samples() {
            let t = s.tensor;
            residual = residual
                .max((t.t00 - first.t00).abs())
                .max((t.tzz - first.tzz).abs())
                .max((t.t_transverse - first.t_transverse).abs())
                .max(t.trace.abs());
        }
    }
    Ok((residual, 0.0))
}

fn improved_traceless(ctx: &Ctx) -> Measured {
    let mut residual = 0.0f64;
    for dim in 3..=12 {
        let s = st(dim)?;
        let e0 = base_energy_density(&s);
        for bc in [ScalarBc::Dirichlet, ScalarBc::Neumann] {
            for z in midpoint_grid(1.0, PROFILE_SAMPLES) {
                let t = stress_at(&s, &Theory::ScalarImproved(bc), z)?;
                if t.trace != 0.0 {
                    return Ok((f64::INFINITY, 0.0));
                }
                residual = residual
                    .max(rel(t.t00, e0))
                    .max(rel(t.t_transverse, -e0))
                    .max(rel(t.tzz, (f64::from(dim) - 1.0) * e0))
                    .max(t.component_trace(dim).abs() / e0.abs());
            }
        }
    }
    Ok((residual, ctx.tol(1e-13)))
}

fn fluctuation_bc(ctx: &Ctx, bc: EmBc) -> EmBc {
    if ctx.tamper {
        bc.dual()
    } else {
        bc
    }
}

fn maxwell_trace_identity(ctx: &Ctx) -> Measured {
    let mut residual = 0.0f64;
    for dim in 3..=12 {
        let s = st(dim)?;
        for bc in [EmBc::Metallic, EmBc::Mit] {
            for z in midpoint_grid(1.0, PROFILE_SAMPLES) {
                let trace = em_stress(&s, bc, z)?.trace;
                let f2 = em_fluctuations(&s, fluctuation_bc(ctx, bc), z)?.field_invariant(dim);
                let assembled = (f64::from(dim) / 4.0 - 1.0) * f2;
                residual = residual.max(rel(trace, assembled));
            }
        }
    }
    Ok((residual, ctx.tol(1e-10)))
}

fn maxwell_assembled_stress(ctx: &Ctx) -> Measured {
    let mut residual = 0.0f64;
    for dim in 3..=12 {
        let s = st(dim)?;
        for bc in [EmBc::Metallic, EmBc::Mit] {
            for z in midpoint_grid(1.0, PROFILE_SAMPLES) {
                let closed = em_stress(&s, bc, z)?;
                let fl = em_fluctuations(&s, fluctuation_bc(ctx, bc), z)?;
                let built = fl.assemble_stress(dim);
                // Relative to the largest input: near the plates the
                // assembly cancels terms far larger than the result.
                let scale = closed.t00.abs().max(closed.tzz.abs()).max(fl.ez2.abs()).max(fl.ei2.abs());
                let diff = |a: f64, b: f64| (a - b).abs() / scale;
                residual = residual
                    .max(diff(closed.t00, built.t00))
                    .max(diff(closed.tzz, built.tzz))
                    .max(diff(closed.t_transverse, built.t_transverse));
            }
        }
    }
    Ok((residual, ctx.tol(1e-12)))
}

fn d4_fluctuation_displays(ctx: &Ctx) -> Measured {
    let s = st(4)?;
    let c = PI * PI / 48.0;
    let w = worst([0.25, 0.5, 0.75].iter().map(|&frac| {
        let theta = PI * frac;
        let fl = em_fluctuations(&s, fluctuation_bc(ctx, EmBc::Metallic), frac)?;
        let f = F_theta(theta)?;
        Ok(rel(fl.ez2, c * (f + 1.0 / 15.0)).max(rel(fl.ei2, c * (f - 1.0 / 15.0))))
    }))?;
    Ok((w, ctx.tol(1e-10)))
}

fn d4_em_duality(ctx: &Ctx) -> Measured {
    let s = st(4)?;
    let w = worst(midpoint_grid(1.0, 16).into_iter().map(|z| {
        let m = em_fluctuations(&s, EmBc::Metallic, z)?;
        let n = em_fluctuations(&s, EmBc::Mit, z)?;
        let bij = n.bij2.ok_or_else(|| Error::InvalidParameter("missing B_ij at D = 4".into()))?;
        Ok(rel(m.ez2, bij).max(rel(m.ei2, n.biz2)))
    }))?;
    Ok((w, ctx.tol(1e-14)))
}

/// Interior midpoints plus eight points on each side out to one gap.
pub fn subtracted_grid(gap: f64, interior: usize) -> Vec<f64> {
    let outside = 8;
    let mut grid: Vec<f64> = (0..outside).rev().map(|i| -gap * (i as f64 + 0.5) / outside as f64).collect();
    grid.extend(midpoint_grid(gap, interior));
    grid.extend((0..outside).map(|i| gap + gap * (i as f64 + 0.5) / outside as f64));
    grid
}

fn subtracted_energy_cancellation(ctx: &Ctx) -> Measured {
    let n = if ctx.quick { 256 } else { 1_024 };
    let w = worst((5..=10).map(|dim| {
        let s = st(dim)?;
        let p = subtracted_profile(&s, EmBc::Metallic, &subtracted_grid(1.0, n))?;
        let total = profile_energy_integral(&p)?.total;
        Ok(rel(total, total_energy_per_area(&s, &Theory::Maxwell(EmBc::Metallic))))
    }))?;
    Ok((w, ctx.tol(1e-6)))
}

fn single_plate_limit(ctx: &Ctx) -> Measured {
    let gap = 1e3;
    let z = 1.0;
    let mut residual = 0.0f64;
    for bc in [EmBc::Metallic, EmBc::Mit] {
        let near = em_stress(&Spacetime::new(6, gap)?, bc, z)?;
        let single = single_plate_stress(6, bc, z)?;
        residual = residual.max(rel(near.t00, single.t00)).max(rel(near.trace, single.trace));
        if single_plate_stress(4, bc, z)? != StressTensor::zero() {
            return Ok((f64::INFINITY, 0.0));
        }
        // At D = 4 nothing depends on the distance to the plate.
        let s4 = Spacetime::new(4, gap)?;
        if em_stress(&s4, bc, z)? != em_stress(&s4, bc, gap / 2.0)? {
            return Ok((f64::INFINITY, 0.0));
        }
    }
    Ok((residual, ctx.tol(1e-6)))
}

/// Local slope `log₂` of the relative deviation from the single-plate value
/// when `L/z` doubles; `D` is expected.
pub fn single_plate_rate(dim: u32, bc: EmBc, ratio: f64) -> Result<f64> {
    let dev = |r: f64| -> Result<f64> {
        let near = em_stress(&Spacetime::new(dim, r)?, bc, 1.0)?.t00;
        let single = single_plate_stress(dim, bc, 1.0)?.t00;
        Ok(((near - single) / single).abs())
    };
    Ok((dev(ratio)? / dev(2.0 * ratio)?).log2())
}

fn single_plate_approach_rate(ctx: &Ctx) -> Measured {
    let w = worst([EmBc::Metallic, EmBc::Mit].iter().flat_map(|&bc| {
        [40.0].into_iter().map(move |r| Ok((single_plate_rate(6, bc, r)? - 6.0).abs() / 6.0))
    }))?;
    Ok((w, if ctx.quick { 0.05 } else { 0.01 }))
}
