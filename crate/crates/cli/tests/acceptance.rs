//! Acceptance criteria 1–10, each at its stated tolerance. Every criterion
//! prints one PASS/FAIL line; the test fails if any criterion does.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use casimir_core::oracle::{
    cutoff_casimir_energy, green_closed, green_mode_partial_sums, green_mode_sum, image_sum_f, profile_energy_integral,
    CutoffSchedule, SeriesBudget,
};
use casimir_core::*;
use rand::{rngs::StdRng, Rng, SeedableRng};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn rel(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

fn st(dim: u32) -> Spacetime {
    Spacetime::new(dim, 1.0).unwrap()
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

fn criterion_1() -> Outcome {
    let args = ["casimir", "pressure", "--dim", "4", "--theory", "maxwell", "--bc", "metallic", "--length", "1"];
    // Warm the allocator and page in the binary once.
    casimir_cli::run(args, &mut Vec::new(), &mut Vec::new());
    let ((code, out), elapsed) = timed(|| {
        let mut out = Vec::new();
        let code = casimir_cli::run(args, &mut out, &mut Vec::new());
        (code, out)
    });
    let text = String::from_utf8(out).unwrap();
    let row: Vec<&str> = text.lines().nth(1).unwrap_or_default().split(',').collect();
    let printed: f64 = row.get(4).and_then(|s| s.parse().ok()).unwrap_or(f64::NAN);
    let exact = -PI * PI / 240.0;
    let direct = pressure(&st(4), &Theory::Maxwell(EmBc::Metallic));
    let err = rel(printed, exact).max(rel(direct, exact));
    let ok = code == 0 && err <= 1e-10 && elapsed < Duration::from_millis(10);
    outcome(ok, format!("P = {printed:e}, rel err {err:.2e} (≤ 1e-10), {elapsed:?} (< 10 ms)"))
}

fn criterion_2() -> Outcome {
    let ((errors, spread), elapsed) = timed(|| {
        let budget = SeriesBudget::default();
        let mut errors = 0.0f64;
        let mut spread = 0.0f64;
        for dim in [2u32, 3] {
            let schedule = CutoffSchedule::standard(dim, 1.0).unwrap();
            let finite = cutoff_casimir_energy(dim, 1.0, &schedule, &budget).unwrap();
            let reference = base_energy_density(&st(dim));
            errors = errors.max(rel(finite, reference));
            for factor in [0.5, 2.0] {
                let other = cutoff_casimir_energy(dim, 1.0, &schedule.scaled(factor).unwrap(), &budget).unwrap();
                spread = spread.max(rel(other, finite));
            }
        }
        (errors, spread)
    });
    let ok = errors <= 1e-3 && spread <= 2e-3 && elapsed < Duration::from_secs(5);
    outcome(
        ok,
        format!("rel err {errors:.2e} (≤ 1e-3), schedule ×2/×½ spread {spread:.2e} (≤ 2e-3), {elapsed:?} (< 5 s)"),
    )
}

fn rms_error(sums: &[f64], exact: f64, from: usize, to: usize) -> f64 {
    let sq: f64 = (from..to).map(|n| (sums[n - 1] - exact).powi(2)).sum();
    (sq / (to - from) as f64).sqrt()
}

fn criterion_3() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_ca51);
    let mut points = Vec::new();
    while points.len() < 20 {
        let k = 0.1 * 100f64.powf(rng.gen::<f64>());
        let (z, zp): (f64, f64) = (rng.gen(), rng.gen());
        if (z - zp).abs() >= 0.1 && (0.1..=1.9).contains(&(z + zp)) {
            points.push((k, z, zp));
        }
    }
    let ((worst_abs, worst_ratio), elapsed) = timed(|| {
        let budget = SeriesBudget::new(1_000, 10_000, 0).unwrap();
        let n = 2_000;
        let doubling = SeriesBudget::new(1_000, 4 * n, 0).unwrap();
        let mut worst_abs = 0.0f64;
        let mut worst_ratio = 0.0f64;
        for &(k, z, zp) in &points {
            let exact = green_closed(k, z, zp, 1.0).unwrap();
            let modes = green_mode_sum(k, z, zp, 1.0, ScalarBc::Dirichlet, &budget).unwrap();
            worst_abs = worst_abs.max((modes - exact).abs());
            let sums = green_mode_partial_sums(k, z, zp, 1.0, ScalarBc::Dirichlet, &doubling).unwrap();
            let ratio = rms_error(&sums, exact, n, 2 * n) / rms_error(&sums, exact, 2 * n, 4 * n);
            worst_ratio = worst_ratio.max((ratio - 4.0).abs());
        }
        (worst_abs, worst_ratio)
    });
    let ok = worst_abs <= 1e-6 && worst_ratio <= 0.2 && elapsed < Duration::from_secs(2);
    outcome(
        ok,
        format!("max |Δg| {worst_abs:.2e} (≤ 1e-6), doubling ratio 4 ± {worst_ratio:.3} (≤ 0.2), {elapsed:?} (< 2 s)"),
    )
}

fn criterion_4() -> Outcome {
    let (worst, elapsed) = timed(|| {
        let budget = SeriesBudget::default();
        let mut worst = rel(f_profile(&st(4), 0.5).unwrap(), PI.powi(4) / 3.0);
        for dim in [4u32, 6, 8] {
            for x in [0.1, 0.25, 0.5] {
                let hurwitz = f_profile(&st(dim), x).unwrap();
                let cot = f_profile_cot(&st(dim), x).unwrap();
                let images = image_sum_f(dim, x, &budget).unwrap();
                worst = worst.max(rel(hurwitz, cot)).max(rel(hurwitz, images)).max(rel(cot, images));
            }
        }
        worst
    });
    let ok = worst <= 1e-9 && elapsed < Duration::from_secs(10);
    outcome(ok, format!("max pairwise rel diff {worst:.2e} (≤ 1e-9), {elapsed:?} (< 10 s)"))
}

fn all_theories(dim: u32) -> Vec<Theory> {
    let mut v = vec![
        Theory::ScalarCanonical(ScalarBc::Dirichlet),
        Theory::ScalarCanonical(ScalarBc::Neumann),
    ];
    if dim >= 3 {
        v.extend([Theory::Maxwell(EmBc::Metallic), Theory::Maxwell(EmBc::Mit)]);
    }
    v
}

fn criterion_5() -> Outcome {
    let mut uniform = 0.0f64;
    let mut force = 0.0f64;
    for dim in 2..=12 {
        for th in all_theories(dim) {
            let p = interior_profile(&st(dim), &th, 64).unwrap();
            let first = p.samples()[0].tensor.tzz;
            for s in p.samples() {
                uniform = uniform.max(rel(s.tensor.tzz, first));
            }
            let h = 1e-3;
            let e = |gap: f64| total_energy_per_area(&Spacetime::new(dim, gap).unwrap(), &th);
            let slope = (8.0 * (e(1.0 + h) - e(1.0 - h)) - (e(1.0 + 2.0 * h) - e(1.0 - 2.0 * h))) / (12.0 * h);
            force = force.max(rel(first, -slope));
        }
    }
    let ok = uniform <= 1e-10 && force <= 1e-7;
    outcome(
        ok,
        format!("tzz spread {uniform:.2e} (≤ 1e-10), vs −dE/dL {force:.2e} (≤ 1e-7); D = 2..12, Maxwell from D = 3"),
    )
}

fn criterion_6() -> Outcome {
    let mut exact = true;
    for (dim, th) in [
        (4, Theory::Maxwell(EmBc::Metallic)),
        (4, Theory::Maxwell(EmBc::Mit)),
        (2, Theory::ScalarCanonical(ScalarBc::Dirichlet)),
        (2, Theory::ScalarCanonical(ScalarBc::Neumann)),
    ] {
        let p = interior_profile(&st(dim), &th, 64).unwrap();
        let first = p.samples()[0].tensor;
        exact &= p.samples().iter().all(|s| s.tensor == first);
    }
    let mut pattern = 0.0f64;
    let mut traceless = true;
    for dim in 3..=12 {
        let s = st(dim);
        let e0 = base_energy_density(&s);
        for bc in [ScalarBc::Dirichlet, ScalarBc::Neumann] {
            for z in midpoint_grid(1.0, 64) {
                let t = scalar_stress(&s, bc, z, true).unwrap();
                traceless &= t.trace == 0.0;
                pattern = pattern
                    .max(rel(t.t00, e0))
                    .max(rel(t.t_transverse, -e0))
                    .max(rel(t.tzz, f64::from(dim - 1) * e0))
                    .max(t.component_trace(dim).abs() / e0.abs());
            }
        }
    }
    let ok = exact && traceless && pattern <= 1e-10;
    outcome(
        ok,
        format!("bit-identical rows: {exact}; improved trace exactly 0: {traceless}; ℰ₀ pattern dev {pattern:.2e}"),
    )
}

fn criterion_7() -> Outcome {
    let mut worst = 0.0f64;
    for dim in 3..=12 {
        let s = st(dim);
        for bc in [EmBc::Metallic, EmBc::Mit] {
            for z in midpoint_grid(1.0, 64) {
                let trace = em_stress(&s, bc, z).unwrap().trace;
                let f2 = em_fluctuations(&s, bc, z).unwrap().field_invariant(dim);
                worst = worst.max(rel(trace, (f64::from(dim) / 4.0 - 1.0) * f2));
            }
        }
    }
    outcome(worst <= 1e-10, format!("max rel diff {worst:.2e} (≤ 1e-10)"))
}

fn criterion_8() -> Outcome {
    let s = st(4);
    let c = PI * PI / 48.0;
    let mut worst = 0.0f64;
    for frac in [0.25, 0.5, 0.75] {
        let theta = PI * frac;
        let fl = em_fluctuations(&s, EmBc::Metallic, frac).unwrap();
        let f = F_theta(theta).unwrap();
        worst = worst.max(rel(fl.ez2, c * (f + 1.0 / 15.0))).max(rel(fl.ei2, c * (f - 1.0 / 15.0)));
    }
    outcome(worst <= 1e-10, format!("max rel diff {worst:.2e} (≤ 1e-10) at θ = π/4, π/2, 3π/4"))
}

fn criterion_9() -> Outcome {
    let n = 1_024;
    let outside = 16;
    let mut grid: Vec<f64> = (0..outside).rev().map(|i| -(i as f64 + 0.5) / outside as f64).collect();
    grid.extend(midpoint_grid(1.0, n));
    grid.extend((0..outside).map(|i| 1.0 + (i as f64 + 0.5) / outside as f64));
    let mut worst = 0.0f64;
    let mut slowest = Duration::ZERO;
    for dim in 5..=10 {
        let s = st(dim);
        let (total, elapsed) = timed(|| {
            let p = subtracted_profile(&s, EmBc::Metallic, &grid).unwrap();
            profile_energy_integral(&p).unwrap().total
        });
        let expected = f64::from(dim - 2) * base_energy_density(&s);
        worst = worst.max(rel(total, expected));
        slowest = slowest.max(elapsed);
    }
    let ok = worst <= 1e-6 && slowest < Duration::from_secs(5);
    outcome(ok, format!("max rel diff {worst:.2e} (≤ 1e-6), slowest D {slowest:?} (< 5 s)"))
}

fn criterion_10() -> Outcome {
    let gap = 1e3;
    let mut worst = 0.0f64;
    for bc in [EmBc::Metallic, EmBc::Mit] {
        let near = em_stress(&Spacetime::new(6, gap).unwrap(), bc, 1.0).unwrap();
        let single = single_plate_stress(6, bc, 1.0).unwrap();
        worst = worst.max(rel(near.t00, single.t00)).max(rel(near.trace, single.trace));
    }
    let zero = [EmBc::Metallic, EmBc::Mit]
        .iter()
        .all(|&bc| single_plate_stress(4, bc, 1.0).unwrap() == StressTensor::zero());
    let s4 = Spacetime::new(4, gap).unwrap();
    let flat = em_stress(&s4, EmBc::Metallic, 1.0).unwrap() == em_stress(&s4, EmBc::Metallic, gap / 2.0).unwrap();
    let ok = worst <= 1e-6 && zero && flat;
    outcome(
        ok,
        format!("D = 6 rel diff {worst:.2e} (≤ 1e-6); D = 4 single plate exactly zero: {zero}, no z-dependence: {flat}"),
    )
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("classic Casimir pressure", criterion_1),
        ("zeta continuation vs cutoff", criterion_2),
        ("Green function equivalence", criterion_3),
        ("f_D closed forms", criterion_4),
        ("pressure constancy and force", criterion_5),
        ("conformal cases", criterion_6),
        ("Maxwell trace identity", criterion_7),
        ("D = 4 fluctuation displays", criterion_8),
        ("subtracted energy cancellation", criterion_9),
        ("single-plate limit", criterion_10),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        println!(
            "criterion {:>2} {:<32} {}  {}",
            i + 1,
            name,
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        );
        if !o.passed {
            failed.push(i + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
