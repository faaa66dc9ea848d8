//! Real special functions used by the closed forms.
//!
//! Everything here is a pure function of its arguments. Series lengths are
//! fixed by [`Precision`]; nothing is cached between calls.

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};

/// Exact Bernoulli numbers `B_2, B_4, …, B_20` as (numerator, denominator).
const BERNOULLI_EVEN: [(f64, f64); 10] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
];

/// `B_{2k}` for `k = 1..=10`.
fn bernoulli_even(k: usize) -> f64 {
    let (num, den) = BERNOULLI_EVEN[k - 1];
    num / den
}

fn factorial(n: u32) -> f64 {
    (2..=n).fold(1.0, |acc, i| acc * f64::from(i))
}

/// Series controls for the zeta-type kernels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Precision {
    abs_tol: f64,
    max_terms: usize,
}

impl Precision {
    /// `abs_tol` stops the Euler–Maclaurin correction once a term drops below
    /// `abs_tol · |partial sum|`; `max_terms` is the number of leading terms
    /// summed directly before the asymptotic tail takes over.
    pub fn new(abs_tol: f64, max_terms: usize) -> Result<Self> {
        if !(abs_tol > 0.0 && abs_tol.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "abs_tol must be positive and finite, got {abs_tol}"
            )));
        }
        if max_terms < 16 {
            return Err(Error::InvalidParameter(format!(
                "max_terms must be at least 16, got {max_terms}"
            )));
        }
        Ok(Self { abs_tol, max_terms })
    }

    pub fn abs_tol(&self) -> f64 {
        self.abs_tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }
}

impl Default for Precision {
    fn default() -> Self {
        Self {
            abs_tol: 1e-18,
            max_terms: 20,
        }
    }
}

// Lanczos approximation, g = 7, n = 9.
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const STIRLING_CUTOVER: f64 = 30.0;

/// Γ(x) for real `x` off the non-positive integers.
pub fn gamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(domain("gamma", format!("non-finite argument {x}")));
    }
    if x <= 0.0 && x == x.floor() {
        return Err(Error::Pole {
            function: "gamma",
            at: x,
        });
    }
    Ok(gamma_unchecked(x))
}

fn gamma_unchecked(x: f64) -> f64 {
    if x < 0.5 {
        // Γ(x)Γ(1−x) = π / sin(πx)
        return PI / ((PI * x).sin() * gamma_unchecked(1.0 - x));
    }
    if x == x.floor() && x <= 32.0 {
        return factorial(x as u32 - 1);
    }
    if x > STIRLING_CUTOVER {
        return ln_gamma_stirling(x).exp();
    }
    let x = x - 1.0;
    let series = LANCZOS[1..]
        .iter()
        .enumerate()
        .fold(LANCZOS[0], |acc, (i, &c)| acc + c / (x + (i + 1) as f64));
    let t = x + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(x + 0.5) * (-t).exp() * series
}

/// Stirling series for ln Γ(x) with six Bernoulli corrections.
fn ln_gamma_stirling(x: f64) -> f64 {
    let mut corr = 0.0;
    let mut xpow = x;
    let x2 = x * x;
    for k in 1..=6 {
        let two_k = (2 * k) as f64;
        corr += bernoulli_even(k) / (two_k * (two_k - 1.0) * xpow);
        xpow *= x2;
    }
    (x - 0.5) * x.ln() - x + 0.5 * (2.0 * PI).ln() + corr
}

/// Euler–Maclaurin tail `Σ_{n≥0} (n + w)^{−s}` for `w` well inside the
/// asymptotic region (`w ≳ 16`). Valid for any real `s ≠ 1`.
fn euler_maclaurin_tail(s: f64, w: f64, bernoulli_terms: usize, tol: f64) -> f64 {
    let mut sum = w.powf(1.0 - s) / (s - 1.0) + 0.5 * w.powf(-s);
    let mut rising = s;
    let mut wpow = w.powf(-s - 1.0);
    let w2 = w * w;
    for k in 1..=bernoulli_terms {
        let two_k = (2 * k) as f64;
        let term = bernoulli_even(k) / factorial(2 * k as u32) * rising * wpow;
        sum += term;
        if term.abs() <= tol * sum.abs() {
            break;
        }
        rising *= (s + two_k - 1.0) * (s + two_k);
        wpow /= w2;
    }
    sum
}

/// Riemann ζ(s), analytically continued to all real `s ≠ 1`.
pub fn riemann_zeta(s: f64) -> Result<f64> {
    riemann_zeta_with(s, &Precision::default())
}

pub fn riemann_zeta_with(s: f64, prec: &Precision) -> Result<f64> {
    if !s.is_finite() {
        return Err(domain("riemann_zeta", format!("non-finite argument {s}")));
    }
    if s == 1.0 {
        return Err(Error::Pole {
            function: "riemann_zeta",
            at: 1.0,
        });
    }
    if s >= 0.0 {
        let n = prec.max_terms;
        let head: f64 = (1..n).rev().map(|k| (k as f64).powf(-s)).sum();
        return Ok(head + euler_maclaurin_tail(s, n as f64, 6, prec.abs_tol));
    }
    // Trivial zeros.
    if s == s.floor() && (s / 2.0) == (s / 2.0).floor() {
        return Ok(0.0);
    }
    // Γ(s/2) π^{−s/2} ζ(s) = Γ((1−s)/2) π^{−(1−s)/2} ζ(1−s)
    let mirrored = riemann_zeta_with(1.0 - s, prec)?;
    Ok(gamma_unchecked((1.0 - s) / 2.0) * PI.powf(s - 0.5) * mirrored / gamma_unchecked(s / 2.0))
}

/// Hurwitz ζ(s, a) = Σ_{n≥0} (n + a)^{−s} for `s > 1`, `a > 0`.
pub fn hurwitz_zeta(s: f64, a: f64) -> Result<f64> {
    hurwitz_zeta_with(s, a, &Precision::default())
}

pub fn hurwitz_zeta_with(s: f64, a: f64, prec: &Precision) -> Result<f64> {
    if !(s > 1.0 && s.is_finite()) {
        return Err(domain("hurwitz_zeta", format!("need s > 1, got {s}")));
    }
    if !(a > 0.0 && a.is_finite()) {
        return Err(domain("hurwitz_zeta", format!("need a > 0, got {a}")));
    }
    let n = prec.max_terms;
    // Leading terms summed smallest first; near a plate a^{-s} dominates.
    let head: f64 = (0..n).rev().map(|k| (k as f64 + a).powf(-s)).sum();
    Ok(head + euler_maclaurin_tail(s, a + n as f64, 10, prec.abs_tol))
}

/// Polygamma ψ^{(k)}(x) for `k ≥ 1`, `x > 0`.
///
/// Computed by upward recurrence to `x ≥ 20` followed by the asymptotic
/// expansion; it does not go through [`hurwitz_zeta`], so the relation
/// `ψ^{(k)}(x) = (−1)^{k+1} k! ζ(k+1, x)` is an independent check.
pub fn polygamma(k: u32, x: f64) -> Result<f64> {
    if k == 0 {
        return Err(domain("polygamma", "order must be at least 1"));
    }
    if !(x > 0.0 && x.is_finite()) {
        return Err(domain("polygamma", format!("need x > 0, got {x}")));
    }
    const SHIFT_TO: f64 = 20.0;
    let m = f64::from(k);
    let m_fact = factorial(k);

    let mut x = x;
    let mut recurrence = 0.0;
    while x < SHIFT_TO {
        recurrence += x.powf(-m - 1.0);
        x += 1.0;
    }

    // (m−1)!/x^m + m!/(2x^{m+1}) + Σ B_{2j} (2j+m−1)!/((2j)! x^{2j+m})
    let mut asym = factorial(k - 1) / x.powf(m) + m_fact / (2.0 * x.powf(m + 1.0));
    for j in 1..=10usize {
        let two_j = 2 * j as u32;
        // (2j+m−1)!/(2j)! as a running product.
        let ratio: f64 = (two_j + 1..two_j + k).map(f64::from).product();
        let term = bernoulli_even(j) * ratio / x.powf(f64::from(two_j) + m);
        asym += term;
        if term.abs() <= 1e-18 * asym.abs() {
            break;
        }
    }
    let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
    Ok(sign * (m_fact * recurrence + asym))
}

/// Integer coefficients of the polynomial `P_m` with
/// `(−d/dθ)^m cot θ = P_m(cot θ)`.
///
/// `P_0(c) = c` and `P_{j+1}(c) = P_j'(c)·(1 + c²)`. Returns `None` when a
/// coefficient no longer fits in `u128`.
pub fn cot_derivative_coefficients(m: u32) -> Option<Vec<u128>> {
    let mut poly: Vec<u128> = vec![0, 1];
    for _ in 0..m {
        // derivative
        let deriv: Vec<u128> = poly
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| c.checked_mul(i as u128))
            .collect::<Option<_>>()?;
        // times (1 + c²)
        let mut next = vec![0u128; deriv.len() + 2];
        for (i, &c) in deriv.iter().enumerate() {
            next[i] = next[i].checked_add(c)?;
            next[i + 2] = next[i + 2].checked_add(c)?;
        }
        while next.last() == Some(&0) {
            next.pop();
        }
        poly = next;
    }
    Some(poly)
}

/// `(−d/dθ)^m cot θ` for `θ ∈ (0, π)`.
pub fn cot_derivative(m: u32, theta: f64) -> Result<f64> {
    if m == 0 {
        return Err(domain("cot_derivative", "order must be at least 1"));
    }
    if !(theta > 0.0 && theta < PI) {
        return Err(domain(
            "cot_derivative",
            format!("theta must lie strictly inside (0, π), got {theta}"),
        ));
    }
    let coeffs = cot_derivative_coefficients(m)
        .ok_or_else(|| domain("cot_derivative", format!("order {m} overflows coefficients")))?;
    let c = 1.0 / theta.tan();
    // Only powers of one parity survive and all coefficients are
    // non-negative, so evaluate in c² and restore the sign afterwards.
    let parity = (m as usize + 1) % 2;
    let c2 = c * c;
    let even_part = coeffs
        .iter()
        .skip(parity)
        .step_by(2)
        .rev()
        .fold(0.0, |acc, &k| acc * c2 + k as f64);
    Ok(if parity == 1 { even_part * c } else { even_part })
}

/// Generalized Coulomb potential `V_n(r) = Γ(n/2 − 1) / (4 π^{n/2} r^{n−2})`
/// in `n` spatial dimensions.
pub fn coulomb_potential(n: u32, r: f64) -> Result<f64> {
    if n < 3 {
        return Err(domain("coulomb_potential", format!("need n ≥ 3, got {n}")));
    }
    if !(r > 0.0 && r.is_finite()) {
        return Err(domain("coulomb_potential", format!("need r > 0, got {r}")));
    }
    let half_n = f64::from(n) / 2.0;
    Ok(gamma_unchecked(half_n - 1.0) / (4.0 * PI.powf(half_n) * r.powi(n as i32 - 2)))
}
