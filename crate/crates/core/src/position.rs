//! Position dependence between the plates.
//!
//! `f_D(x) = Σ_j |j + x|^{−D}` is the image sum that carries every
//! z-dependent expectation value, with `x = z/L`.

use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::geometry::Spacetime;
use crate::specfun;

fn open_unit(function: &'static str, x: f64) -> Result<()> {
    if x > 0.0 && x < 1.0 {
        Ok(())
    } else {
        Err(domain(function, format!("need 0 < x < 1, got {x}")))
    }
}

/// `f_D(x) = ζ_H(D, x) + ζ_H(D, 1 − x)`.
pub fn f_profile(st: &Spacetime, x: f64) -> Result<f64> {
    open_unit("f_profile", x)?;
    let s = st.d();
    Ok(specfun::hurwitz_zeta(s, x)? + specfun::hurwitz_zeta(s, 1.0 - x)?)
}

/// `f_D(x) = π^D/Γ(D) · (−d/dθ)^{D−1} cot θ` at `θ = πx`; even `D` only.
pub fn f_profile_cot(st: &Spacetime, x: f64) -> Result<f64> {
    open_unit("f_profile_cot", x)?;
    if st.dim() % 2 != 0 {
        return Err(domain(
            "f_profile_cot",
            format!("cotangent form needs even D, got {}", st.dim()),
        ));
    }
    let d = st.d();
    Ok(PI.powf(d) / specfun::gamma(d)? * specfun::cot_derivative(st.dim() - 1, PI * x)?)
}

/// `F(θ) = 3/sin⁴θ − 2/sin²θ`, so that `f_4(z/L) = (π⁴/3) F(πz/L)`.
#[allow(non_snake_case)]
pub fn F_theta(theta: f64) -> Result<f64> {
    if !(theta > 0.0 && theta < PI) {
        return Err(domain("F_theta", format!("need 0 < θ < π, got {theta}")));
    }
    let inv_s2 = 1.0 / theta.sin().powi(2);
    Ok(3.0 * inv_s2 * inv_s2 - 2.0 * inv_s2)
}

/// `f̃_D(x) = ζ_H(D, 1 + x) + ζ_H(D, 2 − x)`: the image sum with the two
/// nearest images removed. Finite on the closed interval `[0, 1]`.
pub fn f_tilde(st: &Spacetime, x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(domain("f_tilde", format!("need 0 ≤ x ≤ 1, got {x}")));
    }
    let s = st.d();
    Ok(specfun::hurwitz_zeta(s, 1.0 + x)? + specfun::hurwitz_zeta(s, 2.0 - x)?)
}
