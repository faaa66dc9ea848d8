//! Massless scalar field between Dirichlet or Neumann plates.
//!
//! In the coincidence limit the point-split correlators give
//!
//! ```text
//! ∂_z²(G_N + G_D) = 2(D−1)·S·ζ(D)          (z-independent)
//! ∂_z²(G_N − G_D) =  (D−1)·S·f_D(z/L)
//! ```
//!
//! with `S = Γ(D/2)/((4π)^{D/2} L^D)`. The canonical tensor mixes in the
//! second combination with weight `D/2 − 1`; the Huggins improvement term
//! removes it exactly.

use crate::energy::{base_energy_density, density_scale, scalar_pressure};
use crate::error::Result;
use crate::geometry::{ScalarBc, Spacetime};
use crate::position::f_profile;
use crate::stress::StressTensor;

/// Weight of `f_D` in the canonical energy density.
fn canonical_weight(st: &Spacetime) -> f64 {
    st.d() / 2.0 - 1.0
}

/// `S·(D/2 − 1)·f_D(z/L)`, or exactly zero when the weight vanishes (`D = 2`).
fn position_term(st: &Spacetime, z: f64) -> Result<f64> {
    let x = st.interior_fraction(z)?;
    let weight = canonical_weight(st);
    if weight == 0.0 {
        return Ok(0.0);
    }
    Ok(density_scale(st) * weight * f_profile(st, x)?)
}

/// Canonical energy density `ℰ_{D/N}(z) = −S [ζ(D) ± (D/2 − 1) f_D(z/L)]`,
/// upper sign Dirichlet.
pub fn scalar_energy_density(st: &Spacetime, bc: ScalarBc, z: f64) -> Result<f64> {
    let varying = position_term(st, z)?;
    Ok(base_energy_density(st) - bc.sign() * varying)
}

/// Vacuum stress tensor of the scalar at `0 < z < L`.
///
/// The canonical tensor has `T_μ̄ν̄ = ℰ(z)·η_μ̄ν̄` and constant
/// `T_zz = (D−1)ℰ₀`. With the Huggins term (`improved`) it becomes
/// `ℰ₀(η̄_μν + (D−1) n_μ n_ν)`, which is traceless.
pub fn scalar_stress(st: &Spacetime, bc: ScalarBc, z: f64, improved: bool) -> Result<StressTensor> {
    let varying = position_term(st, z)?;
    let tzz = scalar_pressure(st);
    if improved {
        return Ok(StressTensor::eta_form(base_energy_density(st), tzz, 0.0));
    }
    let t00 = base_energy_density(st) - bc.sign() * varying;
    // T^μ_μ = (1 − D/2)(∂φ)² = −(D−1)·(±S(D/2−1)f_D)
    let trace = -(st.d() - 1.0) * bc.sign() * varying;
    Ok(StressTensor::eta_form(t00, tzz, trace))
}
