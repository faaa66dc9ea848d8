//! Global (zeta-regularized) Casimir energy and pressure.

use std::f64::consts::PI;

use crate::geometry::{Spacetime, Theory};
use crate::specfun;

/// Common scale `Γ(D/2) / ((4π)^{D/2} L^D)` of every density in the slab.
pub fn density_scale(st: &Spacetime) -> f64 {
    let half_d = st.d() / 2.0;
    specfun::gamma(half_d).expect("D/2 is positive")
        / ((4.0 * PI).powf(half_d) * st.gap().powi(st.dim() as i32))
}

pub(crate) fn zeta_dim(st: &Spacetime) -> f64 {
    specfun::riemann_zeta(st.d()).expect("D ≥ 2 is off the pole")
}

/// Energy density `ℰ₀ = −Γ(D/2) ζ(D) / ((4π)^{D/2} L^D)` of one scalar
/// degree of freedom.
pub fn base_energy_density(st: &Spacetime) -> f64 {
    -density_scale(st) * zeta_dim(st)
}

/// Energy per unit transverse hyperarea, `E = n_dof · ℰ₀ · L`.
///
/// The Huggins term is a total divergence and leaves this unchanged.
pub fn total_energy_per_area(st: &Spacetime, theory: &Theory) -> f64 {
    f64::from(theory.degrees_of_freedom(st)) * base_energy_density(st) * st.gap()
}

/// Pressure `P = −∂E/∂L = n_dof · (D − 1) · ℰ₀`.
pub fn pressure(st: &Spacetime, theory: &Theory) -> f64 {
    f64::from(theory.degrees_of_freedom(st)) * scalar_pressure(st)
}

pub(crate) fn scalar_pressure(st: &Spacetime) -> f64 {
    (st.d() - 1.0) * base_energy_density(st)
}
