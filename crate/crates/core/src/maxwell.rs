//! Maxwell field between metallic or MIT plates.
//!
//! In axial gauge each of the `D − 2` transverse polarizations behaves like
//! a scalar with Dirichlet (metallic) or Neumann (MIT) conditions. The
//! field-strength correlators then follow from the scalar ones:
//!
//! ```text
//! ∂_z² G_{N/D} = (D−1)·S·[ζ(D) ± ½ f_D(z/L)],   S = Γ(D/2)/((4π)^{D/2} L^D)
//! ```
//!
//! and the position-dependent part of `T_μ̄ν̄` carries weight `D/2 − 2`,
//! which vanishes only in the conformal case `D = 4`.

use rayon::prelude::*;

use crate::energy::{density_scale, scalar_pressure, zeta_dim};
use crate::error::{Error, Result};
use crate::geometry::{EmBc, Spacetime, Theory};
use crate::position::{f_profile, f_tilde};
use crate::stress::{Profile, ProfileSample, Region, StressTensor};

fn require_transverse(dim: u32) -> Result<()> {
    if dim < 3 {
        return Err(Error::UnsupportedDimension {
            theory: "maxwell",
            dim,
            reason: "needs at least one direction transverse to the plates",
        });
    }
    Ok(())
}

/// Weight `D/2 − 2` of the position-dependent term.
fn conformal_defect(dim: u32) -> f64 {
    f64::from(dim) / 2.0 - 2.0
}

/// Vacuum fluctuations of single field-strength components (no sums).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EmFluctuations {
    /// `⟨E_z²⟩`, the component normal to the plates.
    pub ez2: f64,
    /// `⟨E_i²⟩` for one transverse direction `i`.
    pub ei2: f64,
    /// `⟨B_iz²⟩`.
    pub biz2: f64,
    /// `⟨B_ij²⟩` for two distinct transverse directions; absent for `D = 3`.
    pub bij2: Option<f64>,
}

impl EmFluctuations {
    /// `⟨F_αβ F^αβ⟩ = 2(Σ_{pairs} B² − Σ E²)` with the component counts of
    /// `D`-dimensional spacetime: `E_z` once, `E_i` and `B_iz` each `D − 2`
    /// times, `B_ij` `(D−2)(D−3)/2` times.
    pub fn field_invariant(&self, dim: u32) -> f64 {
        let n_t = f64::from(dim - 2);
        let n_pairs = n_t * (n_t - 1.0) / 2.0;
        let magnetic = n_pairs * self.bij2.unwrap_or(0.0) + n_t * self.biz2;
        let electric = self.ez2 + n_t * self.ei2;
        2.0 * (magnetic - electric)
    }

    /// `⟨T_μν⟩` assembled component by component from
    /// `T_μν = F_μα F^α_ν + ¼ η_μν F²`.
    pub fn assemble_stress(&self, dim: u32) -> StressTensor {
        let n_t = f64::from(dim - 2);
        let f2 = self.field_invariant(dim);
        let bij2 = self.bij2.unwrap_or(0.0);
        let t00 = self.ez2 + n_t * self.ei2 + 0.25 * f2;
        let t_transverse = -self.ei2 + (n_t - 1.0) * bij2 + self.biz2 - 0.25 * f2;
        let tzz = -self.ez2 + n_t * self.biz2 - 0.25 * f2;
        StressTensor {
            t00,
            tzz,
            t_transverse,
            trace: (f64::from(dim) / 4.0 - 1.0) * f2,
        }
    }
}

/// Field fluctuations at `0 < z < L`; metallic takes the upper sign.
pub fn em_fluctuations(st: &Spacetime, bc: EmBc, z: f64) -> Result<EmFluctuations> {
    require_transverse(st.dim())?;
    let x = st.interior_fraction(z)?;
    let scale = density_scale(st);
    let zeta = zeta_dim(st);
    let half_f = 0.5 * bc.sign() * f_profile(st, x)?;
    let ez2 = (st.d() - 2.0) * scale * (zeta + half_f);
    let ei2 = -2.0 * scale * (zeta - half_f);
    Ok(EmFluctuations {
        ez2,
        ei2,
        biz2: -ez2,
        bij2: (st.dim() >= 4).then_some(-ei2),
    })
}

/// Maxwell stress tensor at `0 < z < L`:
/// `T_μ̄ν̄ = −(D−2) S [ζ(D) ± (D/2−2) f_D(z/L)] η_μ̄ν̄`, `T_zz = (D−2)(D−1)ℰ₀`.
pub fn em_stress(st: &Spacetime, bc: EmBc, z: f64) -> Result<StressTensor> {
    require_transverse(st.dim())?;
    let x = st.interior_fraction(z)?;
    let dof = st.d() - 2.0;
    let weight = conformal_defect(st.dim());
    let scale = density_scale(st);
    let varying = if weight == 0.0 {
        0.0
    } else {
        bc.sign() * scale * weight * f_profile(st, x)?
    };
    let t00 = -dof * (scale * zeta_dim(st) + varying);
    let tzz = dof * scalar_pressure(st);
    let trace = -(st.d() - 1.0) * dof * varying;
    Ok(StressTensor::eta_form(t00, tzz, trace))
}

/// Stress tensor next to a single plate at `z = 0`, the `L → ∞` limit of
/// [`em_stress`]: `T_μ̄ν̄ = ∓(D−2)(D/2−2) Γ(D/2)/((4π)^{D/2}|z|^D) η_μ̄ν̄`
/// on either side, with zero pressure.
pub fn single_plate_stress(dim: u32, bc: EmBc, z: f64) -> Result<StressTensor> {
    require_transverse(dim)?;
    if z == 0.0 {
        return Err(Error::OnPlate { z, gap: 0.0 });
    }
    if !z.is_finite() {
        return Err(Error::InvalidParameter(format!("z must be finite, got {z}")));
    }
    let weight = conformal_defect(dim);
    if weight == 0.0 {
        return Ok(StressTensor::zero());
    }
    let at_distance = Spacetime::new(dim, z.abs())?;
    let t00 = -bc.sign() * f64::from(dim - 2) * weight * density_scale(&at_distance);
    Ok(StressTensor::eta_form(t00, 0.0, f64::from(dim - 1) * t00))
}

/// The Maxwell tensor with the single-plate self-stress of both plates
/// (both sides of each) removed. Finite for every `z ∉ {0, L}`.
pub fn subtracted_stress(st: &Spacetime, bc: EmBc, z: f64) -> Result<StressTensor> {
    require_transverse(st.dim())?;
    let region = Region::of(z, st.gap()).ok_or(Error::OnPlate { z, gap: st.gap() })?;
    if !z.is_finite() {
        return Err(Error::InvalidParameter(format!("z must be finite, got {z}")));
    }
    let d = st.d();
    let gap = st.gap();
    let weight = conformal_defect(st.dim());
    let sign = bc.sign();
    let prefactor = -(d - 2.0) * density_scale(st);

    let t = match region {
        Region::Interior => {
            let varying = if weight == 0.0 {
                0.0
            } else {
                sign * weight * f_tilde(st, z / gap)?
            };
            let t00 = prefactor * (zeta_dim(st) + varying);
            let tzz = (d - 2.0) * scalar_pressure(st);
            StressTensor::eta_form(t00, tzz, (d - 1.0) * prefactor * varying)
        }
        Region::LeftExterior | Region::RightExterior => {
            // Residual field of the far plate.
            let far = if region == Region::LeftExterior { gap - z } else { z };
            let t00 = if weight == 0.0 {
                0.0
            } else {
                prefactor * (-sign * weight * (gap / far).powi(st.dim() as i32))
            };
            StressTensor::eta_form(t00, 0.0, (d - 1.0) * t00)
        }
    };
    Ok(t)
}

/// Samples [`subtracted_stress`] on `z_grid`, which must be strictly
/// increasing and avoid both plates. Points are evaluated in parallel and
/// assembled in grid order.
pub fn subtracted_profile(st: &Spacetime, bc: EmBc, z_grid: &[f64]) -> Result<Profile> {
    let samples = z_grid
        .par_iter()
        .map(|&z| {
            let tensor = subtracted_stress(st, bc, z)?;
            let region = Region::of(z, st.gap()).expect("checked by subtracted_stress");
            Ok(ProfileSample { z, region, tensor })
        })
        .collect::<Result<Vec<_>>>()?;
    Profile::new(*st, Theory::Maxwell(bc), samples)
}

/// One-sided limits of the subtracted energy density at the plate `z = 0`
/// (identical at `z = L` by reflection).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlateLimits {
    /// `z → 0⁺`.
    pub interior: f64,
    /// `z → 0⁻`.
    pub exterior: f64,
}

impl PlateLimits {
    pub fn gap(&self) -> f64 {
        self.interior - self.exterior
    }
}

pub fn subtracted_plate_limits(st: &Spacetime, bc: EmBc) -> Result<PlateLimits> {
    require_transverse(st.dim())?;
    let weight = conformal_defect(st.dim());
    let sign = bc.sign();
    let prefactor = -(st.d() - 2.0) * density_scale(st);
    let interior = prefactor * (zeta_dim(st) + sign * weight * f_tilde(st, 0.0)?);
    let exterior = prefactor * (-sign * weight);
    Ok(PlateLimits { interior, exterior })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::energy::{base_energy_density, pressure};
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    const PI2: f64 = PI * PI;

    fn st(dim: u32) -> Spacetime {
        Spacetime::new(dim, 1.0).unwrap()
    }

    #[test]
    fn four_dimensional_midpoint_fluctuations() {
        let fl = em_fluctuations(&st(4), EmBc::Metallic, 0.5).unwrap();
        assert_relative_eq!(fl.ez2, PI2 / 45.0, max_relative = 1e-13);
        assert_relative_eq!(fl.ei2, 7.0 * PI2 / 360.0, max_relative = 1e-13);
        assert_eq!(fl.biz2, -fl.ez2);
        assert_eq!(fl.bij2, Some(-fl.ei2));
    }

    #[test]
    fn three_dimensions_has_no_transverse_pair() {
        let fl = em_fluctuations(&st(3), EmBc::Mit, 0.3).unwrap();
        assert_eq!(fl.bij2, None);
        assert!(em_fluctuations(&st(2), EmBc::Mit, 0.3).is_err());
        assert!(em_stress(&st(2), EmBc::Metallic, 0.3).is_err());
    }

    #[test]
    fn mit_flips_the_position_term() {
        let s = st(7);
        let m = em_fluctuations(&s, EmBc::Metallic, 0.2).unwrap();
        let n = em_fluctuations(&s, EmBc::Mit, 0.2).unwrap();
        // The sum cancels the f-term, leaving 2(D−2)Sζ; the tolerance is set
        // by the size of what cancels.
        let expected = 2.0 * 5.0 * density_scale(&s) * zeta_dim(&s);
        assert_relative_eq!(m.ez2 + n.ez2, expected, epsilon = 1e-14 * m.ez2.abs());
        assert_relative_eq!(m.ei2 + n.ei2, -4.0 * density_scale(&s) * zeta_dim(&s), epsilon = 1e-14 * m.ei2.abs());
    }

    #[test]
    fn conformal_case_is_constant() {
        let e = -PI2 / 720.0;
        let reference = em_stress(&st(4), EmBc::Metallic, 0.5).unwrap();
        assert_relative_eq!(reference.t00, e, max_relative = 1e-14);
        assert_relative_eq!(reference.tzz, -PI2 / 240.0, max_relative = 1e-14);
        for &z in &[0.01, 0.3, 0.999] {
            assert_eq!(em_stress(&st(4), EmBc::Metallic, z).unwrap(), reference);
            assert_eq!(em_stress(&st(4), EmBc::Mit, z).unwrap(), reference);
        }
        assert_eq!(reference.trace, 0.0);
    }

    #[test]
    fn six_dimensional_midpoint() {
        // −4(Γ(3)/(4π)³)[ζ(6) + f₆(½)] with f₆(½) = 126 ζ(6); mpmath value.
        let t = em_stress(&st(6), EmBc::Metallic, 0.5).unwrap();
        assert_relative_eq!(t.t00, -0.520_872_637_354_243_01, max_relative = 1e-13);
        assert_relative_eq!(t.tzz, pressure(&st(6), &Theory::Maxwell(EmBc::Metallic)), max_relative = 1e-14);
    }

    #[test]
    fn assembled_tensor_matches_closed_form() {
        for dim in 3..=10 {
            for bc in [EmBc::Metallic, EmBc::Mit] {
                for &z in &[0.1, 0.37, 0.5] {
                    let closed = em_stress(&st(dim), bc, z).unwrap();
                    let built = em_fluctuations(&st(dim), bc, z).unwrap().assemble_stress(dim);
                    let scale = closed.t00.abs().max(closed.tzz.abs());
                    assert!((closed.t00 - built.t00).abs() <= 1e-12 * scale, "D={dim} {bc:?} z={z}");
                    assert!((closed.tzz - built.tzz).abs() <= 1e-12 * scale);
                    assert!((closed.t_transverse - built.t_transverse).abs() <= 1e-12 * scale);
                    assert!((closed.trace - built.trace).abs() <= 1e-12 * scale);
                }
            }
        }
    }

    #[test]
    fn single_plate_values() {
        let t = single_plate_stress(6, EmBc::Metallic, 1.0).unwrap();
        assert_relative_eq!(t.t00, -8.0 / (64.0 * PI.powi(3)), max_relative = 1e-14);
        assert_eq!(t.tzz, 0.0);
        let far = single_plate_stress(6, EmBc::Metallic, -2.0).unwrap();
        assert_relative_eq!(far.t00 / t.t00, 2f64.powi(-6), max_relative = 1e-14);
        assert_eq!(single_plate_stress(4, EmBc::Mit, 0.3).unwrap(), StressTensor::zero());
        assert!(single_plate_stress(6, EmBc::Metallic, 0.0).is_err());
        assert!(single_plate_stress(8, EmBc::Mit, 1.0).unwrap().t00 > 0.0);
    }

    #[test]
    fn subtracted_branches() {
        let s = st(6);
        let left = subtracted_stress(&s, EmBc::Metallic, -0.5).unwrap();
        let right = subtracted_stress(&s, EmBc::Metallic, 1.5).unwrap();
        assert_eq!(left.tzz, 0.0);
        assert_relative_eq!(left.t00, right.t00, max_relative = 1e-14);
        let inside = subtracted_stress(&s, EmBc::Metallic, 0.5).unwrap();
        assert_relative_eq!(inside.tzz, 4.0 * 5.0 * base_energy_density(&s), max_relative = 1e-14);
        assert!(subtracted_stress(&s, EmBc::Metallic, 0.0).is_err());
        assert!(subtracted_stress(&s, EmBc::Metallic, 1.0).is_err());
    }

    #[test]
    fn plate_limits_are_reported_not_assumed() {
        let s = st(6);
        let lim = subtracted_plate_limits(&s, EmBc::Metallic).unwrap();
        let eps = 1e-6;
        let inside = subtracted_stress(&s, EmBc::Metallic, eps).unwrap().t00;
        let outside = subtracted_stress(&s, EmBc::Metallic, -eps).unwrap().t00;
        assert_relative_eq!(inside, lim.interior, max_relative = 1e-5);
        assert_relative_eq!(outside, lim.exterior, max_relative = 1e-5);
        // ζ(1 ± (D−4)) structure: the jump is −(D−2)S·ζ(D)·(1 + 2(D/2−2)).
        let expected_gap = -4.0 * density_scale(&s) * zeta_dim(&s) * 3.0;
        assert_relative_eq!(lim.gap(), expected_gap, max_relative = 1e-12);
        let conformal = subtracted_plate_limits(&st(4), EmBc::Metallic).unwrap();
        assert_eq!(conformal.exterior, 0.0);
    }

    #[test]
    fn subtracted_profile_rejects_plate_points() {
        let s = st(5);
        assert!(subtracted_profile(&s, EmBc::Mit, &[-0.5, 0.0, 0.5]).is_err());
        let p = subtracted_profile(&s, EmBc::Mit, &[-0.5, 0.25, 0.5, 1.5]).unwrap();
        assert_eq!(p.samples().len(), 4);
        assert_eq!(p.samples()[0].region, Region::LeftExterior);
    }
}
