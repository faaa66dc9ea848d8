//! Vacuum energy, pressure and stress-tensor profiles of scalar and Maxwell
//! fields confined between two parallel plates in `D` spacetime dimensions.
//!
//! All quantities are in natural units (`ħ = c = 1`); plates sit at `z = 0`
//! and `z = L`.

pub mod energy;
pub mod error;
pub mod geometry;
pub mod maxwell;
pub mod oracle;
pub mod position;
pub mod scalar;
pub mod slab;
pub mod specfun;
pub mod stress;
pub mod verify;

pub use energy::{base_energy_density, density_scale, pressure, total_energy_per_area};
pub use error::{Error, Result};
pub use geometry::{EmBc, ScalarBc, Spacetime, Theory, MAX_DIM, MIN_DIM};
pub use maxwell::{
    em_fluctuations, em_stress, single_plate_stress, subtracted_plate_limits, subtracted_profile,
    subtracted_stress, EmFluctuations, PlateLimits,
};
#[allow(non_snake_case)]
pub use position::{f_profile, f_profile_cot, f_tilde, F_theta};
pub use scalar::{scalar_energy_density, scalar_stress};
pub use slab::{interior_profile, midpoint_grid, profile_on, stress_at};
pub use specfun::Precision;
pub use stress::{Profile, ProfileSample, Region, StressTensor};
