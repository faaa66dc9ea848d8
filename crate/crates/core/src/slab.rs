//! Theory-independent entry points for the region between the plates.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::{Spacetime, Theory};
use crate::maxwell::em_stress;
use crate::scalar::scalar_stress;
use crate::stress::{Profile, ProfileSample, Region, StressTensor};

/// `⟨T_μν⟩` at `0 < z < L` for any theory.
pub fn stress_at(st: &Spacetime, theory: &Theory, z: f64) -> Result<StressTensor> {
    match *theory {
        Theory::ScalarCanonical(bc) => scalar_stress(st, bc, z, false),
        Theory::ScalarImproved(bc) => scalar_stress(st, bc, z, true),
        Theory::Maxwell(bc) => em_stress(st, bc, z),
    }
}

/// Cell-centred grid `z_i = L (i + ½)/n`, `i = 0..n`.
pub fn midpoint_grid(gap: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| gap * (i as f64 + 0.5) / n as f64).collect()
}

/// Evaluates `theory` on `z_grid`, which must lie strictly inside the slab
/// and be strictly increasing.
pub fn profile_on(st: &Spacetime, theory: &Theory, z_grid: &[f64]) -> Result<Profile> {
    let samples = z_grid
        .par_iter()
        .map(|&z| {
            let tensor = stress_at(st, theory, z)?;
            Ok(ProfileSample {
                z,
                region: Region::Interior,
                tensor,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Profile::new(*st, *theory, samples)
}

/// [`profile_on`] over `n` midpoint samples.
pub fn interior_profile(st: &Spacetime, theory: &Theory, n: usize) -> Result<Profile> {
    if n == 0 {
        return Err(Error::InsufficientSamples { need: 1, got: 0 });
    }
    profile_on(st, theory, &midpoint_grid(st.gap(), n))
}
