//! Stress-tensor values at a point and sampled profiles.

use crate::error::{Error, Result};
use crate::geometry::{Spacetime, Theory};

/// Distinct diagonal components of `⟨T_μν⟩` at one point, with the
/// metric signs already resolved (signature `+,−,…,−`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StressTensor {
    /// Energy density `T_00`.
    pub t00: f64,
    /// Normal pressure `T_zz`.
    pub tzz: f64,
    /// Each transverse spatial component `T_ii`, `i ≠ z` (no sum).
    pub t_transverse: f64,
    /// `T^μ_μ`.
    pub trace: f64,
}

impl StressTensor {
    /// Tensor of the form `X·η̄_μν + tzz·n_μ n_ν`, i.e. `T_ii = −T_00`.
    /// The trace is supplied separately so that it can be evaluated at the
    /// level of coefficients rather than by cancelling components.
    pub(crate) fn eta_form(t00: f64, tzz: f64, trace: f64) -> Self {
        Self {
            t00,
            tzz,
            t_transverse: -t00,
            trace,
        }
    }

    pub const fn zero() -> Self {
        Self {
            t00: 0.0,
            tzz: 0.0,
            t_transverse: 0.0,
            trace: 0.0,
        }
    }

    /// `T_00 − (D−2)·T_ii − T_zz`, assembled from the components.
    pub fn component_trace(&self, dim: u32) -> f64 {
        self.t00 - f64::from(dim - 2) * self.t_transverse - self.tzz
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            t00: self.t00 * factor,
            tzz: self.tzz * factor,
            t_transverse: self.t_transverse * factor,
            trace: self.trace * factor,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    LeftExterior,
    Interior,
    RightExterior,
}

impl Region {
    pub fn of(z: f64, gap: f64) -> Option<Self> {
        if z < 0.0 {
            Some(Region::LeftExterior)
        } else if z > 0.0 && z < gap {
            Some(Region::Interior)
        } else if z > gap {
            Some(Region::RightExterior)
        } else {
            None
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Region::LeftExterior => "left-exterior",
            Region::Interior => "interior",
            Region::RightExterior => "right-exterior",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProfileSample {
    pub z: f64,
    pub region: Region,
    pub tensor: StressTensor,
}

/// Stress tensor sampled on a strictly increasing grid in `z`.
#[derive(Debug, Clone, PartialEq)]
pub struct Profile {
    spacetime: Spacetime,
    theory: Theory,
    samples: Vec<ProfileSample>,
}

const TZZ_UNIFORMITY: f64 = 1e-10;

impl Profile {
    pub fn new(spacetime: Spacetime, theory: Theory, samples: Vec<ProfileSample>) -> Result<Self> {
        if let Some(w) = samples.windows(2).find(|w| w[1].z <= w[0].z) {
            return Err(Error::MalformedProfile(format!(
                "grid not strictly increasing at z = {} → {}",
                w[0].z, w[1].z
            )));
        }
        for s in &samples {
            if Region::of(s.z, spacetime.gap()) != Some(s.region) {
                return Err(Error::MalformedProfile(format!(
                    "sample at z = {} tagged {}",
                    s.z,
                    s.region.name()
                )));
            }
        }
        let mut interior = samples.iter().filter(|s| s.region == Region::Interior);
        if let Some(first) = interior.next() {
            let reference = first.tensor.tzz;
            for s in interior {
                let scale = reference.abs().max(s.tensor.tzz.abs()).max(1e-300);
                if (s.tensor.tzz - reference).abs() > TZZ_UNIFORMITY * scale {
                    return Err(Error::MalformedProfile(format!(
                        "interior pressure varies: {} at z = {} vs {}",
                        s.tensor.tzz, s.z, reference
                    )));
                }
            }
        }
        Ok(Self {
            spacetime,
            theory,
            samples,
        })
    }

    pub fn spacetime(&self) -> &Spacetime {
        &self.spacetime
    }

    pub fn theory(&self) -> &Theory {
        &self.theory
    }

    pub fn samples(&self) -> &[ProfileSample] {
        &self.samples
    }

    pub fn region(&self, region: Region) -> impl Iterator<Item = &ProfileSample> {
        self.samples.iter().filter(move |s| s.region == region)
    }
}
