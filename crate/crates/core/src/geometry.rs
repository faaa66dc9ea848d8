//! Slab geometry, boundary conditions and field theories.

use std::fmt;

use crate::error::{Error, Result};

pub const MIN_DIM: u32 = 2;
pub const MAX_DIM: u32 = 24;

/// Two parallel hyperplanes at `z = 0` and `z = L` in `D`-dimensional
/// spacetime (ħ = c = 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Spacetime {
    dim: u32,
    gap: f64,
}

impl Spacetime {
    pub fn new(dim: u32, gap: f64) -> Result<Self> {
        if !(MIN_DIM..=MAX_DIM).contains(&dim) {
            return Err(Error::InvalidSpacetime(format!(
                "dimension D = {dim} outside supported range {MIN_DIM}..={MAX_DIM}"
            )));
        }
        if !(gap > 0.0 && gap.is_finite()) {
            return Err(Error::InvalidSpacetime(format!(
                "plate separation must be positive and finite, got {gap}"
            )));
        }
        Ok(Self { dim, gap })
    }

    /// Spacetime dimension `D`.
    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// Number of spatial dimensions `d = D − 1`.
    pub fn spatial_dim(&self) -> u32 {
        self.dim - 1
    }

    /// Plate separation `L`.
    pub fn gap(&self) -> f64 {
        self.gap
    }

    pub fn with_gap(&self, gap: f64) -> Result<Self> {
        Self::new(self.dim, gap)
    }

    pub(crate) fn d(&self) -> f64 {
        f64::from(self.dim)
    }

    /// Reduced position `z / L`, rejecting points on or outside the plates.
    pub(crate) fn interior_fraction(&self, z: f64) -> Result<f64> {
        if z == 0.0 || z == self.gap {
            return Err(Error::OnPlate { z, gap: self.gap });
        }
        if !(z > 0.0 && z < self.gap) {
            return Err(Error::OutsideSlab { z, gap: self.gap });
        }
        Ok(z / self.gap)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScalarBc {
    Dirichlet,
    Neumann,
}

impl ScalarBc {
    /// Sign in front of the position-dependent term: `+` Dirichlet, `−` Neumann.
    pub fn sign(self) -> f64 {
        match self {
            ScalarBc::Dirichlet => 1.0,
            ScalarBc::Neumann => -1.0,
        }
    }

    pub fn swapped(self) -> Self {
        match self {
            ScalarBc::Dirichlet => ScalarBc::Neumann,
            ScalarBc::Neumann => ScalarBc::Dirichlet,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ScalarBc::Dirichlet => "dirichlet",
            ScalarBc::Neumann => "neumann",
        }
    }
}

/// Electromagnetic plate conditions. In axial gauge `A_z = 0` the transverse
/// potentials obey Dirichlet conditions on metallic plates and Neumann
/// conditions for the bag-model (MIT) condition `n^μ F_μν = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EmBc {
    Metallic,
    Mit,
}

impl EmBc {
    pub fn scalar_bc(self) -> ScalarBc {
        match self {
            EmBc::Metallic => ScalarBc::Dirichlet,
            EmBc::Mit => ScalarBc::Neumann,
        }
    }

    pub fn sign(self) -> f64 {
        self.scalar_bc().sign()
    }

    pub fn dual(self) -> Self {
        match self {
            EmBc::Metallic => EmBc::Mit,
            EmBc::Mit => EmBc::Metallic,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            EmBc::Metallic => "metallic",
            EmBc::Mit => "mit",
        }
    }
}

/// Field content together with the stress tensor used for it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theory {
    /// Minimally coupled massless scalar, canonical tensor.
    ScalarCanonical(ScalarBc),
    /// Canonical tensor plus the Huggins improvement term.
    ScalarImproved(ScalarBc),
    Maxwell(EmBc),
}

impl Theory {
    pub fn name(&self) -> &'static str {
        match self {
            Theory::ScalarCanonical(_) => "scalar-canonical",
            Theory::ScalarImproved(_) => "scalar-improved",
            Theory::Maxwell(_) => "maxwell",
        }
    }

    pub fn bc_name(&self) -> &'static str {
        match self {
            Theory::ScalarCanonical(bc) | Theory::ScalarImproved(bc) => bc.name(),
            Theory::Maxwell(bc) => bc.name(),
        }
    }

    /// Number of scalar degrees of freedom the field carries.
    pub fn degrees_of_freedom(&self, st: &Spacetime) -> u32 {
        match self {
            Theory::Maxwell(_) => st.dim() - 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.name(), self.bc_name())
    }
}
