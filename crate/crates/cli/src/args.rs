use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::table::Format;

#[derive(Debug, Parser)]
#[command(name = "casimir", version, about = "Casimir energies, pressures and stress profiles between parallel plates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Pressure and energy per unit area for one configuration.
    Pressure(PhysicsArgs),
    /// Stress tensor sampled across the slab.
    Profile(ProfileArgs),
    /// Electromagnetic field fluctuations across the slab.
    Fluctuations(SampledArgs),
    /// Energy density and pressures over a range of dimensions.
    Sweep(SweepArgs),
    /// Run the consistency checks against the brute-force oracles.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoryArg {
    ScalarCanonical,
    ScalarImproved,
    Maxwell,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BcArg {
    Dirichlet,
    Neumann,
    Metallic,
    Mit,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct PhysicsArgs {
    /// Spacetime dimension D.
    #[arg(long = "dim", default_value_t = 4)]
    pub dim: u32,
    #[arg(long, value_enum, default_value = "maxwell")]
    pub theory: TheoryArg,
    /// Boundary condition; defaults to dirichlet for scalars, metallic for maxwell.
    #[arg(long, value_enum)]
    pub bc: Option<BcArg>,
    /// Plate separation L in natural units.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub length: f64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SampledArgs {
    #[command(flatten)]
    pub physics: PhysicsArgs,
    /// Number of cell-centred points across the gap.
    #[arg(long, default_value_t = 16)]
    pub samples: usize,
    /// Explicit positions (comma separated) instead of the grid.
    #[arg(long = "z", value_delimiter = ',', allow_negative_numbers = true)]
    pub z: Vec<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct ProfileArgs {
    #[command(flatten)]
    pub sampled: SampledArgs,
    /// Maxwell only: remove the single-plate self-stress and include the
    /// regions outside the plates.
    #[arg(long)]
    pub subtracted: bool,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 2)]
    pub from: u32,
    #[arg(long, default_value_t = 12)]
    pub to: u32,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub length: f64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Cut series budgets 100× and relax tolerances 100×.
    #[arg(long)]
    pub quick: bool,
    /// Corrupt a sign on purpose; the run must then fail.
    #[cfg(debug_assertions)]
    #[arg(long, hide = true)]
    pub tamper: bool,
    #[command(flatten)]
    pub out: OutputArgs,
}
