use std::io::Write;

use casimir_core::maxwell::{em_fluctuations, subtracted_profile};
use casimir_core::verify::{self, VerifyOptions};
use casimir_core::{
    base_energy_density, midpoint_grid, pressure, profile_on, total_energy_per_area, EmBc, Profile, ScalarBc,
    Spacetime, Theory, MAX_DIM, MIN_DIM,
};
use rayon::prelude::*;

use crate::args::{BcArg, PhysicsArgs, ProfileArgs, SampledArgs, SweepArgs, TheoryArg, VerifyArgs};
use crate::error::{CliError, CliResult};
use crate::table::{Cell, Table};

const UNITS: &str = "hbar = c = 1; z and L in length units; densities and pressures in length^-D";

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn check_dim(dim: u32) -> CliResult<()> {
    if (MIN_DIM..=MAX_DIM).contains(&dim) {
        Ok(())
    } else {
        Err(usage(format!("--dim: D = {dim} outside supported range {MIN_DIM}..={MAX_DIM}")))
    }
}

fn check_length(length: f64) -> CliResult<()> {
    if length > 0.0 && length.is_finite() {
        Ok(())
    } else {
        Err(usage(format!("--length must be positive and finite, got {length}")))
    }
}

fn resolve_theory(theory: TheoryArg, bc: Option<BcArg>) -> CliResult<Theory> {
    let scalar = |bc: Option<BcArg>| match bc {
        None | Some(BcArg::Dirichlet) => Ok(ScalarBc::Dirichlet),
        Some(BcArg::Neumann) => Ok(ScalarBc::Neumann),
        Some(other) => Err(usage(format!(
            "--bc {} does not apply to a scalar field; use dirichlet or neumann",
            bc_flag(other)
        ))),
    };
    Ok(match theory {
        TheoryArg::ScalarCanonical => Theory::ScalarCanonical(scalar(bc)?),
        TheoryArg::ScalarImproved => Theory::ScalarImproved(scalar(bc)?),
        TheoryArg::Maxwell => Theory::Maxwell(match bc {
            None | Some(BcArg::Metallic) => EmBc::Metallic,
            Some(BcArg::Mit) => EmBc::Mit,
            Some(other) => {
                return Err(usage(format!(
                    "--bc {} does not apply to maxwell; use metallic or mit",
                    bc_flag(other)
                )))
            }
        }),
    })
}

fn bc_flag(bc: BcArg) -> &'static str {
    match bc {
        BcArg::Dirichlet => "dirichlet",
        BcArg::Neumann => "neumann",
        BcArg::Metallic => "metallic",
        BcArg::Mit => "mit",
    }
}

/// Validated physics flags. Everything is computed at `L = 1` and rescaled.
struct Setup {
    unit: Spacetime,
    theory: Theory,
    length: f64,
}

impl Setup {
    fn new(args: &PhysicsArgs) -> CliResult<Self> {
        check_dim(args.dim)?;
        check_length(args.length)?;
        Ok(Self {
            unit: Spacetime::new(args.dim, 1.0)?,
            theory: resolve_theory(args.theory, args.bc)?,
            length: args.length,
        })
    }

    fn dim(&self) -> u32 {
        self.unit.dim()
    }

    /// `L^{−D}`: densities, pressures.
    fn density_scale(&self) -> f64 {
        self.length.powi(-(self.dim() as i32))
    }

    fn config(&self, table: Table, command: &str) -> Table {
        table
            .config("command", command)
            .config("dim", i64::from(self.dim()))
            .config("length", self.length)
            .config("theory", self.theory.name())
            .config("bc", self.theory.bc_name())
            .config("units", UNITS)
    }
}

pub fn pressure_cmd(args: &PhysicsArgs, err: &mut dyn Write) -> CliResult<Table> {
    let s = Setup::new(args)?;
    if s.theory.degrees_of_freedom(&s.unit) == 0 {
        writeln!(err, "warning: {} at D = {} has no propagating degrees of freedom", s.theory.name(), s.dim())?;
    }
    let p = pressure(&s.unit, &s.theory) * s.density_scale();
    let e = total_energy_per_area(&s.unit, &s.theory) * s.density_scale() * s.length;
    let mut t = s.config(Table::new(vec!["D", "L", "theory", "bc", "pressure", "energy_per_area"]), "pressure");
    t.push(vec![
        Cell::Int(i64::from(s.dim())),
        s.length.into(),
        s.theory.name().into(),
        s.theory.bc_name().into(),
        p.into(),
        e.into(),
    ]);
    Ok(t)
}

/// Requested positions in units of `L`.
fn positions(sampled: &SampledArgs, length: f64, exterior: bool) -> CliResult<Vec<f64>> {
    if !sampled.z.is_empty() {
        let xs: Vec<f64> = sampled.z.iter().map(|z| z / length).collect();
        if let Some(bad) = sampled.z.iter().find(|z| !z.is_finite()) {
            return Err(usage(format!("--z values must be finite, got {bad}")));
        }
        if sampled.z.windows(2).any(|w| w[1] <= w[0]) {
            return Err(usage("--z values must be strictly increasing"));
        }
        if !exterior {
            if let Some(z) = sampled.z.iter().find(|&&z| !(z > 0.0 && z < length)) {
                return Err(usage(format!(
                    "--z {z} is not strictly between the plates at 0 and {length}"
                )));
            }
        }
        return Ok(xs);
    }
    if sampled.samples < 2 {
        return Err(usage(format!("--samples must be at least 2, got {}", sampled.samples)));
    }
    let n = sampled.samples;
    let mut xs = Vec::new();
    let outside = n.div_ceil(2);
    if exterior {
        xs.extend((0..outside).rev().map(|i| -(i as f64 + 0.5) / n as f64));
    }
    xs.extend(midpoint_grid(1.0, n));
    if exterior {
        xs.extend((0..outside).map(|i| 1.0 + (i as f64 + 0.5) / n as f64));
    }
    Ok(xs)
}

fn sample_config(table: Table, sampled: &SampledArgs) -> Table {
    let table = table.config("samples", sampled.samples as i64);
    if sampled.z.is_empty() {
        table.config("z", Cell::Empty)
    } else {
        let list = sampled.z.iter().map(|z| crate::table::format_float(*z)).collect::<Vec<_>>().join(",");
        table.config("z", Cell::Text(list))
    }
}

pub fn profile_cmd(args: &ProfileArgs) -> CliResult<Table> {
    let sampled = &args.sampled;
    let s = Setup::new(&sampled.physics)?;
    let profile: Profile = if args.subtracted {
        let Theory::Maxwell(bc) = s.theory else {
            return Err(usage("--subtracted applies to --theory maxwell only"));
        };
        if s.dim() < 3 {
            return Err(usage("--dim: maxwell needs D ≥ 3"));
        }
        subtracted_profile(&s.unit, bc, &positions(sampled, s.length, true)?)?
    } else {
        if matches!(s.theory, Theory::Maxwell(_)) && s.dim() < 3 {
            return Err(usage("--dim: maxwell needs D ≥ 3"));
        }
        profile_on(&s.unit, &s.theory, &positions(sampled, s.length, false)?)?
    };
    let scale = s.density_scale();
    let table = s.config(Table::new(vec!["z", "region", "t00", "tzz", "t_transverse", "trace"]), "profile");
    let mut table = sample_config(table, sampled).config("subtracted", args.subtracted);
    for p in profile.samples() {
        let t = p.tensor.scaled(scale);
        table.push(vec![
            (p.z * s.length).into(),
            p.region.name().into(),
            t.t00.into(),
            t.tzz.into(),
            t.t_transverse.into(),
            t.trace.into(),
        ]);
    }
    Ok(table)
}

pub fn fluctuations_cmd(args: &SampledArgs) -> CliResult<Table> {
    let s = Setup::new(&args.physics)?;
    let Theory::Maxwell(bc) = s.theory else {
        return Err(usage("--theory: fluctuations are defined for maxwell only"));
    };
    if s.dim() < 3 {
        return Err(usage(format!("--dim: fluctuations need D ≥ 3, got {}", s.dim())));
    }
    let xs = positions(args, s.length, false)?;
    let scale = s.density_scale();
    let rows = xs
        .par_iter()
        .map(|&x| {
            let f = em_fluctuations(&s.unit, bc, x)?;
            Ok(vec![
                (x * s.length).into(),
                (f.ez2 * scale).into(),
                (f.ei2 * scale).into(),
                (f.biz2 * scale).into(),
                f.bij2.map(|b| b * scale).into(),
            ])
        })
        .collect::<CliResult<Vec<Vec<Cell>>>>()?;
    let table = s.config(Table::new(vec!["z", "ez2", "ei2", "biz2", "bij2"]), "fluctuations");
    let mut table = sample_config(table, args);
    for r in rows {
        table.push(r);
    }
    Ok(table)
}

pub fn sweep_cmd(args: &SweepArgs) -> CliResult<Table> {
    check_dim(args.from).map_err(|_| usage(format!("--from: D = {} outside {MIN_DIM}..={MAX_DIM}", args.from)))?;
    check_dim(args.to).map_err(|_| usage(format!("--to: D = {} outside {MIN_DIM}..={MAX_DIM}", args.to)))?;
    if args.from > args.to {
        return Err(usage(format!("--from {} exceeds --to {}", args.from, args.to)));
    }
    check_length(args.length)?;
    let mut table = Table::new(vec!["D", "energy_density", "scalar_pressure", "maxwell_pressure"])
        .config("command", "sweep")
        .config("from", i64::from(args.from))
        .config("to", i64::from(args.to))
        .config("length", args.length)
        .config("units", UNITS);
    for dim in args.from..=args.to {
        let unit = Spacetime::new(dim, 1.0)?;
        let scale = args.length.powi(-(dim as i32));
        table.push(vec![
            Cell::Int(i64::from(dim)),
            (base_energy_density(&unit) * scale).into(),
            (pressure(&unit, &Theory::ScalarCanonical(ScalarBc::Dirichlet)) * scale).into(),
            (pressure(&unit, &Theory::Maxwell(EmBc::Metallic)) * scale).into(),
        ]);
    }
    Ok(table)
}

/// The table is produced even when checks fail; the caller writes it first.
pub fn verify_cmd(args: &VerifyArgs) -> (Table, Option<CliError>) {
    #[cfg(debug_assertions)]
    let tamper = args.tamper;
    #[cfg(not(debug_assertions))]
    let tamper = false;
    let report = verify::run(VerifyOptions {
        quick: args.quick,
        tamper,
    });
    let mut table = Table::new(vec!["check", "passed", "residual", "tolerance", "error"])
        .config("command", "verify")
        .config("quick", args.quick);
    for c in &report.checks {
        table.push(vec![
            c.name.into(),
            c.passed.into(),
            if c.residual.is_finite() { c.residual.into() } else { Cell::Text("inf".into()) },
            c.tolerance.into(),
            c.error.as_deref().map_or(Cell::Empty, Cell::from),
        ]);
    }
    let failure = (!report.passed()).then(|| {
        let w = report.worst().expect("failed report has checks");
        CliError::VerificationFailed(format!(
            "worst check {}: residual {:e} against tolerance {:e}{}",
            w.name,
            w.residual,
            w.tolerance,
            w.error.as_deref().map(|e| format!(" ({e})")).unwrap_or_default()
        ))
    });
    (table, failure)
}
