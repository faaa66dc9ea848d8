//! Command-line front-end: argument handling, dispatch and table output.

pub mod args;
pub mod commands;
pub mod error;
pub mod table;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};

use clap::Parser;

use crate::args::{Cli, Command, OutputArgs};
use crate::error::{CliError, CliResult};
use crate::table::Table;

pub const THREADS_ENV: &str = "CASIMIR_MAX_THREADS";

/// Bounds the global worker pool by `CASIMIR_MAX_THREADS` when it is set.
pub fn configure_threads() -> CliResult<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("{THREADS_ENV} must be a positive integer, got {raw:?}")))?;
    // A pool that already exists keeps its size.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    Ok(())
}

fn emit(table: &Table, out: &OutputArgs, stdout: &mut dyn Write) -> CliResult<()> {
    match &out.output {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            table.write(out.format, &mut w)?;
            w.flush()?;
        }
        None => table.write(out.format, stdout)?,
    }
    Ok(())
}

fn dispatch(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<()> {
    match &cli.command {
        Command::Pressure(a) => emit(&commands::pressure_cmd(a, stderr)?, &a.out, stdout),
        Command::Profile(a) => emit(&commands::profile_cmd(a)?, &a.sampled.physics.out, stdout),
        Command::Fluctuations(a) => emit(&commands::fluctuations_cmd(a)?, &a.physics.out, stdout),
        Command::Sweep(a) => emit(&commands::sweep_cmd(a)?, &a.out, stdout),
        Command::Verify(a) => {
            let (table, failure) = commands::verify_cmd(a);
            emit(&table, &a.out, stdout)?;
            failure.map_or(Ok(()), Err)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code: 0 success, 1 failed verification,
/// 2 usage or input error.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(rendered.as_bytes())
            } else {
                stderr.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli, stdout, stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
