use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let mut stderr = std::io::stderr().lock();
    if let Err(e) = casimir_cli::configure_threads() {
        let _ = writeln!(stderr, "error: {e}");
        return ExitCode::from(e.exit_code() as u8);
    }
    let mut stdout = std::io::stdout().lock();
    let code = casimir_cli::run(std::env::args_os(), &mut stdout, &mut stderr);
    let _ = stdout.flush();
    ExitCode::from(code as u8)
}
