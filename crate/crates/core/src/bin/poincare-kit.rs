use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let env_tol = std::env::var(poincare_kit::cli::TOLERANCE_ENV).ok();
    let code = poincare_kit::cli::run(
        std::env::args_os(),
        env_tol.as_deref(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    ExitCode::from(code as u8)
}
