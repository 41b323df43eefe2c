use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (output, code) = affine_hecke::cli::run(&args);
    if !output.is_empty() {
        // a pipe closed downstream (e.g. `| head`) is not our error
        let _ = writeln!(std::io::stdout(), "{}", output);
    }
    ExitCode::from(code as u8)
}
