use std::io::{self, Write};
use std::process::ExitCode;

use frobkit::cli::{self, Config};

fn main() -> ExitCode {
    let config = match Config::from_env() {
        Ok(c) => c,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(cli::EXIT_INVALID as u8);
        }
    };
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let code = cli::run(std::env::args_os(), &config, &mut out, &mut err);
    let _ = out.flush();
    ExitCode::from(code as u8)
}
