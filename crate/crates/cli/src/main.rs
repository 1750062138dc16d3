use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use feedback_hopf_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let mut out = io::stdout().lock();
            match writeln!(out, "{}", outcome.stdout).and_then(|_| out.flush()) {
                Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
                    eprintln!("error[io]: {e}");
                    ExitCode::from(2)
                }
                _ => ExitCode::from(outcome.exit_code),
            }
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
