use std::process::ExitCode;

use clap::Parser;
use dyckflaw::cli::{run, Cli, THREADS_ENV};

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(v) = std::env::var(THREADS_ENV) {
        match v.parse::<usize>() {
            Ok(n) if n > 0 => {
                if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                    eprintln!("warning: could not size thread pool: {e}");
                }
            }
            _ => {
                eprintln!("error: {THREADS_ENV}={v:?} is not a positive integer");
                return ExitCode::from(2);
            }
        }
    }
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.exit_code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
