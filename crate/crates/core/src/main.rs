use clap::Parser;
use std::process::ExitCode;

fn main() -> ExitCode {
    let cli = dqcap::cli::Cli::parse();
    match dqcap::cli::run(&cli, &mut std::io::stdout()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(dqcap::cli::exit_code(&err))
        }
    }
}
