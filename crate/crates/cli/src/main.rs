use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use monopow_cli::{run, Cli, OUT_DIR_ENV};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out_dir = std::env::var_os(OUT_DIR_ENV).map(PathBuf::from);
    match run(&cli, out_dir.as_deref()) {
        Ok(Some(text)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
