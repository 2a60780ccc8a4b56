//! Command-line front end: ideal parsing, reports, SVG plots and the
//! benchmark harness.

pub mod bench;
pub mod commands;
pub mod error;
pub mod parse;
pub mod svg;

use std::path::{Path, PathBuf};

pub use commands::{execute, Cli, OUT_DIR_ENV};
pub use error::CliError;

/// Where `--out` should be written: relative paths go under `out_dir`
/// when one is given.
pub fn resolve_out(path: &Path, out_dir: Option<&Path>) -> PathBuf {
    match out_dir {
        Some(dir) if path.is_relative() => dir.join(path),
        _ => path.to_path_buf(),
    }
}

/// Runs the command and writes its output to `--out` or returns it for
/// stdout.
pub fn run(cli: &Cli, out_dir: Option<&Path>) -> Result<Option<String>, CliError> {
    let output = execute(cli)?;
    match &cli.out {
        Some(path) => {
            let target = resolve_out(path, out_dir);
            std::fs::write(&target, output)
                .map_err(|e| CliError::Io(format!("cannot write {}: {e}", target.display())))?;
            Ok(None)
        }
        None => Ok(Some(output)),
    }
}
