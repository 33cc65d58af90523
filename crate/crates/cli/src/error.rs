use std::io;
use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] radix_economy_core::Error),
    #[error("root of r·ln²r = ln C for C = {upper} did not reach tolerance {tolerance} (residual {residual:e})")]
    NotConverged {
        upper: f64,
        tolerance: f64,
        residual: f64,
    },
    #[error("cannot write {}: {source}", path.display())]
    Write { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Io(#[from] io::Error),
}
