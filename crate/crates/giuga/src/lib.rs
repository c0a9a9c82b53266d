//! Command-line front end for `giuga-core`: verification sweeps, searches,
//! and resumable, sharded range scans of the Giuga-Agoh criterion.
//!
//! The library half holds everything the binary needs that touches the
//! outside world: the checkpoint file format, the threaded scan runner and
//! the run report.

pub mod checkpoint;
pub mod commands;
pub mod report;
pub mod runner;

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] giuga_core::Error),

    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },

    #[error("{}: malformed checkpoint: {source}", path.display())]
    MalformedCheckpoint { path: PathBuf, source: serde_json::Error },

    #[error("{}: checkpoint covers [{found_from}, {found_to}], not [{from}, {to}]", path.display())]
    CheckpointMismatch { path: PathBuf, found_from: u64, found_to: u64, from: u64, to: u64 },

    #[error("{0}")]
    Usage(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
