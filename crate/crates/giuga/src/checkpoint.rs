//! On-disk scan checkpoints.
//!
//! A checkpoint is a single pretty-printed JSON object:
//!
//! ```json
//! {
//!   "from": 2,
//!   "to": 1000000,
//!   "next_unscanned": 500001,
//!   "counterexamples": [],
//!   "scanned_count": 499999
//! }
//! ```
//!
//! Loading validates every invariant of [`ScanCheckpoint`]; unknown fields
//! are rejected.

use std::fs;
use std::io::ErrorKind;
use std::path::Path;

use giuga_core::conjecture::ScanCheckpoint;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CheckpointFile {
    from: u64,
    to: u64,
    next_unscanned: u64,
    counterexamples: Vec<u64>,
    scanned_count: u64,
}

pub fn to_json(checkpoint: &ScanCheckpoint) -> String {
    let file = CheckpointFile {
        from: checkpoint.from(),
        to: checkpoint.to(),
        next_unscanned: checkpoint.next_unscanned(),
        counterexamples: checkpoint.counterexamples().to_vec(),
        scanned_count: checkpoint.scanned_count(),
    };
    let mut text = serde_json::to_string_pretty(&file).expect("checkpoint is always serializable");
    text.push('\n');
    text
}

pub fn from_json(text: &str) -> Result<ScanCheckpoint, CheckpointError> {
    let file: CheckpointFile = serde_json::from_str(text).map_err(CheckpointError::Json)?;
    ScanCheckpoint::from_parts(
        file.from,
        file.to,
        file.next_unscanned,
        file.counterexamples,
        file.scanned_count,
    )
    .map_err(CheckpointError::Invalid)
}

#[derive(Debug, thiserror::Error)]
pub enum CheckpointError {
    #[error(transparent)]
    Json(serde_json::Error),
    #[error(transparent)]
    Invalid(giuga_core::Error),
}

/// Reads the checkpoint at `path`; a missing file is `Ok(None)`.
pub fn load(path: &Path) -> Result<Option<ScanCheckpoint>> {
    let text = match fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) if e.kind() == ErrorKind::NotFound => return Ok(None),
        Err(source) => return Err(Error::Io { path: path.to_owned(), source }),
    };
    match from_json(&text) {
        Ok(checkpoint) => Ok(Some(checkpoint)),
        Err(CheckpointError::Json(source)) => {
            Err(Error::MalformedCheckpoint { path: path.to_owned(), source })
        }
        Err(CheckpointError::Invalid(e)) => Err(e.into()),
    }
}

/// Like [`load`], but rejects a checkpoint for a different range.
pub fn load_for(path: &Path, from: u64, to: u64) -> Result<Option<ScanCheckpoint>> {
    match load(path)? {
        Some(c) if c.from() != from || c.to() != to => Err(Error::CheckpointMismatch {
            path: path.to_owned(),
            found_from: c.from(),
            found_to: c.to(),
            from,
            to,
        }),
        other => Ok(other),
    }
}

/// Writes through a sibling temporary file and renames it into place, so a
/// crash never leaves a truncated checkpoint.
pub fn store(path: &Path, checkpoint: &ScanCheckpoint) -> Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = Path::new(&tmp);
    let io = |source| Error::Io { path: path.to_owned(), source };
    fs::write(tmp, to_json(checkpoint)).map_err(io)?;
    fs::rename(tmp, path).map_err(io)
}
