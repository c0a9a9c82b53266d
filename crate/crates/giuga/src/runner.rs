//! Sharded execution of a range scan.
//!
//! The unscanned part of the range is split into fixed blocks that worker
//! threads classify independently against a shared smallest-prime-factor
//! table. Finished blocks are merged into the checkpoint strictly in
//! ascending order, so the result does not depend on thread timing and an
//! interruption loses at most the blocks still in flight.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::mpsc;
use std::thread;

use giuga_core::conjecture::{scan_block, split_range, BlockOutcome, ScanCheckpoint};
use giuga_core::exact::{build_spf, SpfTable};

use crate::Result;

/// Largest range end for which a sieve is built; beyond it each integer is
/// factored on its own.
pub const SIEVE_LIMIT: u64 = 1 << 25;

#[derive(Debug, Clone)]
pub struct ScanOptions {
    /// Number of blocks the remaining range is split into.
    pub blocks: usize,
    pub threads: usize,
    /// Stop after merging this many blocks.
    pub max_blocks: Option<usize>,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self { blocks: 16, threads: 1, max_blocks: None }
    }
}

/// Continues `state` and calls `on_block` after every merged block.
pub fn run_scan(
    mut state: ScanCheckpoint,
    options: &ScanOptions,
    mut on_block: impl FnMut(&ScanCheckpoint) -> Result<()>,
) -> Result<ScanCheckpoint> {
    let Some((start, end)) = state.remaining() else {
        return Ok(state);
    };
    let mut pieces = split_range(start, end, options.blocks);
    if let Some(limit) = options.max_blocks {
        pieces.truncate(limit);
    }
    if pieces.is_empty() {
        return Ok(state);
    }
    let last = pieces.last().map(|&(_, to)| to).unwrap_or(end);
    let table = if last <= SIEVE_LIMIT { Some(build_spf(last.max(2))?) } else { None };
    let workers = options.threads.clamp(1, pieces.len());

    let next = AtomicUsize::new(0);
    let stop = AtomicBool::new(false);
    let (tx, rx) = mpsc::channel::<(usize, giuga_core::Result<BlockOutcome>)>();

    thread::scope(|scope| -> Result<()> {
        for _ in 0..workers {
            let tx = tx.clone();
            let (pieces, next, stop, table) = (&pieces, &next, &stop, table.as_ref());
            scope.spawn(move || work(pieces, next, stop, table, tx));
        }
        drop(tx);

        let mut pending = BTreeMap::new();
        let mut expected = 0;
        let merged = (|| -> Result<()> {
            for (index, outcome) in &rx {
                pending.insert(index, outcome?);
                while let Some(block) = pending.remove(&expected) {
                    state.absorb(&block)?;
                    on_block(&state)?;
                    expected += 1;
                }
            }
            Ok(())
        })();
        if merged.is_err() {
            stop.store(true, Ordering::Relaxed);
        }
        merged
    })?;
    Ok(state)
}

fn work(
    pieces: &[(u64, u64)],
    next: &AtomicUsize,
    stop: &AtomicBool,
    table: Option<&SpfTable>,
    tx: mpsc::Sender<(usize, giuga_core::Result<BlockOutcome>)>,
) {
    while !stop.load(Ordering::Relaxed) {
        let index = next.fetch_add(1, Ordering::Relaxed);
        let Some(&(from, to)) = pieces.get(index) else { break };
        if tx.send((index, scan_block(from, to, table))).is_err() {
            break;
        }
    }
}
