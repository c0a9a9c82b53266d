use alloc::vec::Vec;

use super::{classify, Classification};
use crate::exact::SpfTable;
use crate::{Error, Result};

/// Progress of a scan over `[from, to]`.
///
/// Everything below `next_unscanned` has been classified; `counterexamples`
/// holds the hits found so far in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanCheckpoint {
    from: u64,
    to: u64,
    next_unscanned: u64,
    counterexamples: Vec<u64>,
    scanned_count: u64,
}

fn check_range(from: u64, to: u64) -> Result<()> {
    if from < 2 || from > to || to == u64::MAX {
        return Err(Error::InvalidRange { from, to });
    }
    Ok(())
}

impl ScanCheckpoint {
    pub fn new(from: u64, to: u64) -> Result<Self> {
        check_range(from, to)?;
        Ok(Self { from, to, next_unscanned: from, counterexamples: Vec::new(), scanned_count: 0 })
    }

    /// Rebuilds a checkpoint from stored fields, rejecting inconsistent ones.
    pub fn from_parts(
        from: u64,
        to: u64,
        next_unscanned: u64,
        counterexamples: Vec<u64>,
        scanned_count: u64,
    ) -> Result<Self> {
        check_range(from, to)?;
        if next_unscanned < from || next_unscanned > to + 1 {
            return Err(Error::Checkpoint("next_unscanned outside [from, to + 1]"));
        }
        if scanned_count != next_unscanned - from {
            return Err(Error::Checkpoint("scanned_count disagrees with progress"));
        }
        if counterexamples.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Checkpoint("counterexamples not strictly ascending"));
        }
        if counterexamples.iter().any(|&n| n < from || n >= next_unscanned) {
            return Err(Error::Checkpoint("counterexample outside scanned range"));
        }
        Ok(Self { from, to, next_unscanned, counterexamples, scanned_count })
    }

    pub fn from(&self) -> u64 {
        self.from
    }

    pub fn to(&self) -> u64 {
        self.to
    }

    pub fn next_unscanned(&self) -> u64 {
        self.next_unscanned
    }

    pub fn counterexamples(&self) -> &[u64] {
        &self.counterexamples
    }

    pub fn scanned_count(&self) -> u64 {
        self.scanned_count
    }

    pub fn is_complete(&self) -> bool {
        self.next_unscanned > self.to
    }

    /// The part of the range still to be scanned.
    pub fn remaining(&self) -> Option<(u64, u64)> {
        (!self.is_complete()).then_some((self.next_unscanned, self.to))
    }

    /// Appends a block that starts exactly at `next_unscanned`.
    pub fn absorb(&mut self, block: &BlockOutcome) -> Result<()> {
        if block.from != self.next_unscanned || block.to > self.to || block.to < block.from {
            return Err(Error::Checkpoint("block does not continue the scanned prefix"));
        }
        self.counterexamples.extend_from_slice(&block.counterexamples);
        self.scanned_count += block.scanned;
        self.next_unscanned = block.to + 1;
        Ok(())
    }
}

/// Result of classifying one contiguous block `[from, to]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockOutcome {
    pub from: u64,
    pub to: u64,
    pub counterexamples: Vec<u64>,
    pub scanned: u64,
}

pub fn scan_block(from: u64, to: u64, hint: Option<&SpfTable>) -> Result<BlockOutcome> {
    check_range(from, to)?;
    let mut counterexamples = Vec::new();
    for n in from..=to {
        if classify(n, hint)?.classification == Classification::Counterexample {
            counterexamples.push(n);
        }
    }
    Ok(BlockOutcome { from, to, counterexamples, scanned: to - from + 1 })
}

/// Splits `[from, to]` into at most `blocks` contiguous pieces whose widths
/// differ by at most one.
pub fn split_range(from: u64, to: u64, blocks: usize) -> Vec<(u64, u64)> {
    if from > to {
        return Vec::new();
    }
    let len = to - from + 1;
    let count = (blocks.max(1) as u64).min(len);
    let (base, extra) = (len / count, len % count);
    let mut pieces = Vec::with_capacity(count as usize);
    let mut start = from;
    for i in 0..count {
        let width = base + u64::from(i < extra);
        pieces.push((start, start + width - 1));
        start += width;
    }
    pieces
}

/// Classifies every integer of `[from, to]` not yet covered by `checkpoint`.
pub fn scan_range(
    from: u64,
    to: u64,
    checkpoint: Option<ScanCheckpoint>,
    hint: Option<&SpfTable>,
) -> Result<ScanCheckpoint> {
    let mut state = match checkpoint {
        Some(c) if c.from != from || c.to != to => {
            return Err(Error::Checkpoint("range differs from the requested scan"));
        }
        Some(c) => c,
        None => ScanCheckpoint::new(from, to)?,
    };
    if let Some((start, end)) = state.remaining() {
        let block = scan_block(start, end, hint)?;
        state.absorb(&block)?;
    }
    Ok(state)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::build_spf;

    #[test]
    fn small_scan_is_clean() {
        let table = build_spf(1000).unwrap();
        let done = scan_range(2, 1000, None, Some(&table)).unwrap();
        assert!(done.is_complete());
        assert!(done.counterexamples().is_empty());
        assert_eq!(done.scanned_count(), 999);
        assert_eq!(done, scan_range(2, 1000, None, None).unwrap());
    }

    #[test]
    fn resume_matches_fresh_run() {
        let mut partial = ScanCheckpoint::new(2, 1000).unwrap();
        partial.absorb(&scan_block(2, 499, None).unwrap()).unwrap();
        assert_eq!(partial.next_unscanned(), 500);
        let resumed = scan_range(2, 1000, Some(partial), None).unwrap();
        assert_eq!(resumed, scan_range(2, 1000, None, None).unwrap());
    }

    #[test]
    fn mismatched_checkpoint_rejected() {
        let other = ScanCheckpoint::new(2, 500).unwrap();
        assert!(matches!(scan_range(2, 1000, Some(other), None), Err(Error::Checkpoint(_))));
        assert!(matches!(scan_range(10, 5, None, None), Err(Error::InvalidRange { .. })));
        assert!(scan_range(1, 5, None, None).is_err());
    }

    #[test]
    fn corrupt_parts_rejected() {
        assert!(ScanCheckpoint::from_parts(2, 100, 50, alloc::vec![], 48).is_ok());
        assert!(ScanCheckpoint::from_parts(2, 100, 50, alloc::vec![], 47).is_err());
        assert!(ScanCheckpoint::from_parts(2, 100, 102, alloc::vec![], 100).is_err());
        assert!(ScanCheckpoint::from_parts(2, 100, 1, alloc::vec![], 0).is_err());
        assert!(ScanCheckpoint::from_parts(2, 100, 50, alloc::vec![60], 48).is_err());
        assert!(ScanCheckpoint::from_parts(2, 100, 50, alloc::vec![9, 7], 48).is_err());
        assert!(ScanCheckpoint::from_parts(2, 100, 101, alloc::vec![7, 9], 99).is_ok());
    }

    #[test]
    fn absorb_requires_contiguity() {
        let mut c = ScanCheckpoint::new(2, 100).unwrap();
        let late = scan_block(10, 20, None).unwrap();
        assert!(c.absorb(&late).is_err());
        let past_end = BlockOutcome { from: 2, to: 101, counterexamples: alloc::vec![], scanned: 100 };
        assert!(c.absorb(&past_end).is_err());
    }

    #[test]
    fn split_covers_range_exactly() {
        assert_eq!(split_range(2, 11, 3), [(2, 5), (6, 8), (9, 11)]);
        assert_eq!(split_range(5, 6, 10), [(5, 5), (6, 6)]);
        assert_eq!(split_range(5, 5, 0), [(5, 5)]);
        assert!(split_range(6, 5, 2).is_empty());
    }
}
