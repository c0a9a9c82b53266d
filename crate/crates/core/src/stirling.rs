//! Stirling numbers of both kinds and the scaled second-kind numbers
//! `T(n, k) = k! S2(n, k)`.
//!
//! The triangles are filled row by row from their recurrences. The explicit
//! alternating sum for `T(n, k)` is kept only as a test oracle.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::exact::{is_prime_u64, Int, Residue};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// Signed numbers of the first kind: `(x)_n = sum_k S1(n,k) x^k`.
    First,
    /// Numbers of the second kind: `x^n = sum_k S2(n,k) (x)_k`.
    Second,
}

/// Memoized triangle of Stirling numbers; row `n` holds `k = 0..=n`.
#[derive(Debug, Clone)]
pub struct StirlingTriangle {
    kind: Kind,
    rows: Vec<Vec<Int>>,
}

impl StirlingTriangle {
    pub fn new(kind: Kind) -> Self {
        Self { kind, rows: alloc::vec![alloc::vec![Int::one()]] }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    /// Number of rows computed so far.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    fn extend_to(&mut self, n: usize) {
        while self.rows.len() <= n {
            let prev = self.rows.last().expect("row 0 is always present");
            let m = prev.len(); // index of the new row
            let mut row = Vec::with_capacity(m + 1);
            row.push(Int::zero());
            for k in 1..=m {
                let diag = &prev[k - 1];
                let up = prev.get(k);
                let entry = match (self.kind, up) {
                    (Kind::Second, Some(up)) => up * k + diag,
                    (Kind::First, Some(up)) => diag - up * (m - 1),
                    (_, None) => diag.clone(),
                };
                row.push(entry);
            }
            self.rows.push(row);
        }
    }

    pub fn row(&mut self, n: usize) -> &[Int] {
        self.extend_to(n);
        &self.rows[n]
    }

    pub fn get(&mut self, n: usize, k: usize) -> Int {
        if k > n {
            return Int::zero();
        }
        self.row(n)[k].clone()
    }
}

/// Successive rows of `T(n, k) = k! S2(n, k)`, keeping only the current row.
///
/// Uses `T(n, k) = k (T(n-1, k) + T(n-1, k-1))`, which follows from the
/// second-kind recurrence after scaling by `k!`.
#[derive(Debug, Clone)]
pub struct ScaledRows {
    n: usize,
    row: Vec<Int>,
}

impl Default for ScaledRows {
    fn default() -> Self {
        Self::new()
    }
}

impl ScaledRows {
    /// Starts at row 0, `T(0, 0) = 1`.
    pub fn new() -> Self {
        Self { n: 0, row: alloc::vec![Int::one()] }
    }

    pub fn index(&self) -> usize {
        self.n
    }

    /// The current row, `T(index, k)` for `k = 0..=index`.
    pub fn current(&self) -> &[Int] {
        &self.row
    }

    pub fn advance(&mut self) {
        let m = self.n + 1;
        self.row.push(Int::zero());
        for k in (1..=m).rev() {
            let (lower, upper) = self.row.split_at_mut(k);
            upper[0] += &lower[k - 1];
            upper[0] *= k;
        }
        self.row[0] = Int::zero();
        self.n = m;
    }

    /// Advances (restarting if needed) until the current row is `n`.
    pub fn seek(&mut self, n: usize) -> &[Int] {
        if n < self.n {
            *self = Self::new();
        }
        while self.n < n {
            self.advance();
        }
        &self.row
    }
}

pub fn s2(n: usize, k: usize) -> Int {
    column_limited(Kind::Second, n, k)
}

/// Signed Stirling number of the first kind.
pub fn s1(n: usize, k: usize) -> Int {
    column_limited(Kind::First, n, k)
}

// One-off evaluation without keeping the triangle: only columns <= k matter.
fn column_limited(kind: Kind, n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    let mut row: Vec<Int> = alloc::vec![Int::one()];
    for m in 1..=n {
        let width = m.min(k);
        let mut next = Vec::with_capacity(width + 1);
        next.push(Int::zero());
        for j in 1..=width {
            let diag = &row[j - 1];
            let entry = match (kind, row.get(j)) {
                (Kind::Second, Some(up)) => up * j + diag,
                (Kind::First, Some(up)) => diag - up * (m - 1),
                (_, None) => diag.clone(),
            };
            next.push(entry);
        }
        row = next;
    }
    row[k].clone()
}

/// `T(n, k) = k! S2(n, k)`.
pub fn t_big(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    let mut rows = ScaledRows::new();
    rows.seek(n)[k].clone()
}

/// The residue of `T(n, k-1)` modulo `k` predicted for even `n`: `-1` when
/// `k` is a prime with `k - 1 | n`, and `0` otherwise.
pub fn t_congruence_expected(n: u64, k: u64) -> Result<Residue> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::OddArgument { what: "n", value: n });
    }
    if k < 2 {
        return Err(Error::OutOfRange { what: "k", value: k });
    }
    let value = if is_prime_u64(k) && n % (k - 1) == 0 { k - 1 } else { 0 };
    Residue::from_u64(value, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn second_kind_values() {
        assert_eq!(s2(4, 2), Int::from(7));
        assert_eq!(s2(3, 0), Int::zero());
        assert_eq!(s2(0, 0), Int::one());
        for n in 0..=10 {
            assert_eq!(s2(n, n), Int::one());
        }
        assert_eq!(s2(2, 5), Int::zero());
    }

    #[test]
    fn first_kind_values() {
        assert_eq!(s1(3, 1), Int::from(2));
        assert_eq!(s1(3, 2), Int::from(-3));
        assert_eq!(s1(4, 0), Int::zero());
        for n in 0..=10 {
            assert_eq!(s1(n, n), Int::one());
        }
    }

    #[test]
    fn scaled_values() {
        assert_eq!(t_big(4, 2), Int::from(14));
        assert_eq!(t_big(2, 3), Int::zero());
        assert_eq!(t_big(3, 3), Int::from(6));
    }

    #[test]
    fn triangle_matches_one_off_evaluation() {
        let mut second = StirlingTriangle::new(Kind::Second);
        let mut first = StirlingTriangle::new(Kind::First);
        for n in 0..15 {
            for k in 0..=n + 1 {
                assert_eq!(second.get(n, k), s2(n, k));
                assert_eq!(first.get(n, k), s1(n, k));
            }
        }
        assert_eq!(second.len(), 15);
    }

    #[test]
    fn scaled_rows_restart_on_seek_backwards() {
        let mut rows = ScaledRows::new();
        let later: Vec<Int> = rows.seek(8).to_vec();
        let earlier: Vec<Int> = rows.seek(3).to_vec();
        assert_eq!(rows.index(), 3);
        assert_eq!(earlier, [0, 1, 6, 6].map(Int::from));
        assert_eq!(later[8], Int::from(40320));
    }

    #[test]
    fn congruence_prediction_examples() {
        assert_eq!(t_congruence_expected(4, 5).unwrap().value(), &Int::from(4));
        assert_eq!(t_congruence_expected(4, 3).unwrap().value(), &Int::from(2));
        assert_eq!(t_congruence_expected(2, 4).unwrap().value(), &Int::from(0));
        assert!(t_congruence_expected(4, 1).is_err());
        assert!(t_congruence_expected(3, 5).is_err());
    }
}
