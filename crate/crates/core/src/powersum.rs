//! Power sums `S_n(m) = sum_{k=1}^{m-1} k^n` by three independent routes,
//! plus the iterated sums `S_{n,r}`.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::bernoulli::{bernoulli_poly_with, BernoulliTable};
use crate::exact::{binomial_rat, pow_mod, rat, Int, Rat};
use crate::stirling::ScaledRows;

/// Literal sum of `k^n` for `1 <= k < m`; `m = 1` gives the empty sum.
pub fn powersum_direct(n: u32, m: u64) -> Int {
    (1..m).map(|k| Int::from(k).pow(n)).sum()
}

/// `S_n(x) = sum_{k=1}^n T(n,k) C(x, k+1)`, valid for any rational `x`.
pub fn powersum_binomial(n: usize, x: &Rat) -> Rat {
    let mut rows = ScaledRows::new();
    let row = rows.seek(n);
    row.iter()
        .enumerate()
        .skip(1)
        .map(|(k, t)| rat(t.clone()) * binomial_rat(x, k + 1))
        .sum()
}

/// `S_n(x) = (B_{n+1}(x) - B_{n+1}) / (n + 1)`.
pub fn powersum_bernoulli(n: usize, x: &Rat) -> Rat {
    powersum_bernoulli_with(&mut BernoulliTable::new(), n, x)
}

pub fn powersum_bernoulli_with(table: &mut BernoulliTable, n: usize, x: &Rat) -> Rat {
    let poly = bernoulli_poly_with(table, n + 1, x);
    (poly - table.get(n + 1)) / rat(n as u64 + 1)
}

/// `S_n(m) mod m`, reducing each term by modular exponentiation.
pub fn powersum_mod(n: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc: u64 = 0;
    for k in 1..m {
        acc = ((acc as u128 + pow_mod(k, n, m) as u128) % m as u128) as u64;
    }
    acc
}

/// Iterated power sum: `S_{n,0}(m) = m^n` and
/// `S_{n,r}(m) = sum_{k=1}^{m-1} S_{n,r-1}(k)`.
///
/// Evaluated level by level; each level keeps `S_{n,r}(k)` for every
/// `1 <= k <= m`, so every `(r, k)` pair is computed once.
pub fn powersum_iterated(n: u32, r: u32, m: u64) -> Int {
    if m == 0 {
        return Int::zero();
    }
    // level[k - 1] = S_{n,level}(k)
    let mut level: Vec<Int> = (1..=m).map(|k| Int::from(k).pow(n)).collect();
    for _ in 0..r {
        let mut running = Int::zero();
        let mut next = Vec::with_capacity(level.len());
        for value in &level {
            next.push(running.clone());
            running += value;
        }
        level = next;
    }
    level.pop().unwrap_or_default()
}
