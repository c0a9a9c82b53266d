use alloc::vec::Vec;

use num_integer::Integer;

use super::prime::{is_prime_u64, mul_mod};
use crate::{Error, Result};

/// Prime-power decomposition of an integer `n >= 2`, primes strictly
/// increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Validates an externally supplied decomposition of `n`.
    pub fn new(n: u64, factors: Vec<(u64, u32)>) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange { what: "factored integer", value: n });
        }
        if factors.is_empty() {
            return Err(Error::InvalidFactorization("no factors"));
        }
        if factors.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::InvalidFactorization("primes not strictly increasing"));
        }
        let mut product: u64 = 1;
        for &(p, e) in &factors {
            if e == 0 {
                return Err(Error::InvalidFactorization("zero exponent"));
            }
            if !is_prime_u64(p) {
                return Err(Error::InvalidFactorization("non-prime base"));
            }
            for _ in 0..e {
                product = product
                    .checked_mul(p)
                    .ok_or(Error::InvalidFactorization("product overflows"))?;
            }
        }
        if product != n {
            return Err(Error::FactorizationMismatch(n));
        }
        Ok(Self { n, factors })
    }

    /// The factored integer.
    pub fn value(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn distinct_primes(&self) -> usize {
        self.factors.len()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn is_prime(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// Product of the distinct primes.
    pub fn radical(&self) -> u64 {
        self.primes().product()
    }

    fn from_primes(n: u64, mut primes: Vec<u64>) -> Self {
        primes.sort_unstable();
        let mut factors: Vec<(u64, u32)> = Vec::new();
        for p in primes {
            match factors.last_mut() {
                Some((q, e)) if *q == p => *e += 1,
                _ => factors.push((p, 1)),
            }
        }
        Self { n, factors }
    }
}

/// Smallest-prime-factor table for `2 <= k <= limit`.
#[derive(Debug, Clone)]
pub struct SpfTable {
    spf: Vec<u32>,
}

impl SpfTable {
    pub fn limit(&self) -> u64 {
        (self.spf.len() - 1) as u64
    }

    /// Smallest prime factor of `k`, or `None` outside `[2, limit]`.
    pub fn get(&self, k: u64) -> Option<u64> {
        if k < 2 || k > self.limit() {
            return None;
        }
        Some(self.spf[k as usize] as u64)
    }

    pub fn is_prime(&self, k: u64) -> Option<bool> {
        self.get(k).map(|p| p == k)
    }

    fn factor(&self, mut n: u64) -> Vec<(u64, u32)> {
        let mut factors: Vec<(u64, u32)> = Vec::new();
        while n > 1 {
            let p = self.spf[n as usize] as u64;
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        factors
    }
}

/// Sieves smallest prime factors up to `limit` (at most `u32::MAX`).
pub fn build_spf(limit: u64) -> Result<SpfTable> {
    if limit < 2 || limit > u32::MAX as u64 {
        return Err(Error::OutOfRange { what: "sieve limit", value: limit });
    }
    let limit = limit as usize;
    let mut spf = alloc::vec![0u32; limit + 1];
    spf[1] = 1;
    for i in 2..=limit {
        if spf[i] != 0 {
            continue;
        }
        spf[i] = i as u32;
        let Some(start) = i.checked_mul(i) else { continue };
        for j in (start..=limit).step_by(i) {
            if spf[j] == 0 {
                spf[j] = i as u32;
            }
        }
    }
    Ok(SpfTable { spf })
}

/// Complete factorization of `n >= 2`.
///
/// Uses `hint` when it covers `n`; otherwise trial division by small
/// candidates followed by Brent's variant of Pollard rho on the cofactor.
pub fn factorize(n: u64, hint: Option<&SpfTable>) -> Result<Factorization> {
    if n < 2 {
        return Err(Error::OutOfRange { what: "factored integer", value: n });
    }
    if let Some(table) = hint.filter(|t| n <= t.limit()) {
        return Ok(Factorization { n, factors: table.factor(n) });
    }
    let mut primes = Vec::new();
    let mut rest = n;
    for p in [2u64, 3, 5] {
        while rest % p == 0 {
            primes.push(p);
            rest /= p;
        }
    }
    // 30-wheel up to a small bound; larger cofactors go to rho.
    const WHEEL: [u64; 8] = [1, 7, 11, 13, 17, 19, 23, 29];
    const TRIAL_BOUND: u64 = 1 << 12;
    let mut base = 0u64;
    'trial: while base <= TRIAL_BOUND {
        for &offset in &WHEEL {
            let d = base + offset;
            if d < 7 {
                continue;
            }
            if d * d > rest {
                break 'trial;
            }
            while rest % d == 0 {
                primes.push(d);
                rest /= d;
            }
        }
        base += 30;
    }
    if rest > 1 {
        split_into(rest, &mut primes);
    }
    Ok(Factorization::from_primes(n, primes))
}

fn split_into(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime_u64(n) {
        out.push(n);
        return;
    }
    let d = find_divisor(n);
    split_into(d, out);
    split_into(n / d, out);
}

/// Nontrivial divisor of a composite `n`.
fn find_divisor(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let root = n.isqrt();
    if root * root == n {
        return root;
    }
    (1..)
        .find_map(|c| brent_rho(n, c))
        .expect("rho eventually splits every composite")
}

fn brent_rho(n: u64, c: u64) -> Option<u64> {
    const BATCH: u64 = 128;
    let step = |x: u64| (mul_mod(x, x, n) + c) % n;
    let mut y = 2u64;
    let mut x = y;
    let mut ys = y;
    let mut g = 1u64;
    let mut q = 1u64;
    let mut r = 1u64;
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = step(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            for _ in 0..BATCH.min(r - k) {
                y = step(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            g = q.gcd(&n);
            k += BATCH;
        }
        r *= 2;
    }
    if g == n {
        // Batched product collapsed; replay one step at a time.
        loop {
            ys = step(ys);
            g = x.abs_diff(ys).gcd(&n);
            if g > 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}
