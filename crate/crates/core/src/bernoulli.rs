//! Exact Bernoulli numbers (with `B_1 = -1/2`) and Bernoulli polynomials.
//!
//! Two independent routes are provided: the single sum over the scaled
//! Stirling numbers, `B_n = sum_{k=1}^n T(n,k) (-1)^k / (k+1)`, and
//! Worpitzky's double sum with explicit binomials and powers.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::exact::{is_prime_u64, rat, ratio, Int, Rat};
use crate::stirling::ScaledRows;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Stirling,
    Worpitzky,
}

pub fn bernoulli(n: usize, method: Method) -> Rat {
    match method {
        Method::Stirling => BernoulliTable::new().get(n).clone(),
        Method::Worpitzky => bernoulli_worpitzky(n),
    }
}

// sum_{k=1}^n T(n,k) (-1)^k / (k+1). Each term is split as q + r/(k+1) with
// 0 <= r < k+1; the quotients add up exactly and only the small remainders
// are brought over the common denominator lcm(2..=n+1).
fn from_scaled_row(n: usize, row: &[Int]) -> Rat {
    if n == 0 {
        return Rat::one();
    }
    let lcm = (2..=n + 1).fold(Int::one(), |acc, d| {
        let g = (&acc % d).to_usize().expect("remainder below d").gcd(&d);
        acc * (d / g)
    });
    let mut whole = Int::zero();
    let mut fractional = Int::zero();
    for (k, t) in row.iter().enumerate().skip(1) {
        let (q, r) = t.div_rem(&Int::from(k + 1));
        let part = if r.is_zero() { None } else { Some(r * (&lcm / (k + 1))) };
        if k % 2 == 0 {
            whole += q;
            if let Some(part) = part {
                fractional += part;
            }
        } else {
            whole -= q;
            if let Some(part) = part {
                fractional -= part;
            }
        }
    }
    Rat::from_integer(whole) + Rat::new(fractional, lcm)
}

/// `B_n = sum_{k=1}^n 1/(k+1) sum_{v=1}^k C(k,v) (-1)^v v^n`.
pub fn bernoulli_worpitzky(n: usize) -> Rat {
    if n == 0 {
        return Rat::one();
    }
    let powers: Vec<Int> = (0..=n).map(|v| num_traits::pow(Int::from(v), n)).collect();
    let mut pascal: Vec<Int> = alloc::vec![Int::one()];
    let mut total = Rat::zero();
    for k in 1..=n {
        let mut next = Vec::with_capacity(k + 1);
        next.push(Int::one());
        for v in 1..k {
            next.push(&pascal[v - 1] + &pascal[v]);
        }
        next.push(Int::one());
        pascal = next;

        let mut inner = Int::zero();
        for v in 1..=k {
            let term = &pascal[v] * &powers[v];
            if v % 2 == 0 {
                inner += term;
            } else {
                inner -= term;
            }
        }
        total += Rat::new(inner, Int::from(k + 1));
    }
    total
}

/// Memo of Bernoulli numbers computed by the Stirling route.
///
/// Only requested indices are stored. A running row of `T(n, k)` is kept so
/// that ascending requests cost one recurrence step per index.
#[derive(Debug, Clone, Default)]
pub struct BernoulliTable {
    entries: BTreeMap<usize, Rat>,
    rows: ScaledRows,
}

impl BernoulliTable {
    pub fn new() -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(0, Rat::one());
        entries.insert(1, ratio(-1, 2));
        Self { entries, rows: ScaledRows::new() }
    }

    pub fn get(&mut self, n: usize) -> &Rat {
        if n > 1 && n % 2 == 1 {
            // Zero for odd n > 1; store so the reference has somewhere to live.
            return self.entries.entry(n).or_insert_with(Rat::zero);
        }
        if !self.entries.contains_key(&n) {
            let row = self.rows.seek(n);
            let value = from_scaled_row(n, row);
            self.entries.insert(n, value);
        }
        &self.entries[&n]
    }

    /// Indices stored so far.
    pub fn computed(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.keys().copied()
    }
}

/// `B_n(x) = sum_{k=0}^n C(n,k) B_k x^(n-k)`.
pub fn bernoulli_poly(n: usize, x: &Rat) -> Rat {
    bernoulli_poly_with(&mut BernoulliTable::new(), n, x)
}

pub fn bernoulli_poly_with(table: &mut BernoulliTable, n: usize, x: &Rat) -> Rat {
    let mut total = Rat::zero();
    let mut binom = Int::one();
    for k in 0..=n {
        if k > 0 {
            binom = binom * (n - k + 1) / k;
        }
        let b = table.get(k);
        if b.is_zero() {
            continue;
        }
        total += rat(binom.clone()) * b * num_traits::pow(x.clone(), n - k);
    }
    total
}

/// Primes `p` with `p - 1 | n`, ascending.
pub fn staudt_primes(n: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            for divisor in [d, n / d] {
                if is_prime_u64(divisor + 1) && !primes.contains(&(divisor + 1)) {
                    primes.push(divisor + 1);
                }
            }
        }
        d += 1;
    }
    primes.sort_unstable();
    primes
}

/// `prod_{p - 1 | n} p`, the denominator of `B_n` for even `n`.
pub fn staudt_denominator(n: u64) -> Result<Int> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::OddArgument { what: "n", value: n });
    }
    Ok(staudt_primes(n).into_iter().map(Int::from).product())
}
