//! The power-sum congruence `S_n(m) = m B_n = -sum_{p | m, p-1 | n} m/p
//! (mod m)` for even `n`, the Giuga/Agoh difference, and the consequences
//! for Bernoulli denominators and numerators.
//!
//! Each side of a congruence is computed by its own route so that an
//! equality is an actual check. Results are returned as data; nothing here
//! asserts that a congruence holds.

use num_integer::Integer;
use num_traits::One;

use crate::bernoulli::{staudt_primes, BernoulliTable};
use crate::exact::{factorize, rat, residue_of_rat, Int, Rat, Residue};
use crate::powersum::powersum_mod;
use crate::{Error, Result};

/// The three residues of the power-sum congruence for one `(n, m)` cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceTriple {
    pub n: u64,
    pub m: u64,
    /// `S_n(m) mod m`.
    pub lhs_sum: Residue,
    /// `m B_n mod m`.
    pub mid_bernoulli: Residue,
    /// `-sum_{p | m, p-1 | n} m/p mod m`.
    pub rhs_prime_sum: Residue,
}

impl CongruenceTriple {
    pub fn holds(&self) -> bool {
        self.lhs_sum == self.mid_bernoulli && self.mid_bernoulli == self.rhs_prime_sum
    }
}

pub fn theorem2_triple(n: u64, m: u64) -> Result<CongruenceTriple> {
    theorem2_triple_with(&mut BernoulliTable::new(), n, m)
}

pub fn theorem2_triple_with(table: &mut BernoulliTable, n: u64, m: u64) -> Result<CongruenceTriple> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::OddArgument { what: "n", value: n });
    }
    if m < 2 {
        return Err(Error::OutOfRange { what: "m", value: m });
    }
    let modulus = Int::from(m);

    let lhs_sum = Residue::from_u64(powersum_mod(n, m), m)?;

    let scaled = rat(m) * table.get(n as usize);
    let mid_bernoulli = residue_of_rat(&scaled, &modulus)?;

    let factors = factorize(m, None)?;
    let prime_sum: u128 = factors
        .primes()
        .filter(|&p| n % (p - 1) == 0)
        .map(|p| (m / p) as u128)
        .sum();
    let rhs_prime_sum = Residue::from_i128(-(prime_sum as i128), m)?;

    Ok(CongruenceTriple { n, m, lhs_sum, mid_bernoulli, rhs_prime_sum })
}

/// The value `S_{n-1}(n) - n B_{n-1} mod n` is predicted to take: `n/2` when
/// `n = 2 (mod 4)` and `n > 2`, otherwise `0`.
pub fn theorem4_expected(n: u64) -> u64 {
    if n > 2 && n % 4 == 2 {
        n / 2
    } else {
        0
    }
}

/// `S_{n-1}(n) - n B_{n-1} mod n`.
pub fn theorem4_delta(n: u64) -> Result<Residue> {
    theorem4_delta_with(&mut BernoulliTable::new(), n)
}

pub fn theorem4_delta_with(table: &mut BernoulliTable, n: u64) -> Result<Residue> {
    if n < 2 {
        return Err(Error::OutOfRange { what: "n", value: n });
    }
    let sum = Residue::from_u64(powersum_mod(n - 1, n), n)?;
    let scaled = rat(n) * table.get((n - 1) as usize);
    let bernoulli_part = residue_of_rat(&scaled, &Int::from(n))?;
    sum.sub(&bernoulli_part)
}

/// Checks `c (m/a) = c' (m/a) (mod m)` given `a | m` and `c = c' (mod a)`.
pub fn divided_congruence_check(c: &Int, c_prime: &Int, a: &Int, m: &Int) -> Result<bool> {
    if a < &Int::one() || m < &Int::one() {
        return Err(Error::Precondition("a and m must be positive"));
    }
    if !m.is_multiple_of(a) {
        return Err(Error::Precondition("a must divide m"));
    }
    if !(c - c_prime).is_multiple_of(a) {
        return Err(Error::Precondition("c and c' must agree modulo a"));
    }
    let cofactor = m / a;
    let lhs = (c * &cofactor).mod_floor(m);
    let rhs = (c_prime * &cofactor).mod_floor(m);
    Ok(lhs == rhs)
}

/// For even `n` with `B_n = U/V` in lowest terms, returns
/// `(U mod V, -sum_{p-1 | n} V/p mod V)`.
pub fn numerator_congruence_check(n: u64) -> Result<(Residue, Residue)> {
    numerator_congruence_check_with(&mut BernoulliTable::new(), n)
}

pub fn numerator_congruence_check_with(
    table: &mut BernoulliTable,
    n: u64,
) -> Result<(Residue, Residue)> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::OddArgument { what: "n", value: n });
    }
    let b = table.get(n as usize);
    let (numer, denom) = (b.numer().clone(), b.denom().clone());
    let lhs = Residue::new(&numer, &denom)?;
    let sum: Int = staudt_primes(n).into_iter().map(|p| &denom / p).sum();
    let rhs = Residue::new(&-sum, &denom)?;
    Ok((lhs, rhs))
}

/// `B_n + sum_{p-1 | n} 1/p`, which is an integer for even `n`.
pub fn staudt_shifted(table: &mut BernoulliTable, n: u64) -> Result<Rat> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::OddArgument { what: "n", value: n });
    }
    let reciprocals: Rat = staudt_primes(n).into_iter().map(|p| Rat::new(Int::one(), Int::from(p))).sum();
    Ok(table.get(n as usize) + reciprocals)
}
