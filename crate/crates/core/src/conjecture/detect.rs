use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::{build_spf, factorize, pow_mod, ratio, Factorization, Rat, SpfTable};
use crate::{Error, Result};

fn reciprocal_sum(factors: &Factorization) -> Rat {
    factors.primes().map(|p| ratio(1, p)).sum()
}

/// Composite `n` with `sum_{p | n} 1/p - prod_{p | n} 1/p` a positive integer.
///
/// The product runs over the prime factors with multiplicity, so it equals
/// `1/n`; this makes the condition equivalent to `p | n/p - 1` for all `p | n`.
pub fn is_giuga_number(factors: &Factorization) -> bool {
    if factors.is_prime() {
        return false;
    }
    let product: Rat = factors
        .factors()
        .iter()
        .map(|&(p, e)| ratio(1, p).pow(e as i32))
        .product();
    let value = reciprocal_sum(factors) - product;
    value.is_integer() && value > Rat::zero()
}

/// Korselt's characterization: composite, squarefree, and `p - 1 | n - 1`
/// for every prime `p | n`.
pub fn is_carmichael(factors: &Factorization) -> bool {
    let n = factors.value();
    !factors.is_prime()
        && factors.is_squarefree()
        && factors.primes().all(|p| (n - 1) % (p - 1) == 0)
}

/// True when `a^(n-1) = 1 (mod n)` for every base. Bases sharing a factor
/// with `n` are rejected.
pub fn fermat_witness_check(n: u64, bases: &[u64]) -> Result<bool> {
    if n < 2 {
        return Err(Error::OutOfRange { what: "n", value: n });
    }
    for &a in bases {
        if a.gcd(&n) != 1 {
            return Err(Error::BaseNotCoprime { base: a, n });
        }
    }
    Ok(bases.iter().all(|&a| pow_mod(a, n - 1, n) == 1))
}

/// Per-prime divisibility conditions for a candidate `n` and prime `p | n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeConditions {
    pub p: u64,
    /// `p | n/p - 1`
    pub p_divides_n_over_p_minus_1: bool,
    /// `p - 1 | n - 1`
    pub p_minus_1_divides_n_minus_1: bool,
    /// `p - 1 | n/p - 1`
    pub p_minus_1_divides_n_over_p_minus_1: bool,
}

/// Every structural condition a composite solution of the criterion must
/// satisfy, each evaluated on its own.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateReport {
    pub n: u64,
    pub composite: bool,
    pub odd: bool,
    pub squarefree: bool,
    pub prime_factor_count: usize,
    pub primes: Vec<PrimeConditions>,
    pub is_giuga_number: bool,
    pub is_carmichael: bool,
    /// `sum_{p | n} 1/p > 1`
    pub reciprocal_sum_exceeds_one: bool,
    pub at_least_nine_prime_factors: bool,
}

pub fn candidate_report(n: u64, hint: Option<&SpfTable>) -> Result<CandidateReport> {
    let factors = factorize(n, hint)?;
    let primes = factors
        .primes()
        .map(|p| {
            let cofactor = n / p;
            PrimeConditions {
                p,
                p_divides_n_over_p_minus_1: (cofactor - 1) % p == 0,
                p_minus_1_divides_n_minus_1: (n - 1) % (p - 1) == 0,
                p_minus_1_divides_n_over_p_minus_1: (cofactor - 1) % (p - 1) == 0,
            }
        })
        .collect();
    Ok(CandidateReport {
        n,
        composite: !factors.is_prime(),
        odd: n % 2 == 1,
        squarefree: factors.is_squarefree(),
        prime_factor_count: factors.distinct_primes(),
        primes,
        is_giuga_number: is_giuga_number(&factors),
        is_carmichael: is_carmichael(&factors),
        reciprocal_sum_exceeds_one: reciprocal_sum(&factors) > Rat::one(),
        at_least_nine_prime_factors: factors.distinct_primes() >= 9,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ButskeSign {
    /// `sum_{p | n} 1/p + 1/n = 1`
    Plus,
    /// `sum_{p | n} 1/p - 1/n = 1`
    Minus,
}

fn factor_table(max: u64) -> Result<Option<SpfTable>> {
    if max < 2 {
        return Ok(None);
    }
    build_spf(max).map(Some)
}

fn search(max: u64, mut accept: impl FnMut(&Factorization) -> bool) -> Result<Vec<u64>> {
    let Some(table) = factor_table(max)? else {
        return Ok(Vec::new());
    };
    let mut found = Vec::new();
    for n in 2..=max {
        let factors = factorize(n, Some(&table))?;
        if accept(&factors) {
            found.push(n);
        }
    }
    Ok(found)
}

/// All `2 <= n <= max` solving the chosen Butske equation exactly.
pub fn butske_search(sign: ButskeSign, max: u64) -> Result<Vec<u64>> {
    search(max, |factors| {
        let shift = ratio(1, factors.value());
        let value = match sign {
            ButskeSign::Plus => reciprocal_sum(factors) + shift,
            ButskeSign::Minus => reciprocal_sum(factors) - shift,
        };
        value.is_one()
    })
}

pub fn find_giuga_numbers(max: u64) -> Result<Vec<u64>> {
    search(max, is_giuga_number)
}

pub fn find_carmichael_numbers(max: u64) -> Result<Vec<u64>> {
    search(max, is_carmichael)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: u64) -> Factorization {
        factorize(n, None).unwrap()
    }

    #[test]
    fn giuga_examples() {
        assert!(is_giuga_number(&f(30)));
        assert!(is_giuga_number(&f(858)));
        assert!(is_giuga_number(&f(1722)));
        assert!(!is_giuga_number(&f(36)));
        // same prime support as 30, but 2 does not divide 60/2 - 1
        assert!(!is_giuga_number(&f(60)));
        // 1/2 - 1/2 = 0 is not positive
        assert!(!is_giuga_number(&f(4)));
        assert!(!is_giuga_number(&f(7)));
    }

    #[test]
    fn carmichael_examples() {
        assert!(is_carmichael(&f(561)));
        assert!(is_carmichael(&f(1105)));
        assert!(is_carmichael(&f(1729)));
        assert!(!is_carmichael(&f(15)));
        assert!(!is_carmichael(&f(17)));
        assert!(!is_carmichael(&f(45)));
    }

    #[test]
    fn fermat_examples() {
        assert!(fermat_witness_check(561, &[2, 5, 7]).unwrap());
        assert!(!fermat_witness_check(15, &[2]).unwrap());
        assert!(fermat_witness_check(7, &[3]).unwrap());
        assert_eq!(fermat_witness_check(561, &[3]), Err(Error::BaseNotCoprime { base: 3, n: 561 }));
    }

    #[test]
    fn report_examples() {
        let r = candidate_report(30, None).unwrap();
        assert!(r.is_giuga_number && !r.is_carmichael && !r.odd && r.composite);
        assert!(r.reciprocal_sum_exceeds_one);
        assert_eq!(r.prime_factor_count, 3);
        assert!(r.primes.iter().all(|c| c.p_divides_n_over_p_minus_1));

        let r = candidate_report(561, None).unwrap();
        assert!(r.is_carmichael && !r.is_giuga_number);
        assert!(r.primes.iter().all(|c| c.p_minus_1_divides_n_minus_1));
        assert!(r.primes.iter().all(|c| c.p_minus_1_divides_n_over_p_minus_1));
        assert!(!r.reciprocal_sum_exceeds_one);

        let r = candidate_report(105, None).unwrap();
        assert!(r.odd && r.squarefree && !r.is_carmichael);
        assert!(!r.at_least_nine_prime_factors);

        let r = candidate_report(13, None).unwrap();
        assert!(!r.composite);
    }

    #[test]
    fn butske_examples() {
        assert_eq!(butske_search(ButskeSign::Plus, 2000).unwrap(), [2, 6, 42, 1806]);
        assert_eq!(butske_search(ButskeSign::Minus, 2000).unwrap(), [30, 858, 1722]);
        assert_eq!(butske_search(ButskeSign::Plus, 5).unwrap(), [2]);
        assert!(butske_search(ButskeSign::Plus, 1).unwrap().is_empty());
    }

    #[test]
    fn finder_examples() {
        assert_eq!(find_giuga_numbers(10_000).unwrap(), [30, 858, 1722]);
        assert!(find_giuga_numbers(29).unwrap().is_empty());
        assert_eq!(find_giuga_numbers(858).unwrap(), [30, 858]);
        assert_eq!(find_carmichael_numbers(2000).unwrap(), [561, 1105, 1729]);
        assert!(find_carmichael_numbers(500).unwrap().is_empty());
        assert_eq!(find_carmichael_numbers(1105).unwrap(), [561, 1105]);
    }
}
