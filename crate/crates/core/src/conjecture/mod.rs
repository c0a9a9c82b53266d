//! The Giuga-Agoh criterion
//!
//! ```text
//!   sum_{p | n, p-1 | n-1} n/p = 1 (mod n)   <=>   n is prime
//! ```
//!
//! together with the structural conditions any composite solution must
//! satisfy, detectors and searches for Giuga, Carmichael and Butske numbers,
//! and a resumable range scan for counterexamples.

use num_bigint::BigInt;

use crate::exact::{factorize, is_prime_u64, Factorization, Residue, SpfTable};
use crate::{Error, Result};

mod detect;
mod scan;

pub use detect::{
    butske_search, candidate_report, fermat_witness_check, find_carmichael_numbers,
    find_giuga_numbers, is_carmichael, is_giuga_number, ButskeSign, CandidateReport,
    PrimeConditions,
};
pub use scan::{scan_block, scan_range, split_range, BlockOutcome, ScanCheckpoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    /// Prime, and the criterion holds.
    PrimeConsistent,
    /// Composite, and the criterion fails.
    CompositeConsistent,
    /// The criterion disagrees with primality.
    Counterexample,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::PrimeConsistent => "prime_consistent",
            Classification::CompositeConsistent => "composite_consistent",
            Classification::Counterexample => "COUNTEREXAMPLE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GiugaAgohVerdict {
    pub n: u64,
    /// `sum_{p | n, p-1 | n-1} n/p mod n`.
    pub residue: Residue,
    /// Whether the residue is 1.
    pub indicator: bool,
    pub is_prime: bool,
    pub classification: Classification,
}

/// `sum_{p | n, p-1 | n-1} n/p mod n`; the empty sum gives 0.
pub fn giuga_agoh_residue(n: u64, factors: &Factorization) -> Result<Residue> {
    if factors.value() != n {
        return Err(Error::FactorizationMismatch(n));
    }
    let value = criterion_sum(n, factors);
    Residue::new(&BigInt::from(value), &BigInt::from(n))
}

// Each term n/p < n, and there are fewer than 64 terms, so u128 cannot overflow.
fn criterion_sum(n: u64, factors: &Factorization) -> u64 {
    let sum: u128 = factors
        .primes()
        .filter(|&p| (n - 1) % (p - 1) == 0)
        .map(|p| (n / p) as u128)
        .sum();
    (sum % n as u128) as u64
}

pub fn classify(n: u64, hint: Option<&SpfTable>) -> Result<GiugaAgohVerdict> {
    let factors = factorize(n, hint)?;
    let residue = giuga_agoh_residue(n, &factors)?;
    // Primality is decided independently of the factorization.
    let is_prime = is_prime_u64(n);
    let indicator = residue.is_one();
    let classification = match (indicator, is_prime) {
        (true, true) => Classification::PrimeConsistent,
        (false, false) => Classification::CompositeConsistent,
        _ => Classification::Counterexample,
    };
    Ok(GiugaAgohVerdict { n, residue, indicator, is_prime, classification })
}
