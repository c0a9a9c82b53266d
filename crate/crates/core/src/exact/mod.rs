//! Exact integers and rationals, combinatorial primitives, residues,
//! primality and factorization.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

mod factor;
mod prime;
mod residue;

pub use factor::{build_spf, factorize, Factorization, SpfTable};
pub use prime::{is_prime, is_prime_u64, mul_mod, pow_mod, primality, Primality, PROBABLE_PRIME_ROUNDS};
pub use residue::{residue_of_rat, Residue};

/// Arbitrary-precision signed integer.
pub type Int = BigInt;

/// Rational number, always in lowest terms with a positive denominator.
pub type Rat = BigRational;

/// Builds a rational from an integer.
pub fn rat(n: impl Into<Int>) -> Rat {
    Rat::from_integer(n.into())
}

/// Builds the reduced rational `num/den`. Panics when `den` is zero.
pub fn ratio(num: impl Into<Int>, den: impl Into<Int>) -> Rat {
    Rat::new(num.into(), den.into())
}

pub fn factorial(n: usize) -> Int {
    (2..=n).fold(Int::one(), |acc, k| acc * k)
}

/// `C(top, k)` for an integer `top` of any sign.
///
/// Each partial product `top (top-1) ... (top-i)` is divisible by `(i+1)!`, so
/// the running value stays integral and every division below is exact.
pub fn binomial(top: &Int, k: usize) -> Int {
    let mut acc = Int::one();
    for i in 0..k {
        acc *= top - i;
        acc /= i + 1;
    }
    acc
}

/// `C(x, k) = (x)_k / k!` for rational `x`.
pub fn binomial_rat(top: &Rat, k: usize) -> Rat {
    falling_factorial(top, k) / rat(factorial(k))
}

/// Falling factorial `(x)_n = x (x-1) ... (x-n+1)`, with `(x)_0 = 1`.
pub fn falling_factorial(x: &Rat, n: usize) -> Rat {
    let mut acc = Rat::one();
    let mut term = x.clone();
    for _ in 0..n {
        if acc.is_zero() {
            break;
        }
        acc *= &term;
        term -= Rat::one();
    }
    acc
}

/// True when the rational has denominator 1.
pub fn is_integral(q: &Rat) -> bool {
    q.denom().is_one()
}
