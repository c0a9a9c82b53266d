use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Bases that make the strong pseudoprime test exact for every `n < 2^64`.
const DETERMINISTIC_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Strong pseudoprime rounds used above `2^64`, where no witness set is
/// known to be complete. The bases are the first primes, so the test is
/// reproducible.
pub const PROBABLE_PRIME_ROUNDS: u32 = 20;

const SMALL_PRIMES: [u64; 20] =
    [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primality {
    Composite,
    /// Proven prime (every input below `2^64` resolves to this or `Composite`).
    Prime,
    /// Passed `rounds` strong pseudoprime tests; only reported above `2^64`.
    ProbablePrime { rounds: u32 },
}

impl Primality {
    pub fn is_prime(self) -> bool {
        !matches!(self, Primality::Composite)
    }

    pub fn is_deterministic(self) -> bool {
        !matches!(self, Primality::ProbablePrime { .. })
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

fn strong_probable_prime(n: u64, d: u64, s: u32, a: u64) -> bool {
    let mut x = pow_mod(a, d, n);
    if x == 1 || x == n - 1 {
        return true;
    }
    for _ in 1..s {
        x = mul_mod(x, x, n);
        if x == n - 1 {
            return true;
        }
    }
    false
}

/// Deterministic primality test for machine words.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &SMALL_PRIMES {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    if n < 73 * 73 {
        return true;
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    DETERMINISTIC_BASES.iter().all(|&a| strong_probable_prime(n, d, s, a))
}

fn big_strong_probable_prime(n: &BigInt, d: &BigInt, s: u64, a: &BigInt) -> bool {
    let n_minus_one = n - 1u32;
    let mut x = a.modpow(d, n);
    if x.is_one() || x == n_minus_one {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x).mod_floor(n);
        if x == n_minus_one {
            return true;
        }
    }
    false
}

/// Primality of an arbitrary non-negative integer.
///
/// Below `2^64` the answer is exact. Above, the first
/// [`PROBABLE_PRIME_ROUNDS`] primes are used as strong pseudoprime bases and
/// a pass is reported as [`Primality::ProbablePrime`].
pub fn primality(n: &BigInt) -> Primality {
    if let Some(small) = n.to_u64() {
        return if is_prime_u64(small) { Primality::Prime } else { Primality::Composite };
    }
    if n.is_negative_or_zero() {
        return Primality::Composite;
    }
    for &p in &SMALL_PRIMES {
        if (n % p).is_zero() {
            return Primality::Composite;
        }
    }
    let n_minus_one: BigInt = n - 1u32;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    let passes = SMALL_PRIMES
        .iter()
        .take(PROBABLE_PRIME_ROUNDS as usize)
        .all(|&a| big_strong_probable_prime(n, &d, s, &BigInt::from(a)));
    if passes {
        Primality::ProbablePrime { rounds: PROBABLE_PRIME_ROUNDS }
    } else {
        Primality::Composite
    }
}

pub fn is_prime(n: &BigInt) -> bool {
    primality(n).is_prime()
}

trait SignExt {
    fn is_negative_or_zero(&self) -> bool;
}

impl SignExt for BigInt {
    fn is_negative_or_zero(&self) -> bool {
        self.sign() != num_bigint::Sign::Plus
    }
}
