use core::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Int, Rat};
use crate::{Error, Result};

/// Canonical representative of a residue class modulo `m > 1`.
///
/// Arithmetic between residues of different moduli is an error rather than a
/// silent reduction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Residue {
    value: Int,
    modulus: Int,
}

impl Residue {
    pub fn new(value: &Int, modulus: &Int) -> Result<Self> {
        if modulus <= &Int::one() {
            return Err(Error::InvalidModulus(modulus.clone()));
        }
        Ok(Self { value: value.mod_floor(modulus), modulus: modulus.clone() })
    }

    pub fn from_u64(value: u64, modulus: u64) -> Result<Self> {
        Self::new(&Int::from(value), &Int::from(modulus))
    }

    /// Reduces a signed machine integer into `[0, modulus)`.
    pub fn from_i128(value: i128, modulus: u64) -> Result<Self> {
        Self::new(&Int::from(value), &Int::from(modulus))
    }

    pub fn value(&self) -> &Int {
        &self.value
    }

    pub fn modulus(&self) -> &Int {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    /// The value as `u64`, when it fits.
    pub fn to_u64(&self) -> Option<u64> {
        u64::try_from(&self.value).ok()
    }

    fn check_modulus(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.clone(),
                right: other.modulus.clone(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_modulus(other)?;
        Self::new(&(&self.value + &other.value), &self.modulus)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_modulus(other)?;
        Self::new(&(&self.value - &other.value), &self.modulus)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_modulus(other)?;
        Self::new(&(&self.value * &other.value), &self.modulus)
    }

    pub fn neg(&self) -> Self {
        Self { value: (-&self.value).mod_floor(&self.modulus), modulus: self.modulus.clone() }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// Reduces `q = num/den` modulo `m` as `num * den^-1`.
///
/// Only defined when `gcd(den, m) = 1`.
pub fn residue_of_rat(q: &Rat, m: &Int) -> Result<Residue> {
    if m <= &Int::one() {
        return Err(Error::InvalidModulus(m.clone()));
    }
    let den = q.denom().mod_floor(m);
    let inverse = den.modinv(m).ok_or_else(|| Error::NonInvertibleDenominator {
        den: q.denom().clone(),
        modulus: m.clone(),
    })?;
    Residue::new(&(q.numer() * inverse), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    fn int(v: i64) -> Int {
        Int::from(v)
    }

    #[test]
    fn residue_of_negative_third_mod_ten() {
        let r = residue_of_rat(&ratio(-1, 3), &int(10)).unwrap();
        assert_eq!(r.value(), &int(3));
    }

    #[test]
    fn residue_of_integer() {
        assert_eq!(residue_of_rat(&rat(55), &int(6)).unwrap().value(), &int(1));
        assert_eq!(residue_of_rat(&rat(-7), &int(10)).unwrap().value(), &int(3));
    }

    #[test]
    fn non_invertible_denominator() {
        let err = residue_of_rat(&ratio(1, 2), &int(4)).unwrap_err();
        assert!(matches!(err, Error::NonInvertibleDenominator { .. }));
    }

    #[test]
    fn modulus_must_exceed_one() {
        assert!(matches!(Residue::from_u64(0, 1), Err(Error::InvalidModulus(_))));
        assert!(matches!(residue_of_rat(&rat(3), &int(0)), Err(Error::InvalidModulus(_))));
    }

    #[test]
    fn mismatched_moduli_rejected() {
        let a = Residue::from_u64(1, 5).unwrap();
        let b = Residue::from_u64(1, 7).unwrap();
        assert!(matches!(a.add(&b), Err(Error::ModulusMismatch { .. })));
        assert!(matches!(a.mul(&b), Err(Error::ModulusMismatch { .. })));
    }

    #[test]
    fn arithmetic_is_canonical() {
        let a = Residue::from_u64(4, 5).unwrap();
        let b = Residue::from_u64(3, 5).unwrap();
        assert_eq!(a.add(&b).unwrap().value(), &int(2));
        assert_eq!(b.sub(&a).unwrap().value(), &int(4));
        assert_eq!(a.mul(&b).unwrap().value(), &int(2));
        assert_eq!(a.neg().value(), &int(1));
        assert_eq!(Residue::from_u64(0, 5).unwrap().neg().value(), &int(0));
        assert_eq!(Residue::from_i128(-12, 5).unwrap().value(), &int(3));
    }
}
