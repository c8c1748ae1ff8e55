//! Residues modulo a prime power p^k.
//!
//! A `Residue` remembers its (p, k) pair, so combining values from different
//! moduli is rejected when the combination is attempted rather than
//! producing a silently wrong value. The modulus is kept below 2^63, which
//! makes u128 intermediate products exact; that bound comfortably covers
//! every sweep in this crate (p^3 up to p around 2 * 10^6, p^4 to 5 * 10^4).

use super::Rational;
use crate::error::{Error, Result};
use crate::primes::{invmod, is_prime, mulmod, powmod};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    prime: u64,
    power: u32,
    modulus: u64,
    value: u64,
}

impl Residue {
    /// Checked constructor. `prime` must be prime and p^power must fit in
    /// 63 bits.
    pub fn new(value: i64, prime: u64, power: u32) -> Result<Self> {
        let modulus = checked_modulus(prime, power)?;
        let value = (value as i128).rem_euclid(modulus as i128) as u64;
        Ok(Residue {
            prime,
            power,
            modulus,
            value,
        })
    }

    /// Reduce a big integer.
    pub fn from_bigint(value: &BigInt, prime: u64, power: u32) -> Result<Self> {
        let modulus = checked_modulus(prime, power)?;
        let m = BigInt::from(modulus);
        let value = value.mod_floor(&m).to_u64().expect("reduced below 2^63");
        Ok(Residue {
            prime,
            power,
            modulus,
            value,
        })
    }

    /// Reduce a rational; errors if p divides the reduced denominator.
    pub fn from_rational(x: &Rational, prime: u64, power: u32) -> Result<Self> {
        let modulus = checked_modulus(prime, power)?;
        let m = BigInt::from(modulus);
        let den = x.denom().mod_floor(&m).to_u64().expect("below modulus");
        let den_inv = invmod(den, modulus).ok_or(Error::DenominatorNotInvertible {
            denom: x.denom().to_string(),
            prime,
            power,
        })?;
        let num = x.numer().mod_floor(&m).to_u64().expect("below modulus");
        Ok(Residue {
            prime,
            power,
            modulus,
            value: mulmod(num, den_inv, modulus),
        })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.prime != other.prime || self.power != other.power {
            return Err(Error::MixedModuli {
                left: format!("{}^{}", self.prime, self.power),
                right: format!("{}^{}", other.prime, other.power),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.with_value((self.value + other.value) % self.modulus))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.with_value((self.value + self.modulus - other.value) % self.modulus))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.with_value(mulmod(self.value, other.value, self.modulus)))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.with_value(powmod(self.value, e, self.modulus))
    }

    pub fn neg(&self) -> Self {
        self.with_value((self.modulus - self.value) % self.modulus)
    }

    pub fn inv(&self) -> Result<Self> {
        let v = invmod(self.value, self.modulus).ok_or(Error::DenominatorNotInvertible {
            denom: self.value.to_string(),
            prime: self.prime,
            power: self.power,
        })?;
        Ok(self.with_value(v))
    }

    /// The same residue viewed modulo a smaller power of the same prime.
    pub fn truncate(&self, power: u32) -> Result<Self> {
        if power > self.power {
            return Err(Error::PrecisionUnsupported {
                requested: power,
                max: self.power,
            });
        }
        let modulus = self.prime.pow(power);
        Ok(Residue {
            prime: self.prime,
            power,
            modulus,
            value: self.value % modulus,
        })
    }

    /// Base-p digit i of the value, i < power.
    pub fn digit(&self, i: u32) -> u64 {
        assert!(i < self.power, "digit index beyond stored precision");
        (self.value / self.prime.pow(i)) % self.prime
    }

    fn with_value(&self, value: u64) -> Self {
        Residue {
            prime: self.prime,
            power: self.power,
            modulus: self.modulus,
            value,
        }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {}^{})", self.value, self.prime, self.power)
    }
}

fn checked_modulus(prime: u64, power: u32) -> Result<u64> {
    if !is_prime(prime) {
        return Err(Error::PreconditionViolated(format!(
            "{prime} is not prime"
        )));
    }
    if power == 0 {
        return Err(Error::PreconditionViolated("power must be >= 1".into()));
    }
    let mut m: u128 = 1;
    for _ in 0..power {
        m *= prime as u128;
        if m >= (1u128 << 63) {
            return Err(Error::ModulusTooLarge { prime, power });
        }
    }
    Ok(m as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn construction_normalizes() {
        let r = Residue::new(-1, 5, 2).unwrap();
        assert_eq!(r.value(), 24);
        assert_eq!(r.modulus(), 25);
        let z = Residue::new(25, 5, 2).unwrap();
        assert_eq!(z.value(), 0);
    }

    #[test]
    fn rejects_bad_moduli() {
        assert!(matches!(
            Residue::new(1, 6, 2),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            Residue::new(1, 3, 0),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            Residue::new(1, 2_000_003, 4),
            Err(Error::ModulusTooLarge { .. })
        ));
    }

    #[test]
    fn mixed_moduli_refuse_to_combine() {
        let a = Residue::new(3, 5, 2).unwrap();
        let b = Residue::new(3, 5, 3).unwrap();
        let c = Residue::new(3, 7, 2).unwrap();
        assert!(matches!(a.add(&b), Err(Error::MixedModuli { .. })));
        assert!(matches!(a.mul(&c), Err(Error::MixedModuli { .. })));
    }

    #[test]
    fn rational_reduction_examples() {
        // -1/6 mod 25: the inverse of 6 is 21 (6 * 21 = 126 = 5 * 25 + 1).
        let r = Residue::from_rational(&rat(-1, 6), 5, 2).unwrap();
        assert_eq!(r.value(), 4);
        let zero = Residue::from_rational(&rat(0, 1), 7, 3).unwrap();
        assert_eq!(zero.value(), 0);
        // Numerator carries the whole power of p.
        let v2 = Residue::from_rational(&rat(25, 12), 5, 2).unwrap();
        assert_eq!(v2.value(), 0);
        // p in the denominator is an error, not a wrong answer.
        assert!(matches!(
            Residue::from_rational(&rat(1, 10), 5, 2),
            Err(Error::DenominatorNotInvertible { .. })
        ));
    }

    #[test]
    fn digits_and_truncation() {
        // 346 = 1 + 5*4 + 25*3 + 125*2 in base 5.
        let r = Residue::new(346, 5, 4).unwrap();
        assert_eq!(r.digit(0), 1);
        assert_eq!(r.digit(1), 4);
        assert_eq!(r.digit(2), 3);
        assert_eq!(r.digit(3), 2);
        let t = r.truncate(2).unwrap();
        assert_eq!(t.value(), 346 % 25);
        assert!(r.truncate(5).is_err());
    }
}
