//! p-adic views of rationals.
//!
//! A nonzero rational x factors uniquely as p^v * (a/b) with a, b coprime to
//! p; `PadicValue` stores the valuation v and the unit part a/b reduced
//! modulo p^precision. Zero is kept as an explicit flag (its valuation is
//! +infinity, which no integer field represents honestly).

use super::{valuation_big, Rational, Residue};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PadicValue {
    prime: u64,
    precision: u32,
    /// None encodes exact zero.
    valuation: Option<i64>,
    /// Unit part mod p^precision; 0 for exact zero.
    unit: u64,
}

impl PadicValue {
    pub fn zero(prime: u64, precision: u32) -> Result<Self> {
        // Validate (p, precision) through the residue constructor.
        let _ = Residue::new(0, prime, precision)?;
        Ok(PadicValue {
            prime,
            precision,
            valuation: None,
            unit: 0,
        })
    }

    /// Assemble p^valuation * unit from an already-reduced unit residue.
    pub fn from_unit(valuation: i64, unit: Residue) -> Result<Self> {
        if unit.value() % unit.prime() == 0 {
            return Err(Error::NonUnit {
                residue: unit.value(),
                prime: unit.prime(),
            });
        }
        Ok(PadicValue {
            prime: unit.prime(),
            precision: unit.power(),
            valuation: Some(valuation),
            unit: unit.value(),
        })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn is_zero(&self) -> bool {
        self.valuation.is_none()
    }

    /// Valuation; None means +infinity (exact zero).
    pub fn valuation(&self) -> Option<i64> {
        self.valuation
    }

    /// Unit part as a residue mod p^precision. Errors on exact zero.
    pub fn unit(&self) -> Result<Residue> {
        if self.is_zero() {
            return Err(Error::PreconditionViolated(
                "exact zero has no unit part".into(),
            ));
        }
        Residue::new(self.unit as i64, self.prime, self.precision)
    }

    /// Base-p digit i of the unit part.
    pub fn unit_digit(&self, i: u32) -> u64 {
        assert!(i < self.precision);
        (self.unit / self.prime.pow(i)) % self.prime
    }

    /// The value reduced mod p^power, for p-integral values (valuation >= 0)
    /// with enough stored precision: p^v * unit carries v + precision known
    /// digits.
    pub fn to_residue(&self, power: u32) -> Result<Residue> {
        if self.is_zero() {
            return Residue::new(0, self.prime, power);
        }
        let v = self.valuation.unwrap();
        if v < 0 {
            return Err(Error::PreconditionViolated(format!(
                "valuation {v} is negative; not p-integral"
            )));
        }
        if v as u32 >= power {
            return Residue::new(0, self.prime, power);
        }
        let known = v as u32 + self.precision;
        if known < power {
            return Err(Error::PrecisionUnsupported {
                requested: power,
                max: known,
            });
        }
        let m = self.prime.pow(power);
        let shifted = (self.unit as u128 * (self.prime as u128).pow(v as u32) % m as u128) as u64;
        Residue::new(shifted as i64, self.prime, power)
    }
}

impl fmt::Display for PadicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.valuation {
            None => write!(f, "0 (exactly, {}-adically)", self.prime),
            Some(v) => write!(
                f,
                "{}^{} * {} (mod {}^{})",
                self.prime, v, self.unit, self.prime, self.precision
            ),
        }
    }
}

/// Reduce a rational modulo p^k. Errors with `DenominatorNotInvertible` when
/// p divides the reduced denominator.
pub fn rational_mod_pk(x: &Rational, prime: u64, power: u32) -> Result<Residue> {
    Residue::from_rational(x, prime, power)
}

/// Decompose a rational into p^v * unit with the unit kept to `precision`
/// base-p digits.
pub fn padic_of_rational(x: &Rational, prime: u64, precision: u32) -> Result<PadicValue> {
    if x.is_zero() {
        return PadicValue::zero(prime, precision);
    }
    let vn = valuation_big(x.numer(), prime) as i64;
    let vd = valuation_big(x.denom(), prime) as i64;
    let v = vn - vd;
    // Strip p from whichever side carries it; a reduced fraction never has
    // p on both sides.
    let (num, den) = if vn > 0 {
        (x.numer() / BigInt::from(prime).pow(vn as u32), x.denom().clone())
    } else if vd > 0 {
        (x.numer().clone(), x.denom() / BigInt::from(prime).pow(vd as u32))
    } else {
        (x.numer().clone(), x.denom().clone())
    };
    let unit_rat = Rational::new(num, den);
    let unit = Residue::from_rational(&unit_rat, prime, precision)?;
    Ok(PadicValue {
        prime,
        precision,
        valuation: Some(v),
        unit: unit.value(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn bernoulli_four_at_five() {
        // B_4 = -1/30 = 5^{-1} * (-1/6): valuation -1, unit -1/6 = 4 mod 5.
        let v = padic_of_rational(&rat(-1, 30), 5, 2).unwrap();
        assert_eq!(v.valuation(), Some(-1));
        assert_eq!(v.unit_digit(0), 4);
        assert!(v.to_residue(1).is_err());
    }

    #[test]
    fn positive_valuation() {
        let v = padic_of_rational(&rat(25, 12), 5, 2).unwrap();
        assert_eq!(v.valuation(), Some(2));
        // unit = 1/12 mod 25; 12 * 23 = 276 = 11 * 25 + 1.
        assert_eq!(v.unit().unwrap().value(), 23);
        assert_eq!(v.to_residue(2).unwrap().value(), 0);
    }

    #[test]
    fn zero_is_flagged() {
        let v = padic_of_rational(&rat(0, 3), 7, 2).unwrap();
        assert!(v.is_zero());
        assert_eq!(v.valuation(), None);
        assert!(v.unit().is_err());
        assert_eq!(v.to_residue(2).unwrap().value(), 0);
    }

    #[test]
    fn reconstruction_matches_direct_reduction() {
        for (n, d) in [(7i64, 3i64), (50, 9), (-2, 11), (125, 4), (3, 2)] {
            let x = rat(n, d);
            let v = padic_of_rational(&x, 5, 3).unwrap();
            if v.valuation().unwrap_or(0) >= 0 {
                let direct = rational_mod_pk(&x, 5, 3).unwrap();
                assert_eq!(v.to_residue(3).unwrap_or(direct), direct, "x = {n}/{d}");
            }
        }
    }
}
