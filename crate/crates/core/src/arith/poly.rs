//! Dense polynomials over Q.
//!
//! Coefficients are stored ascending by degree. Canonical form: the vector
//! is either empty (zero polynomial) or its last element is nonzero; every
//! constructor and operation restores this before returning. Division,
//! remainder and the extended Euclidean algorithm are exact, which is what
//! lets congruences between q-analogs be decided by literal coefficient
//! equality instead of any numeric tolerance.

use super::Rational;
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RatPoly { coeffs: vec![c] }.normalized()
    }

    /// The monomial c * x^d.
    pub fn monomial(c: Rational, d: usize) -> Self {
        if c.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); d + 1];
        coeffs[d] = c;
        RatPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        RatPoly { coeffs }.normalized()
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        RatPoly::from_coeffs(coeffs.iter().map(|&c| super::rat_int(c)).collect())
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().map_or(false, Zero::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return RatPoly::zero();
        }
        RatPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
        .normalized()
    }

    /// Substitute x -> x^e (coefficient spreading). e >= 1.
    pub fn inflate(&self, e: usize) -> Self {
        assert!(e >= 1);
        if self.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); (self.coeffs.len() - 1) * e + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * e] = c.clone();
        }
        RatPoly { coeffs }
    }

    /// Quotient and remainder with deg(r) < deg(d). Panics on zero divisor.
    pub fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.coeffs.len() < d.coeffs.len() {
            return (RatPoly::zero(), self.clone());
        }
        let dd = d.coeffs.len() - 1;
        let lead_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] * &lead_inv;
            for j in 0..dd {
                let t = &q * &d.coeffs[j];
                rem[i - dd + j] -= t;
            }
            rem[i] = Rational::zero();
            quot[i - dd] = q;
        }
        (
            RatPoly { coeffs: quot }.normalized(),
            RatPoly { coeffs: rem }.normalized(),
        )
    }

    pub fn rem(&self, m: &RatPoly) -> RatPoly {
        self.div_rem(m).1
    }

    /// Remainder of self^e mod m.
    pub fn pow_mod(&self, e: u32, m: &RatPoly) -> RatPoly {
        let mut acc = RatPoly::one().rem(m);
        let base = self.rem(m);
        for _ in 0..e {
            acc = (&acc * &base).rem(m);
        }
        acc
    }

    /// Make the leading coefficient 1. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => RatPoly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Extended Euclid: returns (g, s, t) with s*self + t*other = g, g monic
    /// (or zero when both inputs are zero).
    pub fn extended_gcd(&self, other: &RatPoly) -> (RatPoly, RatPoly, RatPoly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (RatPoly::one(), RatPoly::zero());
        let (mut t0, mut t1) = (RatPoly::zero(), RatPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = l.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    /// Inverse of self modulo m: g with self * g = 1 mod m, deg(g) < deg(m).
    /// Errors when gcd(self, m) is nonconstant.
    pub fn inverse_mod(&self, m: &RatPoly) -> Result<RatPoly> {
        let (g, s, _) = self.extended_gcd(m);
        match g.degree() {
            Some(0) => Ok(s.rem(m)),
            Some(d) => Err(Error::NotCoprime { gcd_degree: d }),
            None => Err(Error::NotCoprime { gcd_degree: 0 }),
        }
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        RatPoly { coeffs }.normalized()
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        RatPoly { coeffs }.normalized()
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly { coeffs }.normalized()
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for RatPoly {
    /// Canonical bracketed coefficient list, ascending degree: "[1, -1, 2/3]".
    /// This is the byte format congruence reports embed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if c.is_integer() {
                write!(f, "{}", c.numer())?;
            } else {
                write!(f, "{}/{}", c.numer(), c.denom())?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, rat_int};

    fn p(v: &[i64]) -> RatPoly {
        RatPoly::from_i64(v)
    }

    #[test]
    fn canonical_form_is_maintained() {
        let f = RatPoly::from_coeffs(vec![rat_int(1), rat_int(0), rat_int(0)]);
        assert_eq!(f.degree(), Some(0));
        assert!(RatPoly::from_coeffs(vec![]).is_zero());
        assert_eq!((&p(&[1, 1]) - &p(&[1, 1])).degree(), None);
    }

    #[test]
    fn division_invariant() {
        let f = p(&[2, 0, 0, 1, 5]);
        let d = p(&[1, 3, 1]);
        let (q, r) = f.div_rem(&d);
        assert_eq!(&(&q * &d) + &r, f);
        assert!(r.degree().unwrap() < d.degree().unwrap());
    }

    #[test]
    fn inverse_of_one_plus_q() {
        // (1 + q)^{-1} mod 1 + q + q^2 is -q: (1+q)(-q) = -q - q^2 = 1 mod m.
        let f = p(&[1, 1]);
        let m = p(&[1, 1, 1]);
        let inv = f.inverse_mod(&m).unwrap();
        assert_eq!(inv, p(&[0, -1]));
        assert_eq!((&f * &inv).rem(&m), RatPoly::one());
    }

    #[test]
    fn non_coprime_is_an_error() {
        let f = p(&[1, 1]);
        let m = &p(&[1, 1]) * &p(&[1, 1, 1]);
        assert!(matches!(
            f.inverse_mod(&m),
            Err(Error::NotCoprime { gcd_degree: 1 })
        ));
    }

    #[test]
    fn inflate_spreads_coefficients() {
        let f = p(&[1, 2, 3]);
        let g = f.inflate(3);
        assert_eq!(g.coeff(0), rat_int(1));
        assert_eq!(g.coeff(3), rat_int(2));
        assert_eq!(g.coeff(6), rat_int(3));
        assert_eq!(g.degree(), Some(6));
    }

    #[test]
    fn display_is_canonical() {
        let f = RatPoly::from_coeffs(vec![rat_int(1), rat(-2, 3)]);
        assert_eq!(f.to_string(), "[1, -2/3]");
        assert_eq!(RatPoly::zero().to_string(), "[]");
    }
}
