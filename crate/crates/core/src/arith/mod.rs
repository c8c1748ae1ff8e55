//! Exact arithmetic substrate: rationals, residues modulo prime powers,
//! p-adic values, and dense polynomials over Q.
//!
//! Everything downstream reduces to these four types. All values are
//! immutable once constructed and all operations are pure, so the sweep
//! layer can fan out across threads without locks.

mod padic;
mod poly;
mod residue;

pub use padic::{padic_of_rational, rational_mod_pk, PadicValue};
pub use poly::RatPoly;
pub use residue::Residue;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator (zero is 0/1). The invariants are maintained by the
/// underlying representation on every construction.
pub type Rational = num_rational::BigRational;

/// Rational from a small numerator/denominator pair.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// n! as an unsigned big integer.
pub fn factorial_big(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

/// Binomial coefficient C(n, k) for unsigned arguments.
pub fn binomial_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Generalized binomial coefficient C(a, k) = a(a-1)...(a-k+1) / k! for an
/// arbitrary integer upper argument, with C(a, k) = 0 for k < 0. This is the
/// convention the determinant formulas rely on when their upper argument
/// goes negative.
pub fn gen_binomial(a: &BigInt, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for i in 0..k {
        num *= a - BigInt::from(i);
    }
    let den = BigInt::from_biguint(num_bigint::Sign::Plus, factorial_big(k as u64));
    // The falling factorial of an integer over k! is always an integer.
    let (q, r) = num_integer::Integer::div_rem(&num, &den);
    debug_assert!(r.is_zero());
    q
}

/// p-adic valuation of a nonzero big integer.
pub fn valuation_big(n: &BigInt, p: u64) -> u32 {
    assert!(!n.is_zero(), "valuation of zero is undefined here");
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = num_integer::Integer::div_rem(&n, &p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// p-adic valuation of a rational: v(num) - v(den). None for zero (+infinity).
pub fn valuation_rat(x: &Rational, p: u64) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    Some(valuation_big(x.numer(), p) as i64 - valuation_big(x.denom(), p) as i64)
}
