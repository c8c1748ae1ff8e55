//! Unsigned Stirling numbers of the first kind, harmonic sums, and the
//! Wolstenholme helpers built on them.
//!
//! Notation used across the claim layer: for a prime p and 1 <= r <= p-1,
//! the elementary symmetric sum of r distinct factors from {1, ..., p-1}
//! equals the Stirling number [p, p-r]; `elementary_symmetric` performs that
//! translation. Generalized harmonic sums come in two independent flavors:
//! `harmonic_exact` builds the rational number, `harmonic_mod` works
//! entirely modulo p^k through batched modular inverses. Where their
//! domains overlap they must agree, which the tests pin down.

use crate::error::{Error, Result};
use crate::primes::{invmod, is_prime, mulmod, powmod};
use crate::arith::Rational;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, RwLock};

/// Rows of unsigned Stirling numbers of the first kind, cached per row
/// index. Row n holds [n, 0], ..., [n, n] with the recurrence
/// [n+1, k] = [n, k-1] + n [n, k].
#[derive(Debug)]
pub struct StirlingCache {
    cap: u64,
    rows: RwLock<HashMap<u64, Arc<Vec<BigUint>>>>,
}

impl StirlingCache {
    pub fn new(cap: u64) -> Self {
        StirlingCache {
            cap,
            rows: RwLock::new(HashMap::new()),
        }
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    pub fn row(&self, n: u64) -> Result<Arc<Vec<BigUint>>> {
        if n > self.cap {
            return Err(Error::CapExceeded {
                what: "exact Stirling row",
                value: n,
                cap: self.cap,
            });
        }
        if let Some(r) = self.rows.read().unwrap().get(&n) {
            return Ok(Arc::clone(r));
        }
        let mut row = vec![BigUint::one()]; // row 0
        for m in 0..n {
            let mut next = vec![BigUint::zero(); row.len() + 1];
            for (k, v) in row.iter().enumerate() {
                // [m+1, k+1] += [m, k]; [m+1, k] += m [m, k].
                next[k + 1] += v;
                next[k] += v * BigUint::from(m);
            }
            row = next;
        }
        let arc = Arc::new(row);
        self.rows
            .write()
            .unwrap()
            .insert(n, Arc::clone(&arc));
        Ok(arc)
    }

    /// [n, k], with the usual convention that k > n gives 0.
    pub fn value(&self, n: u64, k: u64) -> Result<BigUint> {
        if k > n {
            return Ok(BigUint::zero());
        }
        Ok(self.row(n)?[k as usize].clone())
    }

    /// [n, k] mod p^power, as a fixed-width residue.
    pub fn value_mod(&self, n: u64, k: u64, p: u64, power: u32) -> Result<u64> {
        let modulus = crate::arith::Residue::new(0, p, power)?.modulus();
        let v = self.value(n, k)?;
        Ok((v % BigUint::from(modulus)).try_into().unwrap())
    }

    /// Sum of r distinct factors taken from {1, ..., p-1}: the coefficient
    /// layer's A_r, equal to [p, p-r]. Requires 1 <= r <= p-1.
    pub fn elementary_symmetric(&self, p: u64, r: u64) -> Result<BigUint> {
        if r == 0 || r >= p {
            return Err(Error::IndexOutOfRange(format!(
                "elementary symmetric index {r} outside 1..={}",
                p - 1
            )));
        }
        self.value(p, p - r)
    }
}

/// Exact generalized harmonic number: sum of 1/k^m for k = 1..n.
/// Built over the single denominator lcm(1..n)^m so the additions stay in
/// the integers until the final reduction.
pub fn harmonic_exact(n: u64, m: u32) -> Rational {
    let mut l = BigUint::one();
    for k in 2..=n {
        l = l.lcm(&BigUint::from(k));
    }
    let d = l.pow(m);
    let mut sum = BigUint::zero();
    for k in 1..=n {
        sum += &d / BigUint::from(k).pow(m);
    }
    Rational::new(BigInt::from(sum), BigInt::from(d))
}

/// Modular inverses of 1..p-1 modulo `modulus` (a power of p), via one
/// extended-gcd call and two prefix-product passes.
pub fn inverse_table(p: u64, modulus: u64) -> Vec<u64> {
    let n = p as usize;
    let mut pref = vec![1u64; n];
    for j in 2..n {
        pref[j] = mulmod(pref[j - 1], j as u64, modulus);
    }
    let mut inv = vec![0u64; n];
    let mut run = invmod(pref[n - 1], modulus).expect("j < p is a unit mod p^k");
    for j in (1..n).rev() {
        inv[j] = mulmod(run, pref[j - 1], modulus);
        run = mulmod(run, j as u64, modulus);
    }
    inv
}

/// sum_{k=1}^{p-1} k^{-m} mod p^power, entirely within modular arithmetic.
pub fn harmonic_mod(p: u64, m: u64, power: u32) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::PreconditionViolated(format!("{p} is not prime")));
    }
    let modulus = crate::arith::Residue::new(0, p, power)?.modulus();
    let inv = inverse_table(p, modulus);
    let mut acc: u64 = 0;
    for j in 1..p as usize {
        acc = (acc + powmod(inv[j], m, modulus)) % modulus;
    }
    Ok(acc)
}

/// C(2p-1, p-1) mod p^power through the product (p+1)(p+2)...(p+p-1)
/// divided by (p-1)!, all modulo p^power. Valid for power <= 4 within the
/// 63-bit modulus bound.
pub fn central_binomial_mod(p: u64, power: u32) -> Result<u64> {
    let modulus = crate::arith::Residue::new(0, p, power)?.modulus();
    let mut num: u64 = 1;
    let mut den: u64 = 1;
    for j in 1..p {
        num = mulmod(num, (p + j) % modulus, modulus);
        den = mulmod(den, j, modulus);
    }
    let inv = invmod(den, modulus).expect("(p-1)! is a unit mod p^k");
    Ok(mulmod(num, inv, modulus))
}

/// Wolstenholme quotient (C(2p-1, p-1) - 1)/p^3 reduced mod p. Requires
/// p >= 5 (the numerator is divisible by p^3 from there on).
pub fn wolstenholme_quotient(p: u64) -> Result<u64> {
    if p < 5 {
        return Err(Error::PreconditionViolated(format!(
            "quotient defined for p >= 5, got {p}"
        )));
    }
    let c = central_binomial_mod(p, 4)?;
    let p3 = p * p * p;
    if (c - 1) % p3 != 0 {
        return Err(Error::PreconditionViolated(format!(
            "C(2p-1, p-1) - 1 not divisible by p^3 at p = {p}"
        )));
    }
    Ok(((c - 1) / p3) % p)
}

/// A prime is Wolstenholme when the harmonic sum vanishes one power
/// further than usual: H_{p-1,1} = 0 mod p^3.
pub fn is_wolstenholme_prime(p: u64) -> Result<bool> {
    Ok(harmonic_mod(p, 1, 3)? == 0)
}
