//! Factorial residues modulo prime powers, Fermat quotient digits, and the
//! root lifts of X^(p-1) + (p-1)!.
//!
//! Every unit k in 1..p-1 is a simple root of g(X) = X^(p-1) + (p-1)! modulo
//! p, so it lifts uniquely to any higher power; `hensel_root` performs the
//! lift by Newton iteration and `root_digits` exposes the first two digits
//! past the base residue. The `wilson_predict` routes reconstruct
//! (p-1)! mod p^2 or p^3 from power sums, Fermat quotient digits, Bernoulli
//! values, and the trailing Faulhaber coefficient, without ever multiplying
//! the factorial out; `factorial_mod_pk` is the direct product the claims
//! compare against.

use crate::arith::Residue;
use crate::error::{Error, Result};
use crate::primes::{invmod, is_prime, mulmod, powmod};
use crate::Context;
use std::str::FromStr;

/// n! mod p^power by direct product.
pub fn factorial_mod_pk(n: u64, p: u64, power: u32) -> Result<u64> {
    let modulus = Residue::new(0, p, power)?.modulus();
    let mut acc: u64 = 1;
    for j in 2..=n {
        acc = mulmod(acc, j % modulus, modulus);
    }
    Ok(acc)
}

fn require_odd_prime(p: u64) -> Result<()> {
    if p < 3 || !is_prime(p) {
        return Err(Error::PreconditionViolated(format!(
            "{p} is not an odd prime"
        )));
    }
    Ok(())
}

fn require_unit(k: u64, p: u64) -> Result<()> {
    if k % p == 0 {
        return Err(Error::NonUnit {
            residue: 0,
            prime: p,
        });
    }
    Ok(())
}

/// First Fermat quotient digit: k^(p-1) = 1 + p d0 mod p^2.
pub fn delta0(k: u64, p: u64) -> Result<u64> {
    require_odd_prime(p)?;
    require_unit(k, p)?;
    let m2 = Residue::new(0, p, 2)?.modulus();
    let t = powmod(k % m2, p - 1, m2);
    Ok((t - 1) / p)
}

/// Both digits: k^(p-1) = 1 + p d0 + p^2 d1 mod p^3.
pub fn fermat_digits(k: u64, p: u64) -> Result<(u64, u64)> {
    require_odd_prime(p)?;
    require_unit(k, p)?;
    let m3 = Residue::new(0, p, 3)?.modulus();
    let t = powmod(k % m3, p - 1, m3);
    let u = (t - 1) / p;
    Ok((u % p, (u / p) % p))
}

/// Root of X^(p-1) + (p-1)! congruent to k mod p, lifted to p^precision by
/// Newton iteration. The derivative (p-1) x^(p-2) is a unit at every unit
/// x, so the lift exists and is unique.
pub fn hensel_root(k: u64, p: u64, precision: u32) -> Result<u64> {
    require_odd_prime(p)?;
    require_unit(k, p)?;
    if precision == 0 || precision > 4 {
        return Err(Error::PrecisionUnsupported {
            requested: precision,
            max: 4,
        });
    }
    let m = Residue::new(0, p, precision)?.modulus();
    let f = factorial_mod_pk(p - 1, p, precision)?;
    let mut x = k % p;
    for _ in 0..4 {
        let gx = (powmod(x, p - 1, m) + f) % m;
        if gx == 0 {
            return Ok(x);
        }
        let gpx = mulmod((p - 1) % m, powmod(x, p - 2, m), m);
        let inv = invmod(gpx, m).expect("derivative is a unit");
        x = (x + m - mulmod(gx, inv, m)) % m;
    }
    let gx = (powmod(x, p - 1, m) + f) % m;
    if gx != 0 {
        return Err(Error::PreconditionViolated(format!(
            "Newton iteration did not converge for k = {k}, p = {p}"
        )));
    }
    Ok(x)
}

/// Digits one and two of the lifted root: x = k + p t0 + p^2 t1 mod p^3.
pub fn root_digits(k: u64, p: u64) -> Result<(u64, u64)> {
    let x = hensel_root(k, p, 3)?;
    Ok(((x / p) % p, x / (p * p)))
}

/// Wilson quotient J: (p-1)! = -1 + p J mod p^2, reduced mod p.
pub fn wilson_j(p: u64) -> Result<u64> {
    require_odd_prime(p)?;
    let f = factorial_mod_pk(p - 1, p, 2)?;
    Ok(((f + 1) / p) % p)
}

/// Sides of the first-digit relation p t0 = k (1 + (p-1)! + p d0) mod p^2.
pub fn lemma1_sides(k: u64, p: u64) -> Result<(u64, u64)> {
    let m2 = Residue::new(0, p, 2)?.modulus();
    let (t0, _) = root_digits(k, p)?;
    let f = factorial_mod_pk(p - 1, p, 2)?;
    let lhs = mulmod(p, t0, m2);
    let inner = (1 + f + mulmod(p, delta0(k, p)?, m2)) % m2;
    let rhs = mulmod(k % m2, inner, m2);
    Ok((lhs, rhs))
}

/// Sides of the second-digit relation
/// t1 = k (d0 + d1 + E^2 + (1 + d0) E) + k f2 + s mod p, where E is the
/// sum of all first digits, f2 is the second p-adic digit of (p-1)!, and
/// s is the Hensel carry of the first digit (see `hensel_carry`). The two
/// correction terms are required: the digit-sum form alone fails at
/// k = 1, p = 5 (carry) and k = 1, p = 11 (factorial digit); see
/// `second_digit_carry_correction`.
pub fn lemma3_sides(k: u64, p: u64) -> Result<(u64, u64)> {
    let (_, t1) = root_digits(k, p)?;
    let mut e: u64 = 0;
    for i in 1..p {
        e = (e + delta0(i, p)?) % p;
    }
    let (d0, d1) = fermat_digits(k, p)?;
    let f2 = factorial_mod_pk(p - 1, p, 3)? / (p * p);
    let inner = (d0 + d1 + f2 + mulmod(e, e, p) + mulmod((1 + d0) % p, e, p)) % p;
    let s = hensel_carry(k, p)?;
    let rhs = (mulmod(k % p, inner, p) + s) % p;
    Ok((t1 % p, rhs))
}

/// The digit discarded when the first-digit relation is reduced mod p^2:
/// floor(k (1 + (p-1)!_{mod p^2} + p d0(k)) / p^2), reduced mod p.
pub fn hensel_carry(k: u64, p: u64) -> Result<u64> {
    let f = factorial_mod_pk(p - 1, p, 2)?;
    let a = (k % p) * (1 + f + p * delta0(k, p)?);
    Ok((a / (p * p)) % p)
}

/// Coefficients of the product of (X - x_k) over all lifted roots, reduced
/// mod p^precision, lowest degree first, leading 1 included. Matching
/// X^(p-1) + (p-1)! certifies the lifts form the full root set.
pub fn root_product_coeffs(p: u64, precision: u32) -> Result<Vec<u64>> {
    require_odd_prime(p)?;
    let m = Residue::new(0, p, precision)?.modulus();
    let mut coeffs: Vec<u64> = vec![1];
    for k in 1..p {
        let root = hensel_root(k, p, precision)?;
        let neg = (m - root % m) % m;
        let mut next = vec![0u64; coeffs.len() + 1];
        for (i, c) in coeffs.iter().enumerate() {
            next[i + 1] = (next[i + 1] + c) % m;
            next[i] = (next[i] + mulmod(*c, neg, m)) % m;
        }
        coeffs = next;
    }
    Ok(coeffs)
}

/// Reconstruction routes for (p-1)! mod p^2 (the first three) and mod p^3
/// (the rest).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WilsonMethod {
    /// -1 + p * sum of first Fermat digits, mod p^2.
    Theorem1,
    /// Half the trailing Faulhaber coefficient minus p, mod p^2.
    Theorem2,
    /// p B_{p-1} - p, mod p^2.
    Glaisher,
    /// Symmetric function of the power sums S and sum of squared terms,
    /// mod p^3.
    Lemma4,
    /// Fermat digit expansion carried one power further, mod p^3.
    Theorem6,
    /// Bernoulli form with both p B_{p-1} and p B_{2p-2}, mod p^3.
    Corollary6,
    /// Series in p B_{k(p-1)} / (p-1), mod p^3.
    SunSeries,
}

impl WilsonMethod {
    pub fn all() -> [WilsonMethod; 7] {
        [
            WilsonMethod::Theorem1,
            WilsonMethod::Theorem2,
            WilsonMethod::Glaisher,
            WilsonMethod::Lemma4,
            WilsonMethod::Theorem6,
            WilsonMethod::Corollary6,
            WilsonMethod::SunSeries,
        ]
    }

    pub fn power(self) -> u32 {
        match self {
            WilsonMethod::Theorem1 | WilsonMethod::Theorem2 | WilsonMethod::Glaisher => 2,
            _ => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            WilsonMethod::Theorem1 => "theorem1",
            WilsonMethod::Theorem2 => "theorem2",
            WilsonMethod::Glaisher => "glaisher",
            WilsonMethod::Lemma4 => "lemma4",
            WilsonMethod::Theorem6 => "theorem6",
            WilsonMethod::Corollary6 => "corollary6",
            WilsonMethod::SunSeries => "sun",
        }
    }
}

impl FromStr for WilsonMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        WilsonMethod::all()
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::MethodUnsupported(s.to_string()))
    }
}

/// Predict (p-1)! mod p^power through the chosen route. Requires p >= 5.
pub fn wilson_predict(ctx: &Context, p: u64, method: WilsonMethod) -> Result<Residue> {
    if p < 5 || !is_prime(p) {
        return Err(Error::PreconditionViolated(format!(
            "routes require a prime p >= 5, got {p}"
        )));
    }
    match method {
        WilsonMethod::Theorem1 => {
            let m2 = Residue::new(0, p, 2)?.modulus();
            let mut s: u64 = 0;
            for k in 1..p {
                s = (s + delta0(k, p)?) % m2;
            }
            let v = (m2 - 1 + mulmod(p, s, m2)) % m2;
            Residue::new(v as i64, p, 2)
        }
        WilsonMethod::Theorem2 => {
            let c1 = crate::faulhaber::c1_mod_p2(p)?;
            let half = Residue::new(2, p, 2)?.inv()?;
            c1.mul(&half)?.sub(&Residue::new(p as i64, p, 2)?)
        }
        WilsonMethod::Glaisher => {
            let pb = ctx.bernoulli.padic_pb(1, p, 2)?.to_residue(2)?;
            pb.sub(&Residue::new(p as i64, p, 2)?)
        }
        WilsonMethod::Lemma4 => {
            let m3 = Residue::new(0, p, 3)?.modulus();
            let mut s: u64 = 0;
            let mut q: u64 = 0;
            for i in 1..p {
                let f = powmod(i, p - 1, m3);
                s = (s + f) % m3;
                q = (q + mulmod(f, f, m3)) % m3;
            }
            let inv2 = invmod(2, m3).expect("2 is a unit");
            let sq_term = mulmod(inv2, (mulmod(s, s, m3) + q) % m3, m3);
            let lin = mulmod((2 * p + 1) % m3, s, m3);
            let tail = mulmod(
                (p - 1) % m3,
                (mulmod(mulmod(3, p, m3), inv2, m3) + 1) % m3,
                m3,
            );
            let v = (m3 - 1 + (m3 - sq_term) + lin + (m3 - tail)) % m3;
            Residue::new(v as i64, p, 3)
        }
        WilsonMethod::Theorem6 => {
            let m3 = Residue::new(0, p, 3)?.modulus();
            let p2 = p * p;
            let mut s0: u64 = 0; // exact: p-1 digits below p
            let mut s01: u64 = 0;
            let mut sq: u64 = 0;
            for k in 1..p {
                let (d0, d1) = fermat_digits(k, p)?;
                s0 += d0;
                s01 = (s01 + d0 + d1) % p;
                sq = (sq + mulmod(d0, d0, p)) % p;
            }
            let inv2 = invmod(2, m3).expect("2 is a unit");
            let t1 = mulmod(p, s0 % p2, m3);
            let t2 = mulmod(p2 % m3, s01, m3);
            let bracket = (mulmod(s0 % p, s0 % p, p) + sq) % p;
            let t3 = mulmod(mulmod(p2 % m3, inv2, m3), bracket, m3);
            let v = (m3 - 1 + t1 + t2 + (m3 - t3)) % m3;
            Residue::new(v as i64, p, 3)
        }
        WilsonMethod::Corollary6 => {
            let pb1 = ctx.bernoulli.padic_pb(1, p, 3)?.to_residue(3)?;
            let pb2 = ctx.bernoulli.padic_pb(2, p, 3)?.to_residue(3)?;
            let half = Residue::new(2, p, 3)?.inv()?;
            let pr = Residue::new(p as i64, p, 3)?;
            let three_half_p2 = pr.mul(&pr)?.mul(&half)?.mul(&Residue::new(3, p, 3)?)?;
            pr.mul(&half)?
                .sub(&three_half_p2)?
                .add(&pb1.mul(&Residue::new((2 * p + 1) as i64, p, 3)?)?)?
                .sub(&pb2.mul(&half)?)?
                .sub(&pb1.mul(&pb1)?.mul(&half)?)
        }
        WilsonMethod::SunSeries => {
            let pb1 = ctx.bernoulli.padic_pb(1, p, 3)?.to_residue(3)?;
            let pb2 = ctx.bernoulli.padic_pb(2, p, 3)?.to_residue(3)?;
            let half = Residue::new(2, p, 3)?.inv()?;
            let w = Residue::new((p - 1) as i64, p, 3)?.inv()?;
            let a = pb1.mul(&w)?;
            a.neg()
                .add(&pb2.mul(&w)?.mul(&half)?)?
                .sub(&a.mul(&a)?.mul(&half)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::RunConfig;

    fn ctx() -> Context {
        Context::new(RunConfig::default())
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial_mod_pk(4, 5, 3).unwrap(), 24);
        assert_eq!(factorial_mod_pk(6, 7, 2).unwrap(), 34);
        for p in crate::primes::primes_in(3, 31) {
            let f = factorial_mod_pk(p - 1, p, 1).unwrap();
            assert_eq!(f, p - 1, "Wilson at p = {p}");
        }
    }

    #[test]
    fn fermat_digit_expansion() {
        for p in [5u64, 7, 13] {
            let m3 = p * p * p;
            for k in 1..p {
                let (d0, d1) = fermat_digits(k, p).unwrap();
                assert_eq!(delta0(k, p).unwrap() % p, d0);
                let rebuilt = (1 + p * d0 + p * p * d1) % m3;
                assert_eq!(powmod(k, p - 1, m3), rebuilt, "k = {k}, p = {p}");
            }
        }
        assert!(matches!(delta0(10, 5), Err(Error::NonUnit { .. })));
    }

    #[test]
    fn hensel_lift_small() {
        // p = 5, precision 2: the four roots of X^4 + 24 mod 25.
        let lifted: Vec<u64> = (1..5).map(|k| hensel_root(k, 5, 2).unwrap()).collect();
        assert_eq!(lifted, vec![1, 7, 18, 24]);
    }

    #[test]
    fn hensel_matches_brute_force() {
        for p in [5u64, 7] {
            let m2 = p * p;
            let f = factorial_mod_pk(p - 1, p, 2).unwrap();
            for k in 1..p {
                let mut found = Vec::new();
                let mut x = k;
                while x < m2 {
                    if (powmod(x, p - 1, m2) + f) % m2 == 0 {
                        found.push(x);
                    }
                    x += p;
                }
                assert_eq!(found, vec![hensel_root(k, p, 2).unwrap()], "k = {k}, p = {p}");
            }
        }
    }

    #[test]
    fn hensel_all_precisions() {
        for p in [5u64, 7, 11, 31] {
            for precision in 1..=4u32 {
                let m = p.pow(precision);
                let f = factorial_mod_pk(p - 1, p, precision).unwrap();
                for k in 1..p {
                    let x = hensel_root(k, p, precision).unwrap();
                    assert_eq!(x % p, k);
                    assert_eq!((powmod(x, p - 1, m) + f) % m, 0);
                }
            }
        }
        assert!(matches!(
            hensel_root(1, 5, 5),
            Err(Error::PrecisionUnsupported { .. })
        ));
        assert!(matches!(hensel_root(5, 5, 2), Err(Error::NonUnit { .. })));
    }

    #[test]
    fn root_product_recovers_polynomial() {
        for p in [5u64, 7, 11] {
            for precision in [2u32, 3] {
                let m = p.pow(precision);
                let coeffs = root_product_coeffs(p, precision).unwrap();
                let f = factorial_mod_pk(p - 1, p, precision).unwrap();
                let mut expect = vec![0u64; p as usize];
                expect[0] = f;
                expect[p as usize - 1] = 1;
                assert_eq!(coeffs, expect, "p = {p}, precision = {precision}");
                assert_eq!(coeffs.len() as u64, p);
                let _ = m;
            }
        }
    }

    #[test]
    fn wilson_quotient_values() {
        assert_eq!(wilson_j(5).unwrap(), 0); // 5 is a Wilson prime
        assert_eq!(wilson_j(7).unwrap(), 5);
        assert_ne!(wilson_j(11).unwrap(), 0);
        assert_eq!(wilson_j(13).unwrap(), 0); // 13 is a Wilson prime
    }

    #[test]
    fn digit_relations() {
        for p in [5u64, 7, 11, 13] {
            for k in 1..p {
                let (l1, r1) = lemma1_sides(k, p).unwrap();
                assert_eq!(l1, r1, "first digit, k = {k}, p = {p}");
                let (l3, r3) = lemma3_sides(k, p).unwrap();
                assert_eq!(l3, r3, "second digit, k = {k}, p = {p}");
            }
        }
    }

    #[test]
    fn second_digit_carry_correction() {
        // Pinned counterexamples: the digit-sum form of the second-digit
        // relation needs both correction terms.
        //
        // Carry term. At k = 1, p = 5 the root is 26, so the second digit
        // is 1, yet every delta digit of 1 vanishes, the sum of first
        // digits is 0 mod 5, and 4! has no second digit (24 < 25): the
        // uncorrected right side is 0. The carry 1*(1 + 24 + 0) = 25 = 5^2
        // supplies the missing 1.
        let (t0, t1) = root_digits(1, 5).unwrap();
        assert_eq!((t0, t1), (0, 1));
        assert_eq!(hensel_root(1, 5, 3).unwrap(), 26);
        assert_eq!(fermat_digits(1, 5).unwrap(), (0, 0));
        let e: u64 = (1..5).map(|i| delta0(i, 5).unwrap()).sum();
        assert_eq!(e % 5, 0);
        assert_eq!(factorial_mod_pk(4, 5, 3).unwrap() / 25, 0);
        assert_eq!(hensel_carry(1, 5).unwrap(), 1);
        assert_eq!(lemma3_sides(1, 5).unwrap(), (1, 1));

        // Factorial-digit term. At k = 1, p = 11 the second root digit is
        // 6; the digit-sum form gives (J + 0)(1 + J) = 2 with Wilson
        // digit J = 1 and the carry is 0, but 10! = 494 mod 1331 carries
        // second digit floor(494/121) = 4, closing the gap 2 + 4 = 6.
        let (_, t1) = root_digits(1, 11).unwrap();
        assert_eq!(t1 % 11, 6);
        assert_eq!(factorial_mod_pk(10, 11, 3).unwrap(), 494);
        assert_eq!(494 / 121, 4);
        assert_eq!(hensel_carry(1, 11).unwrap(), 0);
        assert_eq!(lemma3_sides(1, 11).unwrap(), (6, 6));
    }

    #[test]
    fn predictions_at_five() {
        let ctx = ctx();
        for method in WilsonMethod::all() {
            let r = wilson_predict(&ctx, 5, method).unwrap();
            assert_eq!(r.value(), 24, "route {} at p = 5", method.name());
        }
    }

    #[test]
    fn predictions_match_factorial() {
        let ctx = ctx();
        for p in crate::primes::primes_in(5, 31) {
            for method in WilsonMethod::all() {
                let r = wilson_predict(&ctx, p, method).unwrap();
                let f = factorial_mod_pk(p - 1, p, method.power()).unwrap();
                assert_eq!(r.value(), f, "route {} at p = {p}", method.name());
            }
        }
    }

    #[test]
    fn inverse_of_p_minus_one() {
        // (p-1)^{-1} = -p^2 - p - 1 mod p^3.
        for p in [5u64, 7, 11, 13, 101] {
            let m3 = p * p * p;
            let closed = (m3 - p * p - p - 1) % m3;
            assert_eq!(invmod(p - 1, m3).unwrap(), closed, "p = {p}");
        }
    }

    #[test]
    fn method_names_round_trip() {
        for m in WilsonMethod::all() {
            assert_eq!(m.name().parse::<WilsonMethod>().unwrap(), m);
        }
        assert!("euler".parse::<WilsonMethod>().is_err());
    }
}
