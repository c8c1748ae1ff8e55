//! Classification of composite moduli by the per-prime divisibility
//! conditions that drive the factorial and Bernoulli congruences at
//! composite arguments.
//!
//! For squarefree composite n, two independent views are kept in sync:
//! the per-prime view (does p-1 divide n-1, does p divide n/p - 1) and the
//! global rational view (n B_{n-1} mod n, the unit fraction sum). Tests and
//! claims cross these routes against each other; neither is derived from
//! the other in code.

use crate::bernoulli::BernoulliTable;
use crate::error::{Error, Result};
use crate::primes::{invmod, is_prime, spf_sieve};
use crate::arith::{rat_int, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Prime factorization by trial division, (prime, exponent) pairs in
/// increasing order. Bounded by `cap` so a scan cannot silently wander
/// into slow territory.
pub fn factorize(n: u64, cap: u64) -> Result<Vec<(u64, u32)>> {
    if n == 0 {
        return Err(Error::FactorizationFailed(0));
    }
    if n > cap {
        return Err(Error::RangeExceeded {
            what: "factorization input",
            value: n,
            limit: cap,
        });
    }
    let mut rest = n;
    let mut out = Vec::new();
    let mut d: u64 = 2;
    while d * d <= rest {
        if rest % d == 0 {
            let mut e = 0u32;
            while rest % d == 0 {
                rest /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        out.push((rest, 1));
    }
    Ok(out)
}

/// Per-prime divisibility profile of an integer n > 1.
#[derive(Debug, Clone)]
pub struct CompositeProfile {
    pub n: u64,
    pub factors: Vec<(u64, u32)>,
    pub composite: bool,
    pub squarefree: bool,
    /// Primes p | n with p - 1 | n - 1.
    pub korselt_at: Vec<u64>,
    /// Primes p | n with p | n/p - 1.
    pub giuga_at: Vec<u64>,
    pub is_carmichael: bool,
    pub is_giuga: bool,
}

pub fn classify(n: u64, cap: u64) -> Result<CompositeProfile> {
    if n < 2 {
        return Err(Error::PreconditionViolated(format!(
            "classification needs n >= 2, got {n}"
        )));
    }
    let factors = factorize(n, cap)?;
    let composite = factors.len() > 1 || factors[0].1 > 1;
    let squarefree = factors.iter().all(|&(_, e)| e == 1);
    let mut korselt_at = Vec::new();
    let mut giuga_at = Vec::new();
    for &(p, _) in &factors {
        if (n - 1) % (p - 1) == 0 {
            korselt_at.push(p);
        }
        if (n / p).wrapping_sub(1) % p == 0 {
            giuga_at.push(p);
        }
    }
    let all = factors.len();
    Ok(CompositeProfile {
        n,
        composite,
        squarefree,
        is_carmichael: composite && squarefree && korselt_at.len() == all,
        is_giuga: composite && squarefree && giuga_at.len() == all,
        korselt_at,
        giuga_at,
        factors,
    })
}

/// Sum of 1/p over prime divisors minus 1/n. Defined for squarefree n;
/// the value is 1 exactly on the Giuga numbers, which gives a route to
/// `is_giuga` that never looks at n/p - 1.
pub fn giuga_sum(n: u64, cap: u64) -> Result<Rational> {
    let factors = factorize(n, cap)?;
    if factors.iter().any(|&(_, e)| e > 1) {
        return Err(Error::NotSquarefree(n));
    }
    let mut total = rat_int(0);
    for &(p, _) in &factors {
        total += Rational::new(BigInt::from(1), BigInt::from(p));
    }
    total -= Rational::new(BigInt::from(1), BigInt::from(n));
    Ok(total)
}

/// n B_{n-1} mod n, through the exact Bernoulli value. The reduced
/// denominator of n B_{n-1} is coprime to n (each prime of n divides the
/// squarefree Bernoulli denominator at most once), so the residue exists
/// for every n >= 2.
pub fn agoh_residue(table: &BernoulliTable, n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::PreconditionViolated(format!(
            "residue needs n >= 2, got {n}"
        )));
    }
    let b = table.value(n - 1)?;
    let x = b * rat_int(n as i64);
    let nn = BigInt::from(n);
    let num = ((x.numer() % &nn) + &nn) % &nn;
    let den = ((x.denom() % &nn) + &nn) % &nn;
    let num: u64 = num.magnitude().try_into().unwrap();
    let den: u64 = den.magnitude().try_into().unwrap();
    let inv = invmod(den, n).ok_or_else(|| Error::DenominatorNotInvertible {
        denom: x.denom().to_string(),
        prime: n,
        power: 1,
    })?;
    Ok(crate::primes::mulmod(num, inv, n))
}

/// p B_{m} mod p for even m >= 2: p - 1 when p - 1 divides m, else 0.
/// Returns (observed, predicted); the observed side reduces the exact
/// rational.
pub fn denominator_dichotomy(table: &BernoulliTable, m: u64, p: u64) -> Result<(u64, u64)> {
    if m == 0 || m % 2 != 0 {
        return Err(Error::PreconditionViolated(format!(
            "even index m >= 2 required, got {m}"
        )));
    }
    if !is_prime(p) {
        return Err(Error::PreconditionViolated(format!("{p} is not prime")));
    }
    let b = table.value(m)?;
    let x = b * rat_int(p as i64);
    let observed = crate::arith::rational_mod_pk(&x, p, 1)?.value();
    let predicted = if m % (p - 1) == 0 { p - 1 } else { 0 };
    Ok((observed, predicted))
}

/// Sides of the squarefree-composite dichotomy: n B_{n-1} is a nonzero
/// residue mod n exactly when some prime of n satisfies the Korselt
/// divisibility. Returned as indicator bits (observed, predicted).
///
/// The equivalence is a theorem only for odd n. Even squarefree
/// composites refute it wholesale: n - 1 is then odd, so B_{n-1} = 0 and
/// the observed bit is 0, while p = 2 always satisfies p - 1 | n - 1.
/// The smallest counterexample is n = 6.
pub fn korselt_dichotomy(table: &BernoulliTable, n: u64, cap: u64) -> Result<(u64, u64)> {
    let profile = classify(n, cap)?;
    if !profile.composite || !profile.squarefree {
        return Err(Error::PreconditionViolated(format!(
            "squarefree composite required, got {n}"
        )));
    }
    let observed = (agoh_residue(table, n)? != 0) as u64;
    let predicted = (!profile.korselt_at.is_empty()) as u64;
    Ok((observed, predicted))
}

const ENUMERATION_LIMIT: u64 = 2_000_000;

fn sieve_profiles(max: u64) -> Result<Vec<u32>> {
    if max > ENUMERATION_LIMIT {
        return Err(Error::RangeExceeded {
            what: "enumeration bound",
            value: max,
            limit: ENUMERATION_LIMIT,
        });
    }
    Ok(spf_sieve(max as usize))
}

fn squarefree_factors(mut n: u64, spf: &[u32]) -> Option<Vec<u64>> {
    let mut out = Vec::new();
    while n > 1 {
        let p = spf[n as usize] as u64;
        n /= p;
        if n % p == 0 {
            return None;
        }
        out.push(p);
    }
    Some(out)
}

/// Carmichael numbers up to max: squarefree composites with p - 1 | n - 1
/// at every prime.
pub fn enumerate_carmichael(max: u64) -> Result<Vec<u64>> {
    let spf = sieve_profiles(max)?;
    let mut out = Vec::new();
    for n in 4..=max {
        if is_prime(n) {
            continue;
        }
        if let Some(ps) = squarefree_factors(n, &spf) {
            if ps.len() >= 2 && ps.iter().all(|&p| (n - 1) % (p - 1) == 0) {
                out.push(n);
            }
        }
    }
    Ok(out)
}

/// Giuga numbers up to max: squarefree composites with p | n/p - 1 at
/// every prime, cross-checked against the unit fraction sum being 1.
pub fn enumerate_giuga(max: u64) -> Result<Vec<u64>> {
    let spf = sieve_profiles(max)?;
    let mut out = Vec::new();
    for n in 4..=max {
        if is_prime(n) {
            continue;
        }
        if let Some(ps) = squarefree_factors(n, &spf) {
            if ps.len() >= 2 && ps.iter().all(|&p| (n / p - 1) % p == 0) {
                let s = giuga_sum(n, max)?;
                if !s.is_integer() || s.numer().is_zero() || s.numer().is_negative() {
                    return Err(Error::PreconditionViolated(format!(
                        "divisibility and fraction routes disagree at {n}"
                    )));
                }
                out.push(n);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    const CAP: u64 = 1_000_000_000;

    fn table() -> BernoulliTable {
        BernoulliTable::new(400)
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize(561, CAP).unwrap(), vec![(3, 1), (11, 1), (17, 1)]);
        assert_eq!(factorize(600, CAP).unwrap(), vec![(2, 3), (3, 1), (5, 2)]);
        assert_eq!(factorize(97, CAP).unwrap(), vec![(97, 1)]);
        assert_eq!(factorize(1, CAP).unwrap(), vec![]);
        assert!(matches!(
            factorize(CAP + 1, CAP),
            Err(Error::RangeExceeded { .. })
        ));
    }

    #[test]
    fn classification() {
        let c = classify(561, CAP).unwrap();
        assert!(c.is_carmichael && !c.is_giuga && c.squarefree);
        assert_eq!(c.korselt_at, vec![3, 11, 17]);

        let g = classify(30, CAP).unwrap();
        assert!(g.is_giuga && !g.is_carmichael);
        assert_eq!(g.giuga_at, vec![2, 3, 5]);

        let s = classify(12, CAP).unwrap();
        assert!(!s.squarefree && !s.is_carmichael && !s.is_giuga);

        let p = classify(13, CAP).unwrap();
        assert!(!p.composite);
    }

    #[test]
    fn unit_fraction_route() {
        assert_eq!(giuga_sum(30, CAP).unwrap(), rat(1, 1));
        assert_eq!(giuga_sum(858, CAP).unwrap(), rat(1, 1));
        assert_eq!(giuga_sum(561, CAP).unwrap(), rat(90, 187));
        assert!(matches!(giuga_sum(12, CAP), Err(Error::NotSquarefree(12))));
    }

    #[test]
    fn known_lists() {
        assert_eq!(
            enumerate_carmichael(10_000).unwrap(),
            vec![561, 1105, 1729, 2465, 2821, 6601, 8911]
        );
        assert_eq!(enumerate_giuga(2000).unwrap(), vec![30, 858, 1722]);
    }

    #[test]
    fn prime_test_by_bernoulli() {
        let t = table();
        for n in 2..=120u64 {
            let r = agoh_residue(&t, n).unwrap();
            assert_eq!(r == n - 1, is_prime(n), "n = {n}, residue {r}");
        }
        // Frozen spots: 4 B_3 = 0; 9 B_8 = -3/10 = 6 mod 9.
        assert_eq!(agoh_residue(&t, 4).unwrap(), 0);
        assert_eq!(agoh_residue(&t, 9).unwrap(), 6);
    }

    #[test]
    fn dichotomy_routes() {
        let t = table();
        for n in (9..=201u64).step_by(2) {
            for &(p, _) in &factorize(n, CAP).unwrap() {
                let (obs, pred) = denominator_dichotomy(&t, n - 1, p).unwrap();
                assert_eq!(obs, pred, "n = {n}, p = {p}");
            }
        }
        let (obs, pred) = denominator_dichotomy(&t, 8, 3).unwrap();
        assert_eq!((obs, pred), (2, 2));
    }

    #[test]
    fn korselt_vs_residue() {
        let t = table();
        for n in (5..=251u64).step_by(2) {
            let c = classify(n, CAP).unwrap();
            if c.composite && c.squarefree {
                let (obs, pred) = korselt_dichotomy(&t, n, CAP).unwrap();
                assert_eq!(obs, pred, "n = {n}");
            }
        }
    }

    #[test]
    fn korselt_dichotomy_fails_at_even_n() {
        // Pinned counterexample to the unrestricted statement: at n = 6
        // the index 5 is odd so B_5 = 0 and n B_5 = 0 mod 6, yet the
        // prime 2 divides 6 and 2 - 1 divides 6 - 1. Same shape at every
        // even squarefree composite.
        let t = table();
        assert_eq!(korselt_dichotomy(&t, 6, CAP).unwrap(), (0, 1));
        assert_eq!(korselt_dichotomy(&t, 10, CAP).unwrap(), (0, 1));
        assert_eq!(agoh_residue(&t, 6).unwrap(), 0);
    }

    #[test]
    fn korselt_shift_equivalence() {
        // p - 1 | n - 1 and p - 1 | n/p - 1 agree whenever p | n.
        for n in 4..=2000u64 {
            for &(p, _) in &factorize(n, CAP).unwrap() {
                let a = (n - 1) % (p - 1) == 0;
                let b = (n / p).wrapping_sub(1) % (p - 1) == 0;
                assert_eq!(a, b, "n = {n}, p = {p}");
            }
        }
    }
}
