//! q-analogs: Gaussian binomials, q-harmonic sums, and the binomial
//! congruences (Lucas, carry-counting, prime-power refinements) they
//! deform.
//!
//! All congruences here are decided in Q[q] by exact polynomial remainder
//! against a power of the q-integer [p]_q = 1 + q + ... + q^{p-1}. The
//! classical (q = 1) statements at the end of the module work on exact big
//! integers; the q-statements and their classical shadows are verified
//! independently by the claim layer.

use crate::arith::{gen_binomial, binomial_big, rat, valuation_big, RatPoly, Rational};
#[cfg(test)]
use crate::arith::rat_int;
use crate::error::{Error, Result};
use crate::faulhaber::det_bareiss;
use crate::primes::is_prime;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// [k]_q = 1 + q + ... + q^{k-1}.
pub fn q_integer(k: u64) -> RatPoly {
    RatPoly::from_coeffs(vec![Rational::one(); k as usize])
}

/// [p]_q raised to the given power: the modulus all q-congruences reduce
/// against.
pub fn q_modulus(p: u64, power: u32) -> RatPoly {
    let base = q_integer(p);
    let mut acc = RatPoly::one();
    for _ in 0..power {
        acc = &acc * &base;
    }
    acc
}

/// Gaussian binomial coefficient by the q-Pascal recurrence
/// C(n, k)_q = C(n-1, k-1)_q + q^k C(n-1, k)_q.
pub fn q_binomial(n: u64, k: u64) -> RatPoly {
    if k > n {
        return RatPoly::zero();
    }
    let k = k.min(n - k);
    let mut row: Vec<RatPoly> = vec![RatPoly::one()];
    for i in 1..=n {
        let width = (i.min(k) + 1) as usize;
        let mut next = vec![RatPoly::zero(); width];
        next[0] = RatPoly::one();
        for j in 1..width {
            let up = if j < row.len() {
                &row[j] * &RatPoly::monomial(Rational::one(), j)
            } else {
                RatPoly::zero()
            };
            next[j] = &row[j - 1] + &up;
        }
        row = next;
    }
    row[k as usize].clone()
}

fn require_odd_prime(p: u64) -> Result<()> {
    if p < 3 || !is_prime(p) {
        return Err(Error::PreconditionViolated(format!(
            "{p} is not an odd prime"
        )));
    }
    Ok(())
}

/// Generalized q-harmonic sum: q^(j t) / [j]_q^order summed over
/// j = 1..p-1 and reduced mod [p]_q^power. t is 0 for the plain sum and 1
/// for the twisted one. Each [j]_q with j < p is a unit modulo [p]_q.
pub fn q_harmonic(p: u64, order: u32, twisted: bool, power: u32) -> Result<RatPoly> {
    require_odd_prime(p)?;
    let modulus = q_modulus(p, power);
    let mut acc = RatPoly::zero();
    for j in 1..p {
        let inv = q_integer(j).inverse_mod(&modulus)?;
        let mut term = inv.pow_mod(order, &modulus);
        if twisted {
            term = (&term * &RatPoly::monomial(Rational::one(), j as usize)).rem(&modulus);
        }
        acc = (&acc + &term).rem(&modulus);
    }
    Ok(acc.rem(&modulus))
}

/// k x k determinant matrix for the plain q-harmonic closed form,
/// evaluated at an integer argument (the claims use -p). Superdiagonal is
/// the argument itself, entries at or below the diagonal are
/// C(arg + 1, i - j + 2), everything above the superdiagonal is zero.
pub fn harmonic_det_matrix(k: usize, arg: i64) -> Vec<Vec<BigInt>> {
    let a1 = BigInt::from(arg + 1);
    (0..k)
        .map(|r| {
            (0..k)
                .map(|c| {
                    if c == r + 1 {
                        BigInt::from(arg)
                    } else if c <= r {
                        gen_binomial(&a1, (r - c + 2) as i64)
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Twisted variant: every entry with j <= i+1 is C(p, i - j + 2); the
/// superdiagonal entry is then C(p, 1) = p, so no special case is needed.
pub fn twisted_det_matrix(k: usize, p: u64) -> Vec<Vec<BigInt>> {
    let arg = BigInt::from(p);
    (0..k)
        .map(|r| {
            (0..k)
                .map(|c| {
                    if c <= r + 1 {
                        gen_binomial(&arg, r as i64 - c as i64 + 2)
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn harmonic_det(k: usize, arg: i64) -> BigInt {
    det_bareiss(harmonic_det_matrix(k, arg))
}

pub fn twisted_det(k: usize, p: u64) -> BigInt {
    det_bareiss(twisted_det_matrix(k, p))
}

/// Closed form ((-1)^(k-1) / p^k) det(k, -p) (1 - q)^k reduced mod [p]_q,
/// or its twisted counterpart -(1 / p^k) dettw(k, p) (1 - q)^k.
pub fn q_harmonic_closed(p: u64, order: u32, twisted: bool) -> Result<RatPoly> {
    require_odd_prime(p)?;
    let k = order as usize;
    let det = if twisted {
        -twisted_det(k, p)
    } else {
        let d = harmonic_det(k, -(p as i64));
        if order % 2 == 0 {
            -d
        } else {
            d
        }
    };
    let scale = Rational::new(det, BigInt::from(p).pow(order));
    let one_minus_q = RatPoly::from_i64(&[1, -1]);
    let mut acc = RatPoly::constant(scale);
    for _ in 0..order {
        acc = &acc * &one_minus_q;
    }
    Ok(acc.rem(&q_modulus(p, 1)))
}

/// First-order closed forms, one power of [p]_q at a time:
/// mod [p]_q the sum is ((p-1)/2)(1-q); mod [p]_q^2 it gains
/// ((p^2-1)/24)(1-q)^2 [p]_q.
pub fn q_harmonic_formula(p: u64, power: u32) -> Result<RatPoly> {
    require_odd_prime(p)?;
    let one_minus_q = RatPoly::from_i64(&[1, -1]);
    let head = RatPoly::constant(rat((p as i64 - 1) / 2, 1));
    let head = &head * &one_minus_q;
    match power {
        1 => Ok(head.rem(&q_modulus(p, 1))),
        2 => {
            let c = Rational::new(
                BigInt::from(p as i64 * p as i64 - 1),
                BigInt::from(24),
            );
            let tail = &(&(&RatPoly::constant(c) * &one_minus_q) * &one_minus_q)
                * &q_integer(p);
            Ok((&head + &tail).rem(&q_modulus(p, 2)))
        }
        _ => Err(Error::PrecisionUnsupported {
            requested: power,
            max: 2,
        }),
    }
}

/// Second-order closed form mod [p]_q: -((p-1)(p-5)/12)(1-q)^2.
pub fn q_harmonic2_formula(p: u64) -> Result<RatPoly> {
    require_odd_prime(p)?;
    let c = Rational::new(
        BigInt::from(-((p as i64 - 1) * (p as i64 - 5))),
        BigInt::from(12),
    );
    let one_minus_q = RatPoly::from_i64(&[1, -1]);
    let sq = &one_minus_q * &one_minus_q;
    Ok((&RatPoly::constant(c) * &sq).rem(&q_modulus(p, 1)))
}

/// Gaussian binomial compression: both sides of
/// C(np, mp)_q = C(n, m)_{q^(p^2)} mod [p]_q^2.
pub fn q_compression_sides(p: u64, n: u64, m: u64) -> Result<(RatPoly, RatPoly)> {
    require_odd_prime(p)?;
    let modulus = q_modulus(p, 2);
    let lhs = q_binomial(n * p, m * p).rem(&modulus);
    let rhs = q_binomial(n, m).inflate((p * p) as usize).rem(&modulus);
    Ok((lhs, rhs))
}

/// Cube-power refinement: C(np, mp)_q minus the compressed side is
/// -C(n, m+1) C(m+1, 2) ((p^2-1)/12) (q^p - 1)^2 mod [p]_q^3, for p >= 5.
pub fn q_refinement_sides(p: u64, n: u64, m: u64) -> Result<(RatPoly, RatPoly)> {
    if p < 5 {
        return Err(Error::PreconditionViolated(format!(
            "refinement needs p >= 5, got {p}"
        )));
    }
    require_odd_prime(p)?;
    let modulus = q_modulus(p, 3);
    let lhs = q_binomial(n * p, m * p).rem(&modulus);
    let compressed = q_binomial(n, m).inflate((p * p) as usize);
    let outer = BigInt::from(binomial_big(n, m + 1)) * BigInt::from(binomial_big(m + 1, 2));
    let c = Rational::new(
        -outer * BigInt::from(p * p - 1),
        BigInt::from(12),
    );
    let qp_minus_1 = RatPoly::from_coeffs({
        let mut v = vec![Rational::zero(); p as usize + 1];
        v[0] = -Rational::one();
        v[p as usize] = Rational::one();
        v
    });
    let sq = &qp_minus_1 * &qp_minus_1;
    let rhs = (&compressed + &(&RatPoly::constant(c) * &sq)).rem(&modulus);
    Ok((lhs.rem(&modulus), rhs))
}

/// Both sides of C(2p-1, p-1)_q = q^(p(p-1)/2) mod [p]_q^2.
pub fn q_central_sides(p: u64) -> Result<(RatPoly, RatPoly)> {
    require_odd_prime(p)?;
    let modulus = q_modulus(p, 2);
    let lhs = q_binomial(2 * p - 1, p - 1).rem(&modulus);
    let rhs = RatPoly::monomial(Rational::one(), (p * (p - 1) / 2) as usize).rem(&modulus);
    Ok((lhs, rhs))
}

/// Base-p digits, least significant first. Zero gets a single digit.
pub fn base_digits(mut n: u64, p: u64) -> Vec<u64> {
    let mut out = vec![n % p];
    n /= p;
    while n > 0 {
        out.push(n % p);
        n /= p;
    }
    out
}

/// Digit-product route against the direct reduction of C(n, m) mod p.
pub fn digit_binomial_sides(n: u64, m: u64, p: u64) -> Result<(u64, u64)> {
    require_odd_prime(p)?;
    let direct = (binomial_big(n, m) % BigUint::from(p)).try_into().unwrap();
    let nd = base_digits(n, p);
    let md = base_digits(m, p);
    let mut prod: u64 = 1;
    for i in 0..nd.len().max(md.len()) {
        let ni = nd.get(i).copied().unwrap_or(0);
        let mi = md.get(i).copied().unwrap_or(0);
        if mi > ni {
            prod = 0;
            break;
        }
        let f: u64 = (binomial_big(ni, mi) % BigUint::from(p)).try_into().unwrap();
        prod = crate::primes::mulmod(prod, f, p);
    }
    Ok((direct, prod))
}

/// Carries when adding a and b in base p.
pub fn carry_count(a: u64, b: u64, p: u64) -> u32 {
    let ad = base_digits(a, p);
    let bd = base_digits(b, p);
    let mut carry = 0u64;
    let mut total = 0u32;
    for i in 0..ad.len().max(bd.len()) {
        let s = ad.get(i).copied().unwrap_or(0) + bd.get(i).copied().unwrap_or(0) + carry;
        carry = s / p;
        total += carry as u32;
    }
    total
}

/// p-adic valuation of C(n, m) against the carry count of m + (n - m).
pub fn valuation_carry_sides(n: u64, m: u64, p: u64) -> Result<(u32, u32)> {
    if m > n {
        return Err(Error::IndexOutOfRange(format!("m = {m} exceeds n = {n}")));
    }
    require_odd_prime(p)?;
    let v = valuation_big(&BigInt::from(binomial_big(n, m)), p);
    Ok((v, carry_count(m, n - m, p)))
}

/// Scaled-binomial congruence at the sharp modulus: C(np, mp) = C(n, m)
/// mod p^s with s = 3 + v_p(m) + v_p(n-m) + v_p(C(n, m)), for p >= 5 and
/// 0 < m < n. Returns both residues and s.
pub fn scaled_binomial_sides(n: u64, m: u64, p: u64) -> Result<(BigUint, BigUint, u32)> {
    if p < 5 || !is_prime(p) {
        return Err(Error::PreconditionViolated(format!(
            "sharp modulus needs a prime p >= 5, got {p}"
        )));
    }
    if m == 0 || m >= n {
        return Err(Error::IndexOutOfRange(format!(
            "need 0 < m < n, got m = {m}, n = {n}"
        )));
    }
    let c = binomial_big(n, m);
    let s = 3
        + valuation_big(&BigInt::from(m), p)
        + valuation_big(&BigInt::from(n - m), p)
        + valuation_big(&BigInt::from(c.clone()), p);
    let modulus = BigUint::from(p).pow(s);
    let lhs = binomial_big(n * p, m * p) % &modulus;
    let rhs = c % &modulus;
    Ok((lhs, rhs, s))
}
