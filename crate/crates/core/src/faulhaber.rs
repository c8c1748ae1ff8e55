//! Power sums and their closed-form coefficient layers.
//!
//! Three independent ways to get at sums of fixed powers live here:
//!
//! 1. `sum_powers_exact` - the brute-force big-integer sum. It is the oracle
//!    everything else in this module is tested against, so it stays free of
//!    any closed form.
//! 2. `sum_powers_mod` - the O(p log m) modular route used by sweeps.
//! 3. The coefficient layer: for odd exponents 2l+1 the sum over 1..n is a
//!    polynomial in the triangular number a = n(n+1)/2 with zero constant
//!    and linear part,
//!        sum_{k<=n} k^{2l+1} = c_1 a^2 + c_2 a^3 + ... + c_l a^{l+1},
//!    and the c_i come from a determinant evaluation: with u = 2a,
//!        sum = (A_0 u^{l+1} + A_1 u^l + ... + A_l u) / (2l + 2),
//!    where A_j = A_j^{(l+1)} is a ratio of a banded binomial determinant by
//!    a falling-factorial prefactor. The linear term vanishes exactly
//!    because A_l^{(l+1)} = 0, which is itself one of the verified claims.
//!
//! The lower-triangular solver (`derby_coefficients`) recovers the
//! coefficients of sum_{k<p} k^p expanded in powers of (p-1) from nothing
//! but Pascal's triangle, giving yet another route that shares no code with
//! the determinant layer.

use crate::arith::{
    binomial_big, gen_binomial, rat_int, rational_mod_pk, Rational, RatPoly, Residue,
};
use crate::error::{Error, Result};
use crate::primes::powmod;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// sum_{k=1}^{n} k^m, exactly.
pub fn sum_powers_exact(n: u64, m: u32) -> BigUint {
    let mut acc = BigUint::zero();
    for k in 1..=n {
        acc += BigUint::from(k).pow(m);
    }
    acc
}

/// sum_{j=1}^{p-1} j^m mod p^power.
pub fn sum_powers_mod(p: u64, power: u32, m: u64) -> Result<Residue> {
    let modulus = Residue::new(0, p, power)?.modulus();
    let mut total: u64 = 0;
    for j in 1..p {
        total = (total + powmod(j, m, modulus)) % modulus;
    }
    Residue::new(total as i64, p, power)
}

/// Integer determinant by fraction-free (Bareiss) elimination.
pub fn det_bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for r in 0..n {
        if m[r][r].is_zero() {
            match (r + 1..n).find(|&i| !m[i][r].is_zero()) {
                Some(i) => {
                    m.swap(r, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in r + 1..n {
            for j in r + 1..n {
                let num = &m[r][r] * &m[i][j] - &m[i][r] * &m[r][j];
                // Bareiss guarantees exact divisibility by the previous pivot.
                m[i][j] = num / &prev;
            }
            m[i][r] = BigInt::zero();
        }
        prev = m[r][r].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// The determinant coefficient A_k^(m): a k x k banded binomial determinant
/// divided by (1-m)(2-m)...(k-m). Entry (i, j), 1-indexed, is
/// C(m-k+i, 2(i-j)+3), with C(a, b) = 0 for b < 0 and the generalized
/// falling-factorial binomial for any integer upper argument. A_0 = 1.
pub fn gessel_viennot_a(k: u64, m: i64) -> Rational {
    if k == 0 {
        return Rational::one();
    }
    let k_us = k as usize;
    let mut mat = vec![vec![BigInt::zero(); k_us]; k_us];
    for i in 1..=k_us {
        for j in 1..=k_us {
            let upper = BigInt::from(m - k as i64 + i as i64);
            let lower = 2 * (i as i64 - j as i64) + 3;
            mat[i - 1][j - 1] = gen_binomial(&upper, lower);
        }
    }
    let det = det_bareiss(mat);
    let mut denom = BigInt::one();
    for i in 1..=k as i64 {
        denom *= BigInt::from(i - m);
    }
    Rational::new(det, denom)
}

/// Coefficient c_i(l) of a^{i+1} in the expansion of sum k^{2l+1} in the
/// triangular number a, for 1 <= i <= l.
pub fn faulhaber_coeff(i: u64, l: u64) -> Result<Rational> {
    if i < 1 || i > l {
        return Err(Error::IndexOutOfRange(format!(
            "coefficient index {i} outside 1..={l}"
        )));
    }
    let a = gessel_viennot_a(l - i, l as i64 + 1);
    Ok(a * Rational::new(BigInt::from(2).pow(i as u32 + 1), BigInt::from(2 * l + 2)))
}

/// The full coefficient vector c_1(l)..c_l(l) for the odd power 2l+1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaulhaberExpansion {
    l: u64,
    coeffs: Vec<Rational>,
}

impl FaulhaberExpansion {
    pub fn new(l: u64) -> Result<Self> {
        if l == 0 {
            return Err(Error::IndexOutOfRange("l must be >= 1".into()));
        }
        let coeffs = (1..=l).map(|i| faulhaber_coeff(i, l)).collect::<Result<_>>()?;
        Ok(FaulhaberExpansion { l, coeffs })
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    /// c_i(l), 1-indexed.
    pub fn coeff(&self, i: u64) -> &Rational {
        &self.coeffs[(i - 1) as usize]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Evaluate sum_{k<=n} k^{2l+1} through the expansion at a = n(n+1)/2.
    pub fn eval(&self, n: u64) -> Rational {
        let a = Rational::new(BigInt::from(n) * BigInt::from(n + 1), BigInt::from(2));
        let mut acc = Rational::zero();
        let mut apow = &a * &a;
        for c in &self.coeffs {
            acc += c * &apow;
            apow *= &a;
        }
        acc
    }

    /// The polynomial in a, with zero constant and linear coefficients made
    /// explicit: [0, 0, c_1, ..., c_l].
    pub fn as_poly(&self) -> RatPoly {
        let mut v = vec![Rational::zero(), Rational::zero()];
        v.extend(self.coeffs.iter().cloned());
        RatPoly::from_coeffs(v)
    }
}

/// Evaluate the u-form directly: (1/(2l+2)) sum_j A_j^{(l+1)} u^{l+1-j} at
/// u = n(n+1). Equal to `sum_powers_exact(n, 2l+1)`; the equality is one of
/// the registered claims.
pub fn jacobi_eval(l: u64, n: u64) -> Rational {
    let u = rat_int((n * (n + 1)) as i64);
    let mut acc = Rational::zero();
    for j in 0..=l {
        let a = gessel_viennot_a(j, l as i64 + 1);
        let mut upow = Rational::one();
        for _ in 0..(l + 1 - j) {
            upow *= &u;
        }
        acc += a * upow;
    }
    acc / rat_int((2 * l + 2) as i64)
}

/// Coefficients d_1..d_{p+1} with sum_{k=1}^{p-1} k^p = sum_i d_i (p-1)^i,
/// obtained by back-substitution in the lower-triangular Pascal system
/// `sum_{i >= j} d_i C(i, j-1) = C(p, j-1)` for j = 1..p+1.
/// No Bernoulli numbers and no determinants are involved; the claim layer
/// checks the output against both.
pub fn derby_coefficients(p: u64, cap: u64) -> Result<Vec<Rational>> {
    if p > cap {
        return Err(Error::CapExceeded {
            what: "power-sum coefficient solver",
            value: p,
            cap,
        });
    }
    if p < 2 {
        return Err(Error::IndexOutOfRange("p must be >= 2".into()));
    }
    let n = (p + 1) as usize;
    let mut d = vec![Rational::zero(); n + 1]; // 1-indexed
    for j in (1..=n).rev() {
        // rhs_j = C(p, j-1) minus the contributions of already-solved d_i.
        let mut rhs = Rational::from_integer(BigInt::from(binomial_big(p, j as u64 - 1)));
        for i in j + 1..=n {
            let c = BigInt::from(binomial_big(i as u64, j as u64 - 1));
            rhs -= &d[i] * Rational::from_integer(c);
        }
        // Diagonal entry C(j, j-1) = j.
        d[j] = rhs / rat_int(j as i64);
    }
    Ok(d[1..].to_vec())
}

/// sum_{k=1}^{p-1} k^p evaluated through the solved coefficients.
pub fn derby_eval(p: u64, d: &[Rational]) -> Rational {
    let base = rat_int(p as i64 - 1);
    let mut acc = Rational::zero();
    let mut pw = Rational::one();
    for di in d {
        pw *= &base;
        acc += di * &pw;
    }
    acc
}

/// c_1(l) for l = (p-1)/2 reduced mod p^2 through the determinant layer;
/// used by the factorial predictions for small p where the determinant is
/// tractable.
pub fn c1_mod_p2(p: u64) -> Result<Residue> {
    let l = (p - 1) / 2;
    let c1 = faulhaber_coeff(1, l)?;
    rational_mod_pk(&c1, p, 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn exact_power_sums() {
        assert_eq!(sum_powers_exact(4, 3), BigUint::from(100u32));
        assert_eq!(sum_powers_exact(4, 5), BigUint::from(1300u32));
        assert_eq!(sum_powers_exact(0, 9), BigUint::zero());
        assert_eq!(sum_powers_exact(7, 0), BigUint::from(7u32));
    }

    #[test]
    fn modular_power_sums_match_exact() {
        for (p, power, m) in [(5u64, 2u32, 4u64), (7, 1, 6), (13, 3, 7), (11, 2, 20)] {
            let exact = sum_powers_exact(p - 1, m as u32);
            let modulus = BigUint::from(p).pow(power);
            let expect = (&exact % &modulus).to_string().parse::<u64>().unwrap();
            assert_eq!(sum_powers_mod(p, power, m).unwrap().value(), expect);
        }
        assert_eq!(sum_powers_mod(5, 2, 4).unwrap().value(), 4);
        assert_eq!(sum_powers_mod(7, 1, 6).unwrap().value(), 6);
    }

    #[test]
    fn determinant_coefficients() {
        assert_eq!(gessel_viennot_a(0, 9), Rational::one());
        assert_eq!(gessel_viennot_a(1, 3), rat(-1, 2));
        // A_{m-2}^{(m)} = C(2m, 2) B_{2m-2}: m = 3 gives 15 * (-1/30),
        // m = 4 gives 28 * B_6 = 28/42.
        assert_eq!(gessel_viennot_a(1, 3), rat(15, 1) * rat(-1, 30));
        assert_eq!(gessel_viennot_a(2, 4), rat(28, 1) * rat(1, 42));
    }

    #[test]
    fn upper_coefficient_vanishes() {
        for l in 1..=12u64 {
            assert!(gessel_viennot_a(l, l as i64 + 1).is_zero(), "l = {l}");
        }
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(faulhaber_coeff(1, 2).unwrap(), rat(-1, 3));
        assert_eq!(faulhaber_coeff(2, 2).unwrap(), rat(4, 3));
        assert!(faulhaber_coeff(3, 2).is_err());
        assert!(faulhaber_coeff(0, 2).is_err());
    }

    #[test]
    fn expansion_reproduces_sums() {
        for l in 1..=6u64 {
            let e = FaulhaberExpansion::new(l).unwrap();
            for n in 0..=10u64 {
                let direct = sum_powers_exact(n, 2 * l as u32 + 1);
                assert_eq!(
                    e.eval(n),
                    Rational::from_integer(BigInt::from(direct)),
                    "l = {l}, n = {n}"
                );
            }
        }
    }

    #[test]
    fn trailing_pair_relation() {
        // c_2 = -4 c_1 for every l >= 2.
        for l in 2..=8u64 {
            let e = FaulhaberExpansion::new(l).unwrap();
            assert_eq!(e.coeff(2) * rat_int(1), e.coeff(1) * rat_int(-4), "l = {l}");
        }
    }

    #[test]
    fn jacobi_form_matches_oracle() {
        for l in 1..=6u64 {
            for n in 1..=10u64 {
                let v = jacobi_eval(l, n);
                assert_eq!(
                    v,
                    Rational::from_integer(BigInt::from(sum_powers_exact(n, 2 * l as u32 + 1)))
                );
            }
        }
    }

    #[test]
    fn triangular_solver() {
        // p = 3: d = (0, 1/4, 1/2, 1/4); sum over (p-1) = 2 gives 1 + 8 = 9.
        let d = derby_coefficients(3, 101).unwrap();
        assert_eq!(d, vec![rat_int(0), rat(1, 4), rat(1, 2), rat(1, 4)]);
        assert_eq!(derby_eval(3, &d), rat_int(9));
        // d_2 = (p/2) B_{p-1}: p = 5 gives (5/2)(-1/30) = -1/12.
        let d5 = derby_coefficients(5, 101).unwrap();
        assert_eq!(d5[1], rat(-1, 12));
        assert_eq!(
            derby_eval(5, &d5),
            Rational::from_integer(BigInt::from(sum_powers_exact(4, 5)))
        );
        assert!(matches!(
            derby_coefficients(103, 101),
            Err(Error::CapExceeded { .. })
        ));
    }
}
