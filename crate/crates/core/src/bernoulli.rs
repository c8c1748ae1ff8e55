//! Bernoulli numbers, exact and modular.
//!
//! The sign convention throughout is B_1 = +1/2, i.e. the recurrence
//! `sum_{j=0}^{m} C(m+1, j) B_j = m + 1`.
//! With this convention sum_{k=1}^{n} k^m ties to B_m without stray signs,
//! which is what every congruence in the claim registry wants.
//!
//! Exact values come from the recurrence and are capped (they grow fast);
//! residues of B_m and of the p-adically integral products p*B_{k(p-1)}
//! come from power sums:
//!
//! ```text
//! sum_{j=1}^{p-1} j^m  =  p B_m   (mod p^2)   for even m, 2 <= m <= p-3,
//! sum_{j=1}^{p-1} j^{k(p-1)}  =  p B_{k(p-1)}   (mod p^3)   for p >= 5.
//! ```
//!
//! The two sources are independent of each other, so tests can compare them
//! where their ranges overlap.

use crate::arith::{
    binomial_big, padic_of_rational, rat, rat_int, valuation_big, PadicValue, Rational,
};
use crate::error::{Error, Result};
use crate::faulhaber::sum_powers_mod;
use crate::primes::is_prime;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use std::path::Path;
use std::sync::RwLock;

/// Exact Bernoulli values B_0, B_1, ..., grown on demand up to a cap.
#[derive(Debug)]
pub struct BernoulliTable {
    cap: u64,
    values: RwLock<Vec<Rational>>,
}

impl BernoulliTable {
    pub fn new(cap: u64) -> Self {
        BernoulliTable {
            cap,
            values: RwLock::new(vec![Rational::one()]),
        }
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    /// Highest index currently materialized.
    pub fn max_computed(&self) -> u64 {
        self.values.read().unwrap().len() as u64 - 1
    }

    /// Exact B_n. Odd n >= 3 short-circuits to zero without growing the
    /// table; anything else extends the recurrence up to n.
    pub fn value(&self, n: u64) -> Result<Rational> {
        if n > self.cap {
            return Err(Error::CapExceeded {
                what: "exact Bernoulli index",
                value: n,
                cap: self.cap,
            });
        }
        if n >= 3 && n % 2 == 1 {
            return Ok(Rational::zero());
        }
        {
            let v = self.values.read().unwrap();
            if (n as usize) < v.len() {
                return Ok(v[n as usize].clone());
            }
        }
        let mut v = self.values.write().unwrap();
        Self::extend(&mut v, n as usize);
        Ok(v[n as usize].clone())
    }

    fn extend(v: &mut Vec<Rational>, n: usize) {
        while v.len() <= n {
            let m = v.len(); // computing B_m
            let mut acc = Rational::zero();
            // C(m+1, j), built incrementally across the row.
            let mut binom = BigUint::one();
            for j in 0..m {
                if j > 0 {
                    binom = &binom * BigUint::from(m + 1 - (j - 1)) / BigUint::from(j);
                }
                if !(j >= 3 && j % 2 == 1) {
                    acc += Rational::from_integer(BigInt::from(binom.clone())) * &v[j];
                }
            }
            let b = (rat_int(m as i64 + 1) - acc) / rat_int(m as i64 + 1);
            v.push(b);
        }
    }

    /// p-adic valuation of the numerator of B_n (n even, within the cap).
    pub fn numer_valuation(&self, n: u64, p: u64) -> Result<u32> {
        let b = self.value(n)?;
        if b.is_zero() {
            return Err(Error::IndexOutOfRange(format!("B_{n} is zero")));
        }
        Ok(valuation_big(b.numer(), p))
    }

    /// B_n plus the sum of 1/p over primes with (p-1) | n. The claim layer
    /// asserts this is an integer (von Staudt-Clausen). Requires even n.
    pub fn staudt_clausen_defect(&self, n: u64) -> Result<Rational> {
        if n == 0 || n % 2 != 0 {
            return Err(Error::IndexOutOfRange(format!(
                "von Staudt-Clausen applies to even n >= 2, got {n}"
            )));
        }
        let mut acc = self.value(n)?;
        for d in 1..=n {
            if n % d == 0 && is_prime(d + 1) {
                acc += rat(1, (d + 1) as i64);
            }
        }
        Ok(acc)
    }

    /// Product p * B_{k(p-1)} as a p-adic value (a unit, by von
    /// Staudt-Clausen). Exact within the table cap; beyond it the power-sum
    /// congruence supplies the digits, which is why precision stops at 3.
    pub fn padic_pb(&self, k: u64, p: u64, precision: u32) -> Result<PadicValue> {
        if precision == 0 || precision > 3 {
            return Err(Error::PrecisionUnsupported {
                requested: precision,
                max: 3,
            });
        }
        if k == 0 {
            // p * B_0 = p.
            return padic_of_rational(&rat_int(p as i64), p, precision);
        }
        let index = k * (p - 1);
        if index <= self.cap {
            let x = self.value(index)? * rat_int(p as i64);
            return padic_of_rational(&x, p, precision);
        }
        if p < 5 {
            return Err(Error::PreconditionViolated(format!(
                "power-sum route for p*B_{{k(p-1)}} needs p >= 5, got {p}"
            )));
        }
        let s = sum_powers_mod(p, precision, index)?;
        PadicValue::from_unit(0, s)
    }

    /// Both sides of the quadratic convolution identity
    ///     sum_{i=2}^{n-2} b_i b_{n-i}
    ///       = sum_{i=2}^{n-2} C(n,i) b_i b_{n-i} + 2 H_n b_n,
    /// where b_i = B_i / i and H_n is the n-th harmonic number. The two
    /// sides share no code path beyond the table itself.
    pub fn miki_sides(&self, n: u64) -> Result<(Rational, Rational)> {
        if n < 4 {
            return Err(Error::IndexOutOfRange(format!(
                "convolution identity needs n >= 4, got {n}"
            )));
        }
        let b = |i: u64| -> Result<Rational> { Ok(self.value(i)? / rat_int(i as i64)) };
        let mut lhs = Rational::zero();
        let mut rhs = Rational::zero();
        for i in 2..=n - 2 {
            let prod = b(i)? * b(n - i)?;
            lhs += &prod;
            rhs += prod * Rational::from_integer(BigInt::from(binomial_big(n, i)));
        }
        let h = crate::stirling_harmonic::harmonic_exact(n, 1);
        rhs += rat_int(2) * h * b(n)?;
        Ok((lhs, rhs))
    }

    /// (v_p(n), v_p(numerator of B_n)) for even n with (p-1) not dividing n.
    /// The divisibility theorem says the second is at least the first.
    pub fn adams_valuations(&self, n: u64, p: u64) -> Result<(u32, u32)> {
        if n == 0 || n % 2 != 0 {
            return Err(Error::IndexOutOfRange(format!("need even n >= 2, got {n}")));
        }
        if n % (p - 1) == 0 {
            return Err(Error::PreconditionViolated(format!(
                "(p-1) | n: divisibility statement excludes p = {p}, n = {n}"
            )));
        }
        let l = valuation_big(&BigInt::from(n), p);
        let beta = self.numer_valuation(n, p)?;
        Ok((l, beta))
    }

    /// Scan even n <= max_n with p | n and (p-1) not dividing n, recording
    /// how far the numerator valuation sits above v_p(n). Report-only: the
    /// conjectured bound is beta <= l + 1.
    pub fn thangadurai_instances(&self, p: u64, max_n: u64) -> Result<Vec<ValuationInstance>> {
        let mut out = Vec::new();
        for n in (2..=max_n).step_by(2) {
            if n % (p - 1) == 0 || n % p != 0 {
                continue;
            }
            let (l, beta) = self.adams_valuations(n, p)?;
            out.push(ValuationInstance {
                n,
                l,
                beta,
                within_bound: beta <= l + 1,
            });
        }
        Ok(out)
    }

    /// Load exact values from a cache file, replacing the table when the
    /// file knows more. Lines are `<index> <numerator>/<denominator>`,
    /// contiguous from index 0. Entries that overlap already-computed
    /// values must agree.
    pub fn load_cache(&self, path: &Path) -> Result<usize> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::CacheIo(e.to_string()))?;
        let mut parsed: Vec<Rational> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let err = |reason: String| Error::CacheParse {
                line: lineno + 1,
                reason,
            };
            let mut parts = line.split_whitespace();
            let (idx, frac) = match (parts.next(), parts.next(), parts.next()) {
                (Some(i), Some(f), None) => (i, f),
                _ => return Err(err("expected `<index> <num>/<den>`".into())),
            };
            let idx: usize = idx
                .parse()
                .map_err(|_| err(format!("bad index `{idx}`")))?;
            if idx != parsed.len() {
                return Err(err(format!(
                    "index {idx} breaks the contiguous order (expected {})",
                    parsed.len()
                )));
            }
            let (ns, ds) = frac
                .split_once('/')
                .ok_or_else(|| err(format!("`{frac}` is not of the form num/den")))?;
            let n: BigInt = ns.parse().map_err(|_| err(format!("bad numerator `{ns}`")))?;
            let d: BigInt = ds
                .parse()
                .map_err(|_| err(format!("bad denominator `{ds}`")))?;
            if d.is_zero() {
                return Err(err("zero denominator".into()));
            }
            parsed.push(Rational::new(n, d));
        }
        if parsed.is_empty() {
            return Ok(0);
        }
        if parsed[0] != Rational::one()
            || (parsed.len() > 1 && parsed[1] != rat(1, 2))
        {
            return Err(Error::CacheParse {
                line: 1,
                reason: "file does not start with B_0 = 1, B_1 = 1/2".into(),
            });
        }
        let mut v = self.values.write().unwrap();
        for (i, known) in v.iter().enumerate() {
            if i < parsed.len() && &parsed[i] != known {
                return Err(Error::CacheParse {
                    line: i + 1,
                    reason: format!("cached B_{i} disagrees with the recurrence"),
                });
            }
        }
        let loaded = parsed.len();
        if parsed.len() > v.len() {
            *v = parsed;
        }
        Ok(loaded)
    }

    /// Write every materialized value, atomically (temp file + rename).
    pub fn save_cache(&self, path: &Path) -> Result<()> {
        let v = self.values.read().unwrap();
        let mut out = String::new();
        for (i, b) in v.iter().enumerate() {
            out.push_str(&format!("{} {}/{}\n", i, b.numer(), b.denom()));
        }
        drop(v);
        if let Some(parent) = path.parent() {
            if !parent.as_os_str().is_empty() {
                std::fs::create_dir_all(parent).map_err(|e| Error::CacheIo(e.to_string()))?;
            }
        }
        let tmp = path.with_extension("tmp");
        std::fs::write(&tmp, out).map_err(|e| Error::CacheIo(e.to_string()))?;
        std::fs::rename(&tmp, path).map_err(|e| Error::CacheIo(e.to_string()))?;
        Ok(())
    }
}

/// One row of the numerator-valuation scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ValuationInstance {
    pub n: u64,
    /// v_p(n).
    pub l: u32,
    /// v_p of the numerator of B_n.
    pub beta: u32,
    /// beta <= l + 1.
    pub within_bound: bool,
}

/// B_m mod p through the power-sum route, for even m with 2 <= m <= p-3.
/// Independent of the exact recurrence.
pub fn bernoulli_mod_p(m: u64, p: u64) -> Result<u64> {
    if m < 2 || m % 2 != 0 {
        return Err(Error::IndexOutOfRange(format!(
            "need even m >= 2, got {m}"
        )));
    }
    if p < 5 || m > p - 3 {
        return Err(Error::IndexOutOfRange(format!(
            "need 2 <= m <= p-3 with p >= 5, got m = {m}, p = {p}"
        )));
    }
    let s = sum_powers_mod(p, 2, m)?.value();
    if s % p != 0 {
        return Err(Error::PreconditionViolated(format!(
            "power sum not divisible by {p}; m = {m} outside the congruence range"
        )));
    }
    Ok((s / p) % p)
}

/// Even indices m in 2..=p-3 with B_m = 0 mod p.
pub fn irregular_indices(p: u64) -> Result<Vec<u64>> {
    if p < 5 || !is_prime(p) {
        return Err(Error::PreconditionViolated(format!(
            "irregularity scan needs a prime p >= 5, got {p}"
        )));
    }
    let mut out = Vec::new();
    for m in (2..=p - 3).step_by(2) {
        if bernoulli_mod_p(m, p)? == 0 {
            out.push(m);
        }
    }
    Ok(out)
}

pub fn is_regular(p: u64) -> Result<bool> {
    Ok(irregular_indices(p)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational_mod_pk;

    fn table() -> BernoulliTable {
        BernoulliTable::new(400)
    }

    #[test]
    fn small_values() {
        let t = table();
        let expect = [
            (0, rat_int(1)),
            (1, rat(1, 2)),
            (2, rat(1, 6)),
            (3, rat_int(0)),
            (4, rat(-1, 30)),
            (6, rat(1, 42)),
            (8, rat(-1, 30)),
            (10, rat(5, 66)),
            (12, rat(-691, 2730)),
        ];
        for (n, b) in expect {
            assert_eq!(t.value(n).unwrap(), b, "B_{n}");
        }
    }

    #[test]
    fn odd_indices_do_not_grow_the_table() {
        let t = table();
        assert_eq!(t.value(399).unwrap(), Rational::zero());
        assert_eq!(t.max_computed(), 0);
    }

    #[test]
    fn cap_is_enforced() {
        let t = BernoulliTable::new(20);
        assert!(t.value(20).is_ok());
        assert!(matches!(t.value(22), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn modular_route_matches_exact_reduction() {
        let t = table();
        for p in [5u64, 7, 11, 13, 17] {
            for m in (2..=p - 3).step_by(2) {
                let exact = rational_mod_pk(&t.value(m).unwrap(), p, 1).unwrap().value();
                assert_eq!(bernoulli_mod_p(m, p).unwrap(), exact, "m = {m}, p = {p}");
            }
        }
        assert_eq!(bernoulli_mod_p(4, 7).unwrap(), 3);
        assert_eq!(bernoulli_mod_p(32, 37).unwrap(), 0);
    }

    #[test]
    fn modular_route_rejects_bad_indices() {
        assert!(bernoulli_mod_p(3, 11).is_err());
        assert!(bernoulli_mod_p(10, 11).is_err()); // m = p-1 is excluded
        assert!(bernoulli_mod_p(2, 3).is_err());
    }

    #[test]
    fn irregularity() {
        for p in [5u64, 7, 11, 13, 17, 19, 23, 29, 31] {
            assert!(is_regular(p).unwrap(), "p = {p}");
        }
        assert_eq!(irregular_indices(37).unwrap(), vec![32]);
        assert!(irregular_indices(691).unwrap().contains(&12));
    }

    #[test]
    fn padic_pb_exact_route() {
        let t = table();
        // 5 * B_4 = -1/6: a unit with digit expansion 4 + 0*5 + ... mod 5.
        let x = t.padic_pb(1, 5, 1).unwrap();
        assert_eq!(x.valuation(), Some(0));
        assert_eq!(x.unit().unwrap().value(), 4);
        // k = 0: p * B_0 = p.
        let x0 = t.padic_pb(0, 7, 2).unwrap();
        assert_eq!(x0.valuation(), Some(1));
        assert_eq!(x0.unit().unwrap().value(), 1);
        assert!(matches!(
            t.padic_pb(1, 5, 4),
            Err(Error::PrecisionUnsupported { .. })
        ));
    }

    #[test]
    fn padic_pb_routes_agree() {
        // Where the exact table reaches, the power-sum digits must match it
        // to three places.
        let t = table();
        for p in [5u64, 7, 11, 13] {
            for k in 1..=3u64 {
                let exact = t.padic_pb(k, p, 3).unwrap().to_residue(3).unwrap();
                let s = sum_powers_mod(p, 3, k * (p - 1)).unwrap();
                assert_eq!(exact.value(), s.value(), "p = {p}, k = {k}");
            }
        }
    }

    #[test]
    fn padic_pb_modular_route_beyond_cap() {
        let t = BernoulliTable::new(10);
        // Index 1 * (101 - 1) = 100 exceeds the cap, forcing the sum route.
        let x = t.padic_pb(1, 101, 3).unwrap();
        assert_eq!(x.valuation(), Some(0));
        let s = sum_powers_mod(101, 3, 100).unwrap();
        assert_eq!(x.unit().unwrap().value(), s.value());
        // p * B_{p-1} = -1 mod p by von Staudt-Clausen.
        assert_eq!(x.unit().unwrap().value() % 101, 100);
    }

    #[test]
    fn staudt_clausen() {
        let t = table();
        assert_eq!(t.staudt_clausen_defect(12).unwrap(), rat_int(1));
        for n in (2..=60u64).step_by(2) {
            let d = t.staudt_clausen_defect(n).unwrap();
            assert!(d.is_integer(), "n = {n}: defect {d}");
        }
        assert!(t.staudt_clausen_defect(7).is_err());
    }

    #[test]
    fn convolution_identity_sides() {
        let t = table();
        for n in [4u64, 6, 8, 10, 14] {
            let (lhs, rhs) = t.miki_sides(n).unwrap();
            assert_eq!(lhs, rhs, "n = {n}");
        }
        // n = 4 by hand: 1/144 on the left, 6/144 + 2 * 25/12 * (-1/120).
        let (lhs, _) = t.miki_sides(4).unwrap();
        assert_eq!(lhs, rat(1, 144));
    }

    #[test]
    fn numerator_divisibility() {
        let t = table();
        assert_eq!(t.adams_valuations(10, 5).unwrap(), (1, 1));
        assert_eq!(t.adams_valuations(22, 11).unwrap(), (1, 1));
        // (p-1) | n is excluded.
        assert!(t.adams_valuations(20, 5).is_err());
        let scan = t.thangadurai_instances(5, 60).unwrap();
        assert!(!scan.is_empty());
        for inst in &scan {
            assert!(inst.beta >= inst.l, "divisibility floor at n = {}", inst.n);
            assert!(inst.within_bound, "bound violated at n = {}", inst.n);
        }
    }

    #[test]
    fn cache_roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bernoulli.cache");
        let t = table();
        t.value(24).unwrap();
        t.save_cache(&path).unwrap();

        let fresh = BernoulliTable::new(400);
        assert_eq!(fresh.load_cache(&path).unwrap(), 25);
        assert_eq!(fresh.max_computed(), 24);
        assert_eq!(fresh.value(12).unwrap(), rat(-691, 2730));

        // Overlapping disagreement is an error.
        std::fs::write(&path, "0 1/1\n1 1/2\n2 1/7\n").unwrap();
        let t2 = table();
        t2.value(4).unwrap();
        assert!(matches!(
            t2.load_cache(&path),
            Err(Error::CacheParse { .. })
        ));
    }

    #[test]
    fn cache_rejects_malformed_input() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.cache");
        let t = table();
        for bad in [
            "0 1\n",            // missing denominator
            "1 1/2\n",          // does not start at 0
            "0 1/1\n2 1/6\n",   // gap
            "0 1/1\n1 1/0\n",   // zero denominator
            "0 2/1\n",          // wrong B_0
            "0 1/1 extra\n",    // trailing token
        ] {
            std::fs::write(&path, bad).unwrap();
            assert!(
                matches!(t.load_cache(&path), Err(Error::CacheParse { .. })),
                "accepted {bad:?}"
            );
        }
        assert!(matches!(
            t.load_cache(&dir.path().join("missing")),
            Err(Error::CacheIo(_))
        ));
    }
}
