//! Claims over polynomial rings: q-analog harmonic sums and Gaussian
//! binomial coefficients modulo powers of the q-integer [p]_q, plus the
//! base-p digit and carry laws they specialize to at q = 1.

use super::{qmod, Claim, Domain, Outcome};
use crate::error::Result;
use crate::qanalog::{
    digit_binomial_sides, q_central_sides, q_compression_sides, q_harmonic,
    q_harmonic2_formula, q_harmonic_closed, q_harmonic_formula, q_refinement_sides,
    scaled_binomial_sides, valuation_carry_sides,
};
use crate::Context;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Deterministic per-claim, per-point RNG: same samples on every run and
/// at every parallelism level.
fn seeded(id: &str, p: u64) -> StdRng {
    let mut seed = [0u8; 32];
    for (i, b) in id.bytes().enumerate() {
        seed[i % 24] ^= b;
    }
    seed[24..32].copy_from_slice(&p.to_le_bytes());
    StdRng::from_seed(seed)
}

/// First-order q-harmonic sum equals ((p-1)/2)(1-q) mod [p]_q.
fn eval_andrews(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let _ = ctx;
    Ok(Outcome {
        modulus: qmod(p, 1),
        lhs: q_harmonic(p, 1, false, 1)?.to_string(),
        rhs: q_harmonic_formula(p, 1)?.to_string(),
        detail: None,
    })
}

/// Second-power refinement of the first-order sum mod [p]_q^2 together
/// with the second-order sum mod [p]_q.
fn eval_shipan(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let _ = ctx;
    let lhs = [
        q_harmonic(p, 1, false, 2)?.to_string(),
        q_harmonic(p, 2, false, 1)?.to_string(),
    ];
    let rhs = [
        q_harmonic_formula(p, 2)?.to_string(),
        q_harmonic2_formula(p)?.to_string(),
    ];
    Ok(Outcome::lists(qmod(p, 2), &lhs, &rhs))
}

/// Determinant closed forms for plain and twisted q-harmonic sums of
/// order k <= 4 mod [p]_q.
fn eval_dilcher(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let _ = ctx;
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for order in 1..=4u32 {
        for twisted in [false, true] {
            lhs.push(q_harmonic(p, order, twisted, 1)?.to_string());
            rhs.push(q_harmonic_closed(p, order, twisted)?.to_string());
        }
    }
    Ok(Outcome::lists(qmod(p, 1), &lhs, &rhs))
}

const COMPRESSION_PAIRS: [(u64, u64); 4] = [(2, 1), (3, 1), (3, 2), (4, 2)];
const REFINEMENT_PAIRS: [(u64, u64); 3] = [(2, 1), (3, 1), (3, 2)];

/// C(np, mp)_q = C(n, m)_{q^(p^2)} mod [p]_q^2 on small index pairs.
fn eval_clark(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let _ = ctx;
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for (n, m) in COMPRESSION_PAIRS {
        let (l, r) = q_compression_sides(p, n, m)?;
        lhs.push(l.to_string());
        rhs.push(r.to_string());
    }
    Ok(Outcome::lists(qmod(p, 2), &lhs, &rhs))
}

/// Cube-power correction term ((p^2-1)/12)(q^p-1)^2 for the compression,
/// p >= 5, on small index pairs.
fn eval_straub(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let _ = ctx;
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for (n, m) in REFINEMENT_PAIRS {
        let (l, r) = q_refinement_sides(p, n, m)?;
        lhs.push(l.to_string());
        rhs.push(r.to_string());
    }
    Ok(Outcome::lists(qmod(p, 3), &lhs, &rhs))
}

/// C(2p-1, p-1)_q = q^(p(p-1)/2) mod [p]_q^2.
fn eval_andrews_binomial(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let _ = ctx;
    let (l, r) = q_central_sides(p)?;
    Ok(Outcome {
        modulus: qmod(p, 2),
        lhs: l.to_string(),
        rhs: r.to_string(),
        detail: None,
    })
}

/// Randomized digit law: C(n, m) mod p equals the product of base-p digit
/// binomials, on seeded samples with n below min(p^3, 2000).
fn eval_lucas(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let _ = ctx;
    let mut rng = seeded("q.lucas", p);
    let top = 2000.min(p.saturating_mul(p).saturating_mul(p));
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for _ in 0..12 {
        let n = rng.gen_range(0..=top);
        let m = rng.gen_range(0..=n);
        let (l, r) = digit_binomial_sides(n, m, p)?;
        lhs.push(l.to_string());
        rhs.push(r.to_string());
    }
    Ok(Outcome::lists(qmod(p, 1), &lhs, &rhs))
}

/// Randomized carry law: v_p(C(n, m)) equals the number of carries when
/// adding m and n-m in base p, on seeded samples.
fn eval_kummer_carry(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let _ = ctx;
    let mut rng = seeded("q.kummer_carry", p);
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for _ in 0..12 {
        let n = rng.gen_range(0..=2000u64);
        let m = rng.gen_range(0..=n);
        let (v, carries) = valuation_carry_sides(n, m, p)?;
        lhs.push(v.to_string());
        rhs.push(carries.to_string());
    }
    Ok(Outcome::lists("valuation".to_string(), &lhs, &rhs))
}

/// Sharp lifted congruence C(np, mp) = C(n, m) mod p^s with
/// s = 3 + v_p(m) + v_p(n-m) + v_p(C(n, m)), for p >= 5 and 0 < m < n.
fn eval_helou_terjanian(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let _ = ctx;
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    let mut exponents = Vec::new();
    for n in 2..=6u64 {
        for m in 1..n {
            let (l, r, s) = scaled_binomial_sides(n, m, p)?;
            lhs.push(l.to_string());
            rhs.push(r.to_string());
            exponents.push(s.to_string());
        }
    }
    Ok(
        Outcome::lists("p^s per pair".to_string(), &lhs, &rhs)
            .with_detail(format!("s = [{}]", exponents.join(", "))),
    )
}

pub fn claims() -> Vec<Claim> {
    vec![
        Claim {
            id: "q.andrews",
            statement: "sum of 1/[j]_q = ((p-1)/2)(1-q) mod [p]_q",
            source: "Andrews 1999",
            domain: Domain::Primes { min: 3 },
            default_range: (3, 29),
            powers: &[1],
            report_only: false,
            lhs_route: "termwise polynomial inverses",
            rhs_route: "linear closed form",
            eval: eval_andrews,
        },
        Claim {
            id: "q.shipan",
            statement: "first-order q-harmonic sum mod [p]_q^2 and second-order sum mod [p]_q",
            source: "Shi-Pan 2007",
            domain: Domain::Primes { min: 3 },
            default_range: (3, 19),
            powers: &[2],
            report_only: false,
            lhs_route: "termwise polynomial inverses",
            rhs_route: "quadratic closed forms",
            eval: eval_shipan,
        },
        Claim {
            id: "q.dilcher",
            statement: "plain and twisted q-harmonic sums of order k <= 4 equal scaled binomial determinants times (1-q)^k mod [p]_q",
            source: "Dilcher 2004",
            domain: Domain::Primes { min: 3 },
            default_range: (3, 13),
            powers: &[1],
            report_only: false,
            lhs_route: "termwise polynomial inverses",
            rhs_route: "fraction-free determinant evaluation",
            eval: eval_dilcher,
        },
        Claim {
            id: "q.clark",
            statement: "C(np, mp)_q = C(n, m)_{q^(p^2)} mod [p]_q^2",
            source: "Clark 1995",
            domain: Domain::Primes { min: 3 },
            default_range: (3, 13),
            powers: &[2],
            report_only: false,
            lhs_route: "full Gaussian binomial, reduced",
            rhs_route: "inflated small binomial",
            eval: eval_clark,
        },
        Claim {
            id: "q.straub",
            statement: "C(np, mp)_q = C(n, m)_{q^(p^2)} - C(n, m+1) C(m+1, 2) ((p^2-1)/12)(q^p-1)^2 mod [p]_q^3",
            source: "Straub 2011",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 13),
            powers: &[3],
            report_only: false,
            lhs_route: "full Gaussian binomial, reduced",
            rhs_route: "inflated binomial plus quadratic correction",
            eval: eval_straub,
        },
        Claim {
            id: "q.andrews_binomial",
            statement: "C(2p-1, p-1)_q = q^(p(p-1)/2) mod [p]_q^2",
            source: "Andrews 1999",
            domain: Domain::Primes { min: 3 },
            default_range: (3, 13),
            powers: &[2],
            report_only: false,
            lhs_route: "full Gaussian binomial, reduced",
            rhs_route: "single monomial",
            eval: eval_andrews_binomial,
        },
        Claim {
            id: "q.lucas",
            statement: "C(n, m) mod p equals the product of base-p digit binomials",
            source: "Lucas 1878",
            domain: Domain::Primes { min: 3 },
            default_range: (3, 200),
            powers: &[1],
            report_only: false,
            lhs_route: "exact binomial, reduced",
            rhs_route: "digitwise product",
            eval: eval_lucas,
        },
        Claim {
            id: "q.kummer_carry",
            statement: "v_p(C(n, m)) equals the number of base-p carries in m + (n-m)",
            source: "Kummer 1852",
            domain: Domain::Primes { min: 3 },
            default_range: (3, 200),
            powers: &[1],
            report_only: false,
            lhs_route: "exact binomial valuation",
            rhs_route: "carry count",
            eval: eval_kummer_carry,
        },
        Claim {
            id: "q.helou_terjanian",
            statement: "C(np, mp) = C(n, m) mod p^s with s = 3 + v_p(m) + v_p(n-m) + v_p(C(n, m)), p >= 5, 0 < m < n",
            source: "Helou-Terjanian 2008",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 13),
            powers: &[3],
            report_only: false,
            lhs_route: "lifted binomial, reduced at the sharp power",
            rhs_route: "small binomial, reduced at the sharp power",
            eval: eval_helou_terjanian,
        },
    ]
}
