//! Claims about Bernoulli numbers: denominator structure, power sum
//! reductions, congruences between indices, and numerator divisibility.

use super::{pmod, Claim, Domain, Outcome};
use crate::arith::{rat_int, rational_mod_pk, Residue};
use crate::error::{Error, Result};
use crate::faulhaber::sum_powers_mod;
use crate::primes::is_prime;
use crate::Context;

/// Denominator of B_n against the product of all primes q with q-1 | n.
fn eval_vsc(ctx: &Context, n: u64, _power: u32) -> Result<Outcome> {
    let b = ctx.bernoulli.value(n)?;
    let mut product = rat_int(1);
    for d in 1..=n {
        if n % d == 0 && is_prime(d + 1) {
            product *= rat_int((d + 1) as i64);
        }
    }
    let defect = ctx.bernoulli.staudt_clausen_defect(n)?;
    Ok(Outcome {
        modulus: "exact".to_string(),
        lhs: b.denom().to_string(),
        rhs: product.numer().to_string(),
        detail: Some(format!("B_{n} plus the unit fractions sums to {defect}")),
    })
}

/// S_{p-1, m} = p B_m mod p^2 for even m up to p-3.
fn eval_eq4(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for m in (2..=p - 3).step_by(2) {
        lhs.push(sum_powers_mod(p, 2, m)?.value().to_string());
        let pb = ctx.bernoulli.value(m)? * rat_int(p as i64);
        rhs.push(rational_mod_pk(&pb, p, 2)?.value().to_string());
    }
    Ok(Outcome::lists(pmod(p, 2), &lhs, &rhs))
}

/// B_n / n = B_b / b mod p for n = k(p-1) + b, even b, p-1 not dividing b.
fn eval_kummer(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let cap = ctx.bernoulli.cap().min(400);
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    let mut pairs = Vec::new();
    for k in 1..=3u64 {
        for b in (2..=p.saturating_sub(3)).step_by(2) {
            let n = k * (p - 1) + b;
            if n > cap {
                continue;
            }
            let divided = |idx: u64| -> Result<String> {
                let v = ctx.bernoulli.value(idx)? / rat_int(idx as i64);
                Ok(rational_mod_pk(&v, p, 1)?.value().to_string())
            };
            lhs.push(divided(n)?);
            rhs.push(divided(b)?);
            pairs.push(format!("({n}, {b})"));
        }
    }
    Ok(Outcome::lists(pmod(p, 1), &lhs, &rhs)
        .with_detail(format!("index pairs: {}", pairs.join(" "))))
}

/// p B_{k(p-1)} = -(k-1)(p-1) + k p B_{p-1} mod p^2 for k >= 1.
fn eval_sun_result6(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let pb1 = ctx.bernoulli.padic_pb(1, p, 2)?.to_residue(2)?;
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for k in 1..=4u64 {
        let observed = ctx.bernoulli.padic_pb(k, p, 2)?.to_residue(2)?;
        let affine = pb1
            .mul(&Residue::new(k as i64, p, 2)?)?
            .sub(&Residue::new(((k - 1) * (p - 1)) as i64, p, 2)?)?;
        lhs.push(observed.value().to_string());
        rhs.push(affine.value().to_string());
    }
    Ok(Outcome::lists(pmod(p, 2), &lhs, &rhs))
}

/// Quotients u_k = (p B_{k(p-1)} + 1) / p mod p satisfy u_2 = 2 u_1 - 1.
/// Equivalently the raw second base-p digits double: y1 = 2 x1 mod p.
fn eval_fact2(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let quotient = |k: u64| -> Result<u64> {
        let v = ctx.bernoulli.padic_pb(k, p, 2)?.to_residue(2)?.value();
        if (v + 1) % p != 0 {
            return Err(Error::PreconditionViolated(format!(
                "p B_{{{k}(p-1)}} is not -1 mod {p}"
            )));
        }
        Ok((v + 1) / p % p)
    };
    let u1 = quotient(1)?;
    let u2 = quotient(2)?;
    let rhs = (2 * u1 % p + p - 1) % p;
    Ok(Outcome::residues(pmod(p, 1), u2, rhs))
}

/// Quadratic convolution of divided Bernoulli numbers, exact in Q.
fn eval_miki(ctx: &Context, n: u64, _power: u32) -> Result<Outcome> {
    let (lhs, rhs) = ctx.bernoulli.miki_sides(n)?;
    Ok(Outcome {
        modulus: "exact".to_string(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        detail: None,
    })
}

/// p^l | n with p-1 not dividing n forces p^l | numerator(B_n). Encoded
/// as per-instance pass bits so both sides stay comparable strings.
fn eval_adams(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let cap = ctx.bernoulli.cap().min(400);
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    let mut instances = Vec::new();
    let mut n = 2 * p; // even multiples of the odd prime p
    while n <= cap {
        if n % (p - 1) != 0 {
            let (l, v) = ctx.bernoulli.adams_valuations(n, p)?;
            lhs.push(u64::from(v >= l).to_string());
            rhs.push("1".to_string());
            instances.push(format!("(n={n}, l={l}, v={v})"));
        }
        n += 2 * p;
    }
    Ok(Outcome::lists("valuation".to_string(), &lhs, &rhs)
        .with_detail(instances.join(" ")))
}

/// Numerator valuation stays within one of the index valuation. Scans the
/// same indices as the divisibility claim; advisory only.
fn eval_thangadurai(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let cap = ctx.bernoulli.cap().min(400);
    let instances = ctx.bernoulli.thangadurai_instances(p, cap)?;
    let lhs: Vec<String> = instances
        .iter()
        .map(|i| u64::from(i.within_bound).to_string())
        .collect();
    let rhs: Vec<String> = instances.iter().map(|_| "1".to_string()).collect();
    let detail = instances
        .iter()
        .map(|i| format!("(n={}, l={}, beta={})", i.n, i.l, i.beta))
        .collect::<Vec<_>>()
        .join(" ");
    Ok(Outcome::lists("valuation".to_string(), &lhs, &rhs).with_detail(detail))
}

pub fn claims() -> Vec<Claim> {
    vec![
        Claim {
            id: "bernoulli.vsc",
            statement: "denominator of B_n is the product of primes q with q-1 | n",
            source: "von Staudt, Clausen 1840",
            domain: Domain::EvenIntegers { min: 2 },
            default_range: (2, 400),
            powers: &[1],
            report_only: false,
            lhs_route: "recurrence value, reduced denominator",
            rhs_route: "divisor scan over prime shifts",
            eval: eval_vsc,
        },
        Claim {
            id: "bernoulli.eq4",
            statement: "sum of k^m over k < p equals p B_m mod p^2, even m <= p-3",
            source: "power sum reduction",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 200),
            powers: &[2],
            report_only: false,
            lhs_route: "modular power sum",
            rhs_route: "exact Bernoulli, reduced",
            eval: eval_eq4,
        },
        Claim {
            id: "bernoulli.kummer",
            statement: "B_n / n = B_b / b mod p when n = b mod p-1 and p-1 does not divide b",
            source: "Kummer 1851",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 200),
            powers: &[1],
            report_only: false,
            lhs_route: "shifted index, exact value reduced",
            rhs_route: "base index, exact value reduced",
            eval: eval_kummer,
        },
        Claim {
            id: "bernoulli.sun_result6",
            statement: "p B_{k(p-1)} = -(k-1)(p-1) + k p B_{p-1} mod p^2, k >= 1",
            source: "Sun 2000",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 200),
            powers: &[2],
            report_only: false,
            lhs_route: "p-adic value at index k(p-1)",
            rhs_route: "affine shift of the k = 1 value",
            eval: eval_sun_result6,
        },
        Claim {
            id: "bernoulli.fact2",
            statement: "(p B_{2(p-1)} + 1)/p = 2 (p B_{p-1} + 1)/p - 1 mod p",
            source: "digit relation of adjacent indices",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 200),
            powers: &[1],
            report_only: false,
            lhs_route: "quotient at index 2(p-1)",
            rhs_route: "quotient arithmetic at index p-1",
            eval: eval_fact2,
        },
        Claim {
            id: "bernoulli.miki",
            statement: "sum b_i b_{n-i} = sum C(n,i) b_i b_{n-i} + 2 H_n b_n, b_i = B_i / i",
            source: "Miki 1978",
            domain: Domain::EvenIntegers { min: 4 },
            default_range: (4, 50),
            powers: &[1],
            report_only: false,
            lhs_route: "plain convolution",
            rhs_route: "binomial convolution plus harmonic term",
            eval: eval_miki,
        },
        Claim {
            id: "bernoulli.adams",
            statement: "p^l | n and p-1 not dividing n imply p^l divides the numerator of B_n",
            source: "Adams 1878",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 50),
            powers: &[1],
            report_only: false,
            lhs_route: "numerator valuation check",
            rhs_route: "constant pass bit",
            eval: eval_adams,
        },
        Claim {
            id: "bernoulli.thangadurai",
            statement: "numerator valuation beta of B_n stays at most l + 1 when p^l || n",
            source: "reported bound, advisory",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 30),
            powers: &[1],
            report_only: true,
            lhs_route: "observed valuation bound bit",
            rhs_route: "constant pass bit",
            eval: eval_thangadurai,
        },
    ]
}
