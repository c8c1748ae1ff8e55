//! Claims reconstructing (p-1)! modulo p^2 and p^3, plus the root-lift
//! digit relations feeding them.

use super::{pmod, Claim, Domain, Outcome};
use crate::error::Result;
use crate::primes::invmod;
use crate::wilson::{
    factorial_mod_pk, lemma1_sides, lemma3_sides, root_product_coeffs, wilson_predict,
    WilsonMethod,
};
use crate::Context;

fn predict_vs_factorial(ctx: &Context, p: u64, method: WilsonMethod) -> Result<Outcome> {
    let power = method.power();
    let predicted = wilson_predict(ctx, p, method)?;
    let direct = factorial_mod_pk(p - 1, p, power)?;
    Ok(Outcome::residues(pmod(p, power), predicted.value(), direct))
}

fn eval_theorem1(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    predict_vs_factorial(ctx, p, WilsonMethod::Theorem1)
}

fn eval_theorem2(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    predict_vs_factorial(ctx, p, WilsonMethod::Theorem2)
}

fn eval_glaisher(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    predict_vs_factorial(ctx, p, WilsonMethod::Glaisher)
}

fn eval_lemma4(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    predict_vs_factorial(ctx, p, WilsonMethod::Lemma4)
}

fn eval_theorem6(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    predict_vs_factorial(ctx, p, WilsonMethod::Theorem6)
}

fn eval_corollary6(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    predict_vs_factorial(ctx, p, WilsonMethod::Corollary6)
}

fn eval_sun_eq34(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    predict_vs_factorial(ctx, p, WilsonMethod::SunSeries)
}

fn eval_eq35(_ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let m3 = crate::arith::Residue::new(0, p, 3)?.modulus();
    let lhs = invmod(p - 1, m3).expect("p - 1 is a unit mod p^3");
    let rhs = (m3 - p * p - p - 1) % m3;
    Ok(Outcome::residues(pmod(p, 3), lhs, rhs))
}

fn eval_lemma1(_ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for k in 1..p {
        let (l, r) = lemma1_sides(k, p)?;
        lhs.push(l.to_string());
        rhs.push(r.to_string());
    }
    Ok(Outcome::lists(pmod(p, 2), &lhs, &rhs))
}

fn eval_lemma3(_ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for k in 1..p {
        let (l, r) = lemma3_sides(k, p)?;
        lhs.push(l.to_string());
        rhs.push(r.to_string());
    }
    Ok(Outcome::lists(pmod(p, 1), &lhs, &rhs))
}

fn eval_root_product(_ctx: &Context, p: u64, power: u32) -> Result<Outcome> {
    let coeffs = root_product_coeffs(p, power)?;
    let f = factorial_mod_pk(p - 1, p, power)?;
    let mut target = vec![0u64; p as usize];
    target[0] = f;
    target[p as usize - 1] = 1;
    let fmt = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>();
    Ok(Outcome::lists(pmod(p, power), &fmt(&coeffs), &fmt(&target)))
}

pub fn claims() -> Vec<Claim> {
    vec![
        Claim {
            id: "wilson.theorem1",
            statement: "(p-1)! = -1 + p * sum of Fermat digits d0(k) mod p^2",
            source: "factorial reconstruction, first order",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 500),
            powers: &[2],
            report_only: false,
            lhs_route: "Fermat quotient digit sum",
            rhs_route: "direct factorial product mod p^2",
            eval: eval_theorem1,
        },
        Claim {
            id: "wilson.theorem2",
            statement: "(p-1)! = c_1((p-1)/2) / 2 - p mod p^2",
            source: "trailing Faulhaber coefficient route",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 101),
            powers: &[2],
            report_only: false,
            lhs_route: "determinant-built trailing coefficient",
            rhs_route: "direct factorial product mod p^2",
            eval: eval_theorem2,
        },
        Claim {
            id: "wilson.glaisher",
            statement: "(p-1)! = p B_{p-1} - p mod p^2",
            source: "Glaisher 1900",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 2000),
            powers: &[2],
            report_only: false,
            lhs_route: "p-adic p B_{p-1} shift",
            rhs_route: "direct factorial product mod p^2",
            eval: eval_glaisher,
        },
        Claim {
            id: "wilson.lemma4",
            statement: "(p-1)! from the power sum S = sum k^{p-1} and its square sum, mod p^3",
            source: "symmetric function route",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 500),
            powers: &[3],
            report_only: false,
            lhs_route: "power sum symmetric expression",
            rhs_route: "direct factorial product mod p^3",
            eval: eval_lemma4,
        },
        Claim {
            id: "wilson.theorem6",
            statement: "(p-1)! = -1 + p S0 + p^2 S01 - (p^2/2)(S0^2 + Q0) mod p^3, digits of k^{p-1}",
            source: "factorial reconstruction, second order",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 500),
            powers: &[3],
            report_only: false,
            lhs_route: "two-digit Fermat quotient expansion",
            rhs_route: "direct factorial product mod p^3",
            eval: eval_theorem6,
        },
        Claim {
            id: "wilson.corollary6",
            statement: "(p-1)! = p/2 - 3p^2/2 + (2p+1) p B_{p-1} - p B_{2p-2}/2 - (p B_{p-1})^2/2 mod p^3",
            source: "Glaisher-style Bernoulli route, second order",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 500),
            powers: &[3],
            report_only: false,
            lhs_route: "p-adic Bernoulli pair expression",
            rhs_route: "direct factorial product mod p^3",
            eval: eval_corollary6,
        },
        Claim {
            id: "wilson.sun_eq34",
            statement: "(p-1)! as a series in p B_{k(p-1)} / (p-1), mod p^3",
            source: "Sun 2000",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 500),
            powers: &[3],
            report_only: false,
            lhs_route: "divided Bernoulli series",
            rhs_route: "direct factorial product mod p^3",
            eval: eval_sun_eq34,
        },
        Claim {
            id: "wilson.eq35",
            statement: "(p-1)^{-1} = -p^2 - p - 1 mod p^3",
            source: "geometric expansion of 1/(p-1)",
            domain: Domain::Primes { min: 3 },
            default_range: (5, 2000),
            powers: &[3],
            report_only: false,
            lhs_route: "extended gcd inverse",
            rhs_route: "closed-form polynomial in p",
            eval: eval_eq35,
        },
        Claim {
            id: "wilson.lemma1",
            statement: "p t0(k) = k (1 + (p-1)! + p d0(k)) mod p^2 for every unit k",
            source: "first root digit relation",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 101),
            powers: &[2],
            report_only: false,
            lhs_route: "Newton-lifted root digit",
            rhs_route: "factorial and Fermat digit expression",
            eval: eval_lemma1,
        },
        Claim {
            id: "wilson.lemma3",
            statement: "t1(k) = k (d0 + d1 + E^2 + (1 + d0) E) + k f2 + s mod p, with E the digit sum, f2 the second factorial digit, s the Hensel carry; both corrections are required (k = 1 at p = 5 and p = 11 refute the bare digit-sum form)",
            source: "second root digit relation",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 101),
            powers: &[1],
            report_only: false,
            lhs_route: "Newton-lifted root digit",
            rhs_route: "Fermat digit polynomial with carry corrections",
            eval: eval_lemma3,
        },
        Claim {
            id: "wilson.root_product",
            statement: "product of (X - x_k) over lifted roots = X^{p-1} + (p-1)! mod p^power",
            source: "root set completeness",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 61),
            powers: &[2, 3],
            report_only: false,
            lhs_route: "expanded product of Newton lifts",
            rhs_route: "monomial plus factorial constant",
            eval: eval_root_product,
        },
    ]
}
