//! Claims about odd power sums in triangular-number form: determinant
//! coefficients, their vanishing and trailing structure, and the
//! back-substitution route.

use super::{pmod, Claim, Domain, Outcome};
use crate::arith::{rat_int, rational_mod_pk, Rational, Residue};
use crate::error::Result;
use crate::faulhaber::{
    c1_mod_p2, derby_coefficients, derby_eval, faulhaber_coeff, gessel_viennot_a, jacobi_eval,
    sum_powers_exact, sum_powers_mod, FaulhaberExpansion,
};
use crate::Context;
use num_bigint::BigInt;

/// Determinant-built expansion of sum k^(2l+1) reproduces the brute-force
/// values at small arguments. The point is the exponent parameter l.
fn eval_jacobi(_ctx: &Context, l: u64, _power: u32) -> Result<Outcome> {
    let expansion = FaulhaberExpansion::new(l)?;
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for n in 1..=10u64 {
        lhs.push(expansion.eval(n).to_string());
        rhs.push(sum_powers_exact(n, (2 * l + 1) as u32).to_string());
        // The u-substitution route must agree as well; fold it into the
        // left side by checking it against the expansion first.
        let jac = jacobi_eval(l, n);
        if jac != expansion.eval(n) {
            lhs.push(format!("u-route {jac}"));
            rhs.push("agreement with the a-route".to_string());
        }
    }
    Ok(Outcome::lists("exact".to_string(), &lhs, &rhs))
}

/// The determinant coefficient A_l^{(l+1)} vanishes identically.
fn eval_eq52(_ctx: &Context, l: u64, _power: u32) -> Result<Outcome> {
    let a = gessel_viennot_a(l, (l + 1) as i64);
    Ok(Outcome {
        modulus: "exact".to_string(),
        lhs: a.to_string(),
        rhs: "0".to_string(),
        detail: None,
    })
}

/// Second coefficient is -4 times the first.
fn eval_trailing(_ctx: &Context, l: u64, _power: u32) -> Result<Outcome> {
    let e = FaulhaberExpansion::new(l)?;
    let lhs = e.coeff(2).clone();
    let rhs = e.coeff(1) * &rat_int(-4);
    Ok(Outcome {
        modulus: "exact".to_string(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        detail: None,
    })
}

/// Trailing coefficient at l = (p-1)/2 equals 2 p B_{p-1} mod p^2.
fn eval_eq53(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let lhs = c1_mod_p2(p)?;
    let rhs = ctx
        .bernoulli
        .padic_pb(1, p, 2)?
        .to_residue(2)?
        .mul(&Residue::new(2, p, 2)?)?;
    Ok(Outcome::residues(pmod(p, 2), lhs.value(), rhs.value()))
}

/// Even power sums from the odd layer's trailing coefficient:
/// S_{2l} = p c_1(l) / (2(2l+1)) mod p^2 for l up to (p-3)/2.
fn eval_eq10(_ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for l in 1..=(p - 3) / 2 {
        lhs.push(sum_powers_mod(p, 2, 2 * l)?.value().to_string());
        let c1 = faulhaber_coeff(1, l)?;
        let scaled = c1 * Rational::new(BigInt::from(p), BigInt::from(2 * (2 * l + 1)));
        rhs.push(rational_mod_pk(&scaled, p, 2)?.value().to_string());
    }
    Ok(Outcome::lists(pmod(p, 2), &lhs, &rhs))
}

/// Back-substituted coefficients d_i reproduce sum k^p exactly, and their
/// second entry is (p/2) B_{p-1}.
fn eval_derby(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let d = derby_coefficients(p, ctx.config.caps.derby)?;
    let lhs = vec![derby_eval(p, &d).to_string(), d[1].to_string()];
    let rhs = vec![
        sum_powers_exact(p - 1, p as u32).to_string(),
        (ctx.bernoulli.value(p - 1)? * Rational::new(BigInt::from(p), BigInt::from(2)))
            .to_string(),
    ];
    Ok(Outcome::lists("exact".to_string(), &lhs, &rhs))
}

/// Fermat quotient sum form: sum of k^{p-1} equals p B_{p-1} mod p^2,
/// with the right side from the exact rational value.
fn eval_eq56(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let lhs = sum_powers_mod(p, 2, p - 1)?;
    let pb = ctx.bernoulli.value(p - 1)? * rat_int(p as i64);
    let rhs = rational_mod_pk(&pb, p, 2)?;
    Ok(Outcome::residues(pmod(p, 2), lhs.value(), rhs.value()))
}

pub fn claims() -> Vec<Claim> {
    vec![
        Claim {
            id: "faulhaber.jacobi",
            statement: "sum k^(2l+1) agrees with its triangular-number expansion for n <= 10",
            source: "Jacobi 1834, determinant coefficients",
            domain: Domain::Integers { min: 1 },
            default_range: (1, 6),
            powers: &[1],
            report_only: false,
            lhs_route: "determinant coefficient expansion",
            rhs_route: "brute-force power sum",
            eval: eval_jacobi,
        },
        Claim {
            id: "faulhaber.eq52",
            statement: "the coefficient A_l^{(l+1)} is identically zero",
            source: "determinant coefficient vanishing",
            domain: Domain::Integers { min: 1 },
            default_range: (1, 12),
            powers: &[1],
            report_only: false,
            lhs_route: "determinant evaluation",
            rhs_route: "constant zero",
            eval: eval_eq52,
        },
        Claim {
            id: "faulhaber.trailing",
            statement: "c_2(l) = -4 c_1(l)",
            source: "trailing coefficient pair",
            domain: Domain::Integers { min: 2 },
            default_range: (2, 8),
            powers: &[1],
            report_only: false,
            lhs_route: "second coefficient",
            rhs_route: "scaled first coefficient",
            eval: eval_trailing,
        },
        Claim {
            id: "faulhaber.eq53",
            statement: "c_1((p-1)/2) = 2 p B_{p-1} mod p^2",
            source: "trailing coefficient meets Bernoulli",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 50),
            powers: &[2],
            report_only: false,
            lhs_route: "determinant-built coefficient, reduced",
            rhs_route: "p-adic p B_{p-1}, doubled",
            eval: eval_eq53,
        },
        Claim {
            id: "faulhaber.eq10",
            statement: "S_{2l} = p c_1(l) / (2(2l+1)) mod p^2 for 1 <= l <= (p-3)/2",
            source: "even sums from the odd layer",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 31),
            powers: &[2],
            report_only: false,
            lhs_route: "modular power sum",
            rhs_route: "scaled trailing coefficient",
            eval: eval_eq10,
        },
        Claim {
            id: "faulhaber.derby",
            statement: "back-substituted d_i reproduce sum k^p, with d_2 = (p/2) B_{p-1}",
            source: "Derby 2019",
            domain: Domain::Primes { min: 3 },
            default_range: (3, 50),
            powers: &[1],
            report_only: false,
            lhs_route: "triangular back-substitution",
            rhs_route: "brute-force sum and exact Bernoulli",
            eval: eval_derby,
        },
        Claim {
            id: "faulhaber.eq56",
            statement: "sum of k^{p-1} over k < p equals p B_{p-1} mod p^2",
            source: "Fermat quotient sum form",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 300),
            powers: &[2],
            report_only: false,
            lhs_route: "modular power sum",
            rhs_route: "exact Bernoulli, reduced",
            eval: eval_eq56,
        },
    ]
}
