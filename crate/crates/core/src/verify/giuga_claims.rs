//! Claims tying divisibility shapes of composite numbers to Bernoulli
//! denominators: Korselt-style conditions and the prime-detecting residue
//! n B_{n-1} mod n.

use super::{Claim, Domain, Outcome};
use crate::error::Result;
use crate::giuga::{agoh_residue, denominator_dichotomy, factorize, korselt_dichotomy};
use crate::primes::is_prime;
use crate::Context;

/// For odd squarefree composite n: some prime p | n has (p-1) | (n-1)
/// exactly when n B_{n-1} is nonzero mod n; both routes are reported as
/// indicator bits. Odd n is essential - at even n the Bernoulli side is
/// identically zero (odd index) while p = 2 always passes the
/// divisibility, so n = 6 refutes the unrestricted form.
fn eval_prop1(ctx: &Context, n: u64, _power: u32) -> Result<Outcome> {
    let (korselt, residue) = korselt_dichotomy(
        &ctx.bernoulli,
        n,
        ctx.config.caps.factorization,
    )?;
    Ok(Outcome::residues("indicator".to_string(), korselt, residue))
}

/// For odd n and each prime divisor p of n, p B_{n-1} mod p is p-1 when
/// (p-1) | (n-1) and 0 otherwise; observed residues against the
/// divisibility prediction, one entry per prime divisor.
fn eval_lemma2(ctx: &Context, n: u64, _power: u32) -> Result<Outcome> {
    let factors = factorize(n, ctx.config.caps.factorization)?;
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for (p, _) in factors {
        let (observed, predicted) = denominator_dichotomy(&ctx.bernoulli, n - 1, p)?;
        lhs.push(observed.to_string());
        rhs.push(predicted.to_string());
    }
    Ok(Outcome::lists("per prime divisor".to_string(), &lhs, &rhs))
}

/// n B_{n-1} = -1 mod n exactly when n is prime; scanned as a pair of
/// indicator bits. Report-only: the full statement is an open conjecture,
/// the scan documents the absence of small counterexamples.
fn eval_conjecture1(ctx: &Context, n: u64, _power: u32) -> Result<Outcome> {
    let r = agoh_residue(&ctx.bernoulli, n)?;
    let residue_says_prime = u64::from(r == n - 1);
    let primality = u64::from(is_prime(n));
    Ok(
        Outcome::residues("indicator".to_string(), residue_says_prime, primality)
            .with_detail(format!("n B_(n-1) mod n = {r}")),
    )
}

pub fn claims() -> Vec<Claim> {
    vec![
        Claim {
            id: "giuga.prop1",
            statement: "for odd squarefree composite n: some prime p | n has (p-1) | (n-1) iff n B_{n-1} is nonzero mod n (odd is essential: n = 6 refutes the even case)",
            source: "Korselt 1899 / Giuga 1950",
            domain: Domain::OddSquarefreeComposites { min: 9 },
            default_range: (9, 401),
            powers: &[1],
            report_only: false,
            lhs_route: "divisor-wise divisibility check",
            rhs_route: "Bernoulli residue check",
            eval: eval_prop1,
        },
        Claim {
            id: "giuga.lemma2",
            statement: "odd n, prime p | n: p B_{n-1} = p-1 mod p if (p-1) | (n-1), else 0",
            source: "von Staudt-Clausen dichotomy",
            domain: Domain::OddIntegers { min: 3 },
            default_range: (3, 401),
            powers: &[1],
            report_only: false,
            lhs_route: "exact Bernoulli number, reduced per divisor",
            rhs_route: "divisibility prediction",
            eval: eval_lemma2,
        },
        Claim {
            id: "giuga.conjecture1",
            statement: "n B_{n-1} = -1 mod n exactly when n is prime",
            source: "Agoh 1990 / Giuga 1950",
            domain: Domain::Integers { min: 2 },
            default_range: (2, 400),
            powers: &[1],
            report_only: true,
            lhs_route: "Bernoulli residue indicator",
            rhs_route: "deterministic primality test",
            eval: eval_conjecture1,
        },
    ]
}
