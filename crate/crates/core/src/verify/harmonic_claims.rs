//! Claims about generalized harmonic sums H_{p-1, m} = sum of 1/j^m over
//! 1 <= j <= p-1, reduced modulo prime powers.

use super::{pmod, Claim, Domain, Outcome};
use crate::bernoulli::bernoulli_mod_p;
use crate::error::Result;
use crate::primes::{invmod, mulmod};
use crate::stirling_harmonic::{central_binomial_mod, harmonic_mod, wolstenholme_quotient};
use crate::wilson::wilson_j;
use crate::Context;

/// Rows r = 1..p-3 of the Stirling reconstruction, mod p^3 at odd r and
/// p^2 at even r, then the two top rows expressed through the Wilson
/// digit J. Each list entry is reduced at its own modulus.
fn eval_glaisher_thm4(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let m3 = super::checked_pk(p, 3)?;
    let m2 = super::checked_pk(p, 2)?;
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for r in 1..=p - 3 {
        let power = if r % 2 == 1 { 3 } else { 2 };
        let mk = if power == 3 { m3 } else { m2 };
        lhs.push(harmonic_mod(p, r, power)?.to_string());
        let a = ctx.stirling.value_mod(p, r + 1, p, power)?;
        let t = mulmod(r % mk, a, mk);
        let predicted = if r % 2 == 1 { (mk - t) % mk } else { t };
        rhs.push(predicted.to_string());
    }
    let j = wilson_j(p)?;
    // H_{p-1, p-2} = -p - (J - 3/2) p^2 mod p^3.
    lhs.push(harmonic_mod(p, p - 2, 3)?.to_string());
    let three_halves = mulmod(3, invmod(2, p).expect("odd p"), p);
    let coeff = (j + p - three_halves) % p;
    rhs.push((((m3 - p) + (m3 - mulmod(coeff, m2, m3))) % m3).to_string());
    // H_{p-1, p-1} = -1 - (J - 1) p mod p^2.
    lhs.push(harmonic_mod(p, p - 1, 2)?.to_string());
    let a = mulmod((j + p - 1) % p, p, m2);
    rhs.push(((2 * m2 - 1 - a) % m2).to_string());
    Ok(Outcome::lists(pmod(p, 3), &lhs, &rhs))
}

/// H_{p-1, m} through trailing Bernoulli numbers: even m give
/// (m/(m+1)) p B_{p-1-m} mod p^2, odd m give
/// -(m(m+1)/(2(m+2))) p^2 B_{p-2-m} mod p^3.
fn eval_glaisher_thm5(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let m3 = super::checked_pk(p, 3)?;
    let m2 = p * p;
    let top = 20.min(p - 3);
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for m in 1..=top {
        if m % 2 == 0 {
            lhs.push(harmonic_mod(p, m, 2)?.to_string());
            let t = mulmod(
                mulmod(m, invmod(m + 1, p).expect("m+1 < p"), p),
                bernoulli_mod_p(p - 1 - m, p)?,
                p,
            );
            rhs.push(mulmod(p, t, m2).to_string());
        } else {
            lhs.push(harmonic_mod(p, m, 3)?.to_string());
            let t = mulmod(
                mulmod(m * (m + 1) % p, invmod(2 * (m + 2) % p, p).expect("unit"), p),
                bernoulli_mod_p(p - 2 - m, p)?,
                p,
            );
            rhs.push(((m3 - mulmod(p * p % m3, t, m3)) % m3).to_string());
        }
    }
    let _ = ctx;
    Ok(Outcome::lists(pmod(p, 3), &lhs, &rhs))
}

/// H_{p-1, p-k-1} = (1 + (-1)^k / k) S_k mod p^2 for 2 <= k <= p-2. The
/// k = 1 instance is genuinely false and excluded; the acceptance suite
/// pins its counterexample.
fn eval_corollary3(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let m2 = super::checked_pk(p, 2)?;
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for k in 2..=p - 2 {
        lhs.push(harmonic_mod(p, p - k - 1, 2)?.to_string());
        let s = crate::faulhaber::sum_powers_mod(p, 2, k)?.value();
        let invk = invmod(k, m2).expect("k < p");
        let c = if k % 2 == 0 {
            (1 + invk) % m2
        } else {
            (1 + m2 - invk) % m2
        };
        rhs.push(mulmod(c, s, m2).to_string());
    }
    let _ = ctx;
    Ok(Outcome::lists(pmod(p, 2), &lhs, &rhs))
}

/// H_{p-1, k} = 0 mod p^2 for odd k <= p-4. The boundary k = p-2 fails
/// (H is -p there, not 0), so it is excluded and pinned elsewhere.
fn eval_corollary4(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for k in (1..=p - 4).step_by(2) {
        lhs.push(harmonic_mod(p, k, 2)?.to_string());
        rhs.push("0".to_string());
    }
    let _ = ctx;
    Ok(Outcome::lists(pmod(p, 2), &lhs, &rhs))
}

/// H_{p-1, p-k-1} = (1 + (-1)^k / k) p B_k mod p^2 for 2 <= k <= p-2;
/// odd k >= 3 have B_k = 0 so the right side collapses to zero.
fn eval_corollary5(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let m2 = super::checked_pk(p, 2)?;
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for k in 2..=p - 2 {
        lhs.push(harmonic_mod(p, p - k - 1, 2)?.to_string());
        let predicted = if k % 2 == 1 {
            0
        } else {
            let c = mulmod((k + 1) % p, invmod(k, p).expect("k < p"), p);
            let t = mulmod(c, bernoulli_mod_p(k, p)?, p);
            mulmod(p, t, m2)
        };
        rhs.push(predicted.to_string());
    }
    let _ = ctx;
    Ok(Outcome::lists(pmod(p, 2), &lhs, &rhs))
}

/// Vanishing of H_{p-1, m} for m <= p-3: mod p at even m, mod p^2 at odd m.
fn eval_bayat(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for m in 1..=p - 3 {
        let power = if m % 2 == 1 { 2 } else { 1 };
        lhs.push(harmonic_mod(p, m, power)?.to_string());
        rhs.push("0".to_string());
    }
    let _ = ctx;
    Ok(Outcome::lists(pmod(p, 2), &lhs, &rhs))
}

/// H_{p-1, 1} = 0 mod p^2 together with H_{p-1, 2} = 0 mod p.
fn eval_wolstenholme(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let lhs = [
        harmonic_mod(p, 1, 2)?.to_string(),
        harmonic_mod(p, 2, 1)?.to_string(),
    ];
    let rhs = ["0".to_string(), "0".to_string()];
    let _ = ctx;
    Ok(Outcome::lists(pmod(p, 2), &lhs, &rhs))
}

/// Central binomial form: binomial(2p-1, p-1) = 1 mod p^3.
fn eval_wolstenholme_binomial(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let _ = ctx;
    Ok(Outcome::residues(
        pmod(p, 3),
        central_binomial_mod(p, 3)?,
        1,
    ))
}

/// Wolstenholme quotient W_p = (binomial(2p-1, p-1) - 1) / p^3 satisfies
/// W_p = -(2/3) B_{p-3} mod p.
fn eval_wolstenholme_prime(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let w = wolstenholme_quotient(p)?;
    let t = mulmod(
        mulmod(2, invmod(3, p).expect("p > 3"), p),
        bernoulli_mod_p(p - 3, p)?,
        p,
    );
    let _ = ctx;
    Ok(Outcome::residues(pmod(p, 1), w, (p - t) % p))
}

pub fn claims() -> Vec<Claim> {
    vec![
        Claim {
            id: "harmonic.glaisher_thm4",
            statement: "H_{p-1, r} = (-1)^r r [p, r+1] mod p^3 (odd r) / p^2 (even r), plus Wilson-digit forms for the top two rows",
            source: "Glaisher 1900",
            domain: Domain::Primes { min: 7 },
            default_range: (7, 100),
            powers: &[3],
            report_only: false,
            lhs_route: "modular harmonic sums",
            rhs_route: "exact Stirling rows and Wilson digit",
            eval: eval_glaisher_thm4,
        },
        Claim {
            id: "harmonic.glaisher_thm5",
            statement: "H_{p-1, m} through trailing Bernoulli numbers, mod p^2 at even m and p^3 at odd m, for m <= min(20, p-3)",
            source: "Glaisher 1900",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 200),
            powers: &[3],
            report_only: false,
            lhs_route: "modular harmonic sums",
            rhs_route: "trailing Bernoulli closed forms",
            eval: eval_glaisher_thm5,
        },
        Claim {
            id: "harmonic.corollary3",
            statement: "H_{p-1, p-k-1} = (1 + (-1)^k / k) S_k mod p^2 for 2 <= k <= p-2",
            source: "power sum comparison",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 200),
            powers: &[2],
            report_only: false,
            lhs_route: "modular harmonic sums",
            rhs_route: "scaled modular power sums",
            eval: eval_corollary3,
        },
        Claim {
            id: "harmonic.corollary4",
            statement: "H_{p-1, k} = 0 mod p^2 for odd k <= p-4",
            source: "odd-row vanishing",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 200),
            powers: &[2],
            report_only: false,
            lhs_route: "modular harmonic sums",
            rhs_route: "zero",
            eval: eval_corollary4,
        },
        Claim {
            id: "harmonic.corollary5",
            statement: "H_{p-1, p-k-1} = (1 + (-1)^k / k) p B_k mod p^2 for 2 <= k <= p-2",
            source: "Bernoulli comparison",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 200),
            powers: &[2],
            report_only: false,
            lhs_route: "modular harmonic sums",
            rhs_route: "scaled Bernoulli residues",
            eval: eval_corollary5,
        },
        Claim {
            id: "harmonic.bayat",
            statement: "H_{p-1, m} = 0 mod p (even m) and mod p^2 (odd m) for m <= p-3",
            source: "Bayat 1997",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 200),
            powers: &[2],
            report_only: false,
            lhs_route: "modular harmonic sums",
            rhs_route: "zero",
            eval: eval_bayat,
        },
        Claim {
            id: "harmonic.wolstenholme",
            statement: "H_{p-1, 1} = 0 mod p^2 and H_{p-1, 2} = 0 mod p",
            source: "Wolstenholme 1862",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 500),
            powers: &[2],
            report_only: false,
            lhs_route: "modular harmonic sums",
            rhs_route: "zero",
            eval: eval_wolstenholme,
        },
        Claim {
            id: "harmonic.wolstenholme_binomial",
            statement: "binomial(2p-1, p-1) = 1 mod p^3",
            source: "Wolstenholme 1862",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 500),
            powers: &[3],
            report_only: false,
            lhs_route: "modular rising-factorial product",
            rhs_route: "one",
            eval: eval_wolstenholme_binomial,
        },
        Claim {
            id: "harmonic.wolstenholme_prime",
            statement: "Wolstenholme quotient = -(2/3) B_{p-3} mod p",
            source: "Glaisher 1900",
            domain: Domain::Primes { min: 7 },
            default_range: (7, 200),
            powers: &[1],
            report_only: false,
            lhs_route: "binomial quotient, exact division by p^3",
            rhs_route: "scaled Bernoulli residue",
            eval: eval_wolstenholme_prime,
        },
    ]
}
