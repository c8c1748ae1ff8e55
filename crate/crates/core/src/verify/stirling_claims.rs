//! Claims about the top row of unsigned Stirling numbers of the first
//! kind: exact values against power-sum, harmonic, and Bernoulli forms.

use super::{pmod, Claim, Domain, Outcome};
use crate::bernoulli::bernoulli_mod_p;
use crate::error::{Error, Result};
use crate::faulhaber::{sum_powers_exact, sum_powers_mod};
use crate::primes::{invmod, mulmod};
use crate::stirling_harmonic::harmonic_mod;
use crate::Context;
use num_bigint::BigInt;

/// [p, k] = S_{p-1, p-k} - H_{p-1, k-1} mod p^2 for 2 <= k <= p-2. The
/// k = p-1 boundary genuinely fails (the right side flips sign there), so
/// the sweep stops at p-2; the boundary value is pinned in the acceptance
/// suite.
fn eval_theorem3(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let m2 = super::checked_pk(p, 2)?;
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for k in 2..=p - 2 {
        lhs.push(ctx.stirling.value_mod(p, k, p, 2)?.to_string());
        let s = sum_powers_mod(p, 2, p - k)?.value();
        let h = harmonic_mod(p, k - 1, 2)?;
        rhs.push(((s + m2 - h) % m2).to_string());
    }
    Ok(Outcome::lists(pmod(p, 2), &lhs, &rhs))
}

/// Branchwise closed form for [p, k] mod p^2 over the full column range.
fn eval_corollary2(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let m2 = super::checked_pk(p, 2)?;
    let inv2 = invmod(2, m2).expect("odd modulus");
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for k in 1..=p {
        lhs.push(ctx.stirling.value_mod(p, k, p, 2)?.to_string());
        let predicted = if k == p {
            1
        } else if k == 1 {
            let pb = ctx.bernoulli.padic_pb(1, p, 2)?.to_residue(2)?;
            (pb.value() + m2 - p) % m2
        } else if k == p - 1 {
            m2 - mulmod(p, inv2, m2)
        } else if k % 2 == 0 {
            0
        } else {
            // odd 3 <= k <= p-2: (p / k) B_{p-k}; only B mod p matters.
            let b = bernoulli_mod_p(p - k, p)?;
            let t = mulmod(b, invmod(k, p).expect("k < p"), p);
            mulmod(p, t, m2)
        };
        rhs.push(predicted.to_string());
    }
    Ok(Outcome::lists(pmod(p, 2), &lhs, &rhs))
}

/// A_r / p mod p: -1/2 at r = 1, zero at odd r, -B_r / r at even r.
fn eval_glaisher_result2(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for r in 1..=p - 2 {
        let a = ctx.stirling.value_mod(p, p - r, p, 2)?;
        if a % p != 0 {
            return Err(Error::PreconditionViolated(format!(
                "A_{r} not divisible by p at p = {p}"
            )));
        }
        lhs.push((a / p).to_string());
        let predicted = if r == 1 {
            mulmod(p - 1, invmod(2, p).expect("odd p"), p)
        } else if r % 2 == 1 {
            0
        } else {
            let b = bernoulli_mod_p(r, p)?;
            (p - mulmod(b, invmod(r, p).expect("r < p"), p)) % p
        };
        rhs.push(predicted.to_string());
    }
    Ok(Outcome::lists(pmod(p, 1), &lhs, &rhs))
}

/// A_r = (p (p-r) / 2) A_{r-1} mod p^3 for odd r >= 3.
fn eval_result3(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let m3 = super::checked_pk(p, 3)?;
    let inv2 = invmod(2, m3).expect("odd modulus");
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for r in (3..=p - 2).step_by(2) {
        lhs.push(ctx.stirling.value_mod(p, p - r, p, 3)?.to_string());
        let prev = ctx.stirling.value_mod(p, p - r + 1, p, 3)?;
        let scale = mulmod(p * (p - r) % m3, inv2, m3);
        rhs.push(mulmod(scale, prev, m3).to_string());
    }
    Ok(Outcome::lists(pmod(p, 3), &lhs, &rhs))
}

/// A_r = (p^2 r / (2(r-1))) B_{r-1} mod p^3 for odd r >= 3.
fn eval_result4(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let m3 = super::checked_pk(p, 3)?;
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for r in (3..=p - 2).step_by(2) {
        lhs.push(ctx.stirling.value_mod(p, p - r, p, 3)?.to_string());
        let b = bernoulli_mod_p(r - 1, p)?;
        let t = mulmod(
            mulmod(r % p, invmod(2 * (r - 1) % p, p).expect("unit"), p),
            b,
            p,
        );
        rhs.push(mulmod(p * p % m3, t, m3).to_string());
    }
    Ok(Outcome::lists(pmod(p, 3), &lhs, &rhs))
}

/// Full mod p^3 dispatch: closed forms for r = 1 and 2, the odd-r
/// Bernoulli form, and the even-r convolution correction.
fn eval_eq27_30(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let m3 = super::checked_pk(p, 3)?;
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for r in 1..=p - 2 {
        lhs.push(ctx.stirling.value_mod(p, p - r, p, 3)?.to_string());
        let predicted = if r == 1 {
            (p * (p - 1) / 2) % m3
        } else if r == 2 {
            // (1/2)(-p/6 + 3p^2/4) = -p/12 + 3p^2/8.
            let inv12 = invmod(12, m3).expect("unit");
            let inv8 = invmod(8, m3).expect("unit");
            let a = mulmod(p, inv12, m3);
            let b = mulmod(mulmod(3 * p % m3, p % m3, m3), inv8, m3);
            (b + m3 - a) % m3
        } else if r % 2 == 1 {
            let b = bernoulli_mod_p(r - 1, p)?;
            let t = mulmod(
                mulmod(r % p, invmod(2 * (r - 1) % p, p).expect("unit"), p),
                b,
                p,
            );
            mulmod(p * p % m3, t, m3)
        } else {
            // even r >= 4: -(1/r)(p B_r - p^2 sum B_{2j} B_{r-2j} / (2j)).
            // B_{r-1} vanishes, so the power sum S_r equals p B_r mod p^3.
            let pbr = sum_powers_mod(p, 3, r)?.value();
            let mut conv: u64 = 0;
            for j in 1..=(r / 2 - 1) {
                let t = mulmod(bernoulli_mod_p(2 * j, p)?, bernoulli_mod_p(r - 2 * j, p)?, p);
                conv = (conv + mulmod(t, invmod(2 * j % p, p).expect("unit"), p)) % p;
            }
            let inner = (pbr + m3 - mulmod(p * p % m3, conv, m3)) % m3;
            (m3 - mulmod(invmod(r, m3).expect("unit"), inner, m3)) % m3
        };
        rhs.push(predicted.to_string());
    }
    Ok(Outcome::lists(pmod(p, 3), &lhs, &rhs))
}

/// A_k = ((-1)^{k-1} / k) p B_k mod p^2 across the whole row, first-kind
/// sign convention at k = 1.
fn eval_sun_eq25(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let m2 = super::checked_pk(p, 2)?;
    let inv2 = invmod(2, m2).expect("odd modulus");
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for k in 1..=p - 1 {
        lhs.push(ctx.stirling.value_mod(p, p - k, p, 2)?.to_string());
        let predicted = if k == 1 {
            // p B_1 with B_1 = -1/2.
            (m2 - mulmod(p, inv2, m2)) % m2
        } else if k % 2 == 1 {
            0
        } else if k < p - 1 {
            let s = sum_powers_mod(p, 2, k)?.value();
            (m2 - mulmod(s, invmod(k, m2).expect("unit"), m2)) % m2
        } else {
            let pb = ctx.bernoulli.padic_pb(1, p, 2)?.to_residue(2)?.value();
            (m2 - mulmod(pb, invmod(p - 1, m2).expect("unit"), m2)) % m2
        };
        rhs.push(predicted.to_string());
    }
    Ok(Outcome::lists(pmod(p, 2), &lhs, &rhs))
}

/// Exact Newton identity: k A_k = (-1)^{k-1} (S_k + sum (-1)^r A_r S_{k-r}).
fn eval_newton_eq8(ctx: &Context, p: u64, _power: u32) -> Result<Outcome> {
    let a = |r: u64| -> Result<BigInt> {
        Ok(BigInt::from(ctx.stirling.value(p, p - r)?))
    };
    let s = |j: u64| BigInt::from(sum_powers_exact(p - 1, j as u32));
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    for k in 1..=p - 1 {
        lhs.push((BigInt::from(k) * a(k)?).to_string());
        let mut acc = s(k);
        for r in 1..k {
            let term = a(r)? * s(k - r);
            if r % 2 == 1 {
                acc -= term;
            } else {
                acc += term;
            }
        }
        if k % 2 == 0 {
            acc = -acc;
        }
        rhs.push(acc.to_string());
    }
    Ok(Outcome::lists("exact".to_string(), &lhs, &rhs))
}

pub fn claims() -> Vec<Claim> {
    vec![
        Claim {
            id: "stirling.theorem3",
            statement: "[p, k] = S_{p-1, p-k} - H_{p-1, k-1} mod p^2 for 2 <= k <= p-2",
            source: "power sum minus harmonic form",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 200),
            powers: &[2],
            report_only: false,
            lhs_route: "exact Stirling row, reduced",
            rhs_route: "power sum minus modular harmonic",
            eval: eval_theorem3,
        },
        Claim {
            id: "stirling.corollary2",
            statement: "branch closed forms for [p, k] mod p^2 over 1 <= k <= p",
            source: "columnwise reduction",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 200),
            powers: &[2],
            report_only: false,
            lhs_route: "exact Stirling row, reduced",
            rhs_route: "parity and boundary branch formulas",
            eval: eval_corollary2,
        },
        Claim {
            id: "stirling.glaisher_result2",
            statement: "A_r / p mod p is -1/2, 0, or -B_r / r by the parity of r",
            source: "Glaisher 1900",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 200),
            powers: &[1],
            report_only: false,
            lhs_route: "exact Stirling row, divided by p",
            rhs_route: "parity branch formulas",
            eval: eval_glaisher_result2,
        },
        Claim {
            id: "stirling.result3",
            statement: "A_r = (p(p-r)/2) A_{r-1} mod p^3 for odd 3 <= r <= p-2",
            source: "Glaisher 1900",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 200),
            powers: &[3],
            report_only: false,
            lhs_route: "exact row at index r",
            rhs_route: "scaled exact row at index r-1",
            eval: eval_result3,
        },
        Claim {
            id: "stirling.result4",
            statement: "A_r = (p^2 r / (2(r-1))) B_{r-1} mod p^3 for odd 3 <= r <= p-2",
            source: "Glaisher 1900",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 200),
            powers: &[3],
            report_only: false,
            lhs_route: "exact Stirling row, reduced",
            rhs_route: "Bernoulli closed form",
            eval: eval_result4,
        },
        Claim {
            id: "stirling.eq27_30",
            statement: "mod p^3 dispatch for A_r: boundary forms, odd-r Bernoulli, even-r convolution",
            source: "Sun 2000",
            domain: Domain::Primes { min: 7 },
            default_range: (7, 60),
            powers: &[3],
            report_only: false,
            lhs_route: "exact Stirling row, reduced",
            rhs_route: "casewise closed forms",
            eval: eval_eq27_30,
        },
        Claim {
            id: "stirling.sun_eq25",
            statement: "A_k = ((-1)^{k-1} / k) p B_k mod p^2 for 1 <= k <= p-1",
            source: "Sun 2000",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 200),
            powers: &[2],
            report_only: false,
            lhs_route: "exact Stirling row, reduced",
            rhs_route: "signed divided power sums",
            eval: eval_sun_eq25,
        },
        Claim {
            id: "stirling.newton_eq8",
            statement: "k A_k = (-1)^{k-1} (S_k + sum (-1)^r A_r S_{k-r}), exact",
            source: "Newton's identities",
            domain: Domain::Primes { min: 5 },
            default_range: (5, 31),
            powers: &[1],
            report_only: false,
            lhs_route: "scaled exact Stirling value",
            rhs_route: "power sum recursion",
            eval: eval_newton_eq8,
        },
    ]
}
