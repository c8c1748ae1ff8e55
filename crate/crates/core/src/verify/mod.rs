//! Claim registry and congruence verification engine.
//!
//! A claim pairs two evaluation routes that must agree at exact equality:
//! typically a direct or definitional computation against a closed-form
//! reconstruction. Evaluating a claim at one point yields a report with
//! the modulus, both serialized sides, the verdict, and the elapsed time
//! in nanoseconds. Sweeps run point-wise, propagate per-point errors as
//! failed reports instead of aborting, and keep output ordered by point
//! regardless of the parallelism in use. All fields except the timing are
//! deterministic for a given build.

mod bernoulli_claims;
mod faulhaber_claims;
mod giuga_claims;
mod harmonic_claims;
mod q_claims;
mod stirling_claims;
mod wilson_claims;

use crate::error::{Error, Result};
use crate::primes::primes_in;
use crate::Context;
use serde::{Deserialize, Serialize};
use std::sync::OnceLock;
use std::time::Instant;

/// Which points a claim ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    Primes { min: u64 },
    Integers { min: u64 },
    EvenIntegers { min: u64 },
    OddIntegers { min: u64 },
    SquarefreeComposites { min: u64 },
    OddSquarefreeComposites { min: u64 },
}

/// Two-route congruence check, evaluated one point at a time.
pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    /// Classical attribution of the statement.
    pub source: &'static str,
    pub domain: Domain,
    /// Range swept when the caller does not narrow one.
    pub default_range: (u64, u64),
    /// Moduli exponents the evaluator accepts; first entry is the default.
    pub powers: &'static [u32],
    /// Report-only claims never affect process exit status.
    pub report_only: bool,
    pub lhs_route: &'static str,
    pub rhs_route: &'static str,
    pub eval: fn(&Context, u64, u32) -> Result<Outcome>,
}

impl Claim {
    pub fn default_power(&self) -> u32 {
        self.powers[0]
    }

    pub fn supports_power(&self, power: u32) -> bool {
        self.powers.contains(&power)
    }

    /// Admissible points of the claim's domain inside lo..=hi.
    pub fn points(&self, ctx: &Context, lo: u64, hi: u64) -> Vec<u64> {
        let cap = ctx.config.caps.factorization;
        match self.domain {
            Domain::Primes { min } => primes_in(lo.max(min), hi),
            Domain::Integers { min } => (lo.max(min)..=hi).collect(),
            Domain::EvenIntegers { min } => {
                (lo.max(min)..=hi).filter(|n| n % 2 == 0).collect()
            }
            Domain::OddIntegers { min } => {
                (lo.max(min)..=hi).filter(|n| n % 2 == 1).collect()
            }
            Domain::SquarefreeComposites { min } => (lo.max(min)..=hi)
                .filter(|&n| {
                    crate::giuga::classify(n, cap)
                        .map(|c| c.composite && c.squarefree)
                        .unwrap_or(false)
                })
                .collect(),
            Domain::OddSquarefreeComposites { min } => (lo.max(min)..=hi)
                .filter(|&n| {
                    n % 2 == 1
                        && crate::giuga::classify(n, cap)
                            .map(|c| c.composite && c.squarefree)
                            .unwrap_or(false)
                })
                .collect(),
        }
    }
}

/// One evaluated congruence: both sides in canonical serialized form.
/// The claim holds at this point exactly when lhs == rhs as strings.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub modulus: String,
    pub lhs: String,
    pub rhs: String,
    pub detail: Option<String>,
}

impl Outcome {
    pub fn residues(modulus: String, lhs: u64, rhs: u64) -> Outcome {
        Outcome {
            modulus,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            detail: None,
        }
    }

    pub fn lists(modulus: String, lhs: &[String], rhs: &[String]) -> Outcome {
        Outcome {
            modulus,
            lhs: format!("[{}]", lhs.join(", ")),
            rhs: format!("[{}]", rhs.join(", ")),
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: String) -> Outcome {
        self.detail = Some(detail);
        self
    }
}

/// Serialized verification record. Field order is the canonical JSON key
/// order; `detail` appears only on reports that carry one.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CongruenceReport {
    pub claim: String,
    pub p: u64,
    pub modulus: String,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
    pub ns: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
}

pub fn pmod(p: u64, power: u32) -> String {
    format!("{p}^{power}")
}

/// p^power as a u64 modulus under the same 63-bit bound the residue
/// arithmetic enforces. Evaluators use it before any raw modular work so
/// oversized sweep points fail cleanly instead of overflowing.
pub(crate) fn checked_pk(p: u64, power: u32) -> Result<u64> {
    Ok(crate::arith::Residue::new(0, p, power)?.modulus())
}

pub fn qmod(p: u64, power: u32) -> String {
    format!("[{p}]_q^{power}")
}

pub fn registry() -> &'static [Claim] {
    static REGISTRY: OnceLock<Vec<Claim>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        let mut all = Vec::new();
        all.extend(wilson_claims::claims());
        all.extend(bernoulli_claims::claims());
        all.extend(faulhaber_claims::claims());
        all.extend(stirling_claims::claims());
        all.extend(harmonic_claims::claims());
        all.extend(giuga_claims::claims());
        all.extend(q_claims::claims());
        all
    })
}

pub fn find(id: &str) -> Result<&'static Claim> {
    registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

/// Evaluate one claim at one point. Errors become failed reports with the
/// message in `detail`; they never escape.
pub fn run_claim(
    ctx: &Context,
    claim: &Claim,
    point: u64,
    power: Option<u32>,
) -> CongruenceReport {
    let power = power
        .filter(|p| claim.supports_power(*p))
        .unwrap_or_else(|| claim.default_power());
    let start = Instant::now();
    let outcome = (claim.eval)(ctx, point, power);
    let ns = start.elapsed().as_nanos() as u64;
    match outcome {
        Ok(o) => {
            let holds = o.lhs == o.rhs;
            CongruenceReport {
                claim: claim.id.to_string(),
                p: point,
                modulus: o.modulus,
                lhs: o.lhs,
                rhs: o.rhs,
                holds,
                ns,
                detail: o.detail,
            }
        }
        Err(e) => CongruenceReport {
            claim: claim.id.to_string(),
            p: point,
            modulus: String::new(),
            lhs: "error".to_string(),
            rhs: String::new(),
            holds: false,
            ns,
            detail: Some(e.to_string()),
        },
    }
}

/// Sweep a claim across its admissible points in lo..=hi. Reports come
/// back ordered by point; parallelism only changes wall time.
pub fn sweep(
    ctx: &Context,
    claim: &Claim,
    lo: u64,
    hi: u64,
    power: Option<u32>,
    parallelism: usize,
) -> Vec<CongruenceReport> {
    let points = claim.points(ctx, lo, hi);
    if parallelism <= 1 {
        return points
            .into_iter()
            .map(|p| run_claim(ctx, claim, p, power))
            .collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallelism)
        .build()
        .expect("thread pool construction");
    pool.install(|| {
        use rayon::prelude::*;
        points
            .par_iter()
            .map(|&p| run_claim(ctx, claim, p, power))
            .collect()
    })
}

/// Sweep a claim over its registered default range.
pub fn sweep_default(ctx: &Context, claim: &Claim, parallelism: usize) -> Vec<CongruenceReport> {
    let (lo, hi) = claim.default_range;
    sweep(ctx, claim, lo, hi, None, parallelism)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::RunConfig;
    use std::collections::HashSet;

    fn ctx() -> Context {
        Context::new(RunConfig::default())
    }

    #[test]
    fn registry_is_well_formed() {
        let reg = registry();
        assert!(reg.len() >= 50, "registry has {} claims", reg.len());
        let mut ids = HashSet::new();
        for c in reg {
            assert!(ids.insert(c.id), "duplicate id {}", c.id);
            let (family, name) = c.id.split_once('.').expect("id has a family prefix");
            assert!(!family.is_empty() && !name.is_empty());
            assert!(
                c.id.chars().all(|ch| ch.is_ascii_lowercase()
                    || ch.is_ascii_digit()
                    || ch == '.'
                    || ch == '_'),
                "id {} uses unexpected characters",
                c.id
            );
            assert!(!c.powers.is_empty(), "{} lists no powers", c.id);
            assert_ne!(
                c.lhs_route, c.rhs_route,
                "{} reuses one route on both sides",
                c.id
            );
            assert!(!c.statement.is_empty() && !c.source.is_empty());
            assert!(c.default_range.0 <= c.default_range.1);
        }
    }

    #[test]
    fn expected_ids_present() {
        let ids: HashSet<&str> = registry().iter().map(|c| c.id).collect();
        for id in [
            "wilson.theorem1",
            "wilson.theorem2",
            "wilson.glaisher",
            "wilson.lemma4",
            "wilson.theorem6",
            "wilson.corollary6",
            "wilson.sun_eq34",
            "wilson.eq35",
            "bernoulli.vsc",
            "bernoulli.eq4",
            "bernoulli.kummer",
            "bernoulli.sun_result6",
            "bernoulli.fact2",
            "bernoulli.miki",
            "bernoulli.adams",
            "bernoulli.thangadurai",
            "faulhaber.jacobi",
            "faulhaber.eq52",
            "faulhaber.eq53",
            "faulhaber.trailing",
            "faulhaber.derby",
            "faulhaber.eq56",
            "stirling.theorem3",
            "stirling.corollary2",
            "stirling.glaisher_result2",
            "stirling.result3",
            "stirling.result4",
            "stirling.eq27_30",
            "stirling.sun_eq25",
            "stirling.newton_eq8",
            "harmonic.glaisher_thm4",
            "harmonic.glaisher_thm5",
            "harmonic.corollary3",
            "harmonic.corollary4",
            "harmonic.corollary5",
            "harmonic.bayat",
            "harmonic.wolstenholme",
            "harmonic.wolstenholme_binomial",
            "harmonic.wolstenholme_prime",
            "giuga.prop1",
            "giuga.lemma2",
            "giuga.conjecture1",
            "q.andrews",
            "q.shipan",
            "q.dilcher",
            "q.clark",
            "q.straub",
            "q.andrews_binomial",
            "q.lucas",
            "q.kummer_carry",
            "q.helou_terjanian",
        ] {
            assert!(ids.contains(id), "missing claim id {id}");
        }
    }

    #[test]
    fn report_only_set() {
        for c in registry() {
            let expected = matches!(c.id, "giuga.conjecture1" | "bernoulli.thangadurai");
            assert_eq!(c.report_only, expected, "{}", c.id);
        }
    }

    #[test]
    fn unknown_claim_is_an_error() {
        assert!(matches!(find("wilson.nope"), Err(Error::UnknownClaim(_))));
        assert!(find("wilson.glaisher").is_ok());
    }

    #[test]
    fn error_points_become_failed_reports() {
        // A sweep range that includes a point below every route's
        // precondition still yields one report per admissible point.
        let ctx = ctx();
        let claim = find("wilson.glaisher").unwrap();
        let reports = sweep(&ctx, claim, 2, 7, None, 1);
        // Points are primes >= the domain minimum (5): 5 and 7.
        assert_eq!(reports.len(), 2);
        assert!(reports.iter().all(|r| r.holds));
    }

    #[test]
    fn sweep_order_is_parallelism_invariant() {
        let ctx = ctx();
        let claim = find("wilson.theorem1").unwrap();
        let serial = sweep(&ctx, claim, 5, 60, None, 1);
        let parallel = sweep(&ctx, claim, 5, 60, None, 4);
        let strip = |v: &[CongruenceReport]| {
            v.iter()
                .map(|r| (r.p, r.lhs.clone(), r.rhs.clone(), r.holds))
                .collect::<Vec<_>>()
        };
        assert_eq!(strip(&serial), strip(&parallel));
    }

    #[test]
    fn report_json_round_trip() {
        let ctx = ctx();
        let claim = find("wilson.glaisher").unwrap();
        let report = run_claim(&ctx, claim, 7, None);
        let json = serde_json::to_string(&report).unwrap();
        let back: CongruenceReport = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
        assert!(json.starts_with("{\"claim\":"));
    }
}
