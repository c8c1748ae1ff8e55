//! Exact computation and mechanical verification of classical congruences
//! tied to Wilson's theorem: factorial residues modulo p^2 and p^3, Bernoulli
//! numbers and their p-adic multiples, Faulhaber and power-sum coefficients,
//! Stirling numbers of the first kind, generalized harmonic numbers,
//! Giuga/Carmichael classification of composites, and q-analog congruences
//! modulo cyclotomic-like moduli [p]_q^j.
//!
//! Design rules that hold everywhere:
//! - arithmetic is exact (big integers, big rationals, residues); there is
//!   no floating point and no tolerance anywhere,
//! - every congruence is verified by computing both sides through routes
//!   that share no intermediate, with exact ground truths (factorials,
//!   Stirling rows, rational harmonic sums) as arbiters,
//! - results are reproducible: sweeps order their reports by prime no matter
//!   the parallelism, and randomized checks derive their RNG seed from the
//!   claim and prime.

pub mod arith;
pub mod bernoulli;
pub mod config;
pub mod error;
pub mod faulhaber;
pub mod giuga;
pub mod primes;
pub mod qanalog;
pub mod stirling_harmonic;
pub mod verify;
pub mod wilson;

pub use config::{Caps, RunConfig};
pub use error::{Error, Result};

/// Shared state for a run: configuration plus the two memoized tables every
/// claim route draws from. Cheap to construct; expensive values fill in
/// lazily and stay for the lifetime of the context.
pub struct Context {
    pub config: RunConfig,
    pub bernoulli: bernoulli::BernoulliTable,
    pub stirling: stirling_harmonic::StirlingCache,
}

impl Context {
    pub fn new(config: RunConfig) -> Self {
        let bernoulli = bernoulli::BernoulliTable::new(config.caps.bernoulli_exact);
        let stirling = stirling_harmonic::StirlingCache::new(config.caps.stirling);
        Context {
            config,
            bernoulli,
            stirling,
        }
    }
}

impl Default for Context {
    fn default() -> Self {
        Context::new(RunConfig::default())
    }
}
