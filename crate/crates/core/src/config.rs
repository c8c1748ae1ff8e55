//! Run configuration: sweep ranges, output shape, and the size caps that
//! keep exact computations inside sane memory and time budgets.

use std::path::PathBuf;

/// Environment variable that overrides the Bernoulli cache location.
pub const CACHE_ENV: &str = "CONGRUENCE_CACHE";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "text" => Ok(OutputFormat::Text),
            other => Err(format!("unknown format '{other}' (json|csv|text)")),
        }
    }
}

/// Size caps. Each one guards a specific super-linear computation; the
/// defaults cover the full verification suite with room to spare.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest row of Stirling numbers computed exactly.
    pub stirling: u64,
    /// Largest index computed by the exact Bernoulli recurrence; beyond it
    /// the modular power-sum route takes over where a formula permits.
    pub bernoulli_exact: u64,
    /// Largest prime accepted by the power-sum coefficient solver.
    pub derby: u64,
    /// Largest integer the composite classifier will factor.
    pub factorization: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            stirling: 3000,
            bernoulli_exact: 400,
            derby: 101,
            factorization: 1_000_000_000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    /// Inclusive prime range for sweeps. Non-prime endpoints are fine.
    pub prime_range: (u64, u64),
    /// Default modulus power for claims that support more than one.
    pub modulus_power: Option<u32>,
    pub output: OutputFormat,
    /// Worker threads for sweeps; 1 means fully serial.
    pub parallelism: usize,
    pub caps: Caps,
    /// Where the exact Bernoulli cache lives; None disables persistence.
    pub cache_path: Option<PathBuf>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            prime_range: (5, 200),
            modulus_power: None,
            output: OutputFormat::Text,
            parallelism: 1,
            caps: Caps::default(),
            cache_path: None,
        }
    }
}

impl RunConfig {
    /// Apply the cache environment override, if set.
    pub fn with_env_cache(mut self) -> Self {
        if let Ok(path) = std::env::var(CACHE_ENV) {
            if !path.is_empty() {
                self.cache_path = Some(PathBuf::from(path));
            }
        }
        self
    }
}
