//! Command-line driver: compute exact number-theoretic objects, verify
//! registered congruence claims over sweep ranges, scan for special
//! numbers, and lift polynomial roots p-adically.
//!
//! Exit codes: 0 when every non-advisory report holds, 1 when any
//! verification fails, 2 on usage or configuration errors.

use clap::{Parser, Subcommand, ValueEnum};
use congruence::config::OutputFormat;
use congruence::verify::{self, CongruenceReport};
use congruence::{bernoulli, faulhaber, giuga, primes, qanalog, stirling_harmonic, wilson};
use congruence::{Context, RunConfig};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "congruence",
    version,
    about = "Exact computation and mechanical verification of classical congruences"
)]
struct Cli {
    /// Bernoulli cache file; defaults to the CONGRUENCE_CACHE environment
    /// variable when set. Loaded at startup if present, saved on exit.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one exact object
    Compute {
        #[command(subcommand)]
        object: ComputeObject,
    },
    /// Evaluate one claim (or all) across a sweep range
    Verify {
        /// Claim id from the registry, or "all"
        claim: String,
        /// Inclusive sweep range "A..B"; endpoints need not be admissible
        /// points themselves
        #[arg(long)]
        primes: Option<String>,
        /// Modulus exponent for claims that support more than one
        #[arg(long)]
        power: Option<u32>,
        /// Output shape: text, json (one object per line), or csv
        #[arg(long, default_value = "text")]
        format: String,
        /// Worker threads; defaults to the available cores
        #[arg(long)]
        parallelism: Option<usize>,
    },
    /// Enumerate special numbers up to a bound
    Scan {
        #[arg(value_enum)]
        kind: ScanKind,
        #[arg(long)]
        max: u64,
    },
    /// Lift every root of X^(p-1) + (p-1)! to the requested p-adic
    /// precision and print them in residue order
    Lift {
        p: u64,
        /// Number of p-adic digits (modulus p^precision), at most 4
        #[arg(long, default_value_t = 3)]
        precision: u32,
    },
}

#[derive(Subcommand)]
enum ComputeObject {
    /// Exact Bernoulli number B_n as a reduced fraction
    Bernoulli { n: u64 },
    /// Unsigned Stirling number of the first kind [n, k]
    Stirling { n: u64, k: u64 },
    /// Exact generalized harmonic number H_{n, m} = sum 1/j^m, j = 1..n
    Harmonic { n: u64, m: u32 },
    /// Coefficients c_1..c_l expressing the odd power sum of exponent
    /// 2l+1 in the triangular number a = n(n+1)/2: sum = c_1 a^2 + ... +
    /// c_l a^(l+1)
    Faulhaber { l: u64 },
    /// Coefficients d_1..d_{p+1} with sum of k^p over k = 1..n equal to
    /// d_1 n + d_2 n^2 + ... + d_{p+1} n^(p+1)
    Derby { p: u64 },
    /// q-analog harmonic sum of order k over 1..p-1, reduced mod [p]_q,
    /// printed as coefficients from degree 0 up
    Qharmonic { p: u64, k: u32 },
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanKind {
    /// Squarefree composites with p-1 | n-1 at every prime divisor
    Carmichael,
    /// Composites with p | n/p - 1 at every prime divisor
    Giuga,
    /// Primes dividing the numerator of some B_k, k even, k <= p-3
    Irregular,
    /// Primes with (p-1)! = -1 mod p^2
    WilsonPrime,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut config = RunConfig::default().with_env_cache();
    if cli.cache.is_some() {
        config.cache_path = cli.cache.clone();
    }
    let ctx = Context::new(config);

    if let Some(path) = ctx.config.cache_path.clone() {
        if path.exists() {
            if let Err(e) = ctx.bernoulli.load_cache(&path) {
                eprintln!("warning: could not load cache {}: {e}", path.display());
            }
        }
    }

    let code = match run(&cli, &ctx) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    };

    if let Some(path) = ctx.config.cache_path.clone() {
        if let Err(e) = ctx.bernoulli.save_cache(&path) {
            eprintln!("warning: could not save cache {}: {e}", path.display());
        }
    }
    code
}

fn run(cli: &Cli, ctx: &Context) -> Result<ExitCode, String> {
    match &cli.command {
        Command::Compute { object } => {
            compute(ctx, object)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            claim,
            primes,
            power,
            format,
            parallelism,
        } => verify_command(ctx, claim, primes.as_deref(), *power, format, *parallelism),
        Command::Scan { kind, max } => {
            scan(ctx, *kind, *max)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Lift { p, precision } => {
            lift(*p, *precision)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn compute(ctx: &Context, object: &ComputeObject) -> Result<(), String> {
    match *object {
        ComputeObject::Bernoulli { n } => {
            let b = ctx.bernoulli.value(n).map_err(|e| e.to_string())?;
            println!("{b}");
        }
        ComputeObject::Stirling { n, k } => {
            let v = ctx.stirling.value(n, k).map_err(|e| e.to_string())?;
            println!("{v}");
        }
        ComputeObject::Harmonic { n, m } => {
            println!("{}", stirling_harmonic::harmonic_exact(n, m));
        }
        ComputeObject::Faulhaber { l } => {
            let e = faulhaber::FaulhaberExpansion::new(l).map_err(|e| e.to_string())?;
            let parts: Vec<String> = e.coeffs().iter().map(|c| c.to_string()).collect();
            println!("[{}]", parts.join(", "));
        }
        ComputeObject::Derby { p } => {
            let d = faulhaber::derby_coefficients(p, ctx.config.caps.derby)
                .map_err(|e| e.to_string())?;
            let parts: Vec<String> = d.iter().map(|c| c.to_string()).collect();
            println!("[{}]", parts.join(", "));
        }
        ComputeObject::Qharmonic { p, k } => {
            let h = qanalog::q_harmonic(p, k, false, 1).map_err(|e| e.to_string())?;
            println!("{h}");
        }
    }
    Ok(())
}

fn parse_range(s: &str) -> Result<(u64, u64), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("range '{s}' is not of the form A..B"))?;
    let lo: u64 = lo
        .trim()
        .parse()
        .map_err(|_| format!("range start '{lo}' is not an integer"))?;
    let hi: u64 = hi
        .trim()
        .parse()
        .map_err(|_| format!("range end '{hi}' is not an integer"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn verify_command(
    ctx: &Context,
    claim: &str,
    primes: Option<&str>,
    power: Option<u32>,
    format: &str,
    parallelism: Option<usize>,
) -> Result<ExitCode, String> {
    let format: OutputFormat = format.parse()?;
    let range = primes.map(parse_range).transpose()?;
    let parallelism = parallelism.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    });
    if parallelism == 0 {
        return Err("parallelism must be at least 1".to_string());
    }

    let selected: Vec<&verify::Claim> = if claim == "all" {
        verify::registry().iter().collect()
    } else {
        let c = verify::find(claim).map_err(|e| e.to_string())?;
        if let Some(pw) = power {
            if !c.supports_power(pw) {
                return Err(format!(
                    "claim {} supports modulus powers {:?}, not {pw}",
                    c.id, c.powers
                ));
            }
        }
        vec![c]
    };

    if format == OutputFormat::Csv {
        println!("claim,p,modulus,lhs,rhs,holds,ns");
    }
    let mut total = 0usize;
    let mut failed = 0usize;
    let mut gating_failures = 0usize;
    for c in &selected {
        let (lo, hi) = range.unwrap_or(c.default_range);
        let reports = verify::sweep(ctx, c, lo, hi, power, parallelism);
        for r in &reports {
            total += 1;
            if !r.holds {
                failed += 1;
                if !c.report_only {
                    gating_failures += 1;
                }
            }
            print_report(r, format, c.report_only);
        }
    }
    if format == OutputFormat::Text {
        if failed == 0 {
            println!("all {total} reports hold");
        } else {
            println!("{failed} of {total} reports failed");
        }
    }
    Ok(if gating_failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn print_report(r: &CongruenceReport, format: OutputFormat, report_only: bool) {
    match format {
        OutputFormat::Json => {
            println!("{}", serde_json::to_string(r).expect("report serializes"));
        }
        OutputFormat::Csv => {
            println!(
                "{},{},{},{},{},{},{}",
                csv_field(&r.claim),
                r.p,
                csv_field(&r.modulus),
                csv_field(&r.lhs),
                csv_field(&r.rhs),
                r.holds,
                r.ns
            );
        }
        OutputFormat::Text => {
            let verdict = if r.holds {
                "ok  "
            } else if report_only {
                "note"
            } else {
                "FAIL"
            };
            let mut line = format!("{verdict} {} p={} mod {}", r.claim, r.p, r.modulus);
            if !r.holds {
                line.push_str(&format!(" lhs={} rhs={}", r.lhs, r.rhs));
            }
            if let Some(d) = &r.detail {
                line.push_str(&format!(" ({d})"));
            }
            println!("{line}");
        }
    }
}

fn scan(ctx: &Context, kind: ScanKind, max: u64) -> Result<(), String> {
    let values: Vec<u64> = match kind {
        ScanKind::Carmichael => giuga::enumerate_carmichael(max).map_err(|e| e.to_string())?,
        ScanKind::Giuga => giuga::enumerate_giuga(max).map_err(|e| e.to_string())?,
        ScanKind::Irregular => {
            let mut out = Vec::new();
            for p in primes::primes_in(5, max) {
                if !bernoulli::is_regular(p).map_err(|e| e.to_string())? {
                    out.push(p);
                }
            }
            out
        }
        ScanKind::WilsonPrime => {
            let mut out = Vec::new();
            for p in primes::primes_in(5, max) {
                let m2 = p * p;
                if wilson::factorial_mod_pk(p - 1, p, 2).map_err(|e| e.to_string())? == m2 - 1 {
                    out.push(p);
                }
            }
            out
        }
    };
    let _ = ctx;
    for v in values {
        println!("{v}");
    }
    Ok(())
}

fn lift(p: u64, precision: u32) -> Result<(), String> {
    for k in 1..p {
        let x = wilson::hensel_root(k, p, precision).map_err(|e| e.to_string())?;
        println!("{x}");
    }
    Ok(())
}
