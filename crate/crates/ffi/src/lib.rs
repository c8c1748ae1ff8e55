//! C ABI for the congruence library.
//!
//! The surface is deliberately small: an opaque context handle, flat
//! status codes, and out-parameter strings. Structured results (claim
//! reports, sweeps) are returned as JSON so callers in any language parse
//! them with an ordinary JSON library instead of mirroring Rust structs.
//!
//! Ownership rules:
//! - every `*mut CongruenceContext` from [`congruence_context_new`] must be
//!   released with [`congruence_context_free`];
//! - every string written through an out-parameter must be released with
//!   [`congruence_string_free`];
//! - [`congruence_version`] returns a borrowed static string that must NOT
//!   be freed.
//!
//! Every entry point catches panics at the boundary and reports them as
//! `CONGRUENCE_STATUS_PANICKED` instead of unwinding into C.

use congruence::verify;
use congruence::{Context, RunConfig};
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Result of every fallible C entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CongruenceStatus {
    /// The call succeeded and out-parameters are populated.
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// An argument was outside the supported domain (unknown claim id,
    /// unsupported modulus power, empty range, non-UTF-8 string).
    InvalidArgument = 2,
    /// The computation itself reported an error.
    ComputeError = 3,
    /// A panic was caught at the language boundary.
    Panicked = 4,
}

/// Opaque handle over the library context (caches and configuration).
pub struct CongruenceContext {
    inner: Context,
}

/// Library version as a static NUL-terminated string. Borrowed: do not
/// free the returned pointer.
#[no_mangle]
pub extern "C" fn congruence_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr() as *const c_char
}

/// Allocate a context with default configuration. Returns null only if
/// construction panics. Release with [`congruence_context_free`].
#[no_mangle]
pub extern "C" fn congruence_context_new() -> *mut CongruenceContext {
    catch_unwind(|| {
        Box::into_raw(Box::new(CongruenceContext {
            inner: Context::new(RunConfig::default()),
        }))
    })
    .unwrap_or(std::ptr::null_mut())
}

/// Release a context created by [`congruence_context_new`]. Passing null
/// is a no-op; passing any other pointer not produced by that constructor
/// is undefined behavior.
///
/// # Safety
/// `ctx` must be null or a pointer returned by [`congruence_context_new`]
/// that has not already been freed.
#[no_mangle]
pub unsafe extern "C" fn congruence_context_free(ctx: *mut CongruenceContext) {
    if !ctx.is_null() {
        drop(Box::from_raw(ctx));
    }
}

/// Release a string written through an out-parameter of this library.
/// Passing null is a no-op.
///
/// # Safety
/// `s` must be null or a pointer this library wrote through a `char **`
/// out-parameter, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn congruence_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> CongruenceStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            CongruenceStatus::Ok
        }
        Err(_) => CongruenceStatus::ComputeError,
    }
}

unsafe fn read_str<'a>(s: *const c_char) -> Option<&'a str> {
    CStr::from_ptr(s).to_str().ok()
}

fn guard<F: FnOnce() -> CongruenceStatus>(f: F) -> CongruenceStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(CongruenceStatus::Panicked)
}

/// Exact Bernoulli number B_n as a reduced fraction string "num/den"
/// (or an integer string when the denominator is one).
///
/// # Safety
/// `ctx` must be a live context handle and `out` a valid pointer to a
/// `char *`. On `Ok` the string in `*out` is owned by the caller and must
/// be released with [`congruence_string_free`].
#[no_mangle]
pub unsafe extern "C" fn congruence_bernoulli(
    ctx: *const CongruenceContext,
    n: u64,
    out: *mut *mut c_char,
) -> CongruenceStatus {
    if ctx.is_null() || out.is_null() {
        return CongruenceStatus::NullArgument;
    }
    let ctx = &*ctx;
    guard(|| match ctx.inner.bernoulli.value(n) {
        Ok(b) => write_string(out, b.to_string()),
        Err(_) => CongruenceStatus::ComputeError,
    })
}

/// Newline-separated list of every registered claim id.
///
/// # Safety
/// `out` must be a valid pointer to a `char *`; on `Ok` the caller owns
/// the string and must release it with [`congruence_string_free`].
#[no_mangle]
pub unsafe extern "C" fn congruence_claim_ids(out: *mut *mut c_char) -> CongruenceStatus {
    if out.is_null() {
        return CongruenceStatus::NullArgument;
    }
    guard(|| {
        let ids: Vec<&str> = verify::registry().iter().map(|c| c.id).collect();
        write_string(out, ids.join("\n"))
    })
}

/// Evaluate one claim at one point and return the report as a JSON object
/// (fields: claim, p, modulus, lhs, rhs, holds, ns, detail). `power`
/// selects the modulus exponent; pass 0 for the claim's default. The point
/// is evaluated as given — domain filtering applies only to sweeps.
///
/// # Safety
/// `ctx` must be a live context handle, `claim_id` a NUL-terminated
/// string, and `out` a valid pointer to a `char *`. On `Ok` the caller
/// owns the string in `*out`.
#[no_mangle]
pub unsafe extern "C" fn congruence_run_claim(
    ctx: *const CongruenceContext,
    claim_id: *const c_char,
    point: u64,
    power: u32,
    out: *mut *mut c_char,
) -> CongruenceStatus {
    if ctx.is_null() || claim_id.is_null() || out.is_null() {
        return CongruenceStatus::NullArgument;
    }
    let ctx = &*ctx;
    let Some(id) = read_str(claim_id) else {
        return CongruenceStatus::InvalidArgument;
    };
    guard(|| {
        let Ok(claim) = verify::find(id) else {
            return CongruenceStatus::InvalidArgument;
        };
        if power != 0 && !claim.supports_power(power) {
            return CongruenceStatus::InvalidArgument;
        }
        let selected = if power == 0 { None } else { Some(power) };
        let report = verify::run_claim(&ctx.inner, claim, point, selected);
        match serde_json::to_string(&report) {
            Ok(json) => write_string(out, json),
            Err(_) => CongruenceStatus::ComputeError,
        }
    })
}

/// Sweep one claim over the inclusive range `lo..hi` and return one JSON
/// report per line. `power` as in [`congruence_run_claim`]; `parallelism`
/// 0 means one worker per available core. When `out_failed` is non-null it
/// receives the number of reports that did not hold.
///
/// # Safety
/// `ctx` must be a live context handle, `claim_id` a NUL-terminated
/// string, `out` a valid pointer to a `char *`, and `out_failed` null or a
/// valid `uint64_t *`. On `Ok` the caller owns the string in `*out`.
#[no_mangle]
pub unsafe extern "C" fn congruence_sweep(
    ctx: *const CongruenceContext,
    claim_id: *const c_char,
    lo: u64,
    hi: u64,
    power: u32,
    parallelism: u32,
    out: *mut *mut c_char,
    out_failed: *mut u64,
) -> CongruenceStatus {
    if ctx.is_null() || claim_id.is_null() || out.is_null() {
        return CongruenceStatus::NullArgument;
    }
    let ctx = &*ctx;
    let Some(id) = read_str(claim_id) else {
        return CongruenceStatus::InvalidArgument;
    };
    if lo > hi {
        return CongruenceStatus::InvalidArgument;
    }
    guard(|| {
        let Ok(claim) = verify::find(id) else {
            return CongruenceStatus::InvalidArgument;
        };
        if power != 0 && !claim.supports_power(power) {
            return CongruenceStatus::InvalidArgument;
        }
        let selected = if power == 0 { None } else { Some(power) };
        let workers = if parallelism == 0 {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        } else {
            parallelism as usize
        };
        let reports = verify::sweep(&ctx.inner, claim, lo, hi, selected, workers);
        if !out_failed.is_null() {
            *out_failed = reports.iter().filter(|r| !r.holds).count() as u64;
        }
        let mut lines = Vec::with_capacity(reports.len());
        for r in &reports {
            match serde_json::to_string(r) {
                Ok(json) => lines.push(json),
                Err(_) => return CongruenceStatus::ComputeError,
            }
        }
        write_string(out, lines.join("\n"))
    })
}
