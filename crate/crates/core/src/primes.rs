//! Primality testing and prime enumeration.
//!
//! Point queries use a deterministic Miller-Rabin with the base set
//! {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}, which is exact for all
//! inputs below 3.3 * 10^24 and therefore for every u64. Range scans use a
//! plain sieve of Eratosthenes; the ranges swept here (a few thousand) never
//! justify anything segmented.

/// (a * b) mod m without overflow; m may be up to 2^63.
#[inline]
pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// a^e mod m by square and multiply.
pub fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    a %= m;
    let mut acc: u64 = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Modular inverse of a mod m for gcd(a, m) = 1; None otherwise.
pub fn invmod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(m as i128) as u64)
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All primes in the inclusive range [lo, hi]. Non-prime endpoints are fine;
/// they simply do not appear in the output.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 || hi < lo {
        return Vec::new();
    }
    let hi_us = hi as usize;
    let mut composite = vec![false; hi_us + 1];
    let mut out = Vec::new();
    for n in 2..=hi_us {
        if !composite[n] {
            if n as u64 >= lo {
                out.push(n as u64);
            }
            let mut m = n * n;
            while m <= hi_us {
                composite[m] = true;
                m += n;
            }
        }
    }
    out
}

/// Smallest-prime-factor table for 0..=limit. spf[0] = spf[1] = 0.
pub fn spf_sieve(limit: usize) -> Vec<u32> {
    let mut spf = vec![0u32; limit + 1];
    for n in 2..=limit {
        if spf[n] == 0 {
            let mut m = n;
            while m <= limit {
                if spf[m] == 0 {
                    spf[m] = n as u32;
                }
                m += n;
            }
        }
    }
    spf
}
