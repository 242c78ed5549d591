//! Fractional-part counts `r_l(a)` and the counting identity
//! `r_m(a) - eps * r_n(a) = floor(a/2) * b` for `m - eps*n = 2ab`, in both
//! the strict form (`{ar/l} > 1/2`, coprimality required) and the weak
//! form (`>= 1/2`, no coprimality, with a correction term). Also the
//! Gauss-lemma evaluation of the Legendre symbol from the strict count.
//!
//! The comparison `{ar/l} > 1/2` is evaluated as `2*(ar mod l) > l`, so
//! everything stays in integers.

use crate::error::Error;
use crate::primes::{gcd, is_prime};
use crate::report::{CheckName, CheckRecord};
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMode {
    /// `{ar/l} > 1/2`; the identity requires gcd(a,m) = gcd(a,n) = 1.
    Strict,
    /// `{ar/l} >= 1/2`; no coprimality condition, corrected delta.
    Weak,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// One instance `(a, b, n, eps)` of the identity, with the derived modulus
/// `m = eps*n + 2ab > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityCase {
    pub a: u64,
    pub b: u64,
    pub n: u64,
    pub eps: Sign,
    pub m: u64,
    pub mode: CountMode,
}

impl IdentityCase {
    pub fn new(a: u64, b: u64, n: u64, eps: Sign, mode: CountMode) -> Result<IdentityCase, Error> {
        assert!(a >= 1 && b >= 1 && n >= 1, "parameters must be positive");
        let m = eps.value() * n as i64 + 2 * (a * b) as i64;
        if m <= 0 {
            return Err(Error::NonPositiveModulus);
        }
        let case = IdentityCase {
            a,
            b,
            n,
            eps,
            m: m as u64,
            mode,
        };
        // m ≡ eps*n (mod a), so the two gcds always agree
        debug_assert_eq!(gcd(case.a, case.m), gcd(case.a, case.n));
        Ok(case)
    }
}

/// `r_l(a)`: how many integers `0 < r < l/2` have `{ar/l} > 1/2` (strict)
/// or `>= 1/2` (weak).
pub fn half_count(l: u64, a: u64, mode: CountMode) -> u64 {
    assert!(l >= 1, "l must be positive");
    let mut count = 0;
    for r in 1..=(l - 1) / 2 {
        let residue = a as u128 * r as u128 % l as u128;
        let hit = match mode {
            CountMode::Strict => 2 * residue > l as u128,
            CountMode::Weak => 2 * residue >= l as u128,
        };
        if hit {
            count += 1;
        }
    }
    count
}

/// The identity's right-hand side: `floor(a/2) * b`, minus
/// `floor(gcd(a,n)/2)` in weak mode when `eps = -1` and `n/gcd(a,n)` is odd.
pub fn expected_delta(case: &IdentityCase) -> i64 {
    let base = (case.a / 2) as i64 * case.b as i64;
    match case.mode {
        CountMode::Strict => base,
        CountMode::Weak => {
            let g = gcd(case.a, case.n);
            if case.eps == Sign::Minus && (case.n / g) % 2 == 1 {
                base - (g / 2) as i64
            } else {
                base
            }
        }
    }
}

/// Check `r_m(a) - eps * r_n(a) = expected_delta` exactly.
pub fn verify_case(case: &IdentityCase) -> Result<CheckRecord, Error> {
    if case.mode == CountMode::Strict && (gcd(case.a, case.m) != 1 || gcd(case.a, case.n) != 1) {
        return Err(Error::NotCoprime);
    }
    let lhs = half_count(case.m, case.a, case.mode) as i64
        - case.eps.value() * half_count(case.n, case.a, case.mode) as i64;
    let name = match case.mode {
        CountMode::Strict => CheckName::IdentityStrict,
        CountMode::Weak => CheckName::IdentityWeak,
    };
    let mut rec = CheckRecord::new(name, case.m);
    rec.extra = format!(
        "a={} b={} n={} eps={:+}",
        case.a,
        case.b,
        case.n,
        case.eps.value()
    );
    rec.pass = lhs == expected_delta(case);
    Ok(rec)
}

/// All cases with `a <= a_max`, `b <= b_max`, `n <= n_max`, both signs,
/// `m > 0`, filtered by the mode's coprimality requirement. Order is
/// `(a, b, n, eps)` with `+1` before `-1`.
pub fn enumerate_cases(a_max: u64, b_max: u64, n_max: u64, mode: CountMode) -> Vec<IdentityCase> {
    assert!(a_max >= 1 && b_max >= 1 && n_max >= 1);
    let mut out = Vec::new();
    for a in 1..=a_max {
        for b in 1..=b_max {
            for n in 1..=n_max {
                if mode == CountMode::Strict && gcd(a, n) != 1 {
                    continue;
                }
                for eps in [Sign::Plus, Sign::Minus] {
                    if let Ok(case) = IdentityCase::new(a, b, n, eps, mode) {
                        out.push(case);
                    }
                }
            }
        }
    }
    out
}

/// Verify every enumerated case; one record per case, enumeration order.
pub fn sweep_identity(a_max: u64, b_max: u64, n_max: u64, mode: CountMode) -> Vec<CheckRecord> {
    enumerate_cases(a_max, b_max, n_max, mode)
        .par_iter()
        .map(|case| verify_case(case).expect("enumeration respects the mode's preconditions"))
        .collect()
}

/// Legendre symbol by Gauss's lemma: `(-1)^(r_p(a))` with the strict count.
pub fn gauss_lemma_symbol(a: i64, p: u64) -> Result<i8, Error> {
    debug_assert!(p > 2 && is_prime(p), "p must be an odd prime");
    let r = a.rem_euclid(p as i64) as u64;
    if r == 0 {
        return Err(Error::DivisibleByModulus);
    }
    Ok(if half_count(p, r, CountMode::Strict).is_multiple_of(2) {
        1
    } else {
        -1
    })
}

/// One record per odd prime `p <= p_max`: pass iff the Gauss-lemma symbol
/// matches the Euler-criterion Legendre symbol for every `1 <= a < p`.
pub fn sweep_gauss(p_max: u64) -> Vec<CheckRecord> {
    crate::primes::sieve(p_max)
        .par_iter()
        .filter(|&&p| p > 2)
        .map(|&p| {
            let ok = (1..p).all(|a| {
                gauss_lemma_symbol(a as i64, p).unwrap() == crate::primes::legendre_euler(a as i64, p)
            });
            let mut rec = CheckRecord::new(CheckName::GaussLemma, p);
            rec.pass = ok;
            rec
        })
        .collect()
}
