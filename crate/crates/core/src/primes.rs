//! Plain integer arithmetic shared by the residue and ring modules: a
//! sieve, trial-division primality, gcd, and exact modular exponentiation.

/// All primes `<= limit`, by sieve of Eratosthenes.
pub fn sieve(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if composite[p] {
            continue;
        }
        primes.push(p as u64);
        let mut q = p * p;
        while q <= n {
            composite[q] = true;
            q += p;
        }
    }
    primes
}

/// Trial-division primality test. Desk scale only; no probabilistic shortcuts.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// `base^exp mod modulus` with 128-bit intermediates; `modulus >= 1`.
pub fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    assert!(modulus >= 1, "modulus must be positive");
    if modulus == 1 {
        return 0;
    }
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = (base as u128) % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Floor of the integer square root.
pub fn isqrt(n: u64) -> u64 {
    n.isqrt()
}

/// Legendre symbol `(a/p)` for an odd prime `p`, by Euler's criterion:
/// `a^((p-1)/2) mod p` is 1 for residues and `p-1` for non-residues.
pub fn legendre_euler(a: i64, p: u64) -> i8 {
    debug_assert!(p > 2 && is_prime(p), "p must be an odd prime");
    let r = a.rem_euclid(p as i64) as u64;
    if r == 0 {
        return 0;
    }
    let t = mod_pow(r, (p - 1) / 2, p);
    if t == 1 {
        1
    } else {
        debug_assert_eq!(t, p - 1);
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_small() {
        assert_eq!(sieve(1), Vec::<u64>::new());
        assert_eq!(sieve(2), vec![2]);
        assert_eq!(sieve(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert_eq!(sieve(10_000).len(), 1229);
    }

    #[test]
    fn sieve_agrees_with_trial_division() {
        let primes = sieve(2_000);
        for n in 0..=2_000u64 {
            assert_eq!(primes.contains(&n), is_prime(n), "n={n}");
        }
    }

    #[test]
    fn mod_pow_matches_naive() {
        for m in 1..50u64 {
            for b in 0..m {
                let mut acc = 1 % m;
                for e in 0..12u64 {
                    assert_eq!(mod_pow(b, e, m), acc, "b={b} e={e} m={m}");
                    acc = acc * b % m;
                }
            }
        }
    }

    #[test]
    fn gcd_basics() {
        assert_eq!(gcd(0, 0), 0);
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(35, 64), 1);
    }

    #[test]
    fn legendre_small_table() {
        // squares mod 7 are {1,2,4}
        assert_eq!(legendre_euler(1, 7), 1);
        assert_eq!(legendre_euler(2, 7), 1);
        assert_eq!(legendre_euler(3, 7), -1);
        assert_eq!(legendre_euler(-1, 7), -1); // 7 ≡ 3 (mod 4)
        assert_eq!(legendre_euler(-1, 13), 1); // 13 ≡ 1 (mod 4)
        assert_eq!(legendre_euler(21, 7), 0);
    }

    #[test]
    fn isqrt_boundaries() {
        for n in 0..10_000u64 {
            let s = isqrt(n);
            assert!(s * s <= n && (s + 1) * (s + 1) > n);
        }
    }
}
