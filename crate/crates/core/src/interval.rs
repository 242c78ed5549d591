//! Certified comparison of expressions in square and fourth roots.
//!
//! Values are enclosed in dyadic intervals `[lo, hi] * 2^-scale` whose
//! endpoints come from integer square roots with directed rounding, so
//! every comparison decided here is a proof, not an approximation. The
//! scale starts at 64 fractional bits and escalates; a comparison that is
//! still undecided at the maximum scale is reported as an error rather
//! than guessed.

use crate::error::Error;
use num_bigint::BigUint;

const SCALES: [u32; 3] = [64, 128, 256];

struct Bounds {
    lo: BigUint,
    hi: BigUint,
}

impl Bounds {
    fn exact(v: BigUint) -> Bounds {
        Bounds { lo: v.clone(), hi: v }
    }

    fn add(self, other: Bounds) -> Bounds {
        Bounds {
            lo: self.lo + other.lo,
            hi: self.hi + other.hi,
        }
    }
}

/// Enclosure of `sqrt(v) * 2^scale`.
fn sqrt_bounds(v: u64, scale: u32) -> Bounds {
    let m = BigUint::from(v) << (2 * scale);
    let lo = m.sqrt(); // floor(sqrt(v) * 2^scale)
    let hi = if &lo * &lo == m { lo.clone() } else { &lo + 1u32 };
    Bounds { lo, hi }
}

/// Enclosure of `v^(1/4) * 2^scale`, via floor(m^(1/4)) = isqrt(isqrt(m)).
fn fourth_root_bounds(v: u64, scale: u32) -> Bounds {
    let m = BigUint::from(v) << (4 * scale);
    let lo = m.sqrt().sqrt();
    let sq = &lo * &lo;
    let hi = if &sq * &sq == m { lo.clone() } else { &lo + 1u32 };
    Bounds { lo, hi }
}

/// Enclosure of `(num/den) * 2^scale`.
fn ratio_bounds(num: u64, den: u64, scale: u32) -> Bounds {
    assert!(den > 0);
    let scaled = BigUint::from(num) << scale;
    let den = BigUint::from(den);
    let lo = &scaled / &den;
    let hi = if &lo * &den == scaled { lo.clone() } else { &lo + 1u32 };
    Bounds { lo, hi }
}

/// Enclosure of `sqrt(num/den) * 2^scale`. The inner division is rounded
/// outward before taking roots, so the enclosure stays valid (its upper
/// endpoint is padded by one ulp).
fn sqrt_ratio_bounds(num: u64, den: u64, scale: u32) -> Bounds {
    assert!(den > 0);
    let scaled = BigUint::from(num) << (2 * scale);
    let den = BigUint::from(den);
    let lo = (&scaled / &den).sqrt();
    let hi = ((&scaled + &den - 1u32) / &den).sqrt() + 1u32;
    Bounds { lo, hi }
}

/// Decide `lhs < rhs` from enclosures; `None` when the intervals overlap.
fn decide(lhs: Bounds, rhs: Bounds) -> Option<bool> {
    if lhs.hi < rhs.lo {
        Some(true)
    } else if lhs.lo >= rhs.hi {
        Some(false)
    } else {
        None
    }
}

/// Certified truth of `sqrt(a) < b^(1/4) + add_num/add_den`.
pub fn sqrt_lt_fourth_root_plus_ratio(
    a: u64,
    b: u64,
    add_num: u64,
    add_den: u64,
) -> Result<bool, Error> {
    for scale in SCALES {
        let lhs = sqrt_bounds(a, scale);
        let rhs = fourth_root_bounds(b, scale).add(ratio_bounds(add_num, add_den, scale));
        if let Some(ans) = decide(lhs, rhs) {
            return Ok(ans);
        }
    }
    Err(Error::UndecidableInterval)
}

/// Certified truth of `lhs < sqrt(rad_num/rad_den) + add_num/add_den`.
/// An exact tie is undecidable by enclosure and reported as an error.
pub fn lt_sqrt_ratio_plus_ratio(
    lhs: u64,
    rad_num: u64,
    rad_den: u64,
    add_num: u64,
    add_den: u64,
) -> Result<bool, Error> {
    for scale in SCALES {
        let left = Bounds::exact(BigUint::from(lhs) << scale);
        let right =
            sqrt_ratio_bounds(rad_num, rad_den, scale).add(ratio_bounds(add_num, add_den, scale));
        if let Some(ans) = decide(left, right) {
            return Ok(ans);
        }
    }
    Err(Error::UndecidableInterval)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem2_style_comparisons() {
        // 1 < 5^(1/4) + 0.65 ≈ 2.145
        assert_eq!(sqrt_lt_fourth_root_plus_ratio(1, 5, 13, 20), Ok(true));
        // 1 < 3^(1/4) + 0.65 ≈ 1.966
        assert_eq!(sqrt_lt_fourth_root_plus_ratio(1, 3, 13, 20), Ok(true));
        // sqrt(9) = 3 vs 2^(1/4) + 0.65 ≈ 1.839
        assert_eq!(sqrt_lt_fourth_root_plus_ratio(9, 2, 13, 20), Ok(false));
    }

    #[test]
    fn exact_endpoints_are_decided() {
        // sqrt(4) = 2 vs 16^(1/4) + 0 = 2: both sides dyadic-exact, so the
        // tie is decided (strict comparison is false), not escalated.
        assert_eq!(sqrt_lt_fourth_root_plus_ratio(4, 16, 0, 1), Ok(false));
        assert_eq!(sqrt_lt_fourth_root_plus_ratio(3, 16, 0, 1), Ok(true));
    }

    #[test]
    fn linear_side_comparisons() {
        // 3 < sqrt(7) + 0.5 ≈ 3.146
        assert_eq!(lt_sqrt_ratio_plus_ratio(3, 7, 1, 1, 2), Ok(true));
        // 3 < sqrt(6) + 0.5 ≈ 2.949
        assert_eq!(lt_sqrt_ratio_plus_ratio(3, 6, 1, 1, 2), Ok(false));
        // 2 < sqrt(17/2) + 0.25 ≈ 3.165
        assert_eq!(lt_sqrt_ratio_plus_ratio(2, 17, 2, 1, 4), Ok(true));
    }

    #[test]
    fn agrees_with_exact_restatements() {
        // n < sqrt(m) + 1/2  ⟺  (2n-1)^2 < 4m, never a tie for integers.
        for n in 1..60u64 {
            for m in 1..200u64 {
                let exact = (2 * n - 1) * (2 * n - 1) < 4 * m;
                assert_eq!(
                    lt_sqrt_ratio_plus_ratio(n, m, 1, 1, 2),
                    Ok(exact),
                    "n={n} m={m}"
                );
            }
        }
        // n < sqrt(p/2) + 1/4  ⟺  (4n-1)^2 < 8p
        for n in 1..40u64 {
            for p in 1..200u64 {
                let exact = (4 * n - 1) * (4 * n - 1) < 8 * p;
                assert_eq!(
                    lt_sqrt_ratio_plus_ratio(n, p, 2, 1, 4),
                    Ok(exact),
                    "n={n} p={p}"
                );
            }
        }
    }

    #[test]
    fn tie_is_reported_not_guessed() {
        // 2 < sqrt(4) + 0 is an exact tie on the sqrt-ratio route, which
        // pads its upper endpoint; it must surface as undecidable.
        assert_eq!(
            lt_sqrt_ratio_plus_ratio(2, 4, 1, 0, 1),
            Err(Error::UndecidableInterval)
        );
    }
}
