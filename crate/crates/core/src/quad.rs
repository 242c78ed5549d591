//! Exact arithmetic in the five norm-Euclidean imaginary quadratic rings
//! (d = -1, -2, -3, -7, -11), irreducible enumeration, power-residue
//! testing in the residue fields, and the minimal-norm non-residue search
//! with its certified norm bound.
//!
//! Elements are stored as integer coordinates in the basis `{1, t}` with
//! `t = sqrt(d)` for d = -1, -2 and `t = (1 + sqrt(d))/2` for the three
//! d ≡ 1 (mod 4), so no half-integers ever appear. All products go through
//! 128-bit intermediates and checked narrowing.

use crate::error::Error;
use crate::interval;
use crate::primes::{gcd, is_prime, legendre_euler};
use crate::report::{CheckName, CheckRecord};
use rayon::prelude::*;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// One of the five norm-Euclidean imaginary quadratic rings, identified by
/// the squarefree d in `K = Q(sqrt(d))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ring {
    d: i8,
}

pub const NORM_EUCLIDEAN_D: [i64; 5] = [-1, -2, -3, -7, -11];

impl Ring {
    pub fn new(d: i64) -> Result<Ring, Error> {
        if NORM_EUCLIDEAN_D.contains(&d) {
            Ok(Ring { d: d as i8 })
        } else {
            Err(Error::UnsupportedRing(d))
        }
    }

    pub fn all() -> [Ring; 5] {
        [
            Ring { d: -1 },
            Ring { d: -2 },
            Ring { d: -3 },
            Ring { d: -7 },
            Ring { d: -11 },
        ]
    }

    pub fn d(self) -> i64 {
        self.d as i64
    }

    /// Whether the integral basis is `{1, (1+sqrt(d))/2}` (d ≡ 1 mod 4).
    fn half_basis(self) -> bool {
        self.d().rem_euclid(4) == 1
    }

    pub fn discriminant(self) -> i64 {
        if self.half_basis() {
            self.d()
        } else {
            4 * self.d()
        }
    }

    /// Coefficients `(A, B, C)` of the norm form `N(x + yt) = Ax^2 + Bxy + Cy^2`.
    pub fn norm_coeffs(self) -> (i64, i64, i64) {
        if self.half_basis() {
            (1, 1, (1 - self.d()) / 4)
        } else {
            (1, 0, -self.d())
        }
    }

    fn unit_coords(self) -> &'static [(i64, i64)] {
        match self.d {
            -1 => &[(1, 0), (-1, 0), (0, 1), (0, -1)],
            -3 => &[(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)],
            _ => &[(1, 0), (-1, 0)],
        }
    }

    pub fn units(self) -> Vec<QuadInt> {
        self.unit_coords()
            .iter()
            .map(|&(x, y)| self.element(x, y))
            .collect()
    }

    pub fn element(self, x: i64, y: i64) -> QuadInt {
        QuadInt { ring: self, x, y }
    }

    pub fn zero(self) -> QuadInt {
        self.element(0, 0)
    }

    pub fn one(self) -> QuadInt {
        self.element(1, 0)
    }

    fn norm_raw(self, x: i128, y: i128) -> i128 {
        let (a, b, c) = self.norm_coeffs();
        (a as i128) * x * x + (b as i128) * x * y + (c as i128) * y * y
    }

    /// `(x1 + y1 t)(x2 + y2 t)` in raw 128-bit coordinates. For the half
    /// basis, `t^2 = t + (d-1)/4`.
    fn mul_raw(self, x1: i128, y1: i128, x2: i128, y2: i128) -> (i128, i128) {
        if self.half_basis() {
            let e = ((self.d() - 1) / 4) as i128;
            (x1 * x2 + y1 * y2 * e, x1 * y2 + x2 * y1 + y1 * y2)
        } else {
            let d = self.d() as i128;
            (x1 * x2 + d * y1 * y2, x1 * y2 + x2 * y1)
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z[t], d={}", self.d)
    }
}

/// An algebraic integer `x + y t` of the chosen ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadInt {
    pub ring: Ring,
    pub x: i64,
    pub y: i64,
}

fn narrow(v: i128) -> i64 {
    i64::try_from(v).expect("quadratic-integer coordinate overflowed i64")
}

impl QuadInt {
    pub fn is_zero(&self) -> bool {
        self.x == 0 && self.y == 0
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == 1
    }

    /// `x + y conj(t)`; for the half basis `conj(t) = 1 - t`.
    pub fn conj(&self) -> QuadInt {
        if self.ring.half_basis() {
            self.ring.element(self.x + self.y, -self.y)
        } else {
            self.ring.element(self.x, -self.y)
        }
    }

    /// Value of the ring's positive-definite norm form; zero only at zero.
    pub fn norm(&self) -> u64 {
        let n = self.ring.norm_raw(self.x as i128, self.y as i128);
        debug_assert!(n >= 0);
        u64::try_from(n).expect("norm overflowed u64")
    }

    /// Division with remainder: `self = q * rhs + r` with `N(r) < N(rhs)`.
    ///
    /// The exact rational quotient is rounded to the nearest lattice point
    /// and a 3x3 neighborhood is searched; norm-Euclideanity of the five
    /// rings guarantees a valid candidate in that neighborhood. The
    /// candidate with minimal `N(r)` wins, ties broken by smallest
    /// `(q.x, q.y)`.
    pub fn euclid_divmod(&self, rhs: &QuadInt) -> (QuadInt, QuadInt) {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        assert!(!rhs.is_zero(), "division by zero");
        let ring = self.ring;
        let t = ring.norm_raw(rhs.x as i128, rhs.y as i128);
        let c = rhs.conj();
        let (gx, gy) = ring.mul_raw(self.x as i128, self.y as i128, c.x as i128, c.y as i128);
        let u0 = round_div(gx, t);
        let v0 = round_div(gy, t);
        let mut best: Option<(i128, i128, i128, i128, i128)> = None;
        for qx in (u0 - 1)..=(u0 + 1) {
            for qy in (v0 - 1)..=(v0 + 1) {
                let (px, py) = ring.mul_raw(qx, qy, rhs.x as i128, rhs.y as i128);
                let rx = self.x as i128 - px;
                let ry = self.y as i128 - py;
                let nr = ring.norm_raw(rx, ry);
                if best.is_none_or(|(bn, ..)| nr < bn) {
                    best = Some((nr, qx, qy, rx, ry));
                }
            }
        }
        let (nr, qx, qy, rx, ry) = best.unwrap();
        assert!(nr < t, "norm-Euclidean division found no valid quotient");
        (
            ring.element(narrow(qx), narrow(qy)),
            ring.element(narrow(rx), narrow(ry)),
        )
    }

    /// Exact divisibility: both coordinates of `alpha * conj(self)` must be
    /// multiples of `N(self)`. No rounding involved.
    pub fn divides(&self, alpha: &QuadInt) -> bool {
        assert_eq!(self.ring, alpha.ring, "ring mismatch");
        assert!(!self.is_zero(), "division by zero");
        let t = self.ring.norm_raw(self.x as i128, self.y as i128);
        let c = self.conj();
        let (gx, gy) = self
            .ring
            .mul_raw(alpha.x as i128, alpha.y as i128, c.x as i128, c.y as i128);
        gx % t == 0 && gy % t == 0
    }

    /// Irreducibility: `N` is a rational prime, or `N = q^2` for an inert
    /// rational prime q (Kronecker symbol -1) with `self` an associate of q.
    pub fn is_irreducible(&self) -> bool {
        let n = self.norm();
        if n <= 1 {
            return false;
        }
        if is_prime(n) {
            return true;
        }
        let q = n.isqrt();
        q * q == n
            && is_prime(q)
            && kronecker_symbol(self.ring.d(), q) == -1
            && self.x % (q as i64) == 0
            && self.y % (q as i64) == 0
    }

    /// The unit multiple with lexicographically smallest `(y, x)`; a fixed
    /// representative of the associate class.
    pub fn canonical_associate(&self) -> QuadInt {
        assert!(!self.is_zero(), "zero has no associate class");
        self.ring
            .units()
            .iter()
            .map(|u| *self * *u)
            .min_by_key(|a| (a.y, a.x))
            .unwrap()
    }

    /// Some representative of `self^e` modulo `modulus` with norm below
    /// `N(modulus)`, by square-and-multiply with Euclidean reduction after
    /// every step. Representatives are not canonical; compare classes with
    /// [`QuadInt::divides`] on differences.
    pub fn pow_mod(&self, e: u64, modulus: &QuadInt) -> QuadInt {
        assert!(!modulus.is_zero(), "zero modulus");
        let reduce = |v: QuadInt| v.euclid_divmod(modulus).1;
        let mut acc = reduce(self.ring.one());
        let mut base = reduce(*self);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = reduce(acc * base);
            }
            e >>= 1;
            if e > 0 {
                base = reduce(base * base);
            }
        }
        acc
    }
}

fn round_div(a: i128, b: i128) -> i128 {
    debug_assert!(b > 0);
    (2 * a + b).div_euclid(2 * b)
}

impl Add for QuadInt {
    type Output = QuadInt;
    fn add(self, rhs: QuadInt) -> QuadInt {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        self.ring.element(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for QuadInt {
    type Output = QuadInt;
    fn sub(self, rhs: QuadInt) -> QuadInt {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        self.ring.element(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for QuadInt {
    type Output = QuadInt;
    fn neg(self) -> QuadInt {
        self.ring.element(-self.x, -self.y)
    }
}

impl Mul for QuadInt {
    type Output = QuadInt;
    fn mul(self, rhs: QuadInt) -> QuadInt {
        assert_eq!(self.ring, rhs.ring, "ring mismatch");
        let (x, y) = self
            .ring
            .mul_raw(self.x as i128, self.y as i128, rhs.x as i128, rhs.y as i128);
        self.ring.element(narrow(x), narrow(y))
    }
}

impl fmt::Display for QuadInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}t", self.x, self.y)
    }
}

/// Kronecker symbol `(d/p)` for prime p: 0 when p divides the field
/// discriminant (`4d` or `d`), the Euler-criterion Legendre symbol for odd
/// p, and the `d mod 8` rule at p = 2.
pub fn kronecker_symbol(d: i64, p: u64) -> i8 {
    debug_assert!(is_prime(p));
    let disc = if d.rem_euclid(4) == 1 { d } else { 4 * d };
    if disc.rem_euclid(p as i64) == 0 {
        0
    } else if p == 2 {
        // here disc = d is odd, so d ≡ 1 (mod 4)
        if d.rem_euclid(8) == 1 {
            1
        } else {
            -1
        }
    } else {
        legendre_euler(d, p)
    }
}

/// All nonzero lattice points with `1 <= N <= bound`, sorted by `(N, x, y)`.
pub fn points_with_norm_at_most(ring: Ring, bound: u64) -> Vec<QuadInt> {
    let b = bound as i128;
    let ad = -ring.d() as i128;
    let mut pts = Vec::new();
    if ring.half_basis() {
        // 4N = (2x + y)^2 + |d| y^2
        let ymax = ((4 * b / ad) as u128).isqrt() as i128;
        for y in -ymax..=ymax {
            let rem = 4 * b - ad * y * y;
            let s = (rem as u128).isqrt() as i128;
            let xmin = (-s - y).div_euclid(2) + if (-s - y).rem_euclid(2) != 0 { 1 } else { 0 };
            let xmax = (s - y).div_euclid(2);
            for x in xmin..=xmax {
                if x != 0 || y != 0 {
                    pts.push(ring.element(narrow(x), narrow(y)));
                }
            }
        }
    } else {
        let ymax = ((b / ad) as u128).isqrt() as i128;
        for y in -ymax..=ymax {
            let xmax = ((b - ad * y * y) as u128).isqrt() as i128;
            for x in -xmax..=xmax {
                if x != 0 || y != 0 {
                    pts.push(ring.element(narrow(x), narrow(y)));
                }
            }
        }
    }
    debug_assert!(pts.iter().all(|p| p.norm() <= bound));
    pts.sort_by_key(|p| (p.norm(), p.x, p.y));
    pts
}

/// Canonical associates of all irreducibles with `2 <= N <= norm_bound`,
/// sorted by `(N, x, y)`.
pub fn enumerate_irreducibles(ring: Ring, norm_bound: u64) -> Vec<QuadInt> {
    let mut classes: std::collections::BTreeSet<QuadInt> = std::collections::BTreeSet::new();
    for p in points_with_norm_at_most(ring, norm_bound) {
        if p.norm() >= 2 && p.is_irreducible() {
            classes.insert(p.canonical_associate());
        }
    }
    let mut out: Vec<QuadInt> = classes.into_iter().collect();
    out.sort_by_key(|p| (p.norm(), p.x, p.y));
    out
}

/// Exact criterion in the residue field of order `N(pi)`: `alpha` is a kth
/// power iff `alpha^((N(pi)-1)/gcd(k, N(pi)-1)) ≡ 1 (mod pi)`.
pub fn is_kth_residue_mod(alpha: &QuadInt, k: u64, pi: &QuadInt) -> Result<bool, Error> {
    debug_assert!(pi.is_irreducible());
    assert!(k >= 1, "exponent must be positive");
    if pi.divides(alpha) {
        return Err(Error::DivisibleByModulus);
    }
    let order = pi.norm() - 1;
    let g = gcd(k, order);
    let rho = alpha.pow_mod(order / g, pi);
    Ok(pi.divides(&(rho - pi.ring.one())))
}

/// First kth power non-residue mod `pi` in the scan order `(N, x, y)`
/// ascending, skipping multiples of `pi`. Its norm is strictly below
/// `N(pi)`. Fails only when `gcd(k, N(pi)-1) = 1`, i.e. when every unit
/// class is a kth power.
pub fn minimal_nonresidue(pi: &QuadInt, k: u64) -> Result<QuadInt, Error> {
    debug_assert!(pi.is_irreducible());
    let order = pi.norm() - 1;
    if gcd(k, order) == 1 {
        return Err(Error::NoNonresidue);
    }
    let limit = order; // a non-residue of norm < N(pi) is guaranteed
    let mut bound = 16.min(limit);
    let mut scanned = 0;
    loop {
        let pts = points_with_norm_at_most(pi.ring, bound);
        for w in &pts[scanned..] {
            if pi.divides(w) {
                continue;
            }
            if !is_kth_residue_mod(w, k, pi)? {
                return Ok(*w);
            }
        }
        assert!(bound < limit, "non-residue below N(pi) must exist");
        scanned = pts.len();
        bound = (bound * 4).min(limit);
    }
}

/// Certified check of `sqrt(N(omega)) < N(pi)^(1/4) + 0.65` for a minimal
/// non-residue `omega`, plus the exact comparison `N(omega) < N(pi)`.
pub fn check_theorem2_bound(pi: &QuadInt, omega: &QuadInt) -> Result<CheckRecord, Error> {
    let np = pi.norm();
    let nw = omega.norm();
    let in_bound = interval::sqrt_lt_fourth_root_plus_ratio(nw, np, 13, 20)?;
    let mut rec = CheckRecord::new(CheckName::Theorem2Bound, np);
    rec.n = Some(nw);
    rec.extra = format!("d={} pi={} omega={}", pi.ring.d(), pi, omega);
    rec.pass = in_bound && nw < np;
    Ok(rec)
}

/// The Theorem 2 sweep: for every ring listed, every canonical irreducible
/// class with `N(pi) <= norm_bound`, and every `k` in `k_set` with
/// `gcd(k, N(pi)-1) > 1`, locate the minimal non-residue and check its
/// bound. Output order is `(ring, N(pi), x, y, k)` and is independent of
/// the worker count.
pub fn sweep_theorem2(
    rings: &[Ring],
    norm_bound: u64,
    k_set: &[u64],
) -> Result<Vec<CheckRecord>, Error> {
    let mut ks: Vec<u64> = k_set.iter().copied().filter(|&k| k >= 1).collect();
    ks.sort_unstable();
    ks.dedup();
    let mut seen = Vec::new();
    let mut out = Vec::new();
    for &ring in rings {
        if seen.contains(&ring) {
            continue;
        }
        seen.push(ring);
        let classes = enumerate_irreducibles(ring, norm_bound);
        let per_pi: Vec<Vec<CheckRecord>> = classes
            .par_iter()
            .map(|pi| {
                let mut recs = Vec::new();
                for &k in &ks {
                    if gcd(k, pi.norm() - 1) <= 1 {
                        continue;
                    }
                    let omega = minimal_nonresidue(pi, k)?;
                    let mut rec = check_theorem2_bound(pi, &omega)?;
                    rec.k = Some(k);
                    recs.push(rec);
                }
                Ok(recs)
            })
            .collect::<Result<_, Error>>()?;
        out.extend(per_pi.into_iter().flatten());
    }
    Ok(out)
}
