//! Classification of residue classes modulo `m` as kth-power residues,
//! non-residues, or non-coprime classes, plus the run statistics derived
//! from a table: the least non-residue `n`, the longest run `R` of
//! consecutive residues, and (for prime moduli) the longest run `N` of
//! consecutive non-residues.

use crate::primes::{gcd, is_prime, mod_pow};

/// How a single residue class relates to the kth-power map.
///
/// Classes not coprime to the modulus are a third kind: they are neither
/// residues nor non-residues, and they interrupt runs of both.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Class {
    Residue,
    NonResidue,
    NonCoprime,
}

/// Full classification of the classes `0..m-1` under the kth-power map.
///
/// Immutable once built; all queries are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueTable {
    m: u64,
    k: u64,
    class_of: Vec<Class>,
}

/// Run statistics for one `(m, k)` pair.
///
/// `max_nonresidue_run` is populated only for prime moduli; the notion is
/// not defined for composite ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunStats {
    pub m: u64,
    pub k: u64,
    /// Least positive coprime non-residue, absent when every unit is a residue.
    pub least_nonresidue: Option<u64>,
    /// Longest run of consecutive integers in `1..m-1` all classified Residue.
    pub max_residue_run: u64,
    /// Longest run of consecutive non-residues, prime moduli only.
    pub max_nonresidue_run: Option<u64>,
}

impl ResidueTable {
    /// Classify every class mod `m` by marking `x^k mod m` over all coprime
    /// `x`. Exact; `m = 1` yields the single class 0, which is a residue.
    pub fn build(m: u64, k: u64) -> ResidueTable {
        assert!(m >= 1, "modulus must be positive");
        assert!(k >= 1, "exponent must be positive");
        let mut class_of = vec![Class::NonCoprime; m as usize];
        let mut coprime = Vec::new();
        for a in 0..m {
            if gcd(a, m) == 1 {
                class_of[a as usize] = Class::NonResidue;
                coprime.push(a);
            }
        }
        for &x in &coprime {
            class_of[mod_pow(x, k, m) as usize] = Class::Residue;
        }
        ResidueTable { m, k, class_of }
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn exponent(&self) -> u64 {
        self.k
    }

    pub fn class_of(&self, a: u64) -> Class {
        self.class_of[(a % self.m) as usize]
    }

    pub fn is_residue(&self, a: u64) -> bool {
        self.class_of(a) == Class::Residue
    }

    /// The residue classes in `0..m-1`, ascending.
    pub fn residues(&self) -> Vec<u64> {
        (0..self.m).filter(|&a| self.is_residue(a)).collect()
    }

    pub fn residue_count(&self) -> u64 {
        self.class_of
            .iter()
            .filter(|&&c| c == Class::Residue)
            .count() as u64
    }

    /// Least positive `a` that is coprime to `m` and not a kth power.
    /// Non-coprime integers are skipped, not counted.
    pub fn least_nonresidue(&self) -> Option<u64> {
        (1..self.m).find(|&a| self.class_of(a) == Class::NonResidue)
    }

    /// Longest run of consecutive integers in `1..m-1` matching `class`.
    /// Class 0 is non-coprime for `m > 1`, so no run crosses a multiple of `m`.
    fn max_run(&self, class: Class) -> u64 {
        let mut best = 0u64;
        let mut cur = 0u64;
        for a in 1..self.m {
            if self.class_of(a) == class {
                cur += 1;
                best = best.max(cur);
            } else {
                cur = 0;
            }
        }
        best
    }

    pub fn run_stats(&self) -> RunStats {
        RunStats {
            m: self.m,
            k: self.k,
            least_nonresidue: self.least_nonresidue(),
            max_residue_run: self.max_run(Class::Residue),
            max_nonresidue_run: if is_prime(self.m) {
                Some(self.max_run(Class::NonResidue))
            } else {
                None
            },
        }
    }
}

/// Whether -1 is a kth power residue mod an odd prime `p`, i.e. whether
/// `(p-1)/gcd(k, p-1)` is even. Agrees with looking up class `p-1` in the
/// table for `(p, k)`.
pub fn minus_one_is_kth_residue(p: u64, k: u64) -> bool {
    debug_assert!(p > 2 && is_prime(p), "p must be an odd prime");
    ((p - 1) / gcd(k, p - 1)).is_multiple_of(2)
}
