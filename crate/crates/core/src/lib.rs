//! Exact-arithmetic library for consecutive power-residue statistics.
//!
//! The pieces:
//!
//! - [`residue`]: kth-power residue tables mod `m` and the run statistics
//!   `n_k(m)`, `R_k(m)`, `N_k(p)`.
//! - [`sweeps`]: exact-integer checks of the run-statistic inequalities
//!   (with documented exceptions) over prime and composite ranges.
//! - [`quad`]: the five norm-Euclidean imaginary quadratic rings —
//!   arithmetic, Euclidean division, irreducibles, residue-field power
//!   residues, and the minimal-norm non-residue bound.
//! - [`identity`]: the fractional-part counting identity in strict and
//!   weak form, and the Gauss-lemma route to the Legendre symbol.
//! - [`interval`]: certified dyadic-interval comparisons for the one check
//!   that mixes square and fourth roots.
//! - [`report`]: check records and their CSV/JSON forms.
//!
//! Everything is pure and immutable after construction; sweeps parallelize
//! internally and produce output independent of the worker count.

pub mod error;
pub mod identity;
pub mod interval;
pub mod primes;
pub mod quad;
pub mod report;
pub mod residue;
pub mod sweeps;

pub use error::Error;
pub use identity::{CountMode, IdentityCase, Sign};
pub use quad::{QuadInt, Ring};
pub use report::{CheckName, CheckRecord};
pub use residue::{Class, ResidueTable, RunStats};
