use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("d must be one of -1, -2, -3, -7, -11 (got {0})")]
    UnsupportedRing(i64),
    #[error("no kth power non-residue exists: gcd(k, N(pi) - 1) = 1")]
    NoNonresidue,
    #[error("element is divisible by the modulus; its residue class carries no information")]
    DivisibleByModulus,
    #[error("interval comparison still undecided at maximum working precision")]
    UndecidableInterval,
    #[error("strict mode requires gcd(a, m) = gcd(a, n) = 1")]
    NotCoprime,
    #[error("modulus eps*n + 2ab must be positive")]
    NonPositiveModulus,
}
