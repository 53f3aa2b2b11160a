//! Exact-arithmetic toolkit for sum-of-squares certification of diagonal
//! Hermitian forms under prolongation.
//!
//! A real diagonal Hermitian form is identified with the rational coefficient
//! vector `h` of the real polynomial obtained by the substitution
//! `x^a = |z^a|^2`; multiplying the form by `||z||^2` then acts on `h` as a
//! sparse 0/1 matrix `J_{n,d}` (the prolongation matrix). Everything in this
//! crate is built on that picture:
//!
//! * [`combinatorics`] — big-integer binomials, Macaulay representations of
//!   integers and the growth operator `N^<d>`, and the conjectured rank bands.
//! * [`monomials`] — multi-indices, left-lexicographic bases, monomial spaces
//!   and their shadows.
//! * [`prolongation`] — the matrix `J_{n,d}` (direct and block-recursive
//!   constructions), coefficient vectors, and the block decomposition by
//!   maximal `x_1`-power with its slack vectors.
//! * [`counting`] — the sign-counting profile `(P, N, Z)` and the rank `R`.
//! * [`certify`] — SOS certification of a form and of its first prolongation,
//!   including inhomogeneous polynomials degree by degree.
//! * [`ratlp`] — exact rational linear feasibility with Farkas certificates.
//! * [`search`] — exact computation of the minimal prolongation rank `R_{n,d}`
//!   by branch-and-bound over zero-patterns, with replayable certificates.
//! * [`lemmas`] — a property-check harness for the counting inequalities and
//!   rank bounds the other modules rely on.
//! * [`cli`] — the `sosrank` command-line interface.
//!
//! All arithmetic is exact: coefficients are arbitrary-precision rationals and
//! sign tests are never tolerance-based.

pub mod cli;
pub mod combinatorics;
pub mod counting;
pub mod certify;
pub mod lemmas;
pub mod monomials;
pub mod prolongation;
pub mod ratlp;
pub mod rational;
pub mod search;

pub use rational::Rat;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("index {index} out of range (size {size})")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("segment size {size} exceeds basis size {max}")]
    SegmentTooLarge { size: usize, max: usize },
    #[error("operation requires at least two variables")]
    TooFewVariables,
    #[error("coefficient vectors have mixed variable counts")]
    MixedVariableCount,
    #[error("duplicate degree {0} in polynomial parts")]
    DuplicateDegree(u32),
    #[error("system is not positively homogeneous: row {0} has nonzero rhs")]
    NotHomogeneous(usize),
    #[error("negative entry where a nonnegative vector is required")]
    NegativeEntry,
    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
    #[error("cannot parse rational number from {0:?}")]
    BadRational(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
