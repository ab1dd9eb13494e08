//! Exact computation of Rouquier blocks of cyclotomic Ariki-Koike algebras.
//!
//! The Ariki-Koike algebra of the complex reflection group `G(d,1,r)` carries
//! one parameter `u_j` per eigenvalue of the order-`d` generator and one
//! parameter `x` for the braid generators. A cyclotomic specialization
//! `u_j -> zeta_d^j q^{m_j}`, `x -> q^n` is described by integer data
//! `(d, r, m_0..m_{d-1}, n)`, and the blocks of the specialized algebra over
//! the Rouquier ring partition the `d`-multipartitions of `r`.
//!
//! Two independent routes to that partition are implemented:
//!
//! * [`blocks::rouquier_blocks`] joins, in the partition lattice, one
//!   combinatorial grouping per essential hyperplane containing the
//!   specialization (charged-content equality on a component pair, or the
//!   size-vector grouping for `n = 0`);
//! * [`blocks::rouquier_blocks_residue_oracle`] closes the per-prime
//!   residue-multiset equivalence of node residues over all primes dividing
//!   `d^r * r!`.
//!
//! Supporting layers: multipartition combinatorics and (charged) symbols
//! ([`combinatorics`]), closed-form arithmetic facts about roots of unity in
//! `Z[zeta_d]` ([`cyclotomics`]), essential hyperplanes ([`hyperplanes`]),
//! and factored Schur elements with their `a`/`A` invariants and bad primes
//! ([`schur`]). All arithmetic is exact integer/rational arithmetic; no
//! floating point anywhere.

use std::fmt;

pub mod blocks;
pub mod combinatorics;
pub mod cyclotomics;
pub mod hyperplanes;
pub mod render;
pub mod schur;

/// Errors raised by the exact kernels.
///
/// These are contract violations (bad input data), not computational
/// failures; every operation on valid data is total.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Parts not positive or not weakly decreasing.
    InvalidPartition(String),
    /// A multipartition needs d >= 1 components.
    EmptyMultiPartition,
    /// Weight system length differs from the number of components.
    WeightLength { expected: usize, got: usize },
    /// Exponent w is 0 mod d, so zeta_d^w - 1 = 0 and the unit/valuation
    /// questions are not posed.
    ZeroExponent { d: u64 },
    /// The symbol shift L must be at least the height of the multipartition.
    ShiftTooSmall { height: u64, got: u64 },
    /// Schur elements are only defined for multipartitions of r >= 1.
    EmptySchur,
    /// Specialization data does not match the object it is applied to.
    SpecializationMismatch(String),
    /// The hyperplane is not essential for the given (d, r).
    NotEssential(String),
    /// Set partitions over different index universes cannot be joined.
    UniverseMismatch { expected: usize, got: usize },
    /// The net order of vanishing at x = 1 of a factored Schur element is
    /// nonzero under an n = 0 specialization; the specialized element would
    /// be zero or undefined, contradicting semisimplicity over K(q).
    InconsistentVanishingOrder { order: i64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPartition(msg) => write!(f, "invalid partition: {msg}"),
            Error::EmptyMultiPartition => write!(f, "multipartition needs at least one component"),
            Error::WeightLength { expected, got } => {
                write!(f, "weight system has length {got}, expected {expected}")
            }
            Error::ZeroExponent { d } => {
                write!(f, "exponent is 0 mod {d}; 1 - zeta^w is only considered for w != 0")
            }
            Error::ShiftTooSmall { height, got } => {
                write!(f, "symbol shift L = {got} is smaller than the height {height}")
            }
            Error::EmptySchur => write!(f, "Schur elements require a multipartition of r >= 1"),
            Error::SpecializationMismatch(msg) => write!(f, "specialization mismatch: {msg}"),
            Error::NotEssential(msg) => write!(f, "hyperplane not essential: {msg}"),
            Error::UniverseMismatch { expected, got } => {
                write!(f, "set partition over universe of size {got}, expected {expected}")
            }
            Error::InconsistentVanishingOrder { order } => write!(
                f,
                "net order of vanishing at x = 1 is {order}, expected 0 under an n = 0 specialization"
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
