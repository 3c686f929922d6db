//! Exact combinatorial invariants of highest weight Harish-Chandra modules
//! for the seven Hermitian symmetric Lie-algebra families.
//!
//! Everything is computed in exact rational arithmetic from the Cartan data
//! of the family:
//!
//! - [`rootsys`] builds the root system (positive roots, the highest
//!   noncompact root, the pairing `(x, a^v)`, the weights `rho` and `zeta`)
//!   together with the family constants `r`, `c`, `(rho, beta^v)`.
//! - [`poset`] is the poset of positive noncompact roots: heights, levels,
//!   Hasse covers, the distinguished level antichains `A_k`, and antichain
//!   width via a minimum chain cover.
//! - [`hw`] computes the invariants of the irreducible highest weight module
//!   attached to a weight: its diagram, width, associated-variety index,
//!   Gelfand-Kirillov dimension, the thresholds `z_k(lambda_0)`, and the
//!   unitarity verdict.
//! - [`report`] is the CLI surface: text/JSON reports, DOT export of Hasse
//!   diagrams, and JSON-lines batch processing.
//!
//! Floating point is banned from the core; every value is an integer or a
//! [`Rat`].

pub mod hw;
pub mod poset;
pub mod report;
pub mod rootsys;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rat = num_rational::BigRational;

/// Shorthand for an integer as a [`Rat`].
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for the exact fraction `n/d`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// True iff `x` is an integer.
pub fn is_integer(x: &Rat) -> bool {
    x.is_integer()
}

/// True iff `x` lies in `1/2 + Z`.
pub fn is_half_odd_integer(x: &Rat) -> bool {
    !x.is_integer() && (x + x).is_integer()
}

/// Converts an integer-valued rational to `i64`, panicking otherwise.
pub fn rat_to_i64(x: &Rat) -> i64 {
    assert!(x.is_integer(), "expected an integer, got {x}");
    let n = x.to_integer();
    i64::try_from(&n).unwrap_or_else(|_| panic!("integer out of i64 range: {n}"))
}

/// Converts a nonnegative integer-valued rational to `u64`, panicking otherwise.
pub fn rat_to_u64(x: &Rat) -> u64 {
    assert!(
        x.is_integer() && !x.is_negative(),
        "expected a nonnegative integer, got {x}"
    );
    let n = x.to_integer();
    u64::try_from(&n).unwrap_or_else(|_| panic!("integer out of u64 range: {n}"))
}

/// Smallest element of the lattice `offset + Z` strictly greater than `x`.
///
/// `offset` must be `0` or `1/2`; the two cases cover the integral and
/// half-integral parameter lattices of the non-simply-laced families.
pub fn lattice_strict_ceil(x: &Rat, offset: &Rat) -> Rat {
    debug_assert!(offset.is_zero() || (offset + offset).is_one());
    let shifted = x - offset;
    shifted.floor() + rat_int(1) + offset
}

/// Errors reported by the core modules.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Family parameters violate the family-specific minimums.
    #[error("invalid parameters for {0}")]
    InvalidParams(String),
    /// A weight or coordinate vector has the wrong length.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    /// Operation defined only for the classical families.
    #[error("unsupported family for this operation: {0}")]
    UnsupportedFamily(String),
    /// Index outside the valid range of the operation.
    #[error("{what} out of range: {got} not in [{min}, {max}]")]
    OutOfRange {
        what: &'static str,
        got: i64,
        min: i64,
        max: i64,
    },
    /// The subset is not a lower order ideal.
    #[error("subset is not a lower order ideal")]
    NotLowerIdeal,
    /// `-(lambda, beta^v)/c` is in `[0, r-1]` but not an integer.
    #[error("weight is not in the unitary pattern: -(lambda,beta^v)/c = {0} is not an integer")]
    NotInUnitaryPattern(String),
    /// The weight is not dominant integral for the compact subalgebra.
    #[error("weight is not dominant integral for the compact simple roots")]
    NotDominant,
}
