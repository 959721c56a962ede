//! Exact arithmetic on truncated power series over arbitrary-precision
//! rationals, in one and two variables, together with the closed-form
//! generating function expansions used by the fast counting pipelines.
//!
//! Every operation is exact on the retained coefficient window: truncation
//! only ever drops orders beyond the declared bound, it never rounds.

mod bi;
mod gf;
mod uni;
mod words_gf;

pub use bi::TruncatedSeries2;
pub use gf::{
    gf_102_201_terms, gf_102_210_terms, min_poly_000_102, min_poly_010_102, min_poly_102_201,
    min_poly_102_210, minimal_poly_residual, poly_from, poly_mul,
};
pub use uni::TruncatedSeries1;
pub use words_gf::expand_F_words;

use num::{BigInt, BigRational};

/// Structural failures of series operations. Divisibility failures signal a
/// formula transcription error, not bad input, so they carry the offending
/// factor.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("division requires a divisor with nonzero constant term")]
    NonUnitDivisor,
    #[error("square root requires constant term 1, found {found}")]
    SqrtConstantNotOne { found: String },
    #[error("the given order-zero root does not square to the order-zero coefficient")]
    SqrtRootMismatch,
    #[error("series is not divisible by {factor}")]
    NotDivisible { factor: String },
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
