//! Special functions: gamma, digamma and the Gauss hypergeometric function
//! in the two parameter sets the fundamental solutions need.
//!
//! All operations are pure functions; safe for concurrent use.

mod gamma;
mod hyp;

pub use gamma::{digamma, gamma, gamma_complex};
pub use hyp::{
    continuation_coeffs, f16, f76, f_at_one, f_connection_at_one, f_continuation_log, f_pfaff,
    f_series, ContinuationCoeffs, CutSide, HypParams, MAX_TERMS, WORK_TOL,
};
