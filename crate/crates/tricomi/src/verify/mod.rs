//! Executable checks of the analytic identities: bump test functions,
//! singular quadrature for the distributional pairing, Green's-identity
//! contour comparisons, finite-difference residual scans, and b -> 0 limit
//! studies.

mod bump;
mod green;
mod limits;
mod pairing;
pub mod quad;
mod residual;

pub use bump::{bump_t, BumpSpec};
pub use green::{green_identity_check, CharRect};
pub use limits::{geometric_b_sequence, is_converging, limit_study};
pub use pairing::{pairing, PairingReport, QuadSpec};
pub use residual::{residual_scan, ResidualForm};
