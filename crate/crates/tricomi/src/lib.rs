//! Numerical evaluation of the fundamental solutions of the Tricomi operator
//! `T = y d^2/dx^2 + d^2/dy^2` relative to a source point `(0, b)` with `b <= 0`,
//! together with the machinery needed to verify their defining identities:
//! singular quadrature for the distributional pairing `<E, T phi>`, Green's
//! identity checks, finite-difference residual scans and source-limit studies.
//!
//! The crate is organized in four layers:
//!
//! * [`specfun`] — gamma/digamma and the Gauss hypergeometric function
//!   `F(1/6,1/6;1;z)` (and `F(7/6,7/6;2;z)`) over every regime the solutions
//!   visit, including the logarithmic continuation for `|z| > 1` and a fixed
//!   side-of-cut convention on `[1, inf)`.
//! * [`geometry`] — characteristic coordinates, region classification and the
//!   continuous branch angle used to take `z^(-1/6)` of a sign-changing
//!   quantity.
//! * [`fundsol`] — the closed-form solution family: the general solution
//!   `E(l,m;l0,m0)`, the Riemann function, the physical-coordinate `E(x,y;0,b)`,
//!   the restricted solutions `E_I..E_IV`, the real combination `E#`, and the
//!   origin solutions `F+`/`F-`.
//! * [`verify`] — bump test functions, graded Gauss quadrature, pairing,
//!   Green's identity, residual scans and limit studies.

pub mod error;
pub mod fundsol;
pub mod geometry;
pub mod specfun;
pub mod verify;

pub use error::TricomiError;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, TricomiError>;

/// Complex scalar type used throughout.
pub type C64 = num_complex::Complex64;
