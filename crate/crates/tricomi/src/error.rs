use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, Error)]
pub enum TricomiError {
    /// Gamma or digamma evaluated at a non-positive integer.
    #[error("pole of {function} at non-positive integer argument {argument}")]
    Pole { function: &'static str, argument: f64 },

    /// Argument outside the domain of the requested operation.
    #[error("domain error in {context}: {message}")]
    Domain { context: &'static str, message: String },

    /// A series did not converge within the configured term cap.
    #[error("{context}: no convergence after {terms} terms (|z| = {modulus:.6e})")]
    NoConvergence { context: &'static str, terms: usize, modulus: f64 },

    /// Point lies on a singular locus of the evaluated function.
    #[error("singular locus: {message}")]
    SingularLocus { message: String },

    /// A quadrature did not reach its requested tolerance.
    #[error("quadrature tolerance not met: estimated error {estimated:.3e} > target {target:.3e} ({diagnostic})")]
    ToleranceNotMet { estimated: f64, target: f64, diagnostic: String },

    /// A finite-difference stencil would cross a singular curve.
    #[error("stencil of half-width {h:.3e} crosses a singular curve near ({x}, {y})")]
    StencilCrossesSingularity { h: f64, x: f64, y: f64 },

    /// A rectangle handed to the Green's identity check intersects a singular curve.
    #[error("rectangle [{l0}, {l1}] x [{m0}, {m1}] intersects a singular curve")]
    RectIntersectsSingularity { l0: f64, l1: f64, m0: f64, m1: f64 },
}

impl TricomiError {
    pub fn domain(context: &'static str, message: impl Into<String>) -> Self {
        TricomiError::Domain { context, message: message.into() }
    }

    pub fn singular(message: impl Into<String>) -> Self {
        TricomiError::SingularLocus { message: message.into() }
    }
}
