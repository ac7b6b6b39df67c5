use thiserror::Error;

/// Errors raised by the physics and quadrature routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("no Landau scale in free space (magnetic field is zero)")]
    ZeroField,
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
    #[error("quadrature did not converge: relative change {achieved:.3e} under node doubling exceeds {tolerance:.1e}")]
    NonConvergence { achieved: f64, tolerance: f64 },
    #[error("far-field sphere too small: interference/far flux ratio {ratio:.3e} exceeds {limit:.1e}")]
    SphereTooSmall { ratio: f64, limit: f64 },
    #[error("identically zero, slope undefined")]
    IdenticallyZero,
    #[error("function vanishes at R = {radius:e}, log slope undefined")]
    ZeroSample { radius: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Error {
    Error::InvalidParameter {
        name,
        reason: reason.into(),
    }
}
