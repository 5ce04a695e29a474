//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by fallible operations in this crate.
///
/// Most of the exact-arithmetic layer is total and returns plain values;
/// errors arise only at the numeric boundary (precision limits, quadrature
/// setup) and on invalid orders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// More decimal digits were requested than the compiled-in pi constant
    /// provides (or than the `LIDZETA_PI_DIGITS` cap allows).
    #[error("requested {requested} digits exceeds stored pi precision of {available} digits")]
    PiPrecisionExceeded { requested: u32, available: u32 },

    /// An order/index argument that must be >= 1 was 0.
    #[error("{what} must be at least 1")]
    ZeroOrder { what: &'static str },

    /// Integration interval with `a >= b`.
    #[error("invalid integration interval: lower bound must be strictly below upper bound")]
    InvalidInterval,

    /// Fewer quadrature nodes than the composite rules support.
    #[error("quadrature needs at least {min} nodes, got {got}")]
    TooFewNodes { min: u32, got: u32 },

    /// Argument outside the domain of a kernel evaluation.
    #[error("argument outside domain {domain}")]
    OutOfDomain { domain: &'static str },

    /// Structurally invalid interpolation data.
    #[error("invalid interpolation data: {reason}")]
    InvalidData { reason: &'static str },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
