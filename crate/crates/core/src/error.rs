use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Adaptive quadrature could not reach its tolerance.
    QuadratureFailure {
        estimate: f64,
        error: f64,
        tolerance: f64,
    },
    /// A parameter lies outside the domain of the operation.
    Domain(String),
    /// A curve piece is degenerate (zero length, non-finite data, ...).
    InvalidPiece { index: usize, reason: &'static str },
    /// Consecutive pieces do not join, or the chain does not close.
    OpenChain { index: usize, gap: f64 },
    /// The shape has no pieces.
    Empty,
    /// The enclosed signed area is zero.
    ZeroArea,
    /// The shape does not satisfy `area == semiperimeter`.
    NotUnitShape { area: f64, semiperimeter: f64 },
    /// An iterative search ran out of iterations.
    NotConverged { iterations: usize },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::QuadratureFailure {
                estimate,
                error,
                tolerance,
            } => write!(
                f,
                "quadrature failed: estimate {estimate:e}, error {error:e} > tolerance {tolerance:e}"
            ),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::InvalidPiece { index, reason } => {
                write!(f, "invalid curve piece #{index}: {reason}")
            }
            Error::OpenChain { index, gap } => {
                write!(f, "piece #{index} does not join its successor (gap {gap:e})")
            }
            Error::Empty => f.write_str("shape has no pieces"),
            Error::ZeroArea => f.write_str("shape encloses zero area"),
            Error::NotUnitShape {
                area,
                semiperimeter,
            } => write!(
                f,
                "not a unit shape: area {area} != semiperimeter {semiperimeter}"
            ),
            Error::NotConverged { iterations } => {
                write!(f, "search did not converge after {iterations} iterations")
            }
        }
    }
}

impl core::error::Error for Error {}
