use core::fmt;

/// Errors raised by the decomposition toolkit.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Operand shapes do not fit together.
    Dimension(DimensionMismatch),
    /// An index fell outside `0..bound`.
    Index { index: usize, bound: usize },
    /// The input lies outside the domain of the operation.
    Domain(&'static str),
    /// A normalization precondition failed; `deficit` is `expected - actual`.
    Normalization { expected: f64, actual: f64, deficit: f64 },
    /// An iterative solver ran out of sweeps.
    NoConvergence { sweeps: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionMismatch {
    pub op: &'static str,
    pub expected: (usize, usize),
    pub found: (usize, usize),
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn dims(op: &'static str, expected: (usize, usize), found: (usize, usize)) -> Self {
        Error::Dimension(DimensionMismatch { op, expected, found })
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Dimension(m) => write!(
                f,
                "{}: expected shape {}x{}, found {}x{}",
                m.op, m.expected.0, m.expected.1, m.found.0, m.found.1
            ),
            Error::Index { index, bound } => {
                write!(f, "index {index} out of range 0..{bound}")
            }
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Normalization { expected, actual, deficit } => write!(
                f,
                "operator is not unitary-normalized: sum of squared coefficients is {actual}, \
                 expected {expected} (deficit {deficit:e})"
            ),
            Error::NoConvergence { sweeps } => {
                write!(f, "Jacobi iteration did not converge after {sweeps} sweeps")
            }
        }
    }
}

impl core::error::Error for Error {}
