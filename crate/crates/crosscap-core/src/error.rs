use core::fmt;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A tangle parameter violates `|p| >= 2`.
    TangleParameter { p: i64 },
    /// The tuple describes a link, not a knot.
    NotAKnot,
    /// Empty parameter tuple.
    EmptyTuple,
    /// Evaluation or cut below the function domain.
    Domain { detail: &'static str },
    /// Extending an already extended edgepath.
    AlreadyExtended,
    /// Tuples of different lengths compared.
    LengthMismatch { left: usize, right: usize },
    /// The operation requires `N >= 3`.
    TooFewTangles { n: usize },
    /// An edgepath system failed its structural invariants.
    InconsistentSystem { detail: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TangleParameter { p } => {
                write!(f, "tangle parameter {p} violates |p| >= 2")
            }
            Error::NotAKnot => write!(
                f,
                "link, not a knot: need exactly one even entry, or an odd number of odd entries"
            ),
            Error::EmptyTuple => write!(f, "empty parameter tuple"),
            Error::Domain { detail } => write!(f, "domain error: {detail}"),
            Error::AlreadyExtended => write!(f, "edgepath is already extended"),
            Error::LengthMismatch { left, right } => {
                write!(f, "tuple length mismatch: {left} vs {right}")
            }
            Error::TooFewTangles { n } => {
                write!(f, "operation requires at least 3 tangles, got {n}")
            }
            Error::InconsistentSystem { detail } => {
                write!(f, "inconsistent edgepath system: {detail}")
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
