use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Operands live in different rings.
    RingMismatch,
    /// Inversion of a non-unit ring element.
    NotAUnit,
    /// The determinant is not a unit of the ring.
    NotInvertible,
    /// Matrix or vector sizes do not conform.
    SizeMismatch { expected: usize, found: usize },
    /// A generator or coordinate index is outside `1..=bound`.
    IndexOutOfRange { index: usize, bound: usize },
    /// A dimension the operation does not support.
    UnsupportedDimension { n: usize, reason: &'static str },
    /// The matrix does not have the recursive Suslin shape.
    NotSuslin,
    /// A group membership precondition failed.
    NotInGroup(&'static str),
    /// An identity guaranteed by theory failed; this is a bug.
    Invariant(&'static str),
    /// Malformed descriptor or argument.
    Invalid(String),
    /// Text-grammar error at byte offset `pos`.
    Parse { pos: usize, msg: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RingMismatch => f.write_str("ring mismatch"),
            Error::NotAUnit => f.write_str("not a unit"),
            Error::NotInvertible => f.write_str("matrix not invertible over ring"),
            Error::SizeMismatch { expected, found } => {
                write!(f, "size mismatch: expected {expected}, found {found}")
            }
            Error::IndexOutOfRange { index, bound } => {
                write!(f, "index {index} out of range 1..={bound}")
            }
            Error::UnsupportedDimension { n, reason } => {
                write!(f, "unsupported dimension n = {n}: {reason}")
            }
            Error::NotSuslin => f.write_str("not a Suslin matrix"),
            Error::NotInGroup(what) => write!(f, "not in {what}"),
            Error::Invariant(what) => write!(f, "internal invariant violated: {what}"),
            Error::Invalid(msg) => f.write_str(msg),
            Error::Parse { pos, msg } => write!(f, "parse error at {pos}: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
