use alloc::string::String;
use core::fmt;

/// Errors surfaced by the algebra engine.
///
/// Everything here is a hard precondition violation or a resource cap; the
/// engine never returns approximate results.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two values from different polynomial rings were combined.
    RingMismatch,
    /// Exponent vectors of different lengths were compared.
    ArityMismatch { left: usize, right: usize },
    /// An operation that needs a nonzero polynomial received zero.
    ZeroPolynomial,
    /// An operation that needs a nonzero module received the zero module.
    ZeroModule,
    /// Colon by the zero ideal.
    ZeroIdeal,
    /// The reduction-step budget was exhausted.
    ResourceExhausted { steps: u64 },
    /// A resolution window shorter than the query needs.
    ResolutionCapExceeded { needed: usize, cap: usize },
    /// Ring construction rejected the request (arity cap, bad characteristic, ...).
    InvalidRing(String),
    /// A domain precondition failed (documented per operation).
    Precondition(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RingMismatch => write!(f, "values belong to different rings"),
            Error::ArityMismatch { left, right } => {
                write!(f, "exponent vectors have different arity: {left} vs {right}")
            }
            Error::ZeroPolynomial => write!(f, "zero polynomial has no leading term"),
            Error::ZeroModule => write!(f, "operation is undefined for the zero module"),
            Error::ZeroIdeal => write!(f, "colon by the zero ideal"),
            Error::ResourceExhausted { steps } => {
                write!(f, "reduction budget exhausted after {steps} steps")
            }
            Error::ResolutionCapExceeded { needed, cap } => {
                write!(f, "resolution window of length {needed} exceeds cap {cap}")
            }
            Error::InvalidRing(msg) => write!(f, "invalid ring: {msg}"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
