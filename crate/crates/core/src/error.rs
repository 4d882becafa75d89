use alloc::string::String;
use core::fmt;

/// Errors raised by the algebraic layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two series with different truncation orders were combined.
    OrderMismatch { left: usize, right: usize },
    /// Inversion of a series whose constant term vanishes.
    NonUnitSeries,
    /// Classical and deformed generators were mixed in one computation.
    MixedAlphabet,
    /// An operation that needs a parity-homogeneous argument got a mixed one.
    NonHomogeneous,
    /// Tensors of different rank were combined.
    RankMismatch { left: usize, right: usize },
    /// The operation is only defined for the other alphabet.
    WrongAlphabet(&'static str),
    /// A representation family has no matrix for the requested generator.
    GeneratorAbsent(String),
    /// Matrix exponential of a matrix that is not nilpotent.
    NotNilpotent,
    /// Dual-side computation beyond the configured degree window.
    CutoffExceeded { degree: usize, cutoff: usize },
    /// Exact division by the series variable failed.
    NotDivisible,
    /// Matrices of incompatible shape.
    DimensionMismatch { left: usize, right: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OrderMismatch { left, right } => {
                write!(f, "mismatched truncation orders: {left} vs {right}")
            }
            Error::NonUnitSeries => f.write_str("non-unit series"),
            Error::MixedAlphabet => f.write_str("mixed alphabets"),
            Error::NonHomogeneous => f.write_str("non-homogeneous input"),
            Error::RankMismatch { left, right } => {
                write!(f, "tensor rank mismatch: {left} vs {right}")
            }
            Error::WrongAlphabet(what) => write!(f, "wrong alphabet: {what}"),
            Error::GeneratorAbsent(name) => write!(f, "generator {name} absent from family"),
            Error::NotNilpotent => f.write_str("matrix is not nilpotent"),
            Error::CutoffExceeded { degree, cutoff } => {
                write!(f, "cutoff exceeded: degree {degree} > {cutoff}")
            }
            Error::NotDivisible => f.write_str("series not divisible by its variable"),
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
