use alloc::string::String;
use core::fmt;

use crate::families::Family;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// An operation produced `Q^i g` with `i` above the configured bound.
    GeneratorOverflow {
        index: u32,
        max: u32,
    },
    /// Generator index 0 is `g` itself and is stored in the `g` exponent.
    ZeroGeneratorIndex,
    /// A `g` exponent, generator exponent or weight left the machine range.
    ExponentOverflow,
    /// A tensor had a pair whose dimensions do not add up to the expected total.
    NonHomogeneousTensor {
        expected: u64,
        found: u64,
    },
    /// An ambient element is not in the span of the family basis it was
    /// expected to lie in.
    NotInSpan {
        context: String,
    },
    /// The embedded family basis in some degree is linearly dependent.
    DependentBasis {
        degree: u64,
    },
    /// Stored coproduct structure constants are not coassociative.
    NotCoassociative {
        degree: usize,
    },
    /// Malformed coalgebra structure data.
    Shape {
        context: String,
    },
    KOutOfRange {
        k: u32,
        bound: u32,
    },
    BasisTooLarge {
        size: usize,
        bound: usize,
    },
    /// Top classes are only defined for the braid and rational-map families.
    NoTopClass(Family),
    InvalidLimits {
        context: String,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::GeneratorOverflow { index, max } => {
                write!(f, "generator Q^{index}g exceeds the generator bound {max}")
            }
            Error::ZeroGeneratorIndex => write!(f, "generator index must be at least 1"),
            Error::ExponentOverflow => write!(f, "exponent overflow"),
            Error::NonHomogeneousTensor { expected, found } => write!(
                f,
                "tensor pair of total dimension {found}, expected {expected}"
            ),
            Error::NotInSpan { context } => write!(f, "element outside the basis span: {context}"),
            Error::DependentBasis { degree } => {
                write!(f, "embedded basis is linearly dependent in degree {degree}")
            }
            Error::NotCoassociative { degree } => {
                write!(
                    f,
                    "structure constants are not coassociative in degree {degree}"
                )
            }
            Error::Shape { context } => write!(f, "malformed coalgebra data: {context}"),
            Error::KOutOfRange { k, bound } => write!(f, "k = {k} outside 1..={bound}"),
            Error::BasisTooLarge { size, bound } => {
                write!(f, "basis of size {size} exceeds the bound {bound}")
            }
            Error::NoTopClass(family) => write!(f, "no top class defined for family {family}"),
            Error::InvalidLimits { context } => write!(f, "invalid limits: {context}"),
        }
    }
}

impl core::error::Error for Error {}
