use std::fmt;

use crate::Natural;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("the number of terms must be at least 1")]
    ZeroDegree,

    #[error("a representation needs at least one coefficient")]
    EmptyRepresentation,

    /// `index` is the 0-based position of the upper entry of the pair in
    /// descending storage order.
    #[error("C_{upper_term}={upper} is not greater than C_{lower_term}={lower} (position {index})", lower_term = upper_term - 1)]
    NotStrictlyDecreasing {
        index: usize,
        upper_term: usize,
        upper: Natural,
        lower: Natural,
    },

    #[error("element {later} at position {index} does not exceed the preceding element {earlier}")]
    NotStrictlyIncreasing {
        index: usize,
        earlier: Natural,
        later: Natural,
    },

    #[error("the zero representation of degree {0} has no predecessor")]
    PredecessorOfZero(usize),

    #[error("cannot compare representations of degree {0} and {1}")]
    DegreeMismatch(usize, usize),

    #[error("range start {start} exceeds range end {end}")]
    InvalidRange { start: Natural, end: Natural },

    #[error("a range must be split into at least one part")]
    ZeroParts,

    #[error("element {element} does not fit in a universe of {universe} elements")]
    ElementOutOfUniverse { element: Natural, universe: usize },

    #[error("bitstring contains {found:?} at position {position}; only '0' and '1' are allowed")]
    MalformedBitstring { position: usize, found: char },

    #[error("a combination needs at least one element")]
    EmptyCombination,

    #[error("identity needs n >= r, got n={n}, r={r}")]
    LowerExceedsUpper { n: Natural, r: Natural },

    #[error("coefficient bound {bound} is below the degree {r}; no representation fits")]
    BoundBelowDegree { bound: usize, r: usize },

    #[error("{0:?} is not a non-negative decimal integer")]
    InvalidNatural(String),
}

impl Error {
    /// Stable variant name, used as the `ERROR <kind>:` tag on the command line.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ZeroDegree => "ZeroDegree",
            Error::EmptyRepresentation => "EmptyRepresentation",
            Error::NotStrictlyDecreasing { .. } => "NotStrictlyDecreasing",
            Error::NotStrictlyIncreasing { .. } => "NotStrictlyIncreasing",
            Error::PredecessorOfZero(_) => "PredecessorOfZero",
            Error::DegreeMismatch(..) => "DegreeMismatch",
            Error::InvalidRange { .. } => "InvalidRange",
            Error::ZeroParts => "ZeroParts",
            Error::ElementOutOfUniverse { .. } => "ElementOutOfUniverse",
            Error::MalformedBitstring { .. } => "MalformedBitstring",
            Error::EmptyCombination => "EmptyCombination",
            Error::LowerExceedsUpper { .. } => "LowerExceedsUpper",
            Error::BoundBelowDegree { .. } => "BoundBelowDegree",
            Error::InvalidNatural(_) => "InvalidNatural",
        }
    }
}

/// `ERROR <kind>: <detail>`
pub(crate) struct Tagged<'a>(pub &'a Error);

impl fmt::Display for Tagged<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ERROR {}: {}", self.0.kind(), self.0)
    }
}
