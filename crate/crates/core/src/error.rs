use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("projective space base must have positive dimension")]
    ZeroDimensionalBase,
    #[error("quadric base must have dimension at least 3, got {0}")]
    QuadricTooSmall(u32),
    #[error("a scroll needs at least two summands, got {0}")]
    TooFewSummands(usize),
    #[error("twist {index} has {found} coordinates, base expects {expected}")]
    TwistLength {
        index: usize,
        found: usize,
        expected: usize,
    },
    #[error("class has {found} base coordinates, base expects {expected}")]
    ClassLength { found: usize, expected: usize },
    #[error("operation needs a projective-space base")]
    UnsupportedBase,
    #[error("expected {expected} component coefficients, got {found}")]
    CoefficientLength { found: usize, expected: usize },
    #[error("index is undefined for the zero class")]
    ZeroClass,
    #[error("class {0} is not ample")]
    NotAmple(String),
    #[error("cannot delete a summand of a rank-two bundle")]
    DimensionUnderflow,
    #[error("summand index {index} out of range (bundle has {count} summands)")]
    SummandOutOfRange { index: usize, count: usize },
    #[error("base line index {index} out of range (Picard rank {rank})")]
    LineOutOfRange { index: usize, rank: usize },
    #[error("blowup of P^{n} along a linear P^{c} is not a scroll of this kind")]
    CenterOutOfRange { n: u32, c: u32 },
    #[error("boundary must have at least one component")]
    EmptyBoundary,
    #[error("boundary component {0} is not effective")]
    NotEffective(usize),
    #[error("boundary components {0} and {1} coincide")]
    DuplicateComponent(usize, usize),
    #[error("base pullback must be a unit coordinate vector")]
    NotPrimeBaseClass,
    #[error("boundary component {0} is not a sub-bundle")]
    NotSubBundle(usize),
    #[error("boundary component {index} out of range (boundary has {count})")]
    ComponentOutOfRange { index: usize, count: usize },
    #[error("parameters outside the family domain: {0}")]
    OutOfDomain(String),
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}
