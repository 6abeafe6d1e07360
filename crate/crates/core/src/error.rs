use thiserror::Error;

/// Errors raised by the algebraic routines and the expression parser.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial has no square-free decomposition")]
    ZeroSquareFree,
    #[error("reciprocal of the zero polynomial")]
    ZeroReciprocal,
    #[error("resultant requires at least one operand of positive degree in y")]
    ConstantResultant,
    #[error("series not invertible: constant term is {0}")]
    NotInvertible(String),
    #[error("exponential needs a zero constant term, found {0}")]
    ExpConstantTerm(String),
    #[error("logarithm needs constant term 1, found {0}")]
    LogConstantTerm(String),
    #[error("insufficient Newton sums: need order {needed}, have {have}")]
    InsufficientNewtonSums { needed: usize, have: usize },
    #[error("Newton series constant term {found} does not match degree {degree}")]
    NewtonDegreeMismatch { degree: usize, found: String },
    #[error("number of summed roots c = {c} is outside 1..={degree}")]
    SubsetSizeOutOfRange { c: usize, degree: usize },
    #[error("numerator and denominator are not coprime with respect to y")]
    NotCoprime,
    #[error("the chosen divisor does not split the denominator into coprime parts")]
    InvalidDivisor,
    #[error("denominator is constant in y")]
    ConstantDenominator,
    #[error("denominator vanishes at origin")]
    DenominatorVanishesAtOrigin,
    #[error("zero denominator in series quotient")]
    ZeroSeriesDenominator,
    #[error("origin residue needs a negative exponent shift, got {0}")]
    NonNegativeShift(i64),
    #[error("slope ({p}, {q}) must be a pair of coprime positive integers")]
    InvalidSlope { p: u32, q: u32 },
    #[error("step set {0}")]
    InvalidStepSet(String),
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
