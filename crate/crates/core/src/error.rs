use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable lists differ: {left:?} vs {right:?}")]
    VariableMismatch { left: Vec<String>, right: Vec<String> },

    #[error("variable {variable} occurs with a negative exponent but maps to the non-unit {image}")]
    NonInvertibleImage { variable: String, image: String },

    #[error("negative exponent in a polynomial context: {0}")]
    NegativeExponent(String),

    #[error("matrix is singular over the fraction field")]
    Singular,

    #[error("solution requires denominators: numerators {numerators:?} over {denominator}")]
    NotInRing { numerators: Vec<String>, denominator: String },

    #[error("vertex {vertex:?} has determinant {det}, not ±1")]
    NonUnimodularVertex { vertex: Vec<usize>, det: String },

    #[error("cone {cone:?} is not smooth (determinant {det})")]
    NonSmoothCone { cone: Vec<usize>, det: String },

    #[error("ridge {ridge:?} lies in {count} maximal cones, expected 2")]
    RidgePairingFailure { ridge: Vec<usize>, count: usize },

    #[error("invalid characteristic pair: {0}")]
    InvalidPair(String),

    #[error("invalid face poset: {0}")]
    InvalidPoset(String),

    #[error("invalid base ring: {0}")]
    InvalidBase(String),

    #[error("torsion in degree {degree}: elementary divisors {divisors:?}")]
    TorsionDetected { degree: u32, divisors: Vec<String> },

    #[error("rank mismatch: found {found}, expected {expected}")]
    RankMismatch { found: usize, expected: usize },

    #[error("could not select a monomial basis in degree {degree}")]
    BasisSelectionFailed { degree: u32 },

    #[error("element is not in the span of the chosen module basis: {0}")]
    DecompositionFailed(String),

    #[error("candidate basis is not a free RT-basis: {0}")]
    BasisNotFree(String),

    #[error("restriction tuple is not compatible at vertices {a:?} and {b:?}")]
    IncompatibleTuple { a: Vec<usize>, b: Vec<usize> },

    #[error("rewriting fuel ({0}) exhausted")]
    FuelExhausted(usize),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("{0}")]
    Input(String),
}
