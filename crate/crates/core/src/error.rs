use num_bigint::BigUint;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("divisor is not monic in λ")]
    NonMonic,

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("cannot parse polynomial {text:?}: {reason}")]
    ParsePoly { text: String, reason: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("malformed rotation system: {0}")]
    MalformedRotation(String),

    #[error("graph is disconnected ({0} components)")]
    Disconnected(usize),

    #[error("Euler relation violated: V = {vertices}, E = {edges}, f = {faces}")]
    EulerViolation { vertices: usize, edges: usize, faces: usize },

    #[error("embedding budget exceeded: {required} rotation systems required, budget is {budget}")]
    BudgetExceeded { required: BigUint, budget: u64 },

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("family stanza line {line}: {reason}")]
    FamilyParse { line: usize, reason: String },

    #[error("rotation has {found} darts but G_{level} has {expected}")]
    LengthMismatch { level: usize, expected: usize, found: usize },

    #[error("embedding type {0} is not in the registry")]
    UnknownType(String),

    #[error("genus decreased from {before} to {after} under extension")]
    GenusDecrease { before: usize, after: usize },

    #[error("type discovery did not close within {0} extension levels")]
    NoClosure(usize),

    #[error("rotagraph closure needs n >= 2, got n = {0}")]
    RotagraphTooShort(usize),
}
