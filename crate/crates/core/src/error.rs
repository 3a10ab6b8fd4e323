use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("letter {letter} out of range 1..={dim} at position {position}")]
    LetterOutOfRange { letter: usize, dim: usize, position: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    Singular,
    #[error("relation of degree {0} is not allowed (conic spaces have relations in degree >= 2)")]
    DegreeTooLow(usize),
    #[error("degree {degree} exceeds the cutoff {cutoff}")]
    AboveCutoff { degree: usize, cutoff: usize },
    #[error("cutoffs differ: {0} vs {1}")]
    CutoffMismatch(usize, usize),
    #[error("space is not quadratic: minimal relations in degree {0}")]
    NotQuadratic(usize),
    #[error("twist is not admissible: ideal closure fails in degree {0}")]
    NotAdmissible(usize),
    #[error("the two constructions of the coHom space differ in degree {0}")]
    ConstructionMismatch(usize),
    #[error("morphism check failed in degree {degree}: witness {witness}")]
    MorphismCheckFailed { degree: usize, witness: String },
    #[error("diagram is not in the category: {0}")]
    NotInCategory(String),
    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),
    #[error("primitive is not normalized: {0}")]
    BadPrimitive(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("inhomogeneous relation: found degrees {0:?}")]
    Inhomogeneous(Vec<usize>),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("invalid input: {0}")]
    Invalid(String),
}
