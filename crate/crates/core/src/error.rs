use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("conductor {0} is not one of 2, 4, 8, 16, 32")]
    InvalidField(u32),
    #[error("cannot parse field conductor from {0:?}")]
    InvalidFieldText(String),
    #[error("malformed scalar text {0:?}")]
    InvalidScalarText(String),
    #[error("{0} does not lie in cyclotomic({1})")]
    NotInField(String, u32),
    #[error("field mismatch: data in cyclotomic({0}) cannot be read into cyclotomic({1})")]
    FieldMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("Galois index {0} is not a unit mod {1}")]
    InvalidGaloisIndex(u32, u32),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("degenerate pairing")]
    DegeneratePairing,
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("bialgebra axiom violated: {0}")]
    BialgebraAxiom(String),
    #[error("no antipode: {0}")]
    NoAntipode(String),
    #[error("not split over cyclotomic({conductor}): {reason}")]
    NotSplit { conductor: u32, reason: String, hint: Option<u32> },
    #[error("element is not group-like")]
    NotGrouplike,
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("antipode order exceeds search bound {0}")]
    AntipodeOrderUnbounded(usize),
    #[error("identity automorphism on the subcoalgebra")]
    IdentityAutomorphism,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("{line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("duplicate generator {0:?}")]
    DuplicateGenerator(String),
    #[error("missing comultiplication for generator {0:?}")]
    MissingDelta(String),
    #[error("missing counit for generator {0:?}")]
    MissingCounit(String),
    #[error("rewriting completion not confluent within degree cap {0}")]
    NotConfluent(usize),
    #[error("dimension >= {count} at cap {cap}")]
    InfiniteBasis { count: usize, cap: usize },
    #[error("invalid cleft datum: {0}")]
    InvalidDatum(String),
    #[error("not a unit: {0}")]
    NotUnit(String),
    #[error("square root not in cyclotomic({conductor}){}", match .hint { Some(h) => format!("; available in cyclotomic({h})"), None => String::new() })]
    SqrtMissing { conductor: u32, hint: Option<u32> },
    #[error("exactness precondition violated: {0}")]
    ExactnessPrecondition(String),
    #[error("datum is not canonical: {0}")]
    NonCanonical(String),
    #[error("crossed product is not associative: {0}")]
    CrossedProductAssociativity(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownCatalogEntry(String),
    #[error("document error: {0}")]
    Document(String),
    #[error("internal error: {0}")]
    Internal(String),
}
