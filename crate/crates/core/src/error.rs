use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("general position violated: points {0:?} are collinear")]
    GeneralPositionViolated([usize; 3]),
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("duplicate points")]
    DuplicatePoints,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("arity {arity} is invalid for {vertices} vertices")]
    BadArity { arity: usize, vertices: usize },
    #[error("color {color} out of range for {colors} colors")]
    ColorOutOfRange { color: u32, colors: u32 },
    #[error("need at least one color")]
    NoColors,
    #[error("subset {0:?} is not a strictly increasing tuple of vertices in range")]
    BadSubset(Vec<usize>),
    #[error("{subsets} subsets of arity {arity} exceed the dense storage limit")]
    TooLarge { arity: usize, subsets: u128 },
    #[error("wrong number of colors: expected {expected} subsets, got {got}")]
    NotTotal { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("level {level} exceeds the supported maximum {max}")]
    LevelTooLarge { level: u32, max: u32 },
    #[error("bad labels ({a}, {b}) at level {t}")]
    BadLabels { a: usize, b: usize, t: u32 },
    #[error("bad base coloring: {0}")]
    BadBase(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("generated set failed certification: {0}")]
    CertificationFailed(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtractionError {
    #[error("empty input")]
    EmptyInput,
    #[error("vertices {0} and {1} are comparable under neither order")]
    IncomparablePair(usize, usize),
    #[error("coloring does not match configuration: {0}")]
    Mismatch(String),
    #[error("oracle rejected extracted witness {0:?}")]
    OracleRejected(Vec<usize>),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("enumeration budget exceeded after {examined} subsets")]
    BudgetExceeded { examined: u64 },
    #[error("coloring does not match configuration: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("expected {expected} entries, found {found}")]
    Count { expected: usize, found: usize },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}
