use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible radicands {0} and {1}")]
    IncompatibleRadicand(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("degenerate line: the two points coincide")]
    DegenerateLine,
    #[error("at least {needed} points are required, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("duplicate point at indices {0} and {1}")]
    DuplicatePoint(usize, usize),
    #[error("side lengths must be positive")]
    NonPositiveSide,
    #[error("the two points are the same")]
    SamePoint,
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("bodies {0} and {1} intersect")]
    BodiesIntersect(usize, usize),
    #[error("radius ratio of the two circles is irrational")]
    IrrationalRadiusRatio,
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
    #[error("plane meets the interior of fewer than two balls")]
    TooFewIntersected,
    #[error("search budget exhausted after {0} attempts")]
    SearchBudgetExhausted(usize),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("at most 5 segments allowed, got {0}")]
    TooManySegments(usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
