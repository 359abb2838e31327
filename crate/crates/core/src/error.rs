use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("polygon is not strictly convex at vertex {0}")]
    NotConvex(usize),
    #[error("vertex {index} duplicates vertex {first}")]
    DuplicateVertex { first: usize, index: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("coordinate {0} is not representable in the requested scalar type")]
    Unrepresentable(String),
    #[error("line through two equal points")]
    DegenerateLine,
    #[error("ray direction is the zero vector")]
    ZeroDirection,
    #[error("could not generate a strictly convex {n}-gon within bound {bound}")]
    GenerationFailure { n: usize, bound: i64 },
    #[error("invalid generator arguments: {0}")]
    InvalidArgument(String),
    #[error("no vertex lies strictly right of chord ({0}, {1})")]
    EmptyRightChain(usize, usize),
    #[error("seed triangle ({0}, {1}, {2}) is not 3-stable")]
    NotThreeStable(usize, usize, usize),
    #[error("triangle corners are collinear")]
    CollinearMidpoints,
    #[error("no enclosing candidate survived filtering")]
    NoCandidate,
    #[error("oracle limited to n <= {cap}, got n = {n}")]
    OracleCap { n: usize, cap: usize },
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}
