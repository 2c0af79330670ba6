use thiserror::Error;

/// Every failure the engine can report.
///
/// Mathematical refusals (a compact component, a compact space) are not
/// errors; they are returned as verdicts. The variants here are contract
/// violations by the caller, or bug signals from the self-checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed interval: {0}")]
    MalformedInterval(String),
    #[error("{set} is not a subset of {ambient}")]
    NotASubset { set: String, ambient: String },
    #[error("the empty set is not a space")]
    EmptySpace,
    #[error("{0} is not closed in the space")]
    NotClosed(String),
    #[error("sets are not disjoint: {0} and {1}")]
    NotDisjoint(String, String),
    #[error("component {0} is compact")]
    CompactComponent(String),
    #[error("point {point} is not in component {component}")]
    PointOutsideComponent { point: String, component: String },
    #[error("point {0} is not in the space")]
    PointOutsideSpace(String),
    #[error("the two points are equal")]
    EqualPoints,
    #[error("set is not closed in the extension: {0}")]
    NotClosedInY(String),
    #[error("the extra point lies in both closed sets")]
    PInBoth,
    #[error("not a cover: {0}")]
    NotACover(String),
    #[error("size {size} exceeds the limit {limit}")]
    SizeTooLarge { size: usize, limit: usize },
    #[error("invalid extension: {0}")]
    InvalidExtension(String),
    #[error("density check failed: {0}")]
    DensityFailure(String),
    #[error("subspace check failed: {0}")]
    FidelityFailure(String),
    #[error("enumerators disagree: {0}")]
    EnumeratorDisagreement(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
