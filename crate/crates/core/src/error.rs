use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("point set is empty")]
    EmptyPointSet,
    #[error("points must have at least one feature")]
    ZeroDimensions,
    #[error("row {row} has {found} features, expected {expected}")]
    DimensionMismatch {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("non-finite feature value at row {row}, column {col}")]
    NonFiniteFeature { row: usize, col: usize },
    #[error("cardinality constraint c1={c1}, c2={c2} does not sum to n={n}")]
    CardinalityMismatch { c1: usize, c2: usize, n: usize },
    #[error("{0} points exceed the supported maximum")]
    TooManyPoints(usize),
    #[error("assignment has {found} labels, expected {expected}")]
    AssignmentLength { expected: usize, found: usize },
    #[error("item {item} has label {label}, expected 1 or 2")]
    InvalidLabel { item: usize, label: u8 },
    #[error("unknown variant `{0}` (expected full, heap or auto)")]
    UnknownVariant(String),
    #[error("edge {{{u}, {v}}} inserted twice")]
    DuplicateEdge { u: usize, v: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("instance too large for exhaustive enumeration ({size} candidates, limit {limit})")]
    InstanceTooLarge { size: u128, limit: u128 },
}
