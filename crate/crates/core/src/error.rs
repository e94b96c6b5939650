//! Error type shared by every module.

use crate::ground::Universe;
use crate::matroid::Violation;

/// Everything that can go wrong when constructing or querying the set
/// systems in this crate.
///
/// Validation failures carry a concrete witness so the message can double
/// as an explanation of which law was broken and by what.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Two values over different universes were combined.
    #[error("universe mismatch: {left} vs {right}")]
    UniverseMismatch { left: Universe, right: Universe },

    /// A labeled universe repeats a label.
    #[error("duplicate label {label:?}")]
    DuplicateLabel { label: String },

    /// An element index does not fit the universe.
    #[error("element {index} is out of range for a universe of {size} elements")]
    ElementOutOfRange { index: usize, size: usize },

    /// A label does not name any element of the universe.
    #[error("unknown element {label:?}")]
    UnknownLabel { label: String },

    /// A partition or covering block is empty.
    #[error("block {position} is empty")]
    EmptyBlock { position: usize },

    /// Partition blocks overlap.
    #[error("blocks are not pairwise disjoint: element {element} appears in more than one block")]
    OverlappingBlocks { element: usize },

    /// Blocks do not cover the universe.
    #[error("blocks do not cover the universe: element {element} lies in no block")]
    UncoveredElement { element: usize },

    /// A relation misses a reflexive pair.
    #[error("relation is not reflexive: pair ({element}, {element}) is missing")]
    NotReflexive { element: usize },

    /// A relation misses the mirror of a pair.
    #[error("relation is not symmetric: ({x}, {y}) is present but ({y}, {x}) is missing")]
    NotSymmetric { x: usize, y: usize },

    /// A relation misses a composite pair.
    #[error("relation is not transitive: ({x}, {y}) and ({y}, {z}) are present but ({x}, {z}) is missing")]
    NotTransitive { x: usize, y: usize, z: usize },

    /// A set family failed a matroid axiom check at construction time.
    #[error("family is not a valid matroid description: {0}")]
    AxiomsViolated(Violation),

    /// A brute-force operation refused to enumerate an oversized power set.
    #[error("universe of {size} elements exceeds the brute-force bound of {bound}")]
    CapacityExceeded { size: usize, bound: usize },

    /// Capacity vector length does not match the block count.
    #[error("expected {expected} capacities, one per block, got {found}")]
    CapacityCountMismatch { expected: usize, found: usize },

    /// Weight vector length does not match the universe size.
    #[error("expected {expected} weights, one per element, got {found}")]
    WeightCountMismatch { expected: usize, found: usize },

    /// A weight is NaN or infinite.
    #[error("weight at index {index} is not finite")]
    NonFiniteWeight { index: usize },

    /// Input JSON failed to parse; the message includes the position.
    #[error("invalid JSON: {0}")]
    Json(String),

    /// Input JSON is structurally valid but misses a required field.
    #[error("input is missing a {field:?} field")]
    MissingField { field: &'static str },
}

impl Error {
    /// True for errors that should map to the "capacity" exit status
    /// rather than plain validation failure.
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::CapacityExceeded { .. })
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Json(err.to_string())
    }
}
