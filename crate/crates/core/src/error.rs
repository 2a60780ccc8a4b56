use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the zero ideal has no Newton polyhedron")]
    ZeroIdeal,
    #[error("exponent must be nonnegative, got {0}")]
    NegativeExponent(String),
    #[error("point has a negative coordinate")]
    NegativeCoordinate,
    #[error("region is unbounded")]
    Unbounded,
    #[error("facet {0} has zero offset")]
    ZeroOffset(usize),
    #[error("facet index {index} out of range ({count} facets)")]
    NoSuchFacet { index: usize, count: usize },
    #[error("semigroup generators are all zero")]
    DegenerateSemigroup,
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
    #[error("value does not fit in a machine integer")]
    Overflow,
    #[error("consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
