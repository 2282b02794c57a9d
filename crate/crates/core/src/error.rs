use thiserror::Error;

/// Errors produced by `scx-core`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("complex has no facets")]
    EmptyInput,

    #[error("facet {index} is empty")]
    EmptyFacet { index: usize },

    #[error("vertex labels must be positive integers, got {0}")]
    InvalidLabel(i64),

    #[error("facet {index} repeats vertex {label}")]
    RepeatedVertex { index: usize, label: u32 },

    #[error("{found} vertices exceed the limit of {limit} (raise it with --max-vertices, at most {hard})", hard = crate::HARD_VERTEX_CAP)]
    TooManyVertices { found: usize, limit: usize },

    #[error("vertex {0} is not in the complex")]
    UnknownVertex(u32),

    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<u32>),

    #[error("complex is not pure")]
    NotPure,

    #[error("vertex set {0:?} is not complete")]
    NotComplete(Vec<u32>),

    #[error("no banner number b <= {max} exists")]
    NoSuchB { max: usize },

    #[error("dimension {dim} is below the required minimum {min}")]
    DimensionTooLow { dim: isize, min: isize },

    #[error("invalid field {0:?}: expected gf2, gf<p> for an odd prime p < 65536, or q")]
    InvalidField(String),

    #[error("tables computed over different fields ({0} and {1})")]
    FieldMismatch(String, String),

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("generated complex failed validation: {0}")]
    GeneratorValidation(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
