use crate::name::GenName;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(GenName),
    #[error("generator `{0}` is already present")]
    DuplicateGenerator(GenName),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("composition undefined: borders differ first at level {level} ({left} vs {right})")]
    CompositionUndefined {
        level: usize,
        left: String,
        right: String,
    },
    #[error("non-unital basis at `{gen}`: {detail}")]
    NonUnitalBasis { gen: GenName, detail: String },
    #[error("invalid cell: {0}")]
    InvalidCell(String),
    #[error("globularity violation at `{gen}`, level {level}")]
    Globularity { gen: GenName, level: usize },
    #[error("incompatible relation: class {class} at level {level}: {detail}")]
    IncompatibleRelation {
        class: String,
        level: usize,
        detail: String,
    },
    #[error("not a subcomputad: border support of `{0}` escapes the selected generators")]
    NotSubcomputad(GenName),
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid document: {0}")]
    InvalidDocument(String),
    #[error("{clause}: {source}")]
    Clause {
        clause: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Wrap an error with the formula clause that produced it, used by the
    /// low-dimensional border oracle to cite the failing subexpression.
    pub fn in_clause(self, clause: impl Into<String>) -> Self {
        Error::Clause {
            clause: clause.into(),
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
