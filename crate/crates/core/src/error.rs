use thiserror::Error;

use crate::algebra::{Interval, Vertex};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("an algebra needs at least one vertex")]
    NonPositiveSize,
    #[error("relation vertex {relation} is outside [2, {max}]", max = .n.saturating_sub(1))]
    RelationOutOfRange { relation: Vertex, n: usize },
    #[error("vertex {vertex} is outside [1, {n}]")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("{0} is not a module over this algebra")]
    InvalidInterval(Interval),
    #[error("summand {0} cannot be left-mutated")]
    NotMutable(Interval),
    #[error("summand {0} has more than one complement below the current tilting module")]
    AmbiguousComplement(Interval),
    #[error("{what} limited to n <= {limit}, got n = {n}")]
    SizeLimitExceeded {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("the order is not quasi-hereditary")]
    NotQuasiHereditary,
    #[error("elimination of the tilting module fails or is ambiguous")]
    ExtractionFailed,
    #[error("not a partial order: {0}")]
    NotAPartialOrder(String),
    #[error("not a binary tree: {0}")]
    NotATree(String),
    #[error("the module is not tilting")]
    NotTilting,
    #[error("apex {apex} is outside the block [{start}, {end}]")]
    ApexOutOfRange {
        apex: Vertex,
        start: Vertex,
        end: Vertex,
    },
    #[error("inadmissible sequence: {0}")]
    InadmissibleSequence(String),
    #[error("classification failed: {0}")]
    ClassificationFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Variant name, as surfaced by the command line tool.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NonPositiveSize => "NonPositiveSize",
            Error::RelationOutOfRange { .. } => "RelationOutOfRange",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::InvalidInterval(_) => "InvalidInterval",
            Error::NotMutable(_) => "NotMutable",
            Error::AmbiguousComplement(_) => "AmbiguousComplement",
            Error::SizeLimitExceeded { .. } => "SizeLimitExceeded",
            Error::NotQuasiHereditary => "NotQuasiHereditary",
            Error::ExtractionFailed => "ExtractionFailed",
            Error::NotAPartialOrder(_) => "NotAPartialOrder",
            Error::NotATree(_) => "NotATree",
            Error::NotTilting => "NotTilting",
            Error::ApexOutOfRange { .. } => "ApexOutOfRange",
            Error::InadmissibleSequence(_) => "InadmissibleSequence",
            Error::ClassificationFailed(_) => "ClassificationFailed",
            Error::Parse(_) => "Parse",
        }
    }
}
