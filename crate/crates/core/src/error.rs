use thiserror::Error;

/// Errors produced by the library. Rejections of a well-formed certificate are
/// not errors; they are reported through [`crate::immersion::VerifyReport`].
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("graphs with {0} vertices are not supported (limit is {max})", max = crate::graph::MAX_VERTICES)]
    UnsupportedSize(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),

    #[error("graph has no K_{t} immersion under the requested flags")]
    NoImmersion { t: usize },

    #[error("independence number precondition violated: {vertices:?} is independent")]
    IndependentTriple { vertices: [usize; 3] },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("check `{check}` does not apply: {reason}")]
    Inapplicable { check: String, reason: String },

    #[error("size cap exceeded: {0}")]
    SizeCap(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
