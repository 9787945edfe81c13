use thiserror::Error;

/// Errors raised across the crate.
///
/// Variants carry enough context to be printed directly by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("query set is empty")]
    EmptyQuery,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("host has no partition")]
    NoPartition,
    #[error("root set must be a proper subset of the vertex set")]
    DegenerateRoot,
    #[error("parameters describe a multigraph")]
    Multigraph,
    #[error("not a bipartition: {0}")]
    NotBipartite(String),
    #[error("blowup multiplicity must be positive")]
    EmptyBlowup,
    #[error("instance exceeds budget: {0}")]
    TooLarge(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("2 - {a}/{b} is not covered: need b >= max(a, (a-1)^2) in lowest terms with b > a")]
    NotQualified { a: u64, b: u64 },
    #[error("certificate failed self-check: {0}")]
    CertificateInvalid(String),
    #[error("host contains K_{{{0},{0}}}")]
    NotKssFree(usize),
    #[error("lemma hypothesis not met: {0}")]
    HypothesisUnmet(String),
    #[error("blowup is not contained in the rich-set family: {0}")]
    BadBlowup(String),
    #[error("copies do not form a semi-induced rooted power: {0}")]
    NotSemiInduced(String),
    #[error("no graph satisfies the constraints: {0}")]
    Infeasible(String),
    #[error("bound violated on a verified instance: {0}")]
    DisprovesLemma(String),
    #[error("bad family descriptor: {0}")]
    Descriptor(String),
    #[error("bad graph document: {0}")]
    Document(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
