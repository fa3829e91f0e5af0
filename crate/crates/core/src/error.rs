use thiserror::Error;

/// Errors raised by graph construction, spectral computation, and enumeration.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop ({0},{0}) rejected: graphs are simple")]
    SelfLoop(usize),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),

    #[error("malformed edge-list JSON: {0}")]
    MalformedJson(String),

    #[error("polynomial is not monic")]
    NonMonicPolynomial,

    #[error("non-integral result ({0}): corrupted or mismatched fingerprint")]
    NonIntegral(String),

    #[error("fingerprint is not an {expected}-kind polynomial: {reason}")]
    WrongKind { expected: String, reason: String },

    #[error("disconnected input rejected: {0}")]
    Disconnected(String),

    #[error("infeasible strongly regular parameters ({n},{d},{lambda},{mu}): {reason}")]
    InfeasibleSrg {
        n: usize,
        d: usize,
        lambda: usize,
        mu: usize,
        reason: String,
    },

    #[error("graph is not regular (degrees differ)")]
    NotRegular,

    #[error("switching precondition violated at vertex {vertex}: {count} neighbors in block of size {block}")]
    GmColumnSum {
        vertex: usize,
        count: usize,
        block: usize,
    },

    #[error("cospectrality hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("vertex cap exceeded: n = {n} > {cap}{hint}")]
    CapExceeded {
        n: usize,
        cap: usize,
        hint: &'static str,
    },

    #[error("degree parity violation: n*d must be even (n = {n}, d = {d})")]
    DegreeParity { n: usize, d: usize },

    #[error("cache I/O: {0}")]
    CacheIo(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
