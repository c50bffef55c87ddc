use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}; only simple graphs are supported")]
    Loop(usize),

    #[error("vertex sets must be disjoint")]
    Overlap,

    #[error("invalid input: {0}")]
    Input(String),

    #[error("graph6 format error at byte {offset}: {reason}")]
    Format { offset: usize, reason: &'static str },

    #[error("graph order {0} is outside the graph6 range")]
    UnsupportedSize(u64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("{what}: size {size} exceeds the cap of {cap}")]
    Resource {
        what: &'static str,
        size: u64,
        cap: u64,
    },

    #[error(
        "eigen-iteration did not converge after {iterations} steps \
         (best estimate {estimate}, residual {residual:e})"
    )]
    NotConverged {
        estimate: f64,
        residual: f64,
        iterations: usize,
    },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
