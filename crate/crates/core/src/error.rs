use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("creation sequence is empty")]
    EmptySequence,
    /// 1-based position of the offending part.
    #[error("part {0} is not a positive integer")]
    NonPositivePart(usize),
    #[error("sequence sum overflows the vertex counter")]
    OrderOverflow,
    #[error("cannot parse sequence: {0}")]
    Parse(String),
    #[error("closed form requires an even number of parts, got k = {0}")]
    OddLengthUnsupported(usize),
    #[error("order {0} is too small for this operation")]
    OrderTooSmall(usize),
    #[error("internal consistency failure: {0}")]
    ConsistencyFailure(String),
    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),
    #[error("Jacobi iteration did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph on {n} vertices exceeds the scan cap of {cap}")]
    TooLarge { n: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
