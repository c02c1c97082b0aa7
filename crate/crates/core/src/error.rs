use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("polynomials live in different rings")]
    RingMismatch,

    #[error("exponent vectors have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("the zero ideal has no module structure with a generator")]
    ZeroIdeal,

    #[error("generators are not in a single common degree (found {0:?})")]
    MixedDegrees(Vec<i64>),

    #[error("module has nonzero torsion; quotient the torsion submodule first")]
    Torsion,

    #[error("submodules have different parent modules")]
    ParentMismatch,

    #[error("submodule is not contained in the parent module")]
    NotContained,

    #[error("dimension mismatch: {0}")]
    Shape(String),

    #[error("no valid draw after {attempts} attempts: {reason}")]
    RetryCapExceeded { attempts: usize, reason: String },

    #[error("degree cap {cap} exceeded while computing {what}")]
    DegreeCap { what: String, cap: usize },

    #[error("intersection did not stabilize within {samples} samples")]
    NoStabilization { samples: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),
}
