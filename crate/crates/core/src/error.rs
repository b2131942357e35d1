use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole at {0}")]
    Pole(f64),
    #[error("logarithmic singularity at {0}")]
    LogSingularity(f64),
    #[error("overflow evaluating {0}")]
    Overflow(String),
    #[error("unsupported order {0}")]
    UnsupportedOrder(u32),
    #[error("non-finite value: {0}")]
    NonFinite(String),
    #[error("route disagreement: {0}")]
    Inconsistent(String),
    #[error("unknown id `{0}`")]
    UnknownId(String),
    #[error("parameter out of domain for {id}: {detail}")]
    ParamDomain { id: String, detail: String },
    #[error("misuse: {0}")]
    Misuse(String),
    #[error("empty selection")]
    EmptySelection,
}

pub type Result<T> = std::result::Result<T, Error>;
