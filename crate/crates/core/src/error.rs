use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("dual slot {slot} is not above the row threshold mu = {mu}")]
    DualOutOfRange { slot: u64, mu: u32 },
    #[error("sigma must be an even positive integer, got {0}")]
    NotEvenSigma(f64),
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
