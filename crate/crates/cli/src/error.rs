use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] supercong_core::Error),
    #[error("invalid prime range {0}: need 3 < lo <= hi")]
    InvalidRange(String),
    #[error("{0} is an exact identity; run it with `wz` or from the library")]
    NotACongruence(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
