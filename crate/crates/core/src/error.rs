use thiserror::Error;

/// Failures raised by the library.
///
/// Variants fall into three groups: input problems (`Parse`, `SizeMismatch`,
/// `InvalidInput`), the mathematical precondition failing
/// (`SeparationFailed`), and violated identities that can only mean a bug
/// (everything else). The CLI maps the groups to distinct exit codes.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error(
        "separation condition fails: 1 + q^{i} = 0 at q a primitive {e}-th root of unity (n = {n})"
    )]
    SeparationFailed { n: usize, e: usize, i: usize },
    #[error("exact division failed: {0}")]
    NotDivisible(String),
    #[error("not a perfect square: {0}")]
    NotASquare(String),
    #[error("value is not rational: {0}")]
    NotRational(String),
    #[error("value is not a nonnegative integer: {0}")]
    NotIntegral(String),
    #[error("Hecke algebra mismatch: {0}")]
    TagMismatch(String),
    #[error("no single scalar relates the two elements: {0}")]
    InconsistentEigenvalue(String),
    #[error("reference element vanishes: {0}")]
    ZeroVector(String),
    #[error("simple module has zero dimension: {0}")]
    RankDeficient(String),
    #[error("identity check failed: {0}")]
    IdentityFailed(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors that can only arise from a violated theorem, i.e. a bug.
    pub fn is_violated_identity(&self) -> bool {
        matches!(
            self,
            Error::NotDivisible(_)
                | Error::NotASquare(_)
                | Error::NotRational(_)
                | Error::NotIntegral(_)
                | Error::InconsistentEigenvalue(_)
                | Error::ZeroVector(_)
                | Error::RankDeficient(_)
                | Error::IdentityFailed(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
