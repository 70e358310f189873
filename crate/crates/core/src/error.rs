use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown indeterminate `{0}`")]
    UnknownVariable(String),
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("Z is not separating for I")]
    NotSeparating,
    #[error("No separating indeterminates in degree {0}")]
    NoSeparatingInDegree(u64),
    #[error("NOT_UNIMODULAR: {0}")]
    NotUnimodular(String),
    #[error("QS_INCOMPLETE: {0}")]
    QsIncomplete(String),
    #[error("ROWSPACE_NOT_FREE_BASIS: {0}")]
    RowspaceNotFreeBasis(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for refusals that come from the mathematics rather than from bad input.
    pub fn is_refusal(&self) -> bool {
        matches!(
            self,
            Error::NotSeparating
                | Error::NoSeparatingInDegree(_)
                | Error::NotUnimodular(_)
                | Error::QsIncomplete(_)
                | Error::RowspaceNotFreeBasis(_)
                | Error::NotHomogeneous(_)
                | Error::Verification(_)
        )
    }
}
