use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed number `{token}`")]
pub struct ParseRationalError {
    token: String,
}

impl ParseRationalError {
    pub(crate) fn new(token: &str) -> Self {
        ParseRationalError { token: token.to_owned() }
    }

    /// The input token that failed to parse.
    pub fn token(&self) -> &str {
        &self.token
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("expected {expected} values, got {found}")]
    Arity { expected: usize, found: usize },
    #[error("{0}")]
    Domain(String),
    #[error("invalid distribution: {0}")]
    Distribution(String),
    #[error(transparent)]
    Parse(#[from] ParseRationalError),
}

pub type Result<T, E = GameError> = std::result::Result<T, E>;
