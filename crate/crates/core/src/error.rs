use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error("bilinear form is not symmetric")]
    NonSymmetricForm,

    #[error("bilinear form is degenerate")]
    DegenerateForm,

    #[error("multivector has degree {found}, expected {expected}")]
    WrongDegree { expected: usize, found: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("constructed structure failed post-check: {0}")]
    PostCheck(String),

    #[error("independent verdicts disagree for {check}: condition list says {conditions}, direct check says {direct}")]
    VerdictDisagreement { check: String, conditions: bool, direct: bool },

    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
}

pub type Result<T> = std::result::Result<T, Error>;
