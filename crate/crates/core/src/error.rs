use thiserror::Error;

use crate::frobenius::FrobeniusFailure;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("label `{0}` is not allowed: parentheses must balance and ',' may only appear inside parentheses")]
    BadLabel(String),

    #[error("unknown label `{label}` in {context}")]
    UnknownLabel { label: String, context: String },

    #[error("map is not total: `{0}` has no image")]
    PartialMap(String),

    #[error("mismatched sets: {0}")]
    Mismatch(String),

    #[error("pullback label collision at `{0}`")]
    LabelCollision(String),

    #[error("not a monoid: {0}")]
    NotAMonoid(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("not a Frobenius datum: {0}")]
    NotFrobenius(FrobeniusFailure),

    #[error("invalid groupoid: {0}")]
    InvalidGroupoid(String),

    #[error("ill-typed generator word at {subtree}: {reason}")]
    IllTyped { subtree: String, reason: String },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn unknown(label: impl Into<String>, context: impl Into<String>) -> Self {
        Error::UnknownLabel {
            label: label.into(),
            context: context.into(),
        }
    }
}
