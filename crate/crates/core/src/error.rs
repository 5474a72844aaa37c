use thiserror::Error;

use crate::label::VertexLabel;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A constructor or operation was called with parameters outside its domain.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("{0} is not a vertex of the quiver")]
    NotAVertex(VertexLabel),

    #[error("translation is undefined at {0}")]
    TauUndefined(VertexLabel),

    #[error("not a path in the quiver: {0}")]
    NotAPath(String),

    #[error("malformed quiver: {0}")]
    Malformed(String),

    #[error("not a translation quiver: {0}")]
    NotTranslationQuiver(String),

    #[error("{0} is not a legal arc of the polygon")]
    IllegalArc(String),

    #[error("{arc} is not a {m}-arc")]
    NotAnMArc { arc: String, m: usize },

    /// A structural property that the construction guarantees failed to hold.
    /// Seeing this means a bug, not bad input.
    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
