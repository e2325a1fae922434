use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Structurally malformed input (non-square table, entry out of range, bad group table).
    #[error("format error: {0}")]
    Format(String),

    /// Well-formed input outside an operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },

    #[error("edge {edge} occurs {count} times")]
    EdgeMultiplicity { edge: u32, count: usize },

    #[error("orientation violation at node {node}: {message}")]
    Orientation { node: usize, message: String },

    #[error("unknown name `{name}`; valid names: {}", valid.join(", "))]
    Lookup { name: String, valid: Vec<String> },

    #[error("too large: {0}")]
    TooLarge(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
