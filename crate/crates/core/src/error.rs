use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("group `{name}` has even order {order}; the wedge only extends to virtual representations of odd-order groups")]
    EvenOrder { name: String, order: usize },

    #[error("class functions live on different class structures")]
    StructureMismatch,

    #[error("expected {expected} class values, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("unknown group `{0}`")]
    UnknownGroup(String),

    #[error("unknown class label `{0}`")]
    UnknownClass(String),

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("character table computation did not separate all characters after {attempts} attempts")]
    Degenerate { attempts: usize },

    #[error("point is not fixed by the map: residual {residual:e}")]
    NotFixed { residual: f64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
