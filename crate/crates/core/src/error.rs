use thiserror::Error;

/// Errors raised by lattice construction, parsing and the forcing algorithm.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GtError {
    #[error("no fillings exist: shape has {rows} nonzero rows but entries are bounded by n = {n}")]
    NoFillings { rows: usize, n: usize },
    #[error("not a pattern: {0}")]
    NotAPattern(String),
    #[error("not a semistandard tableau: {0}")]
    InvalidTableau(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid color {color}: expected 1..={max}")]
    InvalidColor { color: usize, max: usize },
    #[error("identity instance has repeated abscissa {0}")]
    DuplicateAbscissa(String),
    #[error("edge {edge} received a zero label")]
    ZeroLabel { edge: usize },
    #[error("color {color} component containing vertex {vertex} is not a chain")]
    NotAChain { color: usize, vertex: usize },
    #[error("underdetermined at vertex {vertex}, color {color}: {detail}")]
    Underdetermined {
        vertex: usize,
        color: usize,
        detail: String,
    },
    #[error("edge {edge} was already assigned")]
    Overwrite { edge: usize },
}

pub type Result<T> = std::result::Result<T, GtError>;
