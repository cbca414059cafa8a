use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("natural-number overflow in {0}")]
    Overflow(&'static str),

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian (max residual {residual:e})")]
    NotHermitian { residual: f64 },

    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("missing design parameter: {0}")]
    MissingParameter(&'static str),

    #[error("parameters violate the counting identities: {0}")]
    Infeasible(String),

    #[error("index {index} out of range for size {size} ({what})")]
    OutOfRange {
        what: &'static str,
        index: usize,
        size: usize,
    },

    #[error("subspace split failed: {0}")]
    SplitFailed(String),

    #[error("design is not commutative: projectors {0} and {1} do not commute")]
    NotCommutative(usize, usize),

    #[error("eigenvalue {value} of projector {projector} is not close to 0 or 1")]
    NotBinaryEigenvalue { projector: usize, value: f64 },

    #[error("incidence matrix has entry {value} at ({row}, {col}); apply to_block first, parameters will change")]
    NotZeroOne { row: usize, col: usize, value: u64 },

    #[error("not a block design: {0}")]
    NotBlockDesign(String),

    #[error("homomorphism square does not commute at (point {row}, block {col}): {lhs} != {rhs}")]
    HomNotCommuting { row: usize, col: usize, lhs: u64, rhs: u64 },

    #[error("basis {basis} is not orthonormal at vectors ({i}, {j}): inner product {value}")]
    NotOrthonormal {
        basis: usize,
        i: usize,
        j: usize,
        value: f64,
    },

    #[error("trace law fails at (a={a}, i={i}, b={b}, j={j}): got {got}, expected {expected}")]
    TraceLaw {
        a: usize,
        i: usize,
        b: usize,
        j: usize,
        got: f64,
        expected: f64,
    },

    #[error("schema mismatch: expected {expected:?}, found {found:?}")]
    SchemaMismatch { expected: String, found: String },

    #[error("format error at {path}: {message}")]
    Format { path: String, message: String },

    #[error("check failed: {0}")]
    CheckFailed(String),

    #[error("unknown catalog entry {0:?}")]
    UnknownCatalogEntry(String),
}

pub type Result<T> = std::result::Result<T, Error>;
