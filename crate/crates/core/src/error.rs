use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("entry ({row}, {col}) outside a {nrows}x{ncols} matrix")]
    IndexOutOfBounds { row: usize, col: usize, nrows: usize, ncols: usize },

    #[error("row {0} is not sorted, has duplicate columns or stores a zero")]
    MalformedRow(usize),

    #[error("shape mismatch: {left:?} times {right:?}")]
    ShapeMismatch { left: (usize, usize), right: (usize, usize) },

    #[error("degree {requested} exceeds the truncation degree {truncation}")]
    TruncationExceeded { requested: usize, truncation: usize },

    #[error("variable x{index} has degree {degree}; the Koszul engine needs degree-1 variables")]
    NonLinearVariable { index: usize, degree: usize },

    #[error("generator {0} is zero")]
    ZeroGenerator(usize),

    #[error("generator {index} is not homogeneous of degree {declared}")]
    NotHomogeneous { index: usize, declared: usize },

    #[error("generator {0} is a non-zero constant, so the quotient is zero")]
    UnitGenerator(usize),

    #[error("not a linear form: {0}")]
    NotLinear(String),

    #[error("polynomial uses {found} variables but the ring has {expected}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid Cartan type: {0}")]
    InvalidType(String),

    #[error("no explicit graph ideal for {given}; supported types: {supported}")]
    UnsupportedType { given: String, supported: String },

    #[error("invalid fan:\n{0}")]
    InvalidFan(String),

    #[error("{what} = {value} is out of range {range}")]
    OutOfRange { what: &'static str, value: i64, range: String },

    #[error("differential composite d{k} . d{} is not zero", .k + 1)]
    NotAComplex { k: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
