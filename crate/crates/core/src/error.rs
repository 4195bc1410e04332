use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("field with tower index {tower_index} exceeds the {max_bits}-bit element budget")]
    FieldCapacity { tower_index: u32, max_bits: u32 },

    #[error("m = {0} is not of the form 2*3^i")]
    NotTowerDegree(u32),

    #[error("field mismatch: GF(2^{left}) vs GF(2^{right})")]
    FieldMismatch { left: u32, right: u32 },

    #[error("element has bits set beyond degree {m}")]
    ElementOutOfField { m: u32 },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("index {index} out of range [0, {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("required field size m >= {required:.3} exceeds capacity {max}")]
    NoAdmissibleField { required: f64, max: u32 },

    #[error("exhaustive enumeration of 2^{bits} items exceeds the budget of 2^{max}")]
    BudgetExceeded { bits: usize, max: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("illegal tree move {mv:?} at height {height} (depth {depth})")]
    IllegalMove { mv: crate::inw::Move, height: usize, depth: usize },

    #[error("qubit count {0} outside [1, {max}]", max = crate::qsim::MAX_QUBITS)]
    QubitCount(usize),

    #[error("qubit index {index} outside [1, {qubits}]")]
    QubitOutOfRange { index: usize, qubits: usize },

    #[error("invalid gate: {0}")]
    InvalidGate(String),

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
