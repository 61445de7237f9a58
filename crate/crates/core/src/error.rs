use thiserror::Error;

pub type Result<T> = std::result::Result<T, QwalkError>;

#[derive(Debug, Error)]
pub enum QwalkError {
    #[error("a circuit needs at least one qubit")]
    EmptyRegister,

    #[error("qubit {qubit} is outside a {num_qubits}-qubit register")]
    QubitOutOfRange { qubit: usize, num_qubits: usize },

    #[error("qubit {0} appears more than once in a single gate")]
    DuplicateQubit(usize),

    #[error("register width mismatch: {left} vs {right} qubits")]
    WidthMismatch { left: usize, right: usize },

    #[error("matrix shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch { left: (usize, usize), right: (usize, usize) },

    #[error("register of {0} qubits is too wide for a dense unitary (max {max})", max = crate::simulator::MAX_UNITARY_QUBITS)]
    RegisterTooWide(usize),

    #[error("invalid bitstring {bitstring:?} for a {num_qubits}-qubit register")]
    InvalidBitstring { bitstring: String, num_qubits: usize },

    #[error("state is not normalized: norm² = {0}")]
    NotNormalized(f64),

    #[error("cannot sample from an empty distribution")]
    EmptyDistribution,

    #[error("shot count must be at least 1")]
    NoShots,

    #[error("{what} must be at least {min}, got {got}")]
    BelowMinimum { what: &'static str, min: usize, got: usize },

    #[error("length {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("kernel is not unitary: eigenvalue {index} has modulus {modulus}")]
    NonUnitaryKernel { index: usize, modulus: f64 },

    #[error("kernel sizes differ: {0} vs {1}")]
    KernelSizeMismatch(usize, usize),

    #[error("cannot emit OpenQASM for {0}")]
    UnsupportedQasm(String),

    #[error("unsupported circuit format version {0}")]
    UnsupportedVersion(u32),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
