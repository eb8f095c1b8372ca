use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero divisor")]
    ZeroDivisor,
    #[error("undefined q-integer: k must be at least 1")]
    UndefinedQInteger,
    #[error("evaluation pole")]
    EvaluationPole,
    #[error("singular")]
    Singular,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("not a q-spinor")]
    NotQSpinor,
    #[error("action undefined: block matrix M is singular")]
    ActionUndefined,
    #[error("index out of range: ({0}, {1})")]
    IndexOutOfRange(usize, usize),
    #[error("unknown catalog entry: {0}")]
    UnknownEntry(String),
    #[error("unknown parameter `{param}` for entry {entry}")]
    UnknownParameter { entry: String, param: String },
    #[error("forbidden parameter value: {param} = {value} ({reason})")]
    ForbiddenParameter {
        param: String,
        value: String,
        reason: String,
    },
    #[error("entry {0} has no instantiable matrices")]
    MetadataOnly(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
