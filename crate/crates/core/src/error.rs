use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("gram form is not symmetric positive definite")]
    GramNotPositiveDefinite,

    #[error("generator {index} does not preserve the gram form")]
    NotOrthogonal { index: usize },

    #[error("generator {index} is not unimodular")]
    NotUnimodular { index: usize },

    #[error("point part not finite within budget: closure exceeded {budget} elements")]
    ClosureBudget { budget: usize },

    #[error("invalid group spec: {0}")]
    InvalidSpec(String),

    #[error("syntax error in element {text:?} at byte {pos}: {msg}")]
    Syntax { text: String, pos: usize, msg: String },

    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),

    #[error("point index {index} out of range for a point group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("isometry does not belong to this group")]
    GroupMismatch,

    #[error("unknown catalog group {0:?}")]
    UnknownGroup(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
