use thiserror::Error;

use crate::approx::HilbertPrefix;

pub type Result<T> = std::result::Result<T, Error>;

/// A rack-axiom failure found by exhaustive checking.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "axiom", rename_all = "kebab-case")]
pub enum RackViolation {
    /// `y ↦ x ▷ y` is not injective: two inputs share an image.
    NotBijective { x: usize, y1: usize, y2: usize, image: usize },
    /// `x ▷ (y ▷ z) ≠ (x ▷ y) ▷ (x ▷ z)`.
    SelfDistributivity { x: usize, y: usize, z: usize, lhs: usize, rhs: usize },
}

impl std::fmt::Display for RackViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RackViolation::NotBijective { x, y1, y2, image } => {
                write!(f, "row {x} is not a bijection: {x}▷{y1} = {x}▷{y2} = {image}")
            }
            RackViolation::SelfDistributivity { x, y, z, lhs, rhs } => write!(
                f,
                "self-distributivity fails at (x, y, z) = ({x}, {y}, {z}): x▷(y▷z) = {lhs}, (x▷y)▷(x▷z) = {rhs}"
            ),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalars of moduli {left} and {right} mixed without an explicit embedding")]
    ModulusMismatch { left: u32, right: u32 },
    #[error("cannot embed Q(ζ_{from}) into Q(ζ_{to})")]
    NotEmbeddable { from: u32, to: u32 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("not a rack: {0}")]
    RackAxiom(RackViolation),
    #[error("subset not closed under conjugation: element {conjugator} conjugates {element} to {result}, which is outside the subset")]
    NotClosed { conjugator: usize, element: usize, result: usize },
    #[error("cocycle identity fails at ({x}, {y}, {z}): lhs = {lhs}, rhs = {rhs}")]
    CocycleIdentity { x: usize, y: usize, z: usize, lhs: String, rhs: String },
    #[error("normalization fails: {0}")]
    Normalization(String),
    #[error("zero entry at ({row}, {col}); cocycle and braiding tables must be invertible")]
    ZeroEntry { row: usize, col: usize },
    #[error("braiding is not invertible")]
    Singular,
    #[error("matrix violates the Yang-Baxter equation at basis vector {basis_index} of V⊗V⊗V")]
    NotYangBaxter { basis_index: usize },
    #[error("rack carries no group embedding; twisting needs one")]
    MissingEmbedding,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("multiplication is not associative on degrees ({i}, {j}, {k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("budget exceeded for {what}: needs {required}, limit {limit}")]
    Budget {
        what: String,
        required: u128,
        limit: u128,
        partial: Option<Box<HilbertPrefix>>,
    },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn with_partial(self, partial: HilbertPrefix) -> Self {
        match self {
            Error::Budget { what, required, limit, .. } => {
                Error::Budget { what, required, limit, partial: Some(Box::new(partial)) }
            }
            other => other,
        }
    }
}
