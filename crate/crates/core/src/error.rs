use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameter {value} outside knot range [{lo}, {hi}]")]
    Domain { value: f64, lo: f64, hi: f64 },

    #[error("invalid knot vector: {0}")]
    KnotVector(String),

    #[error("invalid patch: {0}")]
    Patch(String),

    #[error("refinement error: {0}")]
    Refinement(String),

    #[error("material error: {0}")]
    Material(String),

    #[error("invalid layup: {0}")]
    Layup(String),

    #[error("invalid thickness expansion: {0}")]
    Expansion(String),

    #[error("mesh error: {0}")]
    Mesh(String),

    #[error("index out of range: {0}")]
    Index(String),

    #[error("singular system: {0}")]
    Singular(String),

    #[error("mass matrix is not positive definite: {0}")]
    Mass(String),

    #[error("eigensolver did not converge: {0}")]
    Eigen(String),

    #[error("point ({x}, {y}) lies outside the patch")]
    OutsideDomain { x: f64, y: f64 },

    #[error("invalid argument: {0}")]
    Invalid(String),
}
