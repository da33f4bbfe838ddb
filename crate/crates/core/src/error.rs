use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid datum document: {0}")]
    InvalidDocument(String),
    #[error("generator `{0}` is listed more than once")]
    DuplicateGenerator(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("bond between `{s}` and `{t}` is given inconsistently")]
    AsymmetricEntry { s: String, t: String },
    #[error("invalid bond between `{s}` and `{t}`: {detail}")]
    InvalidBond {
        s: String,
        t: String,
        detail: String,
    },
    #[error("invalid form value {value} between `{s}` and `{t}`: {detail}")]
    InvalidInfiniteBondValue {
        s: String,
        t: String,
        value: f64,
        detail: String,
    },
    #[error("rank {rank} exceeds the supported maximum of {max}")]
    RankTooLarge { rank: usize, max: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("mirror vector is isotropic (|(x, x)| = {norm:e})")]
    IsotropicMirror { norm: f64 },
    #[error("{what} exceeded the budget of {cap}")]
    BudgetExceeded { what: &'static str, cap: usize },
    #[error("vector lies on the linear hyperplane V0 (coordinate sum {sum:e})")]
    OnV0 { sum: f64 },
    #[error("dot-action left its domain: image lies on V0")]
    LeftDomain,
    #[error("the Coxeter group is finite")]
    FiniteGroup,
    #[error("generator subset {0} is not spherical")]
    NotSpherical(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("feasibility problem has no solution: {0}")]
    Infeasible(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("point is not in the interior of the fundamental chamber of the imaginary cone")]
    NotInterior,
    #[error("chain images are affinely dependent (smallest singular value {smallest:e})")]
    DegenerateSimplex { smallest: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
