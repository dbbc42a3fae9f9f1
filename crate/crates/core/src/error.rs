use thiserror::Error;

/// Errors surfaced by the library. LP infeasibility/unboundedness are
/// statuses, not errors; they only become errors where a caller's contract
/// rules them out.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("exact mode requires rational coefficients")]
    ModeError,

    #[error("domain error: require sigma > 1, got sigma = {0}")]
    Domain(f64),

    #[error("target error {requested:e} is below the attainable precision floor {floor:e}")]
    Precision { requested: f64, floor: f64 },

    #[error("ratio a0/a1 undefined: Condition I (a1 > 0) does not hold")]
    UndefinedRatio,

    #[error("polynomial violates contract: {0}")]
    Contract(String),

    #[error("malformed linear program: {0}")]
    MalformedLp(String),

    #[error("cutting-plane loop did not converge within {rounds} rounds (last objective {last_objective})")]
    NonConvergence { rounds: usize, last_objective: String },

    #[error("no feasible snap: candidate could not be certified after rational rounding")]
    SnapFailed,
}

pub type Result<T> = std::result::Result<T, Error>;
