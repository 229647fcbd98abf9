use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not an odd prime in (7, 2^31)")]
    InvalidPrime(u32),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not skew-symmetric")]
    NotSkew,

    #[error("Pfaffian needs an even-sized matrix, got {0}x{0}")]
    OddPfaffian(usize),

    #[error("vectors do not span a two-plane")]
    DegeneratePlane,

    #[error("Plücker vector is not decomposable")]
    NotDecomposable,

    #[error("polynomials belong to different rings")]
    RingMismatch,

    #[error("too many variables: {0} (maximum {max})", max = crate::poly::MAX_VARS)]
    TooManyVariables(usize),

    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,

    #[error("zero-dimensional solver gave up after {attempts} attempts: {detail}")]
    SolverBudget { attempts: usize, detail: String },

    #[error("Groebner basis computation exceeded its time budget ({elapsed_ms} ms, {basis_len} elements so far)")]
    GbBudget { elapsed_ms: u128, basis_len: usize },

    #[error("re-draw budget of {budget} attempts exhausted (seed {seed}): {what}")]
    RedrawBudget { budget: usize, seed: u64, what: String },

    #[error("sampler found no points after {trials} trials ({detail})")]
    SampleBudget { trials: u64, detail: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed instance: field `{field}`: {detail}")]
    MalformedInstance { field: String, detail: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
