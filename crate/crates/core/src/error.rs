use crate::hermite::CoefficientFamily;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("grid family must be 0 or 1, got {0}")]
    InvalidFamily(i64),
    #[error("grid half-width n must be at least 1, got {0}")]
    InvalidHalfWidth(i64),
    #[error("N must be odd (N = 2n+1), got N = {0}")]
    EvenNodeCount(usize),
    #[error("{what}: expected {expected} entries, found {found}")]
    LengthMismatch {
        what: String,
        expected: usize,
        found: usize,
    },
    #[error("base harmonic k = {k} outside 1..={n}")]
    InvalidBaseHarmonic { k: usize, n: usize },
    #[error("base branch requires block index 0, got {0}")]
    BaseBranchBlock(usize),
    #[error("frequency {omega} does not equal the value implied by k = {k}, i = {block}, branch {branch}")]
    FrequencyTagMismatch {
        omega: usize,
        k: usize,
        block: usize,
        branch: &'static str,
    },
    #[error("derivative order p = {0} exceeds the supported maximum {max}", max = crate::hermite::MAX_ORDER)]
    OrderTooHigh(usize),
    #[error(
        "derivative row {order} is not centered: mean {mean:e} exceeds tolerance {tolerance:e}"
    )]
    NotCentered {
        order: usize,
        mean: f64,
        tolerance: f64,
    },
    #[error("harmonic system for k = {k} ({family}) is singular")]
    SingularSystem { k: usize, family: CoefficientFamily },
    #[error("harmonic system for k = {k} ({family}) is ill-conditioned (condition estimate {condition:e})")]
    IllConditioned {
        k: usize,
        family: CoefficientFamily,
        condition: f64,
    },
    #[error("harmonic system for k = {k} ({family}) solved with residual {residual:e}")]
    InaccurateSolve {
        k: usize,
        family: CoefficientFamily,
        residual: f64,
    },
    #[error("dense collocation system of size {0} is singular")]
    SingularCollocation(usize),
    #[error("expected {expected} Fourier layers, got {found}")]
    LayerCount { expected: usize, found: usize },
    #[error("polynomial coefficients do not match the frequency set: {0}")]
    MalformedPolynomial(String),
}
