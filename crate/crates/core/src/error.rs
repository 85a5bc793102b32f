use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid couplings: {0}")]
    InvalidCouplings(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid discretization: {0}")]
    InvalidDiscretization(String),

    #[error("lower parameter c = {c} makes (c)_k vanish within a sum of degree {degree}")]
    PoleInLowerParameter { c: f64, degree: usize },

    #[error("gamma ratio of degree {degree} hits a pole at t = {t}")]
    PoleInGammaRatio { t: f64, degree: usize },

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("family {family} has no bound state with n = {n} (needs 2n + 1 < {limit})")]
    NotABoundState { family: String, n: usize, limit: f64 },

    #[error("Newton iteration from seed {seed} did not converge in {iterations} steps (last step {last_step:e})")]
    NoConvergence { seed: f64, iterations: usize, last_step: f64 },

    #[error("characteristic derivative vanished at E = {re} + {im}i")]
    DerivativeBreakdown { re: f64, im: f64 },
}
