use num_complex::Complex64;
use thiserror::Error;

/// Hard failures raised by the evaluation routines.
///
/// Soft conditions (sector boundaries, arguments below the asymptotic
/// crossover, exponential overflow) are reported through
/// [`Warnings`](crate::Warnings) on an otherwise successful result.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecFunError {
    #[error("pole: {what} is zero or a negative integer ({value})")]
    Pole { what: &'static str, value: Complex64 },

    #[error("series did not converge within {max_terms} terms (last term magnitude {last_term:e})")]
    NonConvergence { max_terms: usize, last_term: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("overflow: {0}")]
    Overflow(String),

    #[error("quadrature tolerance not met: estimated error {est_error:e} > requested {requested:e}")]
    ToleranceNotMet { est_error: f64, requested: f64 },

    #[error("asymptotic crossover violated at n = {n}: |z_n|^2 = {abs2} < {crossover}")]
    CrossoverViolation { n: i64, abs2: f64, crossover: f64 },

    #[error("degenerate term: omega equals the integer {n}")]
    Degenerate { n: i64 },

    #[error("sum did not settle before the cap n_max = {n_max}")]
    TruncationCap { n_max: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, SpecFunError>;
