use std::fmt;

use num_complex::Complex64;

/// Evaluation route that produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Series,
    Asymptotic,
    Quadrature,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::Asymptotic => "asymptotic",
            Method::Quadrature => "quadrature",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Soft conditions attached to a successful evaluation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Warnings {
    /// The argument sits exactly on a sector boundary of an asymptotic expansion.
    pub sector_boundary: bool,
    /// An asymptotic expansion was used below its crossover radius.
    pub below_crossover: bool,
    /// An exponential factor overflowed; the value has infinite magnitude.
    pub overflow: bool,
}

impl Warnings {
    pub fn any(&self) -> bool {
        self.sector_boundary || self.below_crossover || self.overflow
    }

    pub fn merge(self, other: Warnings) -> Warnings {
        Warnings {
            sector_boundary: self.sector_boundary || other.sector_boundary,
            below_crossover: self.below_crossover || other.below_crossover,
            overflow: self.overflow || other.overflow,
        }
    }
}

/// A computed value with its provenance and an absolute error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: Complex64,
    pub method: Method,
    /// Absolute error estimate; finite and nonnegative whenever `value` is finite.
    pub est_error: f64,
    /// Series terms (or quadrature nodes, or sum orders) consumed.
    pub terms_used: usize,
    pub warnings: Warnings,
}

impl EvalResult {
    pub fn new(value: Complex64, method: Method, est_error: f64, terms_used: usize) -> Self {
        EvalResult {
            value,
            method,
            est_error,
            terms_used,
            warnings: Warnings::default(),
        }
    }

    pub fn with_warnings(mut self, warnings: Warnings) -> Self {
        self.warnings = self.warnings.merge(warnings);
        self
    }

    /// Applies `f` to the value and scales the error estimate by `scale`.
    pub(crate) fn map(self, f: impl FnOnce(Complex64) -> Complex64, scale: f64) -> Self {
        EvalResult {
            value: f(self.value),
            est_error: self.est_error * scale,
            ..self
        }
    }
}

/// Relative difference `|a - b| / max(floor, |b|)`.
pub fn rel_diff(a: Complex64, b: Complex64, floor: f64) -> f64 {
    (a - b).norm() / b.norm().max(floor)
}
