//! Maps a function name and method choice onto the core routines.

use clap::ValueEnum;
use num_complex::Complex64;
use specfun_core::dawson::printed;
use specfun_core::gordeyev::{gordeyev_asym_both_detailed, gordeyev_asym_omega_detailed};
use specfun_core::{
    dawson, faddeeva, fresnel, fresnel_asymptotic, fresnel_complex, fried_conte, gordeyev_asym_lambda, gordeyev_series,
    jackson, jackson_real, quad_gordeyev, sitenko, EvalResult, FresnelPair, GordeyevParams, Method, MethodPolicy, Mode,
    SpecFunError, SumTruncation, ZForm,
};

const SQRT_PI: f64 = 1.772_453_850_905_516_027_3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Daw,
    Faddeeva,
    FriedConte,
    Jackson,
    Sitenko,
    JacksonReal,
    FresnelC,
    FresnelS,
    Fresnel,
    Gordeyev,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Series,
    Asymptotic,
    PaperAsymptotic,
    Quadrature,
}

impl MethodArg {
    fn mode(self) -> Mode {
        match self {
            MethodArg::Auto => Mode::Auto,
            MethodArg::Series => Mode::ForceSeries,
            MethodArg::Asymptotic | MethodArg::PaperAsymptotic => Mode::ForceAsymptotic,
            MethodArg::Quadrature => Mode::ForceQuadrature,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MethodArg::Auto => "auto",
            MethodArg::Series => "series",
            MethodArg::Asymptotic => "asymptotic",
            MethodArg::PaperAsymptotic => "paper-asymptotic",
            MethodArg::Quadrature => "quadrature",
        }
    }
}

/// Which Gordeyev expansion the asymptotic methods use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Regime {
    Lambda,
    #[default]
    Omega,
    Both,
}

/// Everything besides the argument that an evaluation depends on.
#[derive(Debug, Clone, Copy)]
pub struct Settings {
    pub policy: MethodPolicy,
    pub truncation: SumTruncation,
    pub lambda: Option<Complex64>,
    pub nu: Option<Complex64>,
    pub regime: Regime,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            policy: MethodPolicy::default(),
            truncation: SumTruncation::default(),
            lambda: None,
            nu: None,
            regime: Regime::Omega,
        }
    }
}

#[derive(Debug)]
pub enum PointError {
    Usage(String),
    Numeric(SpecFunError),
}

impl From<SpecFunError> for PointError {
    fn from(e: SpecFunError) -> Self {
        PointError::Numeric(e)
    }
}

impl std::fmt::Display for PointError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PointError::Usage(m) => f.write_str(m),
            PointError::Numeric(e) => write!(f, "{e}"),
        }
    }
}

/// A computed value and the tag recorded in the `method` column.
#[derive(Debug, Clone)]
pub struct Evaluated {
    pub result: EvalResult,
    pub tag: &'static str,
}

fn real_arg(f: Function, z: Complex64) -> Result<f64, PointError> {
    if z.im != 0.0 {
        return Err(PointError::Usage(format!(
            "{} takes a real argument (got {z})",
            f.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
        )));
    }
    Ok(z.re)
}

fn sitenko_printed(x: f64) -> Result<EvalResult, PointError> {
    let d = printed::dawson(Complex64::new(x, 0.0))?;
    Ok(EvalResult {
        value: Complex64::new(2.0 * x * d.value.re, 0.0),
        est_error: 2.0 * x.abs() * d.est_error,
        ..d
    })
}

fn fresnel_value(f: Function, pair: &FresnelPair) -> EvalResult {
    let value = match f {
        Function::FresnelC => pair.c,
        Function::FresnelS => pair.s,
        _ => pair.c + Complex64::new(0.0, 1.0) * pair.s,
    };
    EvalResult::new(value, pair.method, pair.est_error, 0).with_warnings(pair.warnings)
}

fn gordeyev_params(z: Complex64, s: &Settings) -> Result<GordeyevParams, PointError> {
    let (Some(lambda), Some(nu)) = (s.lambda, s.nu) else {
        return Err(PointError::Usage("gordeyev needs --lambda and --nu".into()));
    };
    Ok(GordeyevParams::new(z, lambda, nu)?)
}

fn gordeyev(z: Complex64, s: &Settings, method: MethodArg) -> Result<EvalResult, PointError> {
    let p = gordeyev_params(z, s)?;
    let tr = &s.truncation;
    let form = if method == MethodArg::PaperAsymptotic {
        ZForm::Printed
    } else {
        ZForm::Assembled
    };
    let r = match method {
        MethodArg::Auto | MethodArg::Series => gordeyev_series(&p, tr, &s.policy)?,
        MethodArg::Quadrature => quad_gordeyev(&p, &s.policy.quadrature)?,
        MethodArg::Asymptotic | MethodArg::PaperAsymptotic => match s.regime {
            Regime::Lambda => gordeyev_asym_lambda(&p, tr)?,
            Regime::Omega => gordeyev_asym_omega_detailed(&p, tr, form)?.0,
            Regime::Both => gordeyev_asym_both_detailed(&p, tr, form)?.0,
        },
    };
    Ok(r)
}

/// Evaluates `f` at `z` (at `ω` for Gordeyev's integral).
pub fn evaluate(f: Function, z: Complex64, s: &Settings, method: MethodArg) -> Result<Evaluated, PointError> {
    let pol = MethodPolicy {
        mode: method.mode(),
        ..s.policy
    };
    let paper = method == MethodArg::PaperAsymptotic;
    let result = match f {
        Function::Daw if paper => printed::dawson(z)?,
        Function::Faddeeva if paper => printed::faddeeva(z)?,
        Function::FriedConte if paper => printed::fried_conte(z)?,
        Function::Jackson if paper => printed::jackson(z)?,
        Function::Daw => dawson(z, &pol)?,
        Function::Faddeeva => faddeeva(z, &pol)?,
        Function::FriedConte => fried_conte(z, &pol)?,
        Function::Jackson => jackson(z, &pol)?,
        Function::Sitenko => {
            let x = real_arg(f, z)?;
            if paper {
                sitenko_printed(x)?
            } else {
                sitenko(x, &pol)?
            }
        }
        Function::JacksonReal => {
            let x = real_arg(f, z)?;
            if paper {
                let phi = sitenko_printed(x)?;
                let value = Complex64::new(1.0 - phi.value.re, SQRT_PI * x * (-x * x).exp());
                EvalResult { value, ..phi }
            } else {
                jackson_real(x, &pol)?
            }
        }
        Function::FresnelC | Function::FresnelS => {
            let pair = if paper { fresnel_asymptotic(z)? } else { fresnel(z, &pol)? };
            fresnel_value(f, &pair)
        }
        Function::Fresnel => {
            let pair = if paper { fresnel_asymptotic(z)? } else { fresnel(z, &pol)? };
            if pair.method == Method::Series {
                fresnel_complex(z, &pol.series)?
            } else {
                fresnel_value(f, &pair)
            }
        }
        Function::Gordeyev => gordeyev(z, s, method)?,
    };
    let tag = if paper { "paper-asymptotic" } else { result.method.as_str() };
    Ok(Evaluated { result, tag })
}

/// The quadrature oracle for `f` at `z`.
pub fn oracle(f: Function, z: Complex64, s: &Settings) -> Result<Complex64, PointError> {
    evaluate(f, z, s, MethodArg::Quadrature).map(|e| e.result.value)
}
