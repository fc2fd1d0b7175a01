//! Large-argument expansion of `1F1(a; b; ξ)` and its sector bookkeeping.
//!
//! The expansion is
//!
//! ```text
//! 1F1(a;b;ξ)/Γ(b) ≈ e^{±iπa} ξ^{-a}/Γ(b-a) Σ_{n<R} (a)_n (1+a-b)_n/n! (-ξ)^{-n}
//!                 + e^ξ ξ^{a-b}/Γ(a)     Σ_{n<S} (b-a)_n (1-a)_n/n! ξ^{-n}
//! ```
//!
//! Two sign conventions live here. [`sector_sign_xi`] and [`sector_sign_z`]
//! report the textbook inequality (plus on `-π/2 < arg ξ < 3π/2`, minus on
//! `-3π/2 < arg ξ <= -π/2`), mapped to `z` with `ξ = z^α`. The numeric
//! evaluation switches the sign on the positive real axis instead, where the
//! algebraic part is maximally subdominant: `+` for `Im ξ > 0`, `-` for
//! `Im ξ < 0`, and the mean of both on `ξ > 0`. Switching at `arg ξ = -π/2`,
//! where both parts have equal size, produces O(1) errors next to that ray.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{Result, SpecFunError};
use crate::hyp::{gamma_complex, gamma_real, is_pole, recip_gamma};
use crate::result::{EvalResult, Method, Warnings};

/// `|ξ|` below which an asymptotic result carries the crossover warning.
pub const DEFAULT_CROSSOVER_ABS: f64 = 30.0;

const BOUNDARY_TOL: f64 = 1e-12;

/// Truncation orders of the two asymptotic sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncationOrders {
    pub r: usize,
    pub s: usize,
}

impl Default for TruncationOrders {
    fn default() -> Self {
        TruncationOrders { r: 3, s: 3 }
    }
}

impl TruncationOrders {
    pub fn new(r: usize, s: usize) -> Result<Self> {
        if r < 1 || s < 1 {
            return Err(SpecFunError::InvalidParameter(format!(
                "truncation orders must be >= 1 (got R = {r}, S = {s})"
            )));
        }
        Ok(TruncationOrders { r, s })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_f64(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// Branch choice of an asymptotic expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SectorDecision {
    pub sign: Sign,
    /// Index `k` of the sector that contains the argument.
    pub k: u32,
    pub alpha: u32,
    /// The argument lies on a sector edge.
    pub boundary: bool,
}

/// Sector of `ξ` for the `1F1` expansion, principal argument in `(-π, π]`.
pub fn sector_sign_xi(xi: Complex64) -> Result<SectorDecision> {
    let xi = canonical(xi);
    if xi == Complex64::new(0.0, 0.0) {
        return Err(SpecFunError::Domain("sector of xi = 0 is undefined".into()));
    }
    let phi = xi.arg();
    let sign = if phi <= -FRAC_PI_2 { Sign::Minus } else { Sign::Plus };
    Ok(SectorDecision {
        sign,
        k: 0,
        alpha: 1,
        boundary: phi == -FRAC_PI_2,
    })
}

/// Sector of `z` for the expansion in `ξ = z^α`.
///
/// Searches `k = 0, 1, ...` for the first interval holding `arg z` (or
/// `arg z + 2π`), trying the plus interval `(-π/(2α), 3π/(2α)) + 2kπ/α`
/// before the minus interval `(-3π/(2α), -π/(2α)] + 2kπ/α`. Edges where
/// `α arg z ≡ ±π/2 (mod 2π)` set `boundary`; the `-π/2` edge belongs to the
/// minus sector and the `+π/2` edge to the plus sector.
pub fn sector_sign_z(z: Complex64, alpha: u32) -> Result<SectorDecision> {
    if alpha == 0 {
        return Err(SpecFunError::InvalidParameter("alpha must be positive".into()));
    }
    if z == Complex64::new(0.0, 0.0) {
        return Err(SpecFunError::Domain("sector of z = 0 is undefined".into()));
    }
    let a = alpha as f64;
    let phi = z.arg();

    // Distance of α·arg z from the edges ±π/2 (mod 2π).
    let scaled = (a * phi).rem_euclid(2.0 * PI);
    let tol = BOUNDARY_TOL * a;
    let on_minus_edge = (scaled - 1.5 * PI).abs() <= tol;
    let on_plus_edge = (scaled - FRAC_PI_2).abs() <= tol;

    for k in 0..=(2 * alpha) {
        let shift = 2.0 * k as f64 * PI / a;
        for psi in [phi, phi + 2.0 * PI] {
            let x = a * (psi - shift);
            let in_plus = if on_minus_edge {
                false
            } else if on_plus_edge {
                (x - FRAC_PI_2).abs() <= tol
            } else {
                x > -FRAC_PI_2 && x < 1.5 * PI
            };
            if in_plus {
                return Ok(SectorDecision {
                    sign: Sign::Plus,
                    k,
                    alpha,
                    boundary: on_plus_edge,
                });
            }
            let in_minus = if on_minus_edge {
                (x + FRAC_PI_2).abs() <= tol
            } else {
                !on_plus_edge && x > -1.5 * PI && x <= -FRAC_PI_2
            };
            if in_minus {
                return Ok(SectorDecision {
                    sign: Sign::Minus,
                    k,
                    alpha,
                    boundary: on_minus_edge,
                });
            }
        }
    }
    unreachable!("the sectors cover the circle")
}

/// Maps a `-0.0` imaginary part to `+0.0`, so the negative real axis has
/// argument `π` throughout.
pub(crate) fn canonical(v: Complex64) -> Complex64 {
    Complex64::new(v.re, v.im + 0.0)
}

/// Stokes multiplier used for evaluation: `+1`, `-1`, or `0` (the mean of both).
pub(crate) fn stokes_sigma(xi: Complex64) -> f64 {
    if xi.im > 0.0 {
        1.0
    } else if xi.im < 0.0 {
        -1.0
    } else if xi.re > 0.0 {
        0.0
    } else {
        1.0
    }
}

/// `Σ_{n<max} (p)_n (q)_n / n! · x^n`, stopped early once terms stop shrinking.
///
/// Returns the sum, an estimate of the omitted remainder and the count.
pub(crate) fn asymptotic_sum(p: Complex64, q: Complex64, x: Complex64, max: usize) -> (Complex64, f64, usize) {
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut n = 0;
    while n < max {
        sum += term;
        let nf = n as f64;
        let next = term * (p + nf) * (q + nf) * x / (nf + 1.0);
        n += 1;
        let next_mag = next.norm();
        if next_mag == 0.0 {
            return (sum, 0.0, n);
        }
        if n < max && (next_mag > term.norm() || next_mag <= 0.5 * f64::EPSILON * sum.norm()) {
            return (sum, tail_bound(next), n);
        }
        term = next;
    }
    (sum, tail_bound(term), n)
}

/// Remainder estimate: twice the first omitted term.
fn tail_bound(first: Complex64) -> f64 {
    2.0 * first.norm()
}

/// The two pieces of the expansion, kept apart so callers can attach their own
/// exponential factors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticParts {
    /// `Γ(b) e^{±iπa} ξ^{-a}/Γ(b-a) Σ_R`.
    pub algebraic: Complex64,
    /// `Γ(b) ξ^{a-b}/Γ(a) Σ_S`, to be multiplied by `e^ξ`.
    pub exp_coeff: Complex64,
    pub algebraic_error: f64,
    /// Error of `exp_coeff`, before the factor `e^ξ`.
    pub exp_error: f64,
    pub terms_used: usize,
    /// Textbook sector of `ξ`.
    pub decision: SectorDecision,
}

fn parts_with_phase(
    a: Complex64,
    b: Complex64,
    xi: Complex64,
    ord: TruncationOrders,
    phase: Complex64,
) -> Result<AsymptoticParts> {
    TruncationOrders::new(ord.r, ord.s)?;
    let decision = sector_sign_xi(xi)?;
    if is_pole(b) {
        return Err(SpecFunError::Pole {
            what: "lower parameter",
            value: b,
        });
    }
    let one = Complex64::new(1.0, 0.0);
    let gb = gamma_complex(b)?;
    let xi = canonical(xi);
    let ln_xi = xi.ln();

    let mut terms_used = 0;
    let (mut algebraic, mut algebraic_error) = (Complex64::new(0.0, 0.0), 0.0);
    let rgba = recip_gamma(b - a);
    if rgba != Complex64::new(0.0, 0.0) {
        let pre = gb * phase * (-a * ln_xi).exp() * rgba;
        let (s, err, n) = asymptotic_sum(a, one + a - b, -xi.inv(), ord.r);
        algebraic = pre * s;
        algebraic_error = pre.norm() * err;
        terms_used += n;
    }

    let (mut exp_coeff, mut exp_error) = (Complex64::new(0.0, 0.0), 0.0);
    let rga = recip_gamma(a);
    if rga != Complex64::new(0.0, 0.0) {
        let pre = gb * ((a - b) * ln_xi).exp() * rga;
        let (s, err, n) = asymptotic_sum(b - a, one - a, xi.inv(), ord.s);
        exp_coeff = pre * s;
        exp_error = pre.norm() * err;
        terms_used += n;
    }

    Ok(AsymptoticParts {
        algebraic,
        exp_coeff,
        algebraic_error,
        exp_error,
        terms_used,
        decision,
    })
}

/// Both parts of the expansion, with the evaluation sign rule.
pub fn hyp1f1_asymptotic_parts(
    a: Complex64,
    b: Complex64,
    xi: Complex64,
    ord: TruncationOrders,
) -> Result<AsymptoticParts> {
    let sigma = stokes_sigma(xi);
    let i_pi_a = Complex64::new(0.0, PI) * a;
    let phase = if sigma == 0.0 {
        (i_pi_a.exp() + (-i_pi_a).exp()) * 0.5
    } else {
        (i_pi_a * sigma).exp()
    };
    parts_with_phase(a, b, xi, ord, phase)
}

fn assemble(parts: AsymptoticParts, xi: Complex64) -> EvalResult {
    let mut warnings = Warnings {
        sector_boundary: parts.decision.boundary,
        below_crossover: xi.norm() < DEFAULT_CROSSOVER_ABS,
        overflow: false,
    };
    let (dominant, dominant_err) = if parts.exp_coeff == Complex64::new(0.0, 0.0) {
        (Complex64::new(0.0, 0.0), 0.0)
    } else {
        let e = xi.exp();
        (e * parts.exp_coeff, e.norm() * parts.exp_error)
    };
    let mut value = parts.algebraic + dominant;
    if !(value.re.is_finite() && value.im.is_finite()) {
        warnings.overflow = true;
        value = Complex64::new(f64::INFINITY, f64::INFINITY);
    }
    let est_error = parts.algebraic_error + dominant_err + f64::EPSILON * value.norm();
    EvalResult::new(value, Method::Asymptotic, est_error, parts.terms_used).with_warnings(warnings)
}

/// Asymptotic value of `1F1(a; b; ξ)` for large `|ξ|`.
///
/// A sum whose gamma prefactor `1/Γ(b-a)` or `1/Γ(a)` vanishes is dropped.
/// Each sum stops at its order or at its smallest term, whichever comes first.
pub fn hyp1f1_asymptotic(
    a: Complex64,
    b: Complex64,
    xi: Complex64,
    ord: TruncationOrders,
) -> Result<EvalResult> {
    Ok(assemble(hyp1f1_asymptotic_parts(a, b, xi, ord)?, xi))
}

/// The expansion with the sign of `e^{±iπa}` forced, as the textbook form reads.
pub fn hyp1f1_asymptotic_with_sign(
    a: Complex64,
    b: Complex64,
    xi: Complex64,
    ord: TruncationOrders,
    sign: Sign,
) -> Result<EvalResult> {
    let phase = (Complex64::new(0.0, PI * sign.as_f64()) * a).exp();
    Ok(assemble(parts_with_phase(a, b, xi, ord, phase)?, xi))
}

pub(crate) fn int_pow(z: Complex64, alpha: u32) -> Complex64 {
    (1..alpha).fold(z, |acc, _| acc * z)
}

/// Large-`|z|` value of `z 1F1(1/α; 1/α+1; z^α)` through [`hyp1f1_asymptotic`].
pub fn lemma1_expansion(z: Complex64, alpha: u32, ord: TruncationOrders) -> Result<EvalResult> {
    let decision = sector_sign_z(z, alpha)?;
    let inv = 1.0 / alpha as f64;
    let a = Complex64::new(inv, 0.0);
    let b = Complex64::new(inv + 1.0, 0.0);
    let r = hyp1f1_asymptotic(a, b, int_pow(z, alpha), ord)?;
    let mut out = r.map(|v| z * v, z.norm());
    out.warnings.sector_boundary = decision.boundary;
    Ok(out)
}

/// The closed two-term form printed for `z 1F1(1/α; 1/α+1; z^α)`, reproduced
/// verbatim for comparison; its `1/z^α` corrections do not follow from the
/// general expansion. The sign comes from [`sector_sign_z`].
pub fn lemma1_printed(z: Complex64, alpha: u32) -> Result<EvalResult> {
    let decision = sector_sign_z(z, alpha)?;
    let a = alpha as f64;
    let g1 = gamma_real(1.0 / a + 1.0)?;
    let g2 = gamma_real(2.0 - 1.0 / a)?;
    let za = int_pow(z, alpha);
    let phase = Complex64::new(0.0, decision.sign.as_f64() * PI / a).exp();
    let unit = if alpha % 2 == 0 {
        z / z.norm()
    } else {
        Complex64::new(1.0, 0.0)
    };
    let first = g1 * phase * unit * (1.0 + g1 / za);
    let second = za.exp() / (a * int_pow(z, alpha - 1)) * (1.0 + g2 / za);
    let value = first + second;
    let est_error = (first.norm() + second.norm()) * za.norm().powi(-2);
    Ok(EvalResult::new(value, Method::Asymptotic, est_error, 4).with_warnings(Warnings {
        sector_boundary: decision.boundary,
        below_crossover: za.norm() < DEFAULT_CROSSOVER_ABS,
        overflow: !(value.re.is_finite() && value.im.is_finite()),
    }))
}
