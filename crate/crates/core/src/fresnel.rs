//! Fresnel integrals `C(z) = ∫_0^z cos(πη^2) dη`, `S(z) = ∫_0^z sin(πη^2) dη`
//! and their combination `∫_0^z e^{iπη^2} dη`.
//!
//! With the `πη^2` phase the series read
//!
//! ```text
//! C(z) = z 1F2(1/4; 1/2, 5/4; -π^2 z^4/4)
//! S(z) = (πz^3/3) 1F2(3/4; 3/2, 7/4; -π^2 z^4/4)
//! ```
//!
//! and `C(∞) = S(∞) = √2/4`.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::asymptotic::{hyp1f1_asymptotic_parts, Sign, TruncationOrders};
use crate::dawson::{MethodPolicy, Mode};
use crate::error::{Result, SpecFunError};
use crate::hyp::{hyp1f1, hyp1f2, SeriesControl};
use crate::quadrature::quad_fresnel;
use crate::result::{EvalResult, Method, Warnings};

/// Auto mode switches from the series to the expansion at this `|z|`.
pub const FRESNEL_CROSSOVER_ABS: f64 = 3.5;

const BOUNDARY_TOL: f64 = 1e-12;

/// The pair `(C(z), S(z))`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FresnelPair {
    pub c: Complex64,
    pub s: Complex64,
    pub method: Method,
    /// Larger of the two absolute error estimates.
    pub est_error: f64,
    pub warnings: Warnings,
}

impl FresnelPair {
    pub fn c_result(&self) -> EvalResult {
        EvalResult::new(self.c, self.method, self.est_error, 0).with_warnings(self.warnings)
    }

    pub fn s_result(&self) -> EvalResult {
        EvalResult::new(self.s, self.method, self.est_error, 0).with_warnings(self.warnings)
    }
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn series_arg(z: Complex64) -> Complex64 {
    let z2 = z * z;
    -(z2 * z2) * (PI * PI / 4.0)
}

/// `C(z)` by its `1F2` series.
pub fn fresnel_c(z: Complex64, ctl: &SeriesControl) -> Result<EvalResult> {
    let r = hyp1f2(real(0.25), real(0.5), real(1.25), series_arg(z), ctl)?;
    Ok(r.map(|v| z * v, z.norm()))
}

/// `S(z)` by its `1F2` series.
pub fn fresnel_s(z: Complex64, ctl: &SeriesControl) -> Result<EvalResult> {
    let pre = z * z * z * (PI / 3.0);
    let r = hyp1f2(real(0.75), real(1.5), real(1.75), series_arg(z), ctl)?;
    Ok(r.map(|v| pre * v, pre.norm()))
}

/// `∫_0^z e^{iπη^2} dη = z 1F1(1/2; 3/2; iπz^2)`.
pub fn fresnel_complex(z: Complex64, ctl: &SeriesControl) -> Result<EvalResult> {
    let xi = Complex64::new(0.0, PI) * z * z;
    let r = hyp1f1(real(0.5), real(1.5), xi, ctl)?;
    Ok(r.map(|v| z * v, z.norm()))
}

/// Sector for the large-`|z|` Fresnel forms: plus on `(-π/2, π/2) + kπ`,
/// minus on `(-π, -π/2) + kπ`, searched from `k = 0` with the plus interval
/// first. The edges `arg z = ±π/2 + kπ` are flagged and take the plus form.
pub fn fresnel_sector(z: Complex64) -> Result<(Sign, bool)> {
    if z == Complex64::new(0.0, 0.0) {
        return Err(SpecFunError::Domain("sector of z = 0 is undefined".into()));
    }
    let phi = z.arg();
    let off = (phi - FRAC_PI_2).rem_euclid(PI);
    let boundary = off <= BOUNDARY_TOL || PI - off <= BOUNDARY_TOL;
    if boundary {
        return Ok((Sign::Plus, true));
    }
    for k in 0..3 {
        let shift = k as f64 * PI;
        for psi in [phi, phi + 2.0 * PI] {
            let x = psi - shift;
            if x > -FRAC_PI_2 && x < FRAC_PI_2 {
                return Ok((Sign::Plus, false));
            }
            if x > -PI && x < -FRAC_PI_2 {
                return Ok((Sign::Minus, false));
            }
        }
    }
    unreachable!("the sectors cover the circle")
}

/// The large-`|z|` forms for `C` and `S` exactly as printed, including the
/// `±√2/4` constant. Kept for measurement against the oracle.
pub fn fresnel_asymptotic(z: Complex64) -> Result<FresnelPair> {
    let (sign, boundary) = fresnel_sector(z)?;
    let sg = sign.as_f64();
    let z2 = z * z;
    let k = 2f64.sqrt() / 4.0;
    let corr = (2.0 / PI).sqrt() / (8.0 * z2);
    let osc = (z2 * PI).sin() / (2.0 * PI * z) + (z2 * PI).cos() / (4.0 * PI.powf(1.5) * z2 * z);
    let c = sg * k - sg * corr - osc;
    let s = sg * k + sg * corr + osc;
    let finite = c.re.is_finite() && c.im.is_finite() && s.re.is_finite() && s.im.is_finite();
    Ok(FresnelPair {
        c,
        s,
        method: Method::Asymptotic,
        est_error: z.norm().powi(-4),
        warnings: Warnings {
            sector_boundary: boundary,
            below_crossover: z.norm() < 2.0,
            overflow: !finite,
        },
    })
}

/// `z 1F1(1/2; 3/2; ξ)` from the general expansion.
fn half_integral(z: Complex64, xi: Complex64, ord: TruncationOrders) -> Result<(Complex64, f64, usize)> {
    let p = hyp1f1_asymptotic_parts(real(0.5), real(1.5), xi, ord)?;
    let e = xi.exp();
    let v = z * (p.algebraic + e * p.exp_coeff);
    let err = z.norm() * (p.algebraic_error + e.norm() * p.exp_error);
    Ok((v, err, p.terms_used))
}

/// `C` and `S` assembled from the general `1F1` expansion of
/// `∫_0^z e^{±iπη^2} dη`, so that `C = (F₊ + F₋)/2` and `S = (F₊ - F₋)/(2i)`.
pub fn fresnel_assembled(z: Complex64, ord: TruncationOrders) -> Result<FresnelPair> {
    let (_, boundary) = fresnel_sector(z)?;
    let xi = Complex64::new(0.0, PI) * z * z;
    let (fp, ep, _) = half_integral(z, xi, ord)?;
    let (fm, em, _) = half_integral(z, -xi, ord)?;
    let c = (fp + fm) * 0.5;
    let s = (fp - fm) / Complex64::new(0.0, 2.0);
    let finite = c.re.is_finite() && c.im.is_finite() && s.re.is_finite() && s.im.is_finite();
    let est_error = 0.5 * (ep + em) + f64::EPSILON * c.norm().max(s.norm());
    Ok(FresnelPair {
        c,
        s,
        method: Method::Asymptotic,
        est_error,
        warnings: Warnings {
            sector_boundary: boundary,
            below_crossover: z.norm() < FRESNEL_CROSSOVER_ABS,
            overflow: !finite,
        },
    })
}

/// `C(z)` and `S(z)` with route selection: series below
/// [`FRESNEL_CROSSOVER_ABS`], the assembled expansion above.
pub fn fresnel(z: Complex64, pol: &MethodPolicy) -> Result<FresnelPair> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(SpecFunError::Domain(format!("argument is not finite: {z}")));
    }
    pol.validate()?;
    let use_series = match pol.mode {
        Mode::ForceSeries => true,
        Mode::ForceAsymptotic => false,
        Mode::ForceQuadrature => return quad_fresnel(z, &pol.quadrature),
        Mode::Auto => z.norm() < FRESNEL_CROSSOVER_ABS,
    };
    if !use_series {
        return fresnel_assembled(z, pol.orders);
    }
    let c = fresnel_c(z, &pol.series)?;
    let s = fresnel_s(z, &pol.series)?;
    Ok(FresnelPair {
        c: c.value,
        s: s.value,
        method: Method::Series,
        est_error: c.est_error.max(s.est_error),
        warnings: Warnings::default(),
    })
}
