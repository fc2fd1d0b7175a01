//! Gordeyev's integral
//!
//! ```text
//! G_ν(ω, λ) = ω ∫_0^∞ e^{iωt - λ(1 - cos t) - νt^2/2} dt
//!           = (-iω/√(2ν)) e^{-λ} Σ_n I_n(λ) Z((ω - n)/√(2ν))
//! ```
//!
//! with `I_n` the modified Bessel function of the first kind, plus the
//! large-`λ`, large-`ω` and combined expansions.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::asymptotic::{sector_sign_z, SectorDecision, Sign};
use crate::dawson::{fried_conte, MethodPolicy, Mode};
use crate::error::{Result, SpecFunError};
use crate::hyp::{sum_pfq, SeriesControl};
use crate::result::{EvalResult, Method, Warnings};

const SQRT_PI: f64 = 1.772_453_850_905_516_027_3;

/// Largest `|λ|` accepted by the Bessel routines.
pub const BESSEL_ABS_LIMIT: f64 = 700.0;

/// Below this `|λ|` Bessel values come from the ascending series.
const BESSEL_SERIES_RADIUS: f64 = 20.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GordeyevParams {
    pub omega: Complex64,
    pub lambda: Complex64,
    pub nu: Complex64,
}

impl GordeyevParams {
    pub fn new(omega: Complex64, lambda: Complex64, nu: Complex64) -> Result<Self> {
        let p = GordeyevParams { omega, lambda, nu };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let finite = [self.omega, self.lambda, self.nu]
            .iter()
            .all(|v| v.re.is_finite() && v.im.is_finite());
        if !finite {
            return Err(SpecFunError::Domain("Gordeyev parameters must be finite".into()));
        }
        if !(self.nu.re > 0.0) {
            return Err(SpecFunError::Domain(format!("Re(nu) must be positive (got {})", self.nu)));
        }
        Ok(())
    }

    /// `√(2ν)` on the principal branch, so `Re √(2ν) > 0`.
    pub fn root_two_nu(&self) -> Complex64 {
        (self.nu * 2.0).sqrt()
    }

    /// `(ω - n)/√(2ν)`.
    pub fn z_n(&self, n: i64) -> Complex64 {
        (self.omega - n as f64) / self.root_two_nu()
    }

    /// `-iω/√(2ν)`.
    pub fn prefactor(&self) -> Complex64 {
        Complex64::new(0.0, -1.0) * self.omega / self.root_two_nu()
    }
}

/// How far the sum over `n` runs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumTruncation {
    /// Hard cap on `|n|`.
    pub n_max: usize,
    /// Stop once a block of eight new orders adds less than this, relatively.
    pub tail_tol: f64,
    /// Sum at least `|n| <= n_min` before testing the tail.
    pub n_min: usize,
}

impl Default for SumTruncation {
    fn default() -> Self {
        SumTruncation {
            n_max: 10_000,
            tail_tol: 1e-14,
            n_min: 0,
        }
    }
}

impl SumTruncation {
    pub fn validate(&self) -> Result<()> {
        if self.n_max < 1 || !(self.tail_tol > 0.0) {
            return Err(SpecFunError::InvalidParameter(format!("bad sum truncation {self:?}")));
        }
        Ok(())
    }
}

fn bessel_guard(lam: Complex64) -> Result<()> {
    if !(lam.norm() <= BESSEL_ABS_LIMIT) {
        return Err(SpecFunError::Overflow(format!(
            "|lambda| = {} exceeds the Bessel limit {BESSEL_ABS_LIMIT}",
            lam.norm()
        )));
    }
    Ok(())
}

/// `I_n(λ)` from `(λ/2)^n/n! · 0F1(; n+1; λ^2/4)`, summed in double-double.
fn bessel_series(n: usize, lam: Complex64) -> Result<Complex64> {
    let half = lam * 0.5;
    let mut pre = Complex64::new(1.0, 0.0);
    for k in 1..=n {
        pre = pre * half / k as f64;
        if pre == Complex64::new(0.0, 0.0) {
            return Ok(pre);
        }
    }
    let ctl = SeriesControl {
        max_terms: 5_000,
        ..SeriesControl::default()
    };
    let s = sum_pfq(&[], &[Complex64::new(n as f64 + 1.0, 0.0)], half * half, &ctl)?;
    Ok(pre * s.sum.to_c64())
}

/// `e^{-λ} I_n(λ)` for `n = 0..=n_top` by Miller's downward recurrence,
/// normalized with `I_0 + 2 Σ_{n>=1} I_n = e^λ`. Needs `Re λ >= 0`.
fn scaled_bessel_miller(lam: Complex64, n_top: usize) -> Vec<Complex64> {
    let m = n_top.max(lam.norm().ceil() as usize);
    let start = m + (10.0 + 2.0 * (m as f64 * lam.norm()).sqrt()).ceil() as usize;
    let two_over = 2.0 / lam;
    let mut vals = vec![Complex64::new(0.0, 0.0); n_top + 1];
    let mut next = Complex64::new(0.0, 0.0);
    let mut cur = Complex64::new(1e-100, 0.0);
    let mut norm = Complex64::new(0.0, 0.0);
    for k in (1..=start).rev() {
        if k <= n_top {
            vals[k] = cur;
        }
        norm += 2.0 * cur;
        let prev = next + two_over * k as f64 * cur;
        next = cur;
        cur = prev;
        if cur.norm() > 1e100 {
            let s = 1e-100;
            cur *= s;
            next *= s;
            norm *= s;
            for v in vals.iter_mut() {
                *v *= s;
            }
        }
    }
    vals[0] = cur;
    norm += cur;
    vals.iter().map(|v| v / norm).collect()
}

/// `e^{-λ} I_n(λ)` for `n = 0..=n_top`.
pub fn scaled_bessel_sequence(lam: Complex64, n_top: usize) -> Result<Vec<Complex64>> {
    bessel_guard(lam)?;
    if lam == Complex64::new(0.0, 0.0) {
        let mut v = vec![Complex64::new(0.0, 0.0); n_top + 1];
        v[0] = Complex64::new(1.0, 0.0);
        return Ok(v);
    }
    if lam.re < 0.0 {
        // I_n(-λ) = (-1)^n I_n(λ)
        let factor = (-2.0 * lam).exp();
        let base = scaled_bessel_sequence(-lam, n_top)?;
        return Ok(base
            .into_iter()
            .enumerate()
            .map(|(n, v)| if n % 2 == 0 { v * factor } else { -v * factor })
            .collect());
    }
    if lam.norm() <= BESSEL_SERIES_RADIUS {
        let e = (-lam).exp();
        return (0..=n_top).map(|n| bessel_series(n, lam).map(|v| v * e)).collect();
    }
    Ok(scaled_bessel_miller(lam, n_top))
}

/// `I_n(λ)` from the ascending series alone, at any `|λ|` up to the guard.
pub fn bessel_i_series(n: i64, lam: Complex64) -> Result<Complex64> {
    bessel_guard(lam)?;
    bessel_series(n.unsigned_abs() as usize, lam)
}

/// Modified Bessel function `I_n(λ)` of integer order.
pub fn bessel_i(n: i64, lam: Complex64) -> Result<Complex64> {
    bessel_guard(lam)?;
    let m = n.unsigned_abs() as usize;
    if lam.norm() <= BESSEL_SERIES_RADIUS {
        return bessel_series(m, lam);
    }
    let seq = scaled_bessel_sequence(lam, m)?;
    Ok(seq[m] * lam.exp())
}

/// Leading large-`λ` form `e^λ/√(2πλ) · [1 - (4n^2 - 1)/(8λ)]`, valid for
/// `|arg λ| < π/2`.
pub fn bessel_i_asymptotic(n: i64, lam: Complex64) -> Result<Complex64> {
    check_lambda_sector(lam)?;
    Ok(lam.exp() * bessel_asym_weight(n, lam))
}

/// `[1 - (4n^2 - 1)/(8λ)] / √(2πλ)`, the large-`λ` form of `e^{-λ} I_n(λ)`.
fn bessel_asym_weight(n: i64, lam: Complex64) -> Complex64 {
    let nf = n as f64;
    (1.0 - (4.0 * nf * nf - 1.0) / (8.0 * lam)) / (lam * (2.0 * PI)).sqrt()
}

fn check_lambda_sector(lam: Complex64) -> Result<()> {
    if lam == Complex64::new(0.0, 0.0) || lam.arg().abs() >= FRAC_PI_2 {
        return Err(SpecFunError::Domain(format!(
            "large-lambda form needs -pi/2 < arg(lambda) < pi/2 (got {lam})"
        )));
    }
    Ok(())
}

/// `θ_n = arg((ω - n)/√(2ν))`, full quadrant, principal `√ν`.
pub fn theta_arg(p: &GordeyevParams, n: i64) -> Result<f64> {
    let num = p.omega - n as f64;
    if num == Complex64::new(0.0, 0.0) {
        return Err(SpecFunError::Degenerate { n });
    }
    Ok((num / p.root_two_nu()).arg())
}

/// The arctangent form of `θ_n` with its component formula as printed
/// (`(ω_r + n)` and a `ν̃_i ν̃_i` denominator). Kept only to document how far
/// it departs from [`theta_arg`].
pub fn theta_printed(p: &GordeyevParams, n: i64) -> f64 {
    let s = p.nu.sqrt();
    let (nr, ni) = (s.re, s.im);
    let (wr, wi) = (p.omega.re, p.omega.im);
    let nf = n as f64;
    ((wi * nr - (wr + nf) * ni) / ((wr + nf) * ni + wi * ni)).atan()
}

/// Sums `term(n)` over `|n| <= N`, growing `N` by blocks of eight from `n0`
/// until a block is negligible. Returns the sum, the last block's size and `N`.
fn tail_rule_sum<F>(tr: &SumTruncation, n0: usize, mut term: F) -> Result<(Complex64, f64, usize)>
where
    F: FnMut(i64) -> Result<Complex64>,
{
    tr.validate()?;
    let mut n_top = n0.max(tr.n_min).min(tr.n_max);
    let mut sum = Complex64::new(0.0, 0.0);
    let top = n_top as i64;
    for n in -top..=top {
        sum += term(n)?;
    }
    loop {
        if n_top >= tr.n_max {
            return Err(SpecFunError::TruncationCap { n_max: tr.n_max });
        }
        let hi = (n_top + 8).min(tr.n_max);
        let mut block = Complex64::new(0.0, 0.0);
        for m in (n_top + 1)..=hi {
            block += term(-(m as i64))?;
            block += term(m as i64)?;
        }
        sum += block;
        n_top = hi;
        if block.norm() <= tr.tail_tol * sum.norm() {
            return Ok((sum, block.norm(), n_top));
        }
    }
}

/// Lazily extended table of `e^{-λ} I_n(λ)`.
struct BesselTable {
    lam: Complex64,
    vals: Vec<Complex64>,
}

impl BesselTable {
    fn new(lam: Complex64, n_top: usize) -> Result<Self> {
        Ok(BesselTable {
            lam,
            vals: scaled_bessel_sequence(lam, n_top)?,
        })
    }

    fn get(&mut self, n: i64) -> Result<Complex64> {
        let m = n.unsigned_abs() as usize;
        if m >= self.vals.len() {
            self.vals = scaled_bessel_sequence(self.lam, 2 * m)?;
        }
        Ok(self.vals[m])
    }
}

fn initial_order(p: &GordeyevParams) -> usize {
    p.lambda.norm().ceil() as usize + 10
}

/// Gordeyev's integral by its Bessel-weighted sum of `Z` values.
pub fn gordeyev_series(p: &GordeyevParams, tr: &SumTruncation, pol: &MethodPolicy) -> Result<EvalResult> {
    p.validate()?;
    let n0 = initial_order(p);
    let mut table = BesselTable::new(p.lambda, n0.max(tr.n_min).min(tr.n_max) + 8)?;
    let mut err = 0.0;
    let mut warnings = Warnings::default();
    let (sum, tail, n_top) = tail_rule_sum(tr, n0, |n| {
        let w = table.get(n)?;
        let z = fried_conte(p.z_n(n), pol)?;
        if z.warnings.overflow && w != Complex64::new(0.0, 0.0) {
            warnings.overflow = true;
        }
        err += w.norm() * z.est_error;
        Ok(if w == Complex64::new(0.0, 0.0) { w } else { w * z.value })
    })?;
    let pre = p.prefactor();
    let value = pre * sum;
    let est_error = pre.norm() * (err + tail) + f64::EPSILON * value.norm();
    let method = match pol.mode {
        Mode::ForceAsymptotic => Method::Asymptotic,
        Mode::ForceQuadrature => Method::Quadrature,
        _ => Method::Series,
    };
    Ok(EvalResult::new(value, method, est_error, 2 * n_top + 1).with_warnings(warnings))
}

/// Orders kept by the large-`λ` forms: those with a positive bracket
/// `1 - (4n^2 - 1)/(8|λ|)`. Beyond them the bracket grows like `n^2` and the
/// sum diverges.
pub fn large_lambda_cutoff(lam: Complex64) -> usize {
    (2.0 * lam.norm() + 0.25).sqrt().floor() as usize
}

/// Large-`λ` expansion: the Bessel factors replaced by their leading form.
pub fn gordeyev_asym_lambda(p: &GordeyevParams, tr: &SumTruncation) -> Result<EvalResult> {
    p.validate()?;
    tr.validate()?;
    check_lambda_sector(p.lambda)?;
    let pol = MethodPolicy::default();
    let n_top = large_lambda_cutoff(p.lambda).min(tr.n_max) as i64;
    let mut sum = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut last = 0.0f64;
    for n in -n_top..=n_top {
        let w = bessel_asym_weight(n, p.lambda);
        let z = fried_conte(p.z_n(n), &pol)?;
        let t = w * z.value;
        sum += t;
        err += w.norm() * z.est_error;
        if n.abs() == n_top {
            last = last.max(t.norm());
        }
    }
    let pre = p.prefactor();
    let value = pre * sum;
    // The expansion error is dominated by the omitted O(1/λ^2) and the cut
    // sum; the edge terms give its scale.
    let est_error = pre.norm() * (err + 2.0 * last) + f64::EPSILON * value.norm();
    Ok(EvalResult::new(value, Method::Asymptotic, est_error, (2 * n_top + 1) as usize))
}

/// Which large-argument form of `Z` the Gordeyev expansions substitute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ZForm {
    /// The expansion assembled from the general `1F1` series.
    #[default]
    Assembled,
    /// The two-term forms exactly as printed, sign chosen by `θ_n`.
    Printed,
}

/// Sector bookkeeping for one term of the large-`ω` sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TermInfo {
    pub n: i64,
    pub theta: f64,
    pub decision: SectorDecision,
}

fn term_info(p: &GordeyevParams, n: i64, crossover_abs2: f64) -> Result<(Complex64, TermInfo)> {
    let z = p.z_n(n);
    let abs2 = z.norm_sqr();
    if abs2 < crossover_abs2 {
        return Err(SpecFunError::CrossoverViolation {
            n,
            abs2,
            crossover: crossover_abs2,
        });
    }
    let theta = theta_arg(p, n)?;
    let decision = sector_sign_z(z, 2)?;
    Ok((z, TermInfo { n, theta, decision }))
}

/// Printed large-argument `Z`, with `u = 1/z`.
fn z_printed(z: Complex64, sign: Sign) -> Complex64 {
    let i = Complex64::new(0.0, 1.0);
    let u = z.inv();
    let u2 = u * u;
    let algebraic = -u / 2.0 - SQRT_PI / 4.0 * u2 * u;
    match sign {
        Sign::Plus => i * (-z * z).exp() * (-PI / 2.0 * u2) + algebraic,
        // printed with e^{+z^2}
        Sign::Minus => i * SQRT_PI * (z * z).exp() * (2.0 + SQRT_PI / 2.0 * u2) + algebraic,
    }
}

/// Printed combined large-`λ`, large-`ω` summand (without the prefactor).
fn both_printed(z: Complex64, n: i64, lam: Complex64, sign: Sign) -> Complex64 {
    let i = Complex64::new(0.0, 1.0);
    let u = z.inv();
    let u2 = u * u;
    let nf = n as f64;
    let q = 4.0 * nf * nf - 1.0;
    let algebraic = -u / 2.0 + q / (16.0 * lam) * u - SQRT_PI / 4.0 * u2 * u + q * SQRT_PI / (32.0 * lam) * u2 * u;
    let e = (-z * z).exp();
    match sign {
        Sign::Plus => i * e * (-PI / 2.0 * u2 + q * PI / (16.0 * lam) * u2) + algebraic,
        Sign::Minus => {
            i * SQRT_PI
                * e
                * (2.0 - q / (4.0 * lam) + SQRT_PI / 2.0 * u2 - q * SQRT_PI / (16.0 * lam) * u2)
                + algebraic
        }
    }
}

fn z_large(z: Complex64, form: ZForm, info: &TermInfo) -> Result<(Complex64, f64)> {
    match form {
        ZForm::Assembled => {
            let pol = MethodPolicy::with_mode(Mode::ForceAsymptotic);
            let r = fried_conte(z, &pol)?;
            Ok((r.value, r.est_error))
        }
        ZForm::Printed => {
            let v = z_printed(z, info.decision.sign);
            Ok((v, v.norm() * z.norm().powi(-4)))
        }
    }
}

/// Large-`ω` (or small-`ν`) expansion with per-term sector choice.
pub fn gordeyev_asym_omega_detailed(
    p: &GordeyevParams,
    tr: &SumTruncation,
    form: ZForm,
) -> Result<(EvalResult, Vec<TermInfo>)> {
    p.validate()?;
    let crossover = MethodPolicy::default().crossover_abs2;
    let n0 = initial_order(p);
    let mut table = BesselTable::new(p.lambda, n0.max(tr.n_min).min(tr.n_max) + 8)?;
    let mut infos = Vec::new();
    let mut err = 0.0;
    let mut boundary = false;
    let (sum, tail, n_top) = tail_rule_sum(tr, n0, |n| {
        let (z, info) = term_info(p, n, crossover)?;
        boundary |= info.decision.boundary;
        let (zv, ze) = z_large(z, form, &info)?;
        infos.push(info);
        let w = table.get(n)?;
        err += w.norm() * ze;
        Ok(w * zv)
    })?;
    infos.sort_by_key(|t| t.n);
    let pre = p.prefactor();
    let value = pre * sum;
    let est_error = pre.norm() * (err + tail) + f64::EPSILON * value.norm();
    let r = EvalResult::new(value, Method::Asymptotic, est_error, 2 * n_top + 1).with_warnings(Warnings {
        sector_boundary: boundary,
        ..Warnings::default()
    });
    Ok((r, infos))
}

pub fn gordeyev_asym_omega(p: &GordeyevParams, tr: &SumTruncation) -> Result<EvalResult> {
    gordeyev_asym_omega_detailed(p, tr, ZForm::Assembled).map(|(r, _)| r)
}

/// Combined large-`λ` and large-`ω` expansion.
pub fn gordeyev_asym_both_detailed(
    p: &GordeyevParams,
    tr: &SumTruncation,
    form: ZForm,
) -> Result<(EvalResult, Vec<TermInfo>)> {
    p.validate()?;
    tr.validate()?;
    check_lambda_sector(p.lambda)?;
    let crossover = MethodPolicy::default().crossover_abs2;
    let n_top = large_lambda_cutoff(p.lambda).min(tr.n_max) as i64;
    let scale = (p.lambda * (2.0 * PI)).sqrt().inv();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut last = 0.0f64;
    let mut boundary = false;
    let mut infos = Vec::new();
    for n in -n_top..=n_top {
        let (z, info) = term_info(p, n, crossover)?;
        boundary |= info.decision.boundary;
        let t = match form {
            ZForm::Assembled => {
                let (zv, ze) = z_large(z, form, &info)?;
                let w = bessel_asym_weight(n, p.lambda);
                err += w.norm() * ze;
                w * zv
            }
            ZForm::Printed => {
                let v = scale * both_printed(z, n, p.lambda, info.decision.sign);
                err += v.norm() * z.norm().powi(-4);
                v
            }
        };
        infos.push(info);
        sum += t;
        if n.abs() == n_top {
            last = last.max(t.norm());
        }
    }
    let pre = p.prefactor();
    let value = pre * sum;
    let est_error = pre.norm() * (err + 2.0 * last) + f64::EPSILON * value.norm();
    let r = EvalResult::new(value, Method::Asymptotic, est_error, (2 * n_top + 1) as usize).with_warnings(
        Warnings {
            sector_boundary: boundary,
            ..Warnings::default()
        },
    );
    Ok((r, infos))
}

pub fn gordeyev_asym_both(p: &GordeyevParams, tr: &SumTruncation) -> Result<EvalResult> {
    gordeyev_asym_both_detailed(p, tr, ZForm::Assembled).map(|(r, _)| r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dawson::fried_conte;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn params(w: Complex64, l: Complex64, n: Complex64) -> GordeyevParams {
        GordeyevParams::new(w, l, n).unwrap()
    }

    #[test]
    fn bessel_small_cases() {
        assert_eq!(bessel_i(0, c(0.0, 0.0)).unwrap(), c(1.0, 0.0));
        assert_eq!(bessel_i(3, c(0.0, 0.0)).unwrap(), c(0.0, 0.0));
        let v = bessel_i(0, c(1.0, 0.0)).unwrap();
        assert!((v.re - 1.266_065_877_752_008_335_6).abs() < 1e-15);
    }

    #[test]
    fn bessel_symmetry_is_exact() {
        for lam in [c(0.7, 0.3), c(25.0, -4.0), c(-3.0, 1.0)] {
            for n in 0..6 {
                assert_eq!(bessel_i(-n, lam).unwrap(), bessel_i(n, lam).unwrap());
            }
        }
    }

    #[test]
    fn miller_agrees_with_series_at_large_argument() {
        let lam = c(50.0, 0.0);
        let seq = scaled_bessel_miller(lam, 5);
        for (n, v) in seq.iter().enumerate() {
            let s = bessel_series(n, lam).unwrap() * (-lam).exp();
            assert!((v - s).norm() < 1e-14 * s.norm(), "n = {n}");
        }
        let lam = c(30.0, 20.0);
        let seq = scaled_bessel_miller(lam, 4);
        for (n, v) in seq.iter().enumerate() {
            let s = bessel_series(n, lam).unwrap() * (-lam).exp();
            assert!((v - s).norm() < 1e-12 * s.norm(), "n = {n}");
        }
    }

    #[test]
    fn reflection_in_lambda() {
        let lam = c(-2.5, 0.4);
        for n in 0..5i64 {
            let a = bessel_i(n, lam).unwrap();
            let b = bessel_i(n, -lam).unwrap() * if n % 2 == 0 { 1.0 } else { -1.0 };
            assert!((a - b).norm() < 1e-14 * b.norm());
        }
    }

    #[test]
    fn bessel_guard() {
        assert!(matches!(bessel_i(0, c(800.0, 0.0)), Err(SpecFunError::Overflow(_))));
    }

    #[test]
    fn bessel_asymptotic_at_fifty() {
        let lam = c(50.0, 0.0);
        for n in 0..3 {
            let a = bessel_i_asymptotic(n, lam).unwrap();
            let s = bessel_i(n, lam).unwrap();
            assert!((a - s).norm() / s.norm() < 1e-3);
        }
        let a = bessel_i_asymptotic(0, c(1e6, 0.0)).unwrap();
        let lead = c(1e6, 0.0).exp() / (2.0 * PI * 1e6f64).sqrt();
        assert!(lead.re.is_infinite() || (a / lead - 1.0).norm() < 1e-6);
        let r = bessel_i_asymptotic(0, Complex64::from_polar(40.0, 1.6));
        assert!(matches!(r, Err(SpecFunError::Domain(_))));
    }

    #[test]
    fn theta_examples() {
        let p = params(c(2.0, 0.0), c(0.1, 0.0), c(0.5, 0.0));
        assert_eq!(theta_arg(&p, 0).unwrap(), 0.0);
        let p = params(c(2.0, 1.0), c(0.1, 0.0), c(0.5, 0.0));
        assert!((theta_arg(&p, 0).unwrap() - 0.463_647_609_000_806_1).abs() < 1e-15);
        let p = params(c(0.0, 0.0), c(0.1, 0.0), c(0.5, 0.0));
        assert!((theta_arg(&p, 1).unwrap() - PI).abs() < 1e-15);
        let p = params(c(3.0, 0.0), c(0.1, 0.0), c(0.1, 0.0));
        assert!(matches!(theta_arg(&p, 3), Err(SpecFunError::Degenerate { n: 3 })));
    }

    #[test]
    fn invalid_nu() {
        assert!(GordeyevParams::new(c(1.0, 0.0), c(1.0, 0.0), c(0.0, 1.0)).is_err());
        assert!(GordeyevParams::new(c(1.0, 0.0), c(1.0, 0.0), c(-0.1, 0.0)).is_err());
    }

    #[test]
    fn series_reference_value() {
        let p = params(c(1.3, 0.2), c(0.5, 0.0), c(0.2, 0.0));
        let r = gordeyev_series(&p, &SumTruncation::default(), &MethodPolicy::default()).unwrap();
        let want = c(0.410_916_603_592_323_770_6, 1.019_785_280_205_325_150_6);
        assert!((r.value - want).norm() < 1e-13 * want.norm(), "{:?}", r.value);
    }

    #[test]
    fn lambda_zero_collapses_to_one_term() {
        let p = params(c(0.5, 0.0), c(0.0, 0.0), c(0.3, 0.0));
        let r = gordeyev_series(&p, &SumTruncation::default(), &MethodPolicy::default()).unwrap();
        let z = fried_conte(p.z_n(0), &MethodPolicy::default()).unwrap().value;
        assert_eq!(r.value, p.prefactor() * z);
    }

    #[test]
    fn truncation_cap_is_reported() {
        let p = params(c(1.3, 0.2), c(0.5, 0.0), c(0.2, 0.0));
        let tr = SumTruncation {
            n_max: 3,
            ..SumTruncation::default()
        };
        let r = gordeyev_series(&p, &tr, &MethodPolicy::default());
        assert!(matches!(r, Err(SpecFunError::TruncationCap { n_max: 3 })));
    }

    #[test]
    fn lambda_regime_is_the_substituted_series() {
        let p = params(c(1.3, 0.2), c(40.0, 0.0), c(0.2, 0.0));
        let r = gordeyev_asym_lambda(&p, &SumTruncation::default()).unwrap();
        let n_top = large_lambda_cutoff(p.lambda) as i64;
        let pol = MethodPolicy::default();
        let mut sum = c(0.0, 0.0);
        for n in -n_top..=n_top {
            let i_n = bessel_i_asymptotic(n, p.lambda).unwrap();
            sum += (-p.lambda).exp() * i_n * fried_conte(p.z_n(n), &pol).unwrap().value;
        }
        let direct = p.prefactor() * sum;
        assert!((r.value - direct).norm() <= 1e-14 * direct.norm());
        let bad = params(c(1.3, 0.2), Complex64::from_polar(40.0, 1.6), c(0.2, 0.0));
        assert!(matches!(gordeyev_asym_lambda(&bad, &SumTruncation::default()), Err(SpecFunError::Domain(_))));
    }

    #[test]
    fn omega_regime_per_term_reduction() {
        let p = params(c(30.0, 5.0), c(0.5, 0.0), c(0.1, 0.0));
        let tr = SumTruncation::default();
        let (r, infos) = gordeyev_asym_omega_detailed(&p, &tr, ZForm::Assembled).unwrap();
        let pol = MethodPolicy::with_mode(Mode::ForceAsymptotic);
        let mut sum = c(0.0, 0.0);
        for t in &infos {
            let w = bessel_i(t.n, p.lambda).unwrap() * (-p.lambda).exp();
            sum += w * fried_conte(p.z_n(t.n), &pol).unwrap().value;
        }
        let direct = p.prefactor() * sum;
        assert!((r.value - direct).norm() <= 1e-13 * direct.norm());
        let s = gordeyev_series(&p, &tr, &MethodPolicy::default()).unwrap();
        assert!((r.value - s.value).norm() <= 1e-4 * s.value.norm());
    }

    #[test]
    fn crossover_violation_names_the_term() {
        let p = params(c(3.0, 0.0), c(0.5, 0.0), c(0.1, 0.0));
        let e = gordeyev_asym_omega(&p, &SumTruncation::default()).unwrap_err();
        assert!(matches!(e, SpecFunError::CrossoverViolation { .. }));
        let p = params(c(3.0, 0.0), c(0.0, 0.0), c(0.1, 0.0));
        match gordeyev_asym_omega(&p, &SumTruncation::default()).unwrap_err() {
            SpecFunError::CrossoverViolation { n, .. } => assert!((n - 3).abs() <= 3),
            e => panic!("{e}"),
        }
    }

    #[test]
    fn sector_flip_under_rotation() {
        let tr = SumTruncation::default();
        let p = params(c(30.0, 5.0), c(40.0, 0.0), c(0.1, 0.0));
        let (_, infos) = gordeyev_asym_both_detailed(&p, &tr, ZForm::Printed).unwrap();
        let t0 = infos.iter().find(|t| t.n == 0).unwrap();
        assert_eq!(t0.decision.sign, Sign::Plus);
        // θ_0 = arg ω for real ν; put it at -π/2
        let p = params(c(0.0, -30.0), c(40.0, 0.0), c(0.1, 0.0));
        let (_, infos) = gordeyev_asym_both_detailed(&p, &tr, ZForm::Printed).unwrap();
        let t0 = infos.iter().find(|t| t.n == 0).unwrap();
        assert!((t0.theta + FRAC_PI_2).abs() < 1e-15);
        assert_eq!(t0.decision.sign, Sign::Minus);
    }

    #[test]
    fn combined_leading_order_matches_omega_regime_weights() {
        // dropping the 1/λ bracket leaves Σ Z_n/√(2πλ), the omega regime with
        // e^{-λ} I_n replaced by its leading form
        let p = params(c(30.0, 5.0), c(40.0, 0.0), c(0.1, 0.0));
        let pol = MethodPolicy::with_mode(Mode::ForceAsymptotic);
        let n_top = large_lambda_cutoff(p.lambda) as i64;
        let scale = (p.lambda * (2.0 * PI)).sqrt().inv();
        let mut lead = c(0.0, 0.0);
        let mut bracket = c(0.0, 0.0);
        for n in -n_top..=n_top {
            let z = fried_conte(p.z_n(n), &pol).unwrap().value;
            lead += scale * z;
            bracket += bessel_asym_weight(n, p.lambda) * z;
        }
        let r = gordeyev_asym_both(&p, &SumTruncation::default()).unwrap();
        assert!((r.value - p.prefactor() * bracket).norm() <= 1e-14 * r.value.norm());
        let first_order = p.prefactor() * (bracket - lead);
        assert!(first_order.norm() < (p.prefactor() * lead).norm());
    }
}
