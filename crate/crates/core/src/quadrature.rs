//! Adaptive Gauss-Kronrod quadrature of the defining integrals.
//!
//! Nothing here touches the series or asymptotic code; these routines are the
//! independent reference the closed forms are checked against.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Result, SpecFunError};
use crate::fresnel::FresnelPair;
use crate::gordeyev::GordeyevParams;
use crate::result::{EvalResult, Method, Warnings};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    pub abs_tol: f64,
    pub rel_tol: f64,
    /// Maximum number of bisections of any one subinterval.
    pub max_depth: u32,
    /// Integrand magnitude at which the Gordeyev range is cut off.
    pub tail_cut: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            abs_tol: 1e-13,
            rel_tol: 1e-12,
            max_depth: 50,
            tail_cut: 1e-16,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0 && self.rel_tol > 0.0 && self.tail_cut > 0.0 && self.tail_cut < 1.0)
            || self.max_depth < 1
        {
            return Err(SpecFunError::InvalidParameter(format!("bad quadrature config {self:?}")));
        }
        Ok(())
    }
}

// 15-point Kronrod nodes on [-1, 1] (non-negative half) with the embedded
// 7-point Gauss rule on the odd-indexed nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Piece {
    a: Complex64,
    b: Complex64,
    value: Complex64,
    error: f64,
    depth: u32,
}

fn gk15<F: Fn(Complex64) -> Complex64>(f: &F, a: Complex64, b: Complex64, depth: u32) -> Piece {
    let center = (a + b) * 0.5;
    let half = (b - a) * 0.5;
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += pair * WGK[j];
        if j % 2 == 1 {
            gauss += pair * WG[j / 2];
        }
    }
    Piece {
        a,
        b,
        value: kronrod * half,
        error: ((kronrod - gauss) * half).norm(),
        depth,
    }
}

/// Integral of `f` along the straight segment from `a` to `b`.
///
/// Repeatedly bisects the piece with the largest error estimate until the
/// total estimate falls below `max(abs_tol, rel_tol·|I|)`. The order of work
/// depends only on the inputs, so results are reproducible bit for bit.
pub fn adaptive_quad<F: Fn(Complex64) -> Complex64>(
    f: F,
    a: Complex64,
    b: Complex64,
    cfg: &QuadratureConfig,
) -> Result<EvalResult> {
    cfg.validate()?;
    if a == b {
        return Ok(EvalResult::new(Complex64::new(0.0, 0.0), Method::Quadrature, 0.0, 0));
    }
    let mut pieces = vec![gk15(&f, a, b, 0)];
    let mut evaluations = 15;
    loop {
        let total: Complex64 = pieces.iter().map(|p| p.value).sum();
        let error: f64 = pieces.iter().map(|p| p.error).sum();
        if !(total.re.is_finite() && total.im.is_finite() && error.is_finite()) {
            return Err(SpecFunError::Overflow("integrand is not finite on the segment".into()));
        }
        let tol = cfg.abs_tol.max(cfg.rel_tol * total.norm());
        if error <= tol {
            return Ok(EvalResult::new(total, Method::Quadrature, error, evaluations));
        }
        let (worst, _) = pieces
            .iter()
            .enumerate()
            .fold((0, -1.0), |(bi, be), (i, p)| if p.error > be { (i, p.error) } else { (bi, be) });
        let p = pieces[worst];
        if p.depth >= cfg.max_depth {
            return Err(SpecFunError::ToleranceNotMet {
                est_error: error,
                requested: tol,
            });
        }
        let mid = (p.a + p.b) * 0.5;
        pieces[worst] = gk15(&f, p.a, mid, p.depth + 1);
        pieces.push(gk15(&f, mid, p.b, p.depth + 1));
        evaluations += 30;
    }
}

/// `e^{-z^2} ∫_0^z e^{η^2} dη` by quadrature.
pub fn quad_dawson(z: Complex64, cfg: &QuadratureConfig) -> Result<EvalResult> {
    let z2 = z * z;
    if z2.re <= -700.0 {
        return Err(SpecFunError::Overflow(format!("e^(-z^2) overflows at z = {z}")));
    }
    let scale = (-z2).exp();
    let r = adaptive_quad(|t| (t * t).exp(), Complex64::new(0.0, 0.0), z, cfg)?;
    Ok(r.map(|v| v * scale, scale.norm()))
}

/// `w(z) = (1/√π) ∫_0^∞ e^{-t^2/4 + izt} dt` by quadrature, split at the
/// oscillation scale of `e^{izt}`.
///
/// Free of the cancellation between `e^{-z^2}` and the Dawson term that the
/// Dawson form suffers in the upper half plane.
pub fn quad_faddeeva(z: Complex64, cfg: &QuadratureConfig) -> Result<EvalResult> {
    cfg.validate()?;
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(SpecFunError::Domain(format!("argument is not finite: {z}")));
    }
    let growth = (-z.im).max(0.0);
    let t_end = 2.0 * (growth + (growth * growth - cfg.tail_cut.ln()).sqrt());
    let pieces = (t_end * z.norm().max(1.0) / PI).ceil() as usize;
    let sub = QuadratureConfig {
        abs_tol: cfg.abs_tol / pieces as f64,
        ..*cfg
    };
    let i = Complex64::new(0.0, 1.0);
    let f = |t: Complex64| (-t * t * 0.25 + i * z * t).exp();
    let step = t_end / pieces as f64;
    let mut total = Complex64::new(0.0, 0.0);
    let mut error = 0.0;
    let mut evaluations = 0;
    for k in 0..pieces {
        let a = Complex64::new(k as f64 * step, 0.0);
        let b = Complex64::new(if k + 1 == pieces { t_end } else { (k + 1) as f64 * step }, 0.0);
        let r = adaptive_quad(f, a, b, &sub)?;
        total += r.value;
        error += r.est_error;
        evaluations += r.terms_used;
    }
    let scale = 1.0 / PI.sqrt();
    Ok(EvalResult::new(total * scale, Method::Quadrature, error * scale, evaluations))
}

/// `∫_0^z cos(πη^2) dη` and `∫_0^z sin(πη^2) dη` by quadrature.
pub fn quad_fresnel(z: Complex64, cfg: &QuadratureConfig) -> Result<FresnelPair> {
    let zero = Complex64::new(0.0, 0.0);
    let c = adaptive_quad(|t| (t * t * PI).cos(), zero, z, cfg)?;
    let s = adaptive_quad(|t| (t * t * PI).sin(), zero, z, cfg)?;
    Ok(FresnelPair {
        c: c.value,
        s: s.value,
        method: Method::Quadrature,
        est_error: c.est_error.max(s.est_error),
        warnings: Warnings::default(),
    })
}

/// Cut-off `T` beyond which the Gordeyev integrand stays below `tail_cut`.
pub fn gordeyev_cutoff(p: &GordeyevParams, cfg: &QuadratureConfig) -> f64 {
    let wi = p.omega.im.abs();
    let nr = p.nu.re;
    let c = 2.0 * p.lambda.re.abs() - cfg.tail_cut.ln();
    (wi + (wi * wi + 2.0 * nr * c).sqrt()) / nr
}

/// `ω ∫_0^∞ e^{iωt - λ(1 - cos t) - νt^2/2} dt` by quadrature on `[0, T]`,
/// pre-split at multiples of π.
pub fn quad_gordeyev(p: &GordeyevParams, cfg: &QuadratureConfig) -> Result<EvalResult> {
    p.validate()?;
    cfg.validate()?;
    if p.omega == Complex64::new(0.0, 0.0) {
        return Ok(EvalResult::new(Complex64::new(0.0, 0.0), Method::Quadrature, 0.0, 0));
    }
    let t_end = gordeyev_cutoff(p, cfg);
    if !t_end.is_finite() {
        return Err(SpecFunError::Domain("no finite cut-off for the Gordeyev tail".into()));
    }
    let i = Complex64::new(0.0, 1.0);
    let f = |t: Complex64| (i * p.omega * t - p.lambda * (1.0 - t.cos()) - p.nu * t * t * 0.5).exp();

    let pieces = (t_end / PI).ceil().max(1.0) as usize;
    let sub = QuadratureConfig {
        abs_tol: cfg.abs_tol / pieces as f64,
        ..*cfg
    };
    let mut total = Complex64::new(0.0, 0.0);
    let mut error = 0.0;
    let mut evaluations = 0;
    for k in 0..pieces {
        let a = k as f64 * PI;
        let b = ((k + 1) as f64 * PI).min(t_end);
        let r = adaptive_quad(f, Complex64::new(a, 0.0), Complex64::new(b, 0.0), &sub)?;
        total += r.value;
        error += r.est_error;
        evaluations += r.terms_used;
    }
    let wnorm = p.omega.norm();
    Ok(EvalResult::new(p.omega * total, Method::Quadrature, wnorm * error, evaluations))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn faddeeva_laplace_form() {
        let cfg = QuadratureConfig::default();
        let r = quad_faddeeva(c(0.0, 6.4), &cfg).unwrap();
        assert!((r.value - c(0.087_115_704_674_415_763_1, 0.0)).norm() < 1e-15);
        let r = quad_faddeeva(c(5.28, 7.54), &cfg).unwrap();
        let want = c(0.050_293_773_518_325_247_7, 0.034_809_172_532_159_213_1);
        assert!((r.value - want).norm() < 1e-14);
        let r = quad_faddeeva(c(2.0, -1.0), &cfg).unwrap();
        let want = c(-0.205_325_580_646_587_513_3, 0.146_855_485_030_167_393_1);
        assert!((r.value - want).norm() < 1e-14);
    }

    #[test]
    fn constant_integrand() {
        let r = adaptive_quad(|_| c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), &QuadratureConfig::default()).unwrap();
        assert!((r.value - c(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn gaussian_along_imaginary_axis() {
        let r = adaptive_quad(|t| (t * t).exp(), c(0.0, 0.0), c(0.0, 1.0), &QuadratureConfig::default()).unwrap();
        assert!((r.value - c(0.0, 0.746_824_132_812_427_025_4)).norm() < 1e-14);
    }

    #[test]
    fn exp_square_on_unit_interval() {
        let r = adaptive_quad(|t| (t * t).exp(), c(0.0, 0.0), c(1.0, 0.0), &QuadratureConfig::default()).unwrap();
        assert!((r.value.re - 1.462_651_745_907_181_6).abs() < 1e-14);
        assert!(r.est_error <= 1e-12 * r.value.norm());
    }

    #[test]
    fn dawson_reference_points() {
        let cfg = QuadratureConfig::default();
        assert_eq!(quad_dawson(c(0.0, 0.0), &cfg).unwrap().value, c(0.0, 0.0));
        let r = quad_dawson(c(1.0, 0.0), &cfg).unwrap();
        assert!((r.value.re - 0.538_079_506_912_768_419_1).abs() < 1e-14);
        let r = quad_dawson(c(2.0, 0.0), &cfg).unwrap();
        assert!((r.value.re - 0.301_340_388_923_791_966).abs() < 1e-14);
        assert!(matches!(quad_dawson(c(0.0, 30.0), &cfg), Err(SpecFunError::Overflow(_))));
    }

    #[test]
    fn fresnel_reference_points() {
        let cfg = QuadratureConfig::default();
        let p = quad_fresnel(c(0.0, 0.0), &cfg).unwrap();
        assert_eq!((p.c, p.s), (c(0.0, 0.0), c(0.0, 0.0)));
        let p = quad_fresnel(c(1.0, 0.0), &cfg).unwrap();
        assert!((p.c.re - 0.373_982_833_415_732_332_7).abs() < 1e-14);
        assert!((p.s.re - 0.504_854_594_113_686_532_6).abs() < 1e-14);
        let p = quad_fresnel(c(0.5, 0.0), &cfg).unwrap();
        assert!((p.c.re - 0.470_025_850_029_383_885_1).abs() < 1e-14);
        assert!((p.s.re - 0.125_244_146_069_369_573_2).abs() < 1e-14);
    }

    #[test]
    fn tolerance_halving_is_consistent() {
        let cfg = QuadratureConfig::default();
        let tight = QuadratureConfig {
            abs_tol: cfg.abs_tol / 2.0,
            rel_tol: cfg.rel_tol / 2.0,
            ..cfg
        };
        let z = c(1.7, -0.9);
        let a = quad_dawson(z, &cfg).unwrap();
        let b = quad_dawson(z, &tight).unwrap();
        assert!((a.value - b.value).norm() <= a.est_error.max(1e-15));
    }

    #[test]
    fn straight_and_bent_paths_agree() {
        let cfg = QuadratureConfig::default();
        let f = |t: Complex64| (t * t).exp();
        let straight = adaptive_quad(f, c(0.0, 0.0), c(1.0, 1.0), &cfg).unwrap().value;
        let bent = adaptive_quad(f, c(0.0, 0.0), c(1.0, 0.0), &cfg).unwrap().value
            + adaptive_quad(f, c(1.0, 0.0), c(1.0, 1.0), &cfg).unwrap().value;
        assert!((straight - bent).norm() < 1e-10 * straight.norm());
    }

    #[test]
    fn gordeyev_reduces_to_a_smooth_real_integral() {
        // λ = 0, ω = i, ν = 1: i ∫_0^∞ e^{-t - t²/2} dt = i √(π/2) e^{1/2} erfc(1/√2)
        let p = GordeyevParams::new(c(0.0, 1.0), c(0.0, 0.0), c(1.0, 0.0)).unwrap();
        let r = quad_gordeyev(&p, &QuadratureConfig::default()).unwrap();
        let want = 0.655_679_542_418_798_5;
        assert!((r.value - c(0.0, want)).norm() < 1e-13, "{:?}", r.value);
        let p = GordeyevParams::new(c(0.0, 0.0), c(0.5, 0.0), c(0.2, 0.0)).unwrap();
        assert_eq!(quad_gordeyev(&p, &QuadratureConfig::default()).unwrap().value, c(0.0, 0.0));
    }

    #[test]
    fn gordeyev_reference() {
        let p = GordeyevParams::new(c(1.3, 0.2), c(0.5, 0.0), c(0.2, 0.0)).unwrap();
        let r = quad_gordeyev(&p, &QuadratureConfig::default()).unwrap();
        let want = c(0.410_916_603_592_323_770_6, 1.019_785_280_205_325_150_6);
        assert!((r.value - want).norm() < 1e-12 * want.norm(), "{:?}", r.value);
    }

    #[test]
    fn invalid_config_is_rejected() {
        let cfg = QuadratureConfig {
            abs_tol: 0.0,
            ..QuadratureConfig::default()
        };
        assert!(adaptive_quad(|t| t, c(0.0, 0.0), c(1.0, 0.0), &cfg).is_err());
    }
}
