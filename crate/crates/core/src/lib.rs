//! Dawson's integral and its relatives through confluent hypergeometric
//! closed forms, with sector-aware asymptotic expansions and an adaptive
//! quadrature oracle of the defining integrals.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

mod dd;

pub mod asymptotic;
pub mod dawson;
pub mod error;
pub mod fresnel;
pub mod gordeyev;
pub mod hyp;
pub mod quadrature;
pub mod result;

pub use asymptotic::{
    hyp1f1_asymptotic, hyp1f1_asymptotic_parts, hyp1f1_asymptotic_with_sign, lemma1_expansion, lemma1_printed,
    sector_sign_xi, sector_sign_z, AsymptoticParts, SectorDecision, Sign, TruncationOrders,
};
pub use dawson::{
    dawson, dawson_asymptotic, faddeeva, fried_conte, jackson, jackson_real, sitenko, MethodPolicy, Mode,
};
pub use error::{Result, SpecFunError};
pub use fresnel::{fresnel, fresnel_asymptotic, fresnel_c, fresnel_complex, fresnel_s, FresnelPair};
pub use gordeyev::{
    bessel_i, bessel_i_asymptotic, bessel_i_series, gordeyev_asym_both, gordeyev_asym_lambda, gordeyev_asym_omega,
    gordeyev_series, theta_arg, GordeyevParams, SumTruncation, TermInfo, ZForm,
};
pub use hyp::{gamma_complex, gamma_real, hyp1f1, hyp1f1_series, hyp1f2, pochhammer, recip_gamma, SeriesControl};
pub use quadrature::{adaptive_quad, quad_dawson, quad_faddeeva, quad_fresnel, quad_gordeyev, QuadratureConfig};
pub use result::{rel_diff, EvalResult, Method, Warnings};
