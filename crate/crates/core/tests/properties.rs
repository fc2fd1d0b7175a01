use num_complex::Complex64;
use proptest::prelude::*;
use specfun_core::*;

const SQRT_PI: f64 = 1.772_453_850_905_516_027_3;

fn auto() -> MethodPolicy {
    MethodPolicy::default()
}

fn disk(radius: f64) -> impl Strategy<Value = Complex64> {
    (0.0..1.0f64, -std::f64::consts::PI..std::f64::consts::PI)
        .prop_map(move |(u, t)| Complex64::from_polar(radius * u.sqrt(), t))
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * b.norm().max(1.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dawson_is_odd(z in disk(12.0)) {
        let a = dawson(z, &auto()).unwrap().value;
        let b = dawson(-z, &auto()).unwrap().value;
        prop_assert!(close(a, -b, 1e-14));
    }

    #[test]
    fn dawson_commutes_with_conjugation(z in disk(5.0)) {
        let a = dawson(z.conj(), &auto()).unwrap().value;
        let b = dawson(z, &auto()).unwrap().value.conj();
        prop_assert!(close(a, b, 1e-14));
    }

    #[test]
    fn identity_chain(z in disk(4.0)) {
        let d = dawson(z, &auto()).unwrap().value;
        let w = (-z * z).exp() + Complex64::new(0.0, 2.0 / SQRT_PI) * d;
        prop_assert!(close(faddeeva(z, &auto()).unwrap().value, w, 1e-12));
        let zz = Complex64::new(0.0, SQRT_PI) * w;
        prop_assert!(close(fried_conte(z, &auto()).unwrap().value, zz, 1e-12));
        prop_assert!(close(jackson(z, &auto()).unwrap().value, 1.0 + z * zz, 1e-12));
    }

    #[test]
    fn forced_routes_agree_in_the_overlap(r in 6.0..7.0f64, t in 0.1..1.4f64) {
        let z = Complex64::from_polar(r, t);
        let s = dawson(z, &MethodPolicy::with_mode(Mode::ForceSeries)).unwrap();
        let a = dawson(z, &MethodPolicy::with_mode(Mode::ForceAsymptotic)).unwrap();
        prop_assert!((s.value - a.value).norm() <= 1e-9 * s.value.norm().max(1.0));
    }

    #[test]
    fn fresnel_is_odd_and_consistent(z in disk(3.0)) {
        let sc = SeriesControl::default();
        let c1 = fresnel_c(z, &sc).unwrap().value;
        let c2 = fresnel_c(-z, &sc).unwrap().value;
        prop_assert!(close(c1, -c2, 1e-14));
        let s1 = fresnel_s(z, &sc).unwrap().value;
        let s2 = fresnel_s(-z, &sc).unwrap().value;
        prop_assert!(close(s1, -s2, 1e-14));
    }

    #[test]
    fn gordeyev_conjugation_symmetry(
        w in disk(3.0),
        l in disk(2.0),
        nr in 0.1..1.0f64,
        ni in -0.5..0.5f64,
    ) {
        let nu = Complex64::new(nr, ni);
        let tr = SumTruncation::default();
        let a = gordeyev_series(&GordeyevParams::new(w, l, nu).unwrap(), &tr, &auto()).unwrap().value;
        let p = GordeyevParams::new(-w.conj(), l.conj(), nu.conj()).unwrap();
        let b = gordeyev_series(&p, &tr, &auto()).unwrap().value;
        prop_assert!((b + a.conj()).norm() <= 1e-12 * a.norm().max(1.0));
    }

    #[test]
    fn bessel_generating_sum(l in disk(15.0)) {
        let mut sum = bessel_i(0, l).unwrap();
        for n in 1..80 {
            sum += 2.0 * bessel_i(n, l).unwrap();
        }
        // the terms are of size e^{|Re λ|}; for Re λ < 0 the sum cancels down to e^λ
        prop_assert!((sum - l.exp()).norm() <= 1e-13 * l.re.abs().exp());
    }

    #[test]
    fn sector_sign_ignores_the_modulus(t in -3.0..3.0f64, alpha in 1u32..5) {
        let a = sector_sign_z(Complex64::from_polar(9.0, t), alpha).unwrap();
        let b = sector_sign_z(Complex64::from_polar(2.0, t), alpha).unwrap();
        prop_assert_eq!(a, b);
    }
}
