use e8tau::lattice::{enumerate_norm, reflect, reflect_point, LatticeVector};
use e8tau::picard::{coords_back, coords_forward};
use e8tau::scalar::e;
use e8tau::specialfn::{bracket, theta, EllipticParams};
use e8tau::suite::picard_group_laws;
use e8tau::Params;
use num_complex::Complex64;
use proptest::prelude::*;

fn params() -> EllipticParams<f64> {
    Params::real(0.15, 0.1, 0.12).unwrap()
}

fn roots() -> Vec<LatticeVector> {
    enumerate_norm(2).unwrap()
}

fn cplx(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

prop_compose! {
    fn small_c()(re in -0.5f64..0.5, im in -0.1f64..0.1) -> Complex64 { cplx(re, im) }
}

prop_compose! {
    fn point()(c in prop::array::uniform8((-1.0f64..1.0, -0.2f64..0.2))) -> [Complex64; 8] {
        c.map(|(a, b)| cplx(a, b))
    }
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + b.norm())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reflection_is_an_involution(i in 0usize..240, j in 0usize..240) {
        let r = roots();
        let (a, v) = (r[i], r[j]);
        let once = reflect(&a, &v).unwrap();
        prop_assert!(r.contains(&once));
        prop_assert_eq!(reflect(&a, &once).unwrap(), v);
        prop_assert_eq!(once.ip16(&once), v.ip16(&v));
    }

    #[test]
    fn point_reflection_is_an_involution(i in 0usize..240, x in point()) {
        let a = roots()[i];
        let back = reflect_point(&a, &reflect_point(&a, &x));
        for (u, w) in back.iter().zip(x.iter()) {
            prop_assert!((u - w).norm() < 1e-13);
        }
    }

    #[test]
    fn bracket_is_odd_and_quasi_periodic(z in small_c()) {
        let p = params();
        let b = bracket(z, &p);
        prop_assert!(close(bracket(-z, &p), -b, 1e-12));
        prop_assert!(close(bracket(z + 1.0, &p), -b, 1e-12));
        let shifted = bracket(z + p.varpi, &p);
        let want = -e(-z - p.varpi / 2.0) * b;
        prop_assert!(close(shifted, want, 1e-11), "{shifted} vs {want}");
    }

    #[test]
    fn theta_reflection_and_shift(re in 0.3f64..2.0, arg in -3.0f64..3.0) {
        let p = cplx(0.15, 0.0);
        let z = Complex64::from_polar(re, arg);
        let t = theta(z, p, 1e-18).unwrap();
        prop_assert!(close(theta(p * z, p, 1e-18).unwrap(), -t / z, 1e-12));
        prop_assert!(close(theta(z.inv(), p, 1e-18).unwrap(), -t / z, 1e-12));
    }

    #[test]
    fn coordinates_round_trip(x in point(), mr in 0.3f64..1.0, ma in -3.0f64..3.0, kr in 0.3f64..1.0, ka in -3.0f64..3.0) {
        let mu = Complex64::from_polar(mr, ma);
        let kappa = Complex64::from_polar(kr, ka);
        let eps = coords_forward(&x, mu, kappa).unwrap();
        let (y, mu2, kappa2) = coords_back(&eps).unwrap();
        prop_assert!((mu2 - mu).norm() < 1e-12);
        prop_assert!((kappa2 - kappa).norm() < 1e-12);
        for (u, w) in y.iter().zip(x.iter()) {
            prop_assert!((u - w).norm() < 1e-12);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn kac_translations_form_a_group(seed in any::<u64>()) {
        let (checked, bad) = picard_group_laws(seed, 20);
        prop_assert!(checked > 0);
        prop_assert_eq!(bad, 0);
    }
}
