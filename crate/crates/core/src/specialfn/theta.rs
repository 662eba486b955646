//! Theta function, its Pochhammer products and the additive bracket.

use num_complex::Complex;

use super::params::EllipticParams;
use crate::error::{Error, Result};
use crate::residual::Residual;
use crate::scalar::{e, lit, powi, Real};

fn check_nome<T: Real>(name: &'static str, p: Complex<T>) -> Result<()> {
    let m = crate::scalar::to_f64(p.norm());
    if !(m > 0.0 && m < 1.0) {
        return Err(Error::NomeOutOfRange { name, modulus: m });
    }
    Ok(())
}

/// `(z; p)_inf`.
pub fn qpoch_inf<T: Real>(z: Complex<T>, p: Complex<T>, tol: T) -> Complex<T> {
    let mut acc = Complex::new(T::one(), T::zero());
    let mut term = z;
    while term.norm() >= tol {
        acc = acc * (Complex::new(T::one(), T::zero()) - term);
        term = term * p;
    }
    acc
}

/// `theta(z; p) = (z; p)_inf (p/z; p)_inf`.
///
/// The argument is first moved into the annulus `|p| < |z| <= 1` with `theta(pz) = -theta(z)/z`.
pub fn theta<T: Real>(z: Complex<T>, p: Complex<T>, tol: T) -> Result<Complex<T>> {
    if z.norm() == T::zero() {
        return Err(Error::ZeroArgument("z"));
    }
    check_nome("p", p)?;
    let m = (z.norm().ln() / p.norm().ln()).floor();
    let m = m.to_i64().unwrap_or(0);
    let zr = z * powi(p, -m);
    let base = theta_product(zr, p, tol);
    if m == 0 {
        return Ok(base);
    }
    // theta(p^m z) = (-1)^m p^{-m(m-1)/2} z^{-m} theta(z)
    let sign = if m % 2 == 0 { T::one() } else { -T::one() };
    let factor = powi(p, -(m * (m - 1) / 2)) * powi(zr, -m) * sign;
    Ok(factor * base)
}

fn theta_product<T: Real>(z: Complex<T>, p: Complex<T>, tol: T) -> Complex<T> {
    let one = Complex::new(T::one(), T::zero());
    let mut acc = one;
    let mut a = z;
    let mut b = p / z;
    while a.norm() >= tol || b.norm() >= tol {
        acc = acc * (one - a) * (one - b);
        a = a * p;
        b = b * p;
    }
    acc
}

/// `theta(z; p; q)_k = prod_{j<k} theta(q^j z; p)`.
pub fn theta_poch<T: Real>(z: Complex<T>, p: Complex<T>, q: Complex<T>, k: i64, tol: T) -> Result<Complex<T>> {
    if k < 0 {
        return Err(Error::NegativeLength(k));
    }
    let mut acc = Complex::new(T::one(), T::zero());
    let mut arg = z;
    for _ in 0..k {
        acc = acc * theta(arg, p, tol)?;
        arg = arg * q;
    }
    Ok(acc)
}

/// Elliptic bracket `[zeta] = e(-zeta/2) theta(e(zeta); p)`.
///
/// Odd, with `[zeta + 1] = -[zeta]` and `[zeta + varpi] = -e(-zeta - varpi/2) [zeta]`. Large imaginary
/// parts are folded back with these relations before the product is evaluated.
pub fn bracket<T: Real>(zeta: Complex<T>, params: &EllipticParams<T>) -> Complex<T> {
    let varpi = params.varpi;
    let m = (zeta.im / varpi.im).round();
    let z1 = zeta - varpi * m;
    let k = z1.re.round();
    let z0 = z1 - Complex::new(k, T::zero());
    let half = lit::<T>(0.5);
    // [z0 + m varpi + k] = (-1)^{m+k} e(-m z0 - m^2 varpi/2) [z0]
    let exponent = -(z0 * m) - varpi * (m * m * half) - z0 * half;
    let parity = (m.to_i64().unwrap_or(0) + k.to_i64().unwrap_or(0)).rem_euclid(2);
    let sign = if parity == 0 { T::one() } else { -T::one() };
    let th = theta_product(e(z0), params.p, params.trunc_tol);
    e(exponent) * th * sign
}

/// `[a + b][a - b]`.
pub fn bracket_pm<T: Real>(a: Complex<T>, b: Complex<T>, params: &EllipticParams<T>) -> Complex<T> {
    bracket(a + b, params) * bracket(a - b, params)
}

/// Defect of `[b+-c][z+-a] + [c+-a][z+-b] + [a+-b][z+-c] = 0` for an arbitrary bracket.
pub fn three_term_with<T: Real, F>(a: Complex<T>, b: Complex<T>, c: Complex<T>, z: Complex<T>, br: F) -> Residual
where
    F: Fn(Complex<T>) -> Complex<T>,
{
    let pm = |x: Complex<T>, y: Complex<T>| br(x + y) * br(x - y);
    let terms = [pm(b, c) * pm(z, a), pm(c, a) * pm(z, b), pm(a, b) * pm(z, c)];
    Residual::from_terms(&terms, 1e-14)
}

pub fn three_term_residual<T: Real>(
    a: Complex<T>,
    b: Complex<T>,
    c: Complex<T>,
    z: Complex<T>,
    params: &EllipticParams<T>,
) -> Residual {
    three_term_with(a, b, c, z, |x| bracket(x, params))
}

/// Trigonometric bracket `sin(pi z)`.
pub fn sine_bracket<T: Real>(z: Complex<T>) -> Complex<T> {
    (z * T::PI()).sin()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specialfn::Params;
    use num_complex::Complex64 as C;

    const TOL: f64 = 1e-18;

    /// Naive truncated product with a fixed, generous number of factors.
    fn theta_oracle(z: C, p: C) -> C {
        let one = C::new(1.0, 0.0);
        (0..200).fold(one, |acc, i| acc * (one - p.powu(i) * z) * (one - p.powu(i + 1) / z))
    }

    fn params() -> Params {
        Params::with_tol(C::new(0.15, 0.02), C::new(0.1, -0.03), C::new(0.12, 0.0), TOL).unwrap()
    }

    #[test]
    fn theta_matches_naive_product() {
        let p = C::new(0.3, 0.1);
        for z in [C::new(0.7, 0.2), C::new(-1.9, 0.4), C::new(0.05, -0.02), C::new(3.0, 1.0)] {
            let got = theta(z, p, TOL).unwrap();
            let want = theta_oracle(z, p);
            assert!((got - want).norm() <= 1e-13 * want.norm(), "{z}: {got} vs {want}");
        }
    }

    #[test]
    fn theta_frozen_value() {
        // frozen from the naive product oracle above
        let got = theta(C::new(0.5, 0.0), C::new(0.2, 0.0), TOL).unwrap();
        assert!((got - theta_oracle(C::new(0.5, 0.0), C::new(0.2, 0.0))).norm() < 1e-15);
        assert!((got.re - 0.2373876743607388).abs() < 1e-14, "{got}");
    }

    #[test]
    fn theta_vanishes_at_one_and_rejects_zero() {
        assert_eq!(theta(C::new(1.0, 0.0), C::new(0.2, 0.0), TOL).unwrap(), C::new(0.0, 0.0));
        assert!(matches!(theta(C::new(0.0, 0.0), C::new(0.2, 0.0), TOL), Err(Error::ZeroArgument(_))));
    }

    #[test]
    fn theta_poch_lengths() {
        let (p, q, z) = (C::new(0.2, 0.0), C::new(0.3, 0.1), C::new(0.4, 0.2));
        assert_eq!(theta_poch(z, p, q, 0, TOL).unwrap(), C::new(1.0, 0.0));
        let two = theta_poch(z, p, q, 2, TOL).unwrap();
        let want = theta(z, p, TOL).unwrap() * theta(q * z, p, TOL).unwrap();
        assert!((two - want).norm() < 1e-15);
        assert!(matches!(theta_poch(z, p, q, -1, TOL), Err(Error::NegativeLength(-1))));
    }

    #[test]
    fn bracket_quasi_periods() {
        let pr = params();
        for zeta in [C::new(0.13, 0.05), C::new(-0.4, -0.2), C::new(0.31, 0.7)] {
            let b = bracket(zeta, &pr);
            let b1 = bracket(zeta + 1.0, &pr);
            assert!((b1 + b).norm() < 1e-12 * b.norm());
            let bw = bracket(zeta + pr.varpi, &pr);
            let want = -crate::scalar::e(-zeta - pr.varpi * 0.5) * b;
            assert!((bw - want).norm() < 1e-12 * want.norm());
            assert!((bracket(-zeta, &pr) + b).norm() < 1e-12 * b.norm());
        }
    }

    #[test]
    fn bracket_folding_agrees_with_direct_formula() {
        let pr = params();
        for zeta in [C::new(0.2, 0.9), C::new(-0.7, -1.3), C::new(2.4, 0.1)] {
            let direct = crate::scalar::e(-zeta * 0.5) * theta_oracle(crate::scalar::e(zeta), pr.p);
            let got = bracket(zeta, &pr);
            assert!((got - direct).norm() < 1e-11 * direct.norm(), "{zeta}: {got} {direct}");
        }
    }

    #[test]
    fn pm_bracket_is_a_theta_pair() {
        let pr = params();
        let (al, be) = (C::new(0.21, 0.04), C::new(-0.13, 0.11));
        let (a, b) = (crate::scalar::e(al), crate::scalar::e(be));
        let lhs = bracket_pm(al, be, &pr);
        let rhs = a.inv() * theta(a * b, pr.p, TOL).unwrap() * theta(a / b, pr.p, TOL).unwrap();
        assert!((lhs - rhs).norm() < 1e-13 * rhs.norm());
    }

    #[test]
    fn three_term_elliptic_and_trigonometric() {
        let pr = params();
        let (a, b, c, z) = (C::new(0.11, 0.02), C::new(-0.27, 0.05), C::new(0.38, -0.04), C::new(0.05, 0.09));
        assert!(three_term_residual(a, b, c, z, &pr).relative < 1e-13);
        assert!(three_term_with(a, b, c, z, sine_bracket).relative < 1e-13);
    }

    #[test]
    fn multiplicative_three_term() {
        let p = C::new(0.2, 0.05);
        let th = |x: C| theta(x, p, TOL).unwrap();
        let pm = |x: C, y: C| th(x * y) * th(x / y);
        let (a, b, c, z) = (C::new(0.6, 0.3), C::new(-0.5, 0.7), C::new(0.9, -0.2), C::new(0.4, 0.45));
        let terms = [c * pm(b, c) * pm(a, z), a * pm(c, a) * pm(b, z), b * pm(a, b) * pm(c, z)];
        assert!(Residual::from_terms(&terms, 1e-14).relative < 1e-13);
    }

    #[test]
    fn three_term_degenerates_when_equal() {
        let pr = params();
        let a = C::new(0.1, 0.0);
        let r = three_term_residual(a, a, a, C::new(0.3, 0.0), &pr);
        assert!(r.degenerate);
    }

    #[test]
    fn single_precision_functional_equation() {
        use num_complex::Complex32;
        let p = Complex32::new(0.2, 0.0);
        let z = Complex32::new(0.6, 0.3);
        let lhs = theta(p * z, p, 1e-9f32).unwrap();
        let rhs = -theta(z, p, 1e-9f32).unwrap() / z;
        assert!((lhs - rhs).norm() < 1e-5 * rhs.norm());
    }
}
