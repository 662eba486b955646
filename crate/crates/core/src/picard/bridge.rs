//! Points of the ten-dimensional space in the coordinates `eps_j = <e_j, h>`, the isomorphism with
//! `(x; mu, kappa)`, and the lattice tau functions induced by a tau function on `V`.

use num_complex::Complex;
use num_rational::Rational64;
use num_traits::ToPrimitive;

use super::vector::{in_orbit_m, PicardVector};
use crate::error::{Error, Result};
use crate::integrals::Point;
use crate::lattice::{LatticeVector, WeylWord};
use crate::residual::Residual;
use crate::scalar::{lit, Real};
use crate::specialfn::{bracket, EllipticParams};
use crate::tau::{inner, Tau};

/// `(eps_0; eps_1, ..., eps_9)`.
pub type Epsilon<T> = [Complex<T>; 10];

fn rat<T: Real>(x: Rational64) -> T {
    lit(x.to_f64().unwrap_or(f64::NAN))
}

/// `<Lambda, h> = sum_j lambda_j eps_j(h)`.
pub fn pair<T: Real>(lambda: &PicardVector, eps: &Epsilon<T>) -> Complex<T> {
    lambda.coeffs.iter().zip(eps.iter()).fold(Complex::new(T::zero(), T::zero()), |a, (l, e)| a + *e * rat::<T>(*l))
}

/// The point of `h` with the given coordinates along `e_0, ..., e_9`.
fn from_coefficients<T: Real>(h: &[Complex<T>; 10]) -> Epsilon<T> {
    std::array::from_fn(|j| if j == 0 { -h[0] } else { h[j] })
}

fn to_coefficients<T: Real>(eps: &Epsilon<T>) -> [Complex<T>; 10] {
    std::array::from_fn(|j| if j == 0 { -eps[0] } else { eps[j] })
}

fn add_multiple<T: Real>(eps: &Epsilon<T>, v: &PicardVector, k: Complex<T>) -> Epsilon<T> {
    let mut h = to_coefficients(eps);
    for (hj, c) in h.iter_mut().zip(v.coeffs.iter()) {
        *hj = *hj + k * rat::<T>(*c);
    }
    from_coefficients(&h)
}

/// `eps` of `x - (<x,x>/(2 kappa) + mu) c + kappa d`, from the closed-form coordinate expressions.
pub fn coords_forward<T: Real>(x: &Point<T>, mu: Complex<T>, kappa: Complex<T>) -> Result<Epsilon<T>> {
    if kappa.norm() == T::zero() {
        return Err(Error::ZeroKappa);
    }
    let h = lit::<T>(0.5);
    let phi = LatticeVector::phi().pair(x);
    let s = inner(x, x) / (kappa * lit::<T>(2.0)) + mu;
    let mut eps = [Complex::new(T::zero(), T::zero()); 10];
    eps[0] = x[0] * lit::<T>(2.0) - phi * lit::<T>(2.0) + (s + kappa * h) * lit::<T>(3.0);
    for j in 1..8 {
        eps[j] = x[j] + x[0] - phi + s + kappa * h;
    }
    eps[8] = -phi + s + kappa * h;
    eps[9] = s - kappa * h;
    Ok(eps)
}

/// The same point assembled as `sum x_k v_k - (<x,x>/(2 kappa) + mu) c + kappa d`.
pub fn gamma_point<T: Real>(x: &Point<T>, mu: Complex<T>, kappa: Complex<T>) -> Result<Epsilon<T>> {
    if kappa.norm() == T::zero() {
        return Err(Error::ZeroKappa);
    }
    let zero = [Complex::new(T::zero(), T::zero()); 10];
    let mut eps = (0..8).fold(zero, |acc, k| add_multiple(&acc, &PicardVector::v(k), x[k]));
    eps = add_multiple(&eps, &PicardVector::c(), -(inner(x, x) / (kappa * lit::<T>(2.0)) + mu));
    Ok(add_multiple(&eps, &PicardVector::d(), kappa))
}

/// `(x; mu, kappa)` from `eps`: `x_j = eps_j - (eps_0 - eps_9)/2 + kappa/2`, `x_0 = -x_8`,
/// `kappa = <c, h>`, `mu = -<eps, eps>/(2 kappa)`.
pub fn coords_back<T: Real>(eps: &Epsilon<T>) -> Result<(Point<T>, Complex<T>, Complex<T>)> {
    let kappa = pair(&PicardVector::c(), eps);
    if kappa.norm() == T::zero() {
        return Err(Error::ZeroKappa);
    }
    let h = lit::<T>(0.5);
    let xj = |j: usize| eps[j] - (eps[0] - eps[9]) * h + kappa * h;
    let mut x = [Complex::new(T::zero(), T::zero()); 8];
    for (j, xk) in x.iter_mut().enumerate().skip(1) {
        *xk = xj(j);
    }
    x[0] = -xj(8);
    let norm = eps[1..].iter().fold(-eps[0] * eps[0], |a, e| a + *e * *e);
    let mu = -norm / (kappa * lit::<T>(2.0));
    Ok((x, mu, kappa))
}

/// The orthogonal projection to `V`: `x_k = <v_k, h>`.
pub fn project<T: Real>(eps: &Epsilon<T>) -> Point<T> {
    std::array::from_fn(|k| pair(&PicardVector::v(k), eps))
}

/// Kac translation of a point.
pub fn kac_translate_point<T: Real>(alpha: &PicardVector, eps: &Epsilon<T>) -> Result<Epsilon<T>> {
    if alpha.level() != Rational64::from_integer(0) {
        return Err(Error::NotClassical);
    }
    let ch = pair(&PicardVector::c(), eps);
    let ah = pair(alpha, eps);
    let shifted = add_multiple(eps, alpha, ch);
    Ok(add_multiple(&shifted, &PicardVector::c(), -(ch * rat::<T>(alpha.norm()) * lit::<T>(0.5) + ah)))
}

/// Reflection of a point in `alpha`.
pub fn reflect_point<T: Real>(alpha: &PicardVector, eps: &Epsilon<T>) -> Result<Epsilon<T>> {
    let n = alpha.norm();
    if n == Rational64::from_integer(0) {
        return Err(Error::NullRoot);
    }
    let k = pair(alpha, eps) * lit::<T>(2.0) / rat::<T>(n);
    Ok(add_multiple(eps, alpha, -k))
}

/// `tau_Lambda(w, h) = tau(w^{-1}(x + kappa alpha))`, `x` the projection of `h`, `alpha` the classical part of `Lambda - e9`.
pub fn lattice_tau_eval<T: Real>(lambda: &PicardVector, tau: &dyn Tau<T>, w: &WeylWord, eps: &Epsilon<T>) -> Result<Complex<T>> {
    let alpha = in_orbit_m(lambda).ok_or(Error::NotInOrbit)?;
    let (x, _, kappa) = coords_back(eps)?;
    let y = alpha.shift(&x, kappa);
    tau.eval(&w.inverse().apply_point(&y))
}

/// `e_0 - e_i - e_j - e_k`.
fn e_triple(i: usize, j: usize, k: usize) -> PicardVector {
    PicardVector::e(0) - PicardVector::e(i) - PicardVector::e(j) - PicardVector::e(k)
}

/// The three terms `[eps_jk][eps_jkl] tau_{e_i} tau_{e_0 - e_i - e_l}` (cyclic in `i, j, k`) for distinct
/// indices in `1..=9`.
pub fn hirota39_terms<T: Real>(
    tau: &dyn Tau<T>,
    w: &WeylWord,
    eps: &Epsilon<T>,
    quad: [usize; 4],
    params: &EllipticParams<T>,
) -> Result<[Complex<T>; 3]> {
    let [i, j, k, l] = quad;
    let mut sorted = quad;
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) || sorted[0] < 1 || sorted[3] > 9 {
        return Err(Error::Invalid(format!("indices {quad:?} must be distinct in 1..=9")));
    }
    let e = PicardVector::e;
    let sigma = |v: PicardVector| bracket(pair(&v, eps), params);
    let mut terms = [Complex::new(T::zero(), T::zero()); 3];
    for (s, (a, b, c)) in [(i, j, k), (j, k, i), (k, i, j)].into_iter().enumerate() {
        let coeff = sigma(e(b) - e(c)) * sigma(e_triple(b, c, l));
        let t1 = lattice_tau_eval(&e(a), tau, w, eps)?;
        let t2 = lattice_tau_eval(&(e(0) - e(a) - e(l)), tau, w, eps)?;
        terms[s] = coeff * t1 * t2;
    }
    Ok(terms)
}

pub fn hirota39_residual<T: Real>(
    tau: &dyn Tau<T>,
    w: &WeylWord,
    eps: &Epsilon<T>,
    quad: [usize; 4],
    params: &EllipticParams<T>,
) -> Result<Residual> {
    let terms = hirota39_terms(tau, w, eps, quad, params)?;
    Ok(Residual::from_terms(&terms, crate::tau::hirota::DEGENERATE_FLOOR))
}

/// The frame form `sigma_{a1 +- a2} (T_{a0}.tau)(T_{a0}^{-1}.tau) + cyclic`, evaluated by Kac-translating the point.
pub fn frame_form_terms<T: Real>(
    tau: &dyn Tau<T>,
    frame: &[LatticeVector; 3],
    eps: &Epsilon<T>,
    params: &EllipticParams<T>,
) -> Result<[Complex<T>; 3]> {
    let mut terms = [Complex::new(T::zero(), T::zero()); 3];
    for s in 0..3 {
        let a = PicardVector::embed(&frame[s]);
        let b = PicardVector::embed(&frame[(s + 1) % 3]);
        let c = PicardVector::embed(&frame[(s + 2) % 3]);
        let coeff = bracket(pair(&(b + c), eps), params) * bracket(pair(&(b - c), eps), params);
        // (T_a . tau)(h) = tau(T_a^{-1} h)
        let minus = project(&kac_translate_point(&-a, eps)?);
        let plus = project(&kac_translate_point(&a, eps)?);
        terms[s] = coeff * tau.eval(&minus)? * tau.eval(&plus)?;
    }
    Ok(terms)
}

/// Largest term-wise difference between the frame form and the bilinear residual terms of `tau`,
/// relative to the largest term.
pub fn frame_form_agreement<T: Real>(
    tau: &dyn Tau<T>,
    frame: &[LatticeVector; 3],
    eps: &Epsilon<T>,
    params: &EllipticParams<T>,
) -> Result<f64> {
    let a = frame_form_terms(tau, frame, eps, params)?;
    let (x, _, _) = coords_back(eps)?;
    let b = crate::tau::hirota_terms(tau, tau, frame, &x, params)?;
    let scale = b.iter().map(|t| t.norm()).fold(T::zero(), |m, v| if v > m { v } else { m });
    let diff = a.iter().zip(b.iter()).map(|(p, q)| (*p - *q).norm()).fold(T::zero(), |m, v| if v > m { v } else { m });
    Ok(crate::scalar::to_f64(diff / scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::reflect_point as reflect_v;
    use crate::sampling::Sampler;
    use crate::specialfn::Params;
    use crate::tau::CanonicalTau;
    use super::super::vector::kac_translate;

    fn max_diff(a: &[Complex<f64>], b: &[Complex<f64>]) -> f64 {
        a.iter().zip(b).map(|(p, q)| (p - q).norm()).fold(0.0, f64::max)
    }

    fn random_point(s: &mut Sampler) -> Point<f64> {
        std::array::from_fn(|_| s.complex_box(0.7, 0.4))
    }

    #[test]
    fn both_coordinate_routes_agree_and_invert() {
        let mut s = Sampler::new(21);
        for _ in 0..50 {
            let x = random_point(&mut s);
            let mu = s.complex_box::<f64>(1.0, 0.5);
            let kappa = s.complex_box::<f64>(0.5, 0.5) + Complex::new(0.2, 0.1);
            let eps = coords_forward(&x, mu, kappa).unwrap();
            assert!(max_diff(&eps, &gamma_point(&x, mu, kappa).unwrap()) < 1e-12);
            let (y, m, k) = coords_back(&eps).unwrap();
            assert!(max_diff(&x, &y) < 1e-12);
            assert!((m - mu).norm() < 1e-11 && (k - kappa).norm() < 1e-12);
            assert!(max_diff(&project(&eps), &x) < 1e-12);
        }
        let zero = Complex::new(0.0, 0.0);
        assert!(matches!(coords_forward(&[zero; 8], zero, zero), Err(Error::ZeroKappa)));
        assert!(matches!(coords_back::<f64>(&[zero; 10]), Err(Error::ZeroKappa)));
    }

    #[test]
    fn coordinates_intertwine_weyl_and_translations() {
        let mut s = Sampler::new(4);
        let a = LatticeVector::basis(1) - LatticeVector::basis(2);
        let pa = PicardVector::embed(&a);
        assert_eq!(pa, PicardVector::e(1) - PicardVector::e(2));
        for _ in 0..20 {
            let x = random_point(&mut s);
            let mu = s.complex_box::<f64>(1.0, 0.5);
            let kappa = Complex::new(0.3, 0.2);
            let moved = a.shift(&reflect_v(&a, &x), kappa);
            let lhs = coords_forward(&moved, mu, kappa).unwrap();
            let h = coords_forward(&x, mu, kappa).unwrap();
            let rhs = kac_translate_point(&pa, &reflect_point(&pa, &h).unwrap()).unwrap();
            assert!(max_diff(&lhs, &rhs) < 1e-12);
        }
    }

    #[test]
    fn point_translations_match_the_exact_action() {
        let h = PicardVector::from_ints([3, 1, -2, 0, 4, 1, 0, -1, 2, 5]);
        let a = PicardVector::simple_root(4) + PicardVector::simple_root(7);
        let exact = kac_translate(&a, &h).unwrap();
        let hf: Epsilon<f64> = std::array::from_fn(|j| Complex::new(h.ip(&PicardVector::e(j)).to_f64().unwrap(), 0.0));
        let want: Epsilon<f64> = std::array::from_fn(|j| Complex::new(exact.ip(&PicardVector::e(j)).to_f64().unwrap(), 0.0));
        assert!(max_diff(&kac_translate_point(&a, &hf).unwrap(), &want) < 1e-12);
        assert!(matches!(kac_translate_point(&PicardVector::e(0), &hf), Err(Error::NotClassical)));
    }

    #[test]
    fn frame_form_is_the_bilinear_residual() {
        let params = Params::real(0.15, 0.1, 0.12).unwrap();
        let tau = CanonicalTau::new(params, Complex::new(0.1, 0.05));
        let frame = crate::lattice::named::recursion_triple();
        let mut s = Sampler::new(8);
        let x = random_point(&mut s);
        let eps = coords_forward(&x, Complex::new(0.2, 0.0), params.delta).unwrap();
        assert!(frame_form_agreement(&tau, &frame, &eps, &params).unwrap() < 1e-10);
        let terms = frame_form_terms(&tau, &frame, &eps, &params).unwrap();
        assert!(Residual::from_terms(&terms, 1e-250).relative < 1e-10);
    }

    #[test]
    fn bilinear_relation_rejects_repeated_indices() {
        let params = Params::real(0.15, 0.1, 0.12).unwrap();
        let tau = CanonicalTau::new(params, Complex::new(0.1, 0.05));
        let w = WeylWord::identity(crate::lattice::WeylGroup::E7);
        let eps = coords_forward(&[Complex::new(0.1, 0.0); 8], Complex::new(0.0, 0.0), params.delta).unwrap();
        assert!(hirota39_terms(&tau, &w, &eps, [1, 1, 2, 3], &params).is_err());
        assert!(hirota39_terms(&tau, &w, &eps, [0, 1, 2, 3], &params).is_err());
    }
}
