//! Elliptic gamma functions of two and three nomes.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

const POLE_TOL: f64 = 1e-13;

/// `Gamma(z; p, q) = prod_{i,j>=0} (1 - p^{i+1} q^{j+1} / z) / (1 - p^i q^j z)`.
pub fn elliptic_gamma<T: Real>(z: Complex<T>, p: Complex<T>, q: Complex<T>, tol: T) -> Result<Complex<T>> {
    if z.norm() == T::zero() {
        return Err(Error::ZeroArgument("z"));
    }
    let one = Complex::new(T::one(), T::zero());
    let pq_over_z = p * q / z;
    let bound = z.norm().max(pq_over_z.norm());
    let pole_tol = crate::scalar::lit::<T>(POLE_TOL);
    let (mut num, mut den) = (one, one);
    let mut pi = one;
    let mut i = 0u32;
    while pi.norm() * bound >= tol {
        let mut pij = pi;
        let mut j = 0u32;
        while pij.norm() * bound >= tol {
            let d = one - pij * z;
            if d.norm() < pole_tol {
                return Err(Error::NearPole { i, j });
            }
            den = den * d;
            num = num * (one - pij * pq_over_z);
            pij = pij * q;
            j += 1;
        }
        pi = pi * p;
        i += 1;
    }
    Ok(num / den)
}

/// `Gamma(z; p, q, r) = (z; p, q, r)_inf (pqr/z; p, q, r)_inf`, an entire function of `z != 0`.
pub fn triple_gamma<T: Real>(z: Complex<T>, p: Complex<T>, q: Complex<T>, r: Complex<T>, tol: T) -> Result<Complex<T>> {
    if z.norm() == T::zero() {
        return Err(Error::ZeroArgument("z"));
    }
    let one = Complex::new(T::one(), T::zero());
    let w = p * q * r / z;
    let bound = z.norm().max(w.norm());
    let mut acc = one;
    let mut pi = one;
    while pi.norm() * bound >= tol {
        let mut pij = pi;
        while pij.norm() * bound >= tol {
            let mut pijk = pij;
            while pijk.norm() * bound >= tol {
                acc = acc * (one - pijk * z) * (one - pijk * w);
                pijk = pijk * r;
            }
            pij = pij * q;
        }
        pi = pi * p;
    }
    Ok(acc)
}
