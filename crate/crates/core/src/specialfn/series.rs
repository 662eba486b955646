//! Terminating very-well-poised elliptic hypergeometric series.

use num_complex::Complex;

use super::theta::{theta, theta_poch};
use crate::error::{Error, Result};
use crate::scalar::{lit, powi, Real};

const TERMINATION_TOL: f64 = 1e-10;

/// `12V11(a0; a1, ..., a7; q, p)`, summed up to `k = n`.
///
/// Terms are `theta(q^{2k} a0)/theta(a0) * prod_{i=0..7} theta(a_i)_k / theta(q a0 / a_i)_k * q^k`.
/// Some `a_i` (i >= 1) must satisfy `q^n a_i in p^Z`, so that the series terminates at `n`.
pub fn v12_11<T: Real>(
    a0: Complex<T>,
    a: &[Complex<T>; 7],
    q: Complex<T>,
    p: Complex<T>,
    n: usize,
    tol: T,
) -> Result<Complex<T>> {
    if !a.iter().any(|ai| terminates_at(*ai, q, p, n)) {
        return Err(Error::NonTerminating(n));
    }
    let all: Vec<Complex<T>> = std::iter::once(a0).chain(a.iter().copied()).collect();
    let theta_a0 = theta(a0, p, tol)?;
    let mut terms = Vec::with_capacity(n + 1);
    for k in 0..=n as i64 {
        let mut t = theta(powi(q, 2 * k) * a0, p, tol)? / theta_a0 * powi(q, k);
        for ai in &all {
            t = t * theta_poch(*ai, p, q, k, tol)? / theta_poch(q * a0 / ai, p, q, k, tol)?;
        }
        terms.push(t);
    }
    Ok(crate::scalar::compensated_sum(terms))
}

/// Whether `q^n a` is an integral power of `p`.
pub fn terminates_at<T: Real>(a: Complex<T>, q: Complex<T>, p: Complex<T>, n: usize) -> bool {
    let w = powi(q, n as i64) * a;
    let m = (w.norm().ln() / p.norm().ln()).round();
    let m = m.to_i64().unwrap_or(0);
    (w * powi(p, -m) - Complex::new(T::one(), T::zero())).norm() < lit(TERMINATION_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C;

    #[test]
    fn zero_length_series_is_one() {
        let q = C::new(0.3, 0.0);
        let p = C::new(0.1, 0.0);
        let a = [C::new(1.0, 0.0), C::new(0.4, 0.1), C::new(0.5, 0.0), C::new(0.6, 0.0), C::new(0.7, 0.0), C::new(0.2, 0.3), C::new(0.35, 0.0)];
        let v = v12_11(C::new(0.25, 0.05), &a, q, p, 0, 1e-18).unwrap();
        assert!((v - 1.0).norm() < 1e-15);
    }

    #[test]
    fn requires_termination() {
        let q = C::new(0.3, 0.0);
        let p = C::new(0.1, 0.0);
        let a = [C::new(0.41, 0.1); 7];
        assert!(matches!(v12_11(C::new(0.25, 0.05), &a, q, p, 2, 1e-18), Err(Error::NonTerminating(2))));
        assert!(terminates_at(p / q / q, q, p, 2));
    }
}
