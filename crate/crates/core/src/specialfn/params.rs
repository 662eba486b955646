use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{additive, lit, to_f64, Real};

/// Nomes `p, q, r` together with the additive periods `p = e(varpi)`, `q = e(delta)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EllipticParams<T: Real> {
    pub p: Complex<T>,
    pub q: Complex<T>,
    pub r: Complex<T>,
    pub varpi: Complex<T>,
    pub delta: Complex<T>,
    pub trunc_tol: T,
}

pub const DEFAULT_TRUNC_TOL: f64 = 1e-18;

impl<T: Real> EllipticParams<T> {
    pub fn new(p: Complex<T>, q: Complex<T>, r: Complex<T>) -> Result<Self> {
        Self::with_tol(p, q, r, lit(DEFAULT_TRUNC_TOL))
    }

    pub fn with_tol(p: Complex<T>, q: Complex<T>, r: Complex<T>, trunc_tol: T) -> Result<Self> {
        for (name, x) in [("p", p), ("q", q), ("r", r)] {
            let m = to_f64(x.norm());
            if !(m > 0.0 && m < 1.0) {
                return Err(Error::NomeOutOfRange { name, modulus: m });
            }
        }
        let varpi = additive(p);
        let delta = additive(q);
        // delta must not lie in Z + Z varpi
        let (a, b) = lattice_coords(varpi, delta);
        if (a - a.round()).abs() < 1e-9 && (b - b.round()).abs() < 1e-9 {
            return Err(Error::DegenerateNomes("q is an integral power of p".into()));
        }
        Ok(Self { p, q, r, varpi, delta, trunc_tol })
    }

    /// Real nomes, the usual test setting.
    pub fn real(p: f64, q: f64, r: f64) -> Result<Self> {
        let c = |x: f64| Complex::new(lit::<T>(x), T::zero());
        Self::new(c(p), c(q), c(r))
    }

    pub fn with_r(&self, r: Complex<T>) -> Result<Self> {
        Self::with_tol(self.p, self.q, r, self.trunc_tol)
    }

    pub fn pq(&self) -> Complex<T> {
        self.p * self.q
    }
}

/// Real coordinates `(a, b)` with `w = a + b varpi`.
fn lattice_coords<T: Real>(varpi: Complex<T>, w: Complex<T>) -> (f64, f64) {
    let b = to_f64(w.im) / to_f64(varpi.im);
    let a = to_f64(w.re) - b * to_f64(varpi.re);
    (a, b)
}

pub type Params = EllipticParams<f64>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_nomes() {
        assert!(matches!(Params::real(1.2, 0.1, 0.1), Err(Error::NomeOutOfRange { name: "p", .. })));
        assert!(matches!(Params::real(0.1, 0.0, 0.1), Err(Error::NomeOutOfRange { name: "q", .. })));
        assert!(matches!(Params::real(0.3, 0.09, 0.1), Err(Error::DegenerateNomes(_))));
    }

    #[test]
    fn periods_exponentiate_back() {
        let pr = Params::real(0.15, 0.1, 0.12).unwrap();
        assert!((crate::scalar::e(pr.varpi) - pr.p).norm() < 1e-15);
        assert!(pr.varpi.im > 0.0 && pr.delta.im > 0.0);
    }
}
