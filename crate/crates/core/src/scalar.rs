//! Scalar plumbing shared by the numerical modules.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive};

/// Real scalar the numerical layers are generic over.
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static
{
}

/// Converts an `f64` literal into `T`.
#[inline]
pub fn lit<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("literal representable in scalar type")
}

#[inline]
pub fn cx<T: Real>(re: f64, im: f64) -> Complex<T> {
    Complex::new(lit(re), lit(im))
}

#[inline]
pub fn real<T: Real>(x: T) -> Complex<T> {
    Complex::new(x, T::zero())
}

/// `e(z) = exp(2 pi i z)`.
#[inline]
pub fn e<T: Real>(z: Complex<T>) -> Complex<T> {
    let two_pi = T::PI() + T::PI();
    (Complex::new(T::zero(), two_pi) * z).exp()
}

/// Additive coordinate `log(w) / (2 pi i)` on the principal branch, so that `e(result) = w`.
#[inline]
pub fn additive<T: Real>(w: Complex<T>) -> Complex<T> {
    let two_pi = T::PI() + T::PI();
    w.ln() / Complex::new(T::zero(), two_pi)
}

/// `x^k` for a signed integer exponent.
pub fn powi<T: Real>(x: Complex<T>, k: i64) -> Complex<T> {
    if k >= 0 {
        x.powu(k as u32)
    } else {
        x.inv().powu((-k) as u32)
    }
}

pub fn to_f64<T: Real>(x: T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Neumaier-compensated complex accumulator.
#[derive(Clone, Copy, Debug, Default)]
pub struct CompensatedSum<T: Real> {
    sum: Complex<T>,
    comp: Complex<T>,
}

impl<T: Real> CompensatedSum<T> {
    pub fn new() -> Self {
        Self { sum: Complex::new(T::zero(), T::zero()), comp: Complex::new(T::zero(), T::zero()) }
    }

    pub fn add(&mut self, x: Complex<T>) {
        let (s, c) = two_sum(self.sum.re, x.re);
        let (t, d) = two_sum(self.sum.im, x.im);
        self.sum = Complex::new(s, t);
        self.comp = self.comp + Complex::new(c, d);
    }

    pub fn value(&self) -> Complex<T> {
        self.sum + self.comp
    }
}

fn two_sum<T: Real>(a: T, b: T) -> (T, T) {
    let s = a + b;
    let err = if a.abs() >= b.abs() { (a - s) + b } else { (b - s) + a };
    (s, err)
}

pub fn compensated_sum<T: Real, I: IntoIterator<Item = Complex<T>>>(it: I) -> Complex<T> {
    let mut acc = CompensatedSum::new();
    for x in it {
        acc.add(x);
    }
    acc.value()
}

/// Binomial coefficient `C(n, 2)` etc. for small non-negative `n`.
pub fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let mut r = 1i64;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn additive_inverts_e() {
        let w = Complex::new(0.15, -0.03);
        let z = additive::<f64>(w);
        assert!((e(z) - w).norm() < 1e-15);
    }

    #[test]
    fn compensated_sum_recovers_cancellation() {
        let xs = [1e16, 1.0, -1e16, 1.0].map(|v| Complex::new(v, 0.0));
        assert_eq!(compensated_sum(xs).re, 2.0);
    }

    #[test]
    fn small_binomials() {
        assert_eq!(binom(2, 2), 1);
        assert_eq!(binom(3, 2), 3);
        assert_eq!(binom(4, 3), 4);
        assert_eq!(binom(1, 3), 0);
    }
}
