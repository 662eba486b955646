//! Periodic trapezoid rule on the unit circle, with node doubling.

use num_complex::Complex;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{compensated_sum, lit, to_f64, Real};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct QuadConfig {
    pub initial_points: usize,
    pub max_points_1d: usize,
    pub max_points_2d: usize,
    pub tol: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self { initial_points: 256, max_points_1d: 4096, max_points_2d: 1024, tol: 1e-14 }
    }
}

impl QuadConfig {
    pub fn max_points(&self, dim: usize) -> usize {
        if dim <= 1 {
            self.max_points_1d
        } else {
            self.max_points_2d
        }
    }
}

/// Nodes `e(k/n)` for `k = 0..=n/2` with their symmetry weights (`z` and `1/z` share a value).
pub fn half_circle<T: Real>(n: usize) -> Vec<(Complex<T>, T)> {
    (0..=n / 2)
        .map(|k| {
            let angle = lit::<T>(2.0 * std::f64::consts::PI * k as f64 / n as f64);
            let w = if k == 0 || 2 * k == n { T::one() } else { lit(2.0) };
            (Complex::new(angle.cos(), angle.sin()), w)
        })
        .collect()
}

/// Mean of an inversion-symmetric integrand over the `n` equally spaced nodes, with its L1 mean.
pub fn symmetric_mean<T: Real, F>(n: usize, f: &F) -> Result<(Complex<T>, T)>
where
    F: Fn(Complex<T>) -> Result<Complex<T>> + Sync,
{
    let nodes = half_circle::<T>(n);
    let values: Vec<Complex<T>> = nodes.par_iter().map(|(z, _)| f(*z)).collect::<Result<_>>()?;
    let weighted = values.iter().zip(&nodes).map(|(v, (_, w))| *v * *w);
    let inv = T::one() / lit::<T>(n as f64);
    let l1 = values.iter().zip(&nodes).fold(T::zero(), |acc, (v, (_, w))| acc + v.norm() * *w);
    Ok((compensated_sum(weighted) * inv, l1 * inv))
}

/// One-dimensional version of [`converge`] that reuses the values already computed.
pub fn converge_1d<T: Real, F>(initial: usize, max: usize, tol: f64, f: &F) -> Result<(Complex<T>, usize)>
where
    F: Fn(Complex<T>) -> Result<Complex<T>> + Sync,
{
    let mut n = initial.max(4);
    let nodes = half_circle::<T>(n);
    // values at k = 0..=n/2 of e(k/n)
    let mut values: Vec<Complex<T>> = nodes.par_iter().map(|(z, _)| f(*z)).collect::<Result<_>>()?;
    let mut prev = weighted_mean(&values, n);
    let mut change = f64::INFINITY;
    while n < max {
        let m = 2 * n;
        let fresh: Vec<Complex<T>> = (0..n / 2)
            .into_par_iter()
            .map(|j| {
                let angle = lit::<T>(2.0 * std::f64::consts::PI * (2 * j + 1) as f64 / m as f64);
                f(Complex::new(angle.cos(), angle.sin()))
            })
            .collect::<Result<_>>()?;
        let mut merged = Vec::with_capacity(m / 2 + 1);
        for (j, v) in values.iter().enumerate() {
            merged.push(*v);
            if j < fresh.len() {
                merged.push(fresh[j]);
            }
        }
        values = merged;
        n = m;
        let cur = weighted_mean(&values, n);
        let l1 = l1_mean(&values, n);
        let scale = to_f64(cur.norm()).max(to_f64(l1));
        change = to_f64((cur - prev).norm()) / scale.max(f64::MIN_POSITIVE);
        prev = cur;
        if change <= tol {
            return Ok((cur, n));
        }
    }
    Err(Error::QuadratureNotConverged { change, points: n })
}

fn node_weight<T: Real>(k: usize, n: usize) -> T {
    if k == 0 || 2 * k == n {
        T::one()
    } else {
        lit(2.0)
    }
}

fn weighted_mean<T: Real>(values: &[Complex<T>], n: usize) -> Complex<T> {
    let inv = T::one() / lit::<T>(n as f64);
    compensated_sum(values.iter().enumerate().map(|(k, v)| *v * node_weight::<T>(k, n))) * inv
}

fn l1_mean<T: Real>(values: &[Complex<T>], n: usize) -> T {
    let inv = T::one() / lit::<T>(n as f64);
    values.iter().enumerate().fold(T::zero(), |acc, (k, v)| acc + v.norm() * node_weight::<T>(k, n)) * inv
}

/// Doubles the node count from `initial` until two successive means agree to `tol`.
pub fn converge<T: Real, F>(initial: usize, max: usize, tol: f64, mut mean_at: F) -> Result<(Complex<T>, usize)>
where
    F: FnMut(usize) -> Result<(Complex<T>, T)>,
{
    let mut n = initial.max(4);
    let (mut prev, _) = mean_at(n)?;
    let mut change = f64::INFINITY;
    while n < max {
        n *= 2;
        let (cur, l1) = mean_at(n)?;
        let scale = to_f64(cur.norm()).max(to_f64(l1));
        change = to_f64((cur - prev).norm()) / scale.max(f64::MIN_POSITIVE);
        prev = cur;
        if change <= tol {
            return Ok((cur, n));
        }
    }
    Err(Error::QuadratureNotConverged { change, points: n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64 as C;

    #[test]
    fn integrates_a_laurent_polynomial_exactly() {
        // mean of z^2 + 3 + z^-2 over the circle is 3
        let f = |z: C| Ok(z * z + 3.0 + (z * z).inv());
        let (m, _) = symmetric_mean(16, &f).unwrap();
        assert!((m - 3.0).norm() < 1e-14);
    }

    #[test]
    fn converges_for_analytic_integrand() {
        // mean of 1/((1 - a z)(1 - a/z)) is 1/(1 - a^2)
        let a = 0.6;
        let f = |z: C| Ok(((1.0 - a * z) * (1.0 - a / z)).inv());
        let (m, n) = converge(8, 4096, 1e-14, |n| symmetric_mean(n, &f)).unwrap();
        assert!((m - 1.0 / (1.0 - a * a)).norm() < 1e-13);
        assert!(n <= 256);
        let (m1, n1) = converge_1d(8, 4096, 1e-14, &f).unwrap();
        assert_eq!(n1, n);
        assert!((m1 - m).norm() < 1e-15);
    }
}
