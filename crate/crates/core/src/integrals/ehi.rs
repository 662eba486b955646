//! The elliptic beta integral `I(u)` and its multivariate form `I_n(t)`.

use num_complex::Complex;
use rayon::prelude::*;

use super::quadrature::{converge, converge_1d, half_circle, QuadConfig};
use crate::error::{Error, Result};
use crate::scalar::{compensated_sum, lit, to_f64, Real};
use crate::specialfn::{elliptic_gamma, qpoch_inf, theta, EllipticParams};

/// Parameters of one contour integral over the unit circle.
#[derive(Clone, Debug)]
pub struct IntegrandContext<T: Real> {
    pub u: [Complex<T>; 8],
    pub params: EllipticParams<T>,
    pub n: usize,
    pub quad: QuadConfig,
}

impl<T: Real> IntegrandContext<T> {
    pub fn new(u: [Complex<T>; 8], params: EllipticParams<T>, n: usize, quad: QuadConfig) -> Self {
        Self { u, params, n, quad }
    }

    /// The unit circle separates the poles only if every `|u_k| < 1`.
    pub fn check_admissible(&self) -> Result<()> {
        check_admissible(&self.u)
    }
}

pub fn check_admissible<T: Real>(u: &[Complex<T>; 8]) -> Result<()> {
    for (index, x) in u.iter().enumerate() {
        let modulus = to_f64(x.norm());
        if !(modulus < 1.0) {
            return Err(Error::Inadmissible { index, modulus });
        }
    }
    Ok(())
}

/// `H(z; u) = prod_k Gamma(u_k z^{+-1}) / Gamma(z^{+-2})`, the denominator taken as a theta product.
pub fn integrand_h<T: Real>(z: Complex<T>, u: &[Complex<T>; 8], params: &EllipticParams<T>) -> Result<Complex<T>> {
    let (p, q, tol) = (params.p, params.q, params.trunc_tol);
    let zi = z.inv();
    let z2 = z * z;
    // 1 / Gamma(w^{+-1}) = -w^{-1} theta(w; p) theta(w; q)
    let mut acc = -(z2.inv()) * theta(z2, p, tol)? * theta(z2, q, tol)?;
    for uk in u {
        acc = acc * elliptic_gamma(*uk * z, p, q, tol)? * elliptic_gamma(*uk * zi, p, q, tol)?;
    }
    Ok(acc)
}

/// `theta(z_1^{+-1} z_2^{+-1}; p)` over all four sign choices.
pub fn cross_theta<T: Real>(z1: Complex<T>, z2: Complex<T>, p: Complex<T>, tol: T) -> Result<Complex<T>> {
    let (a, b) = (z1 * z2, z1 / z2);
    Ok(theta(a, p, tol)? * theta(a.inv(), p, tol)? * theta(b, p, tol)? * theta(b.inv(), p, tol)?)
}

/// `(p; p)_inf (q; q)_inf`.
pub fn kappa_factor<T: Real>(params: &EllipticParams<T>) -> Complex<T> {
    let tol = params.trunc_tol;
    qpoch_inf(params.p, params.p, tol) * qpoch_inf(params.q, params.q, tol)
}

/// `I(u) = (p;p)(q;q)/(4 pi i) \oint H(z; u) dz/z`, by the trapezoid rule.
pub fn elliptic_integral<T: Real>(ctx: &IntegrandContext<T>) -> Result<Complex<T>> {
    ctx.check_admissible()?;
    let f = |z: Complex<T>| integrand_h(z, &ctx.u, &ctx.params);
    let (mean, _) = converge_1d(ctx.quad.initial_points, ctx.quad.max_points_1d, ctx.quad.tol, &f)?;
    Ok(kappa_factor(&ctx.params) * mean * lit::<T>(0.5))
}

/// `I_n(t)` with `n` integration variables; `n = 1` is [`elliptic_integral`].
pub fn elliptic_integral_n<T: Real>(ctx: &IntegrandContext<T>) -> Result<Complex<T>> {
    match ctx.n {
        0 => return Ok(Complex::new(T::one(), T::zero())),
        1 => return elliptic_integral(ctx),
        n if n > 3 => return Err(Error::Invalid(format!("integral dimension {n} exceeds 3"))),
        _ => {}
    }
    ctx.check_admissible()?;
    let n = ctx.n;
    let initial = ctx.quad.initial_points.min(ctx.quad.max_points_2d);
    let (mean, _) = converge(initial, ctx.quad.max_points(n), ctx.quad.tol, |m| tensor_mean(ctx, m))?;
    // (p;p)^n (q;q)^n / (2^n n!) times the mean over the full grid
    let mut fact = 1.0;
    for k in 1..=n {
        fact *= 2.0 * k as f64;
    }
    let kap = kappa_factor(&ctx.params);
    Ok(kap.powu(n as u32) * mean / lit::<T>(fact))
}

fn tensor_mean<T: Real>(ctx: &IntegrandContext<T>, m: usize) -> Result<(Complex<T>, T)> {
    let (p, tol) = (ctx.params.p, ctx.params.trunc_tol);
    let nodes = half_circle::<T>(m);
    let k = nodes.len();
    let h: Vec<Complex<T>> = nodes
        .par_iter()
        .map(|(z, w)| integrand_h(*z, &ctx.u, &ctx.params).map(|v| v * *w))
        .collect::<Result<_>>()?;
    let cross: Vec<Complex<T>> = (0..k * k)
        .into_par_iter()
        .map(|ij| {
            let (i, j) = (ij / k, ij % k);
            if i <= j {
                cross_theta(nodes[i].0, nodes[j].0, p, tol)
            } else {
                Ok(Complex::new(T::zero(), T::zero()))
            }
        })
        .collect::<Result<_>>()?;
    let c = |i: usize, j: usize| if i <= j { cross[i * k + j] } else { cross[j * k + i] };
    let rows: Vec<(Complex<T>, T)> = (0..k)
        .into_par_iter()
        .map(|i| {
            let mut terms = Vec::new();
            let mut l1 = T::zero();
            if ctx.n == 2 {
                for j in 0..k {
                    let v = h[i] * h[j] * c(i, j);
                    l1 = l1 + v.norm();
                    terms.push(v);
                }
            } else {
                for j in 0..k {
                    let hij = h[i] * h[j] * c(i, j);
                    for l in 0..k {
                        let v = hij * h[l] * c(i, l) * c(j, l);
                        l1 = l1 + v.norm();
                        terms.push(v);
                    }
                }
            }
            (compensated_sum(terms), l1)
        })
        .collect();
    let inv = T::one() / lit::<T>(m as f64).powi(ctx.n as i32);
    let total = compensated_sum(rows.iter().map(|r| r.0));
    let l1 = rows.iter().fold(T::zero(), |a, r| a + r.1);
    Ok((total * inv, l1 * inv))
}
