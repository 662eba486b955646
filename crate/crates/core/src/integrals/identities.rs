//! Transformations, contiguity relations and the terminating evaluation of `I`.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::ehi::{elliptic_integral, elliptic_integral_n, IntegrandContext};
use super::psi::{block_reflect, check_balanced, hat, Point};
use super::quadrature::QuadConfig;
use crate::error::{Error, Result};
use crate::residual::Residual;
use crate::scalar::{e, lit, powi, Real};
use crate::specialfn::{bracket_pm, elliptic_gamma, theta, triple_gamma, v12_11, EllipticParams};

const LOW_BLOCK: u8 = 0b0000_1111;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BaileyKind {
    /// `u_i -> u_i sqrt(pq / u_0 u_1 u_2 u_3)` on each block of four.
    Tilde,
    /// `u_i -> sqrt(pq) / u_i`.
    Hat,
    /// Invariance of `I(u) prod Gamma(u_i u_j; p, q, r)` under the block map.
    PsiTilde,
    /// Invariance of the same product under the inversion map.
    PsiHat,
}

fn integral<T: Real>(u: [Complex<T>; 8], params: &EllipticParams<T>, n: usize, quad: &QuadConfig) -> Result<Complex<T>> {
    elliptic_integral_n(&IntegrandContext::new(u, *params, n, *quad))
}

fn same_block(i: usize, j: usize) -> bool {
    (i < 4) == (j < 4)
}

/// Compares both sides of a Bailey-type transformation at the additive point `x`
/// (which must satisfy `u_0 ... u_7 = p^2 q^2`).
pub fn bailey_residual<T: Real>(
    x: &Point<T>,
    kind: BaileyKind,
    params: &EllipticParams<T>,
    quad: &QuadConfig,
) -> Result<Residual> {
    check_balanced(x, 1, params)?;
    let (p, q, tol) = (params.p, params.q, params.trunc_tol);
    let u = x.map(e);
    let image = match kind {
        BaileyKind::Tilde | BaileyKind::PsiTilde => block_reflect(x, LOW_BLOCK),
        BaileyKind::Hat | BaileyKind::PsiHat => hat(x),
    };
    let v = image.map(e);
    let lhs = integral(u, params, 1, quad)?;
    let rhs_integral = integral(v, params, 1, quad)?;
    let rhs = match kind {
        BaileyKind::Tilde | BaileyKind::Hat => {
            let mut factor = Complex::new(T::one(), T::zero());
            for i in 0..8 {
                for j in (i + 1)..8 {
                    if kind == BaileyKind::Hat || same_block(i, j) {
                        factor = factor * elliptic_gamma(u[i] * u[j], p, q, tol)?;
                    }
                }
            }
            return Ok(Residual::between(lhs, rhs_integral * factor));
        }
        _ => {
            let r = params.r;
            let mut ratio = Complex::new(T::one(), T::zero());
            for i in 0..8 {
                for j in (i + 1)..8 {
                    ratio = ratio * triple_gamma(v[i] * v[j], p, q, r, tol)? / triple_gamma(u[i] * u[j], p, q, r, tol)?;
                }
            }
            rhs_integral * ratio
        }
    };
    Ok(Residual::between(lhs, rhs))
}

/// Multiplicative contiguity relation in the parameters `u_i, u_j, u_k` (no balancing needed).
pub fn contiguity_residual<T: Real>(
    u: &[Complex<T>; 8],
    ijk: (usize, usize, usize),
    params: &EllipticParams<T>,
    quad: &QuadConfig,
) -> Result<Residual> {
    let terms = contiguity_terms(u, ijk, params, quad)?;
    Ok(Residual::from_terms(&terms, 1e-300))
}

fn shifted_integral<T: Real>(u: &[Complex<T>; 8], i: usize, params: &EllipticParams<T>, quad: &QuadConfig) -> Result<Complex<T>> {
    let mut v = *u;
    v[i] = v[i] * params.q;
    elliptic_integral(&IntegrandContext::new(v, *params, 1, *quad))
}

/// The three terms `u_k theta(u_j u_k^{+-1}) T_{q,u_i} I` and cyclic.
pub fn contiguity_terms<T: Real>(
    u: &[Complex<T>; 8],
    (i, j, k): (usize, usize, usize),
    params: &EllipticParams<T>,
    quad: &QuadConfig,
) -> Result<[Complex<T>; 3]> {
    if i == j || j == k || i == k || i > 7 || j > 7 || k > 7 {
        return Err(Error::Invalid("contiguity needs three distinct indices".into()));
    }
    let (p, tol) = (params.p, params.trunc_tol);
    let th2 = |a: Complex<T>, b: Complex<T>| -> Result<Complex<T>> { Ok(theta(a * b, p, tol)? * theta(a / b, p, tol)?) };
    Ok([
        u[k] * th2(u[j], u[k])? * shifted_integral(u, i, params, quad)?,
        u[i] * th2(u[k], u[i])? * shifted_integral(u, j, params, quad)?,
        u[j] * th2(u[i], u[j])? * shifted_integral(u, k, params, quad)?,
    ])
}

/// Additive form: `[x_j +- x_k] u_i^{-1} T_{q,u_i} I` and cyclic, from additive `x`.
pub fn contiguity_terms_additive<T: Real>(
    x: &Point<T>,
    (i, j, k): (usize, usize, usize),
    params: &EllipticParams<T>,
    quad: &QuadConfig,
) -> Result<[Complex<T>; 3]> {
    let u = x.map(e);
    let t = |a: usize| shifted_integral(&u, a, params, quad);
    Ok([
        bracket_pm(x[j], x[k], params) / u[i] * t(i)?,
        bracket_pm(x[k], x[i], params) / u[j] * t(j)?,
        bracket_pm(x[i], x[j], params) / u[k] * t(k)?,
    ])
}

/// Compares `I_n(t)` with its transformed integral, `t` additive on the level
/// `varpi + (2 - n) delta`.
pub fn in_transform_residual<T: Real>(
    t: &Point<T>,
    n: usize,
    kind: BaileyKind,
    params: &EllipticParams<T>,
    quad: &QuadConfig,
) -> Result<Residual> {
    check_balanced(t, n, params)?;
    let image = match kind {
        BaileyKind::Tilde | BaileyKind::PsiTilde => block_reflect(t, LOW_BLOCK),
        BaileyKind::Hat | BaileyKind::PsiHat => hat(t),
    };
    let (p, q, tol) = (params.p, params.q, params.trunc_tol);
    let u = t.map(e);
    let qn = powi(q, n as i64);
    let mut factor = Complex::new(T::one(), T::zero());
    for i in 0..8 {
        for j in (i + 1)..8 {
            if matches!(kind, BaileyKind::Hat | BaileyKind::PsiHat) || same_block(i, j) {
                let w = u[i] * u[j];
                factor = factor * triple_gamma(qn * w, p, q, q, tol)? / triple_gamma(w, p, q, q, tol)?;
            }
        }
    }
    let lhs = integral(u, params, n, quad)?;
    let rhs = integral(image.map(e), params, n, quad)? * factor;
    Ok(Residual::between(lhs, rhs))
}

/// Which parameter pair makes the series terminate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Termination {
    /// `u_0 u_i = q^{N+1}` for the given `i` in `1..=6`.
    Pair(usize),
    /// `u_0 u_7 = q^{N+1} / p`.
    Seventh,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct TerminatingComparison<T: Real> {
    pub integral: Complex<T>,
    pub series: Complex<T>,
    pub residual: Residual,
}

/// Evaluates `I(p u_0, u_1, ..., u_6, p u_7)` by quadrature and through the terminating
/// `12V11` series. `y` are additive coordinates of `u` with `u_0 ... u_7 = q^2`.
pub fn terminating_eval<T: Real>(
    y: &Point<T>,
    n_terms: usize,
    cond: Termination,
    params: &EllipticParams<T>,
    quad: &QuadConfig,
) -> Result<TerminatingComparison<T>> {
    let (p, q, tol) = (params.p, params.q, params.trunc_tol);
    let u = y.map(e);
    let prod = u.iter().fold(Complex::new(T::one(), T::zero()), |a, b| a * b);
    let off = crate::scalar::to_f64((prod / (q * q) - T::one()).norm());
    if off > 1e-10 {
        return Err(Error::Balancing(off));
    }
    let one = Complex::new(T::one(), T::zero());
    let target = powi(q, n_terms as i64 + 1);
    let pair = match cond {
        Termination::Pair(i) if (1..=6).contains(&i) => u[0] * u[i] / target,
        Termination::Pair(i) => return Err(Error::Invalid(format!("pair index {i} outside 1..=6"))),
        Termination::Seventh => u[0] * u[7] * p / target,
    };
    if crate::scalar::to_f64((pair - one).norm()) > 1e-10 {
        return Err(Error::NonTerminating(n_terms));
    }
    let mut v = u;
    v[0] = v[0] * p;
    v[7] = v[7] * p;
    let integral = elliptic_integral(&IntegrandContext::new(v, *params, 1, *quad))?;

    let g = |z: Complex<T>| elliptic_gamma(z, p, q, tol);
    let mut pre = g(q * q / (u[0] * u[0]))? * g(u[0] / u[7])?;
    for k in 1..=6 {
        for l in (k + 1)..=6 {
            pre = pre * g(u[k] * u[l])?;
        }
        pre = pre / (g(q * u[k] / u[0])? * g(q / (u[k] * u[7]))?);
    }
    let a0 = q / (u[0] * u[0]);
    let a: [Complex<T>; 7] = std::array::from_fn(|i| q / (u[0] * u[i + 1]));
    let series = pre * v12_11(a0, &a, q, p, n_terms, tol)?;
    Ok(TerminatingComparison { integral, series, residual: Residual::between(integral, series) })
}

/// Additive coordinates meeting the balancing and termination conditions, with the integrand
/// parameters `p u_0, u_1, ..., u_6, p u_7` placed inside the unit disc where possible.
pub fn terminating_sample<T: Real>(
    n_terms: usize,
    cond: Termination,
    params: &EllipticParams<T>,
    sampler: &mut crate::sampling::Sampler,
) -> Point<T> {
    let (varpi, delta) = (params.varpi, params.delta);
    let mut y = [Complex::new(T::zero(), T::zero()); 8];
    let ph = |s: &mut crate::sampling::Sampler| lit::<T>(s.uniform(-0.5, 0.5));
    let big = lit::<T>(n_terms as f64 + 1.0);
    let partner = match cond {
        Termination::Pair(i) => i,
        Termination::Seventh => 7,
    };
    // additive target of y_0 + y_partner
    let pair_sum = match cond {
        Termination::Pair(_) => delta * big,
        Termination::Seventh => delta * big - varpi,
    };
    // split the pair so the two integrand parameters have equal modulus
    let p_shift = |k: usize| if k == 0 || k == 7 { varpi } else { Complex::new(T::zero(), T::zero()) };
    let pair_im = (pair_sum + p_shift(0) + p_shift(partner)) * lit::<T>(0.5);
    y[0] = Complex::new(ph(sampler), pair_im.im) - p_shift(0);
    y[partner] = pair_sum - y[0];
    let rest: Vec<usize> = (1..8).filter(|&k| k != partner).collect();
    let rest_total = delta * lit::<T>(2.0) - pair_sum;
    let shifted_total = rest_total + rest.iter().fold(Complex::new(T::zero(), T::zero()), |a, &k| a + p_shift(k));
    let each = shifted_total.im / lit::<T>(rest.len() as f64);
    let mut acc = Complex::new(T::zero(), T::zero());
    for &k in &rest[..rest.len() - 1] {
        y[k] = Complex::new(ph(sampler), each) - p_shift(k);
        acc = acc + y[k];
    }
    y[*rest.last().expect("six free slots")] = rest_total - acc;
    y
}
