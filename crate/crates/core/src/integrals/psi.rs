//! `Psi_n(t) = I_n(t) prod_{i<j} Gamma(t_i t_j; p, q, q)` with analytic continuation.
//!
//! `Psi_n` is invariant under W(E7) acting on the hyperplane `sum t = 2 varpi + (4 - 2n) delta`
//! (additive coordinates). When the unit circle is not an admissible contour at `t`, the value
//! is taken at a reflected point where it is.

use num_complex::Complex;

use super::ehi::{elliptic_integral_n, IntegrandContext};
use super::quadrature::QuadConfig;
use crate::error::{Error, Result};
use crate::scalar::{e, lit, to_f64, Real};
use crate::specialfn::{triple_gamma, EllipticParams};

pub type Point<T> = [Complex<T>; 8];

const GOOD_ENOUGH: f64 = 0.9;
const SEARCH_DEPTH: usize = 3;

/// `<phi, t>` for an additive point.
pub fn level<T: Real>(t: &Point<T>) -> Complex<T> {
    t.iter().fold(Complex::new(T::zero(), T::zero()), |a, b| a + b) * lit::<T>(0.5)
}

/// Reflection in `phi - v_S`, where `S` is the set bits of `mask` (four of them).
pub fn block_reflect<T: Real>(t: &Point<T>, mask: u8) -> Point<T> {
    let kappa = level(t);
    let s = (0..8).filter(|k| mask >> k & 1 == 1).fold(Complex::new(T::zero(), T::zero()), |a, k| a + t[k]);
    let shift = (kappa - s) * lit::<T>(0.5);
    std::array::from_fn(|k| if mask >> k & 1 == 1 { t[k] + shift } else { t[k] - shift })
}

/// `t -> <phi,t>/2 - t`, the longest element of W(E7) on the hyperplane.
pub fn hat<T: Real>(t: &Point<T>) -> Point<T> {
    let half = level(t) * lit::<T>(0.5);
    t.map(|x| half - x)
}

/// The 35 block reflections (subsets containing index 0).
pub fn block_masks() -> Vec<u8> {
    (0u16..256).map(|m| m as u8).filter(|m| m.count_ones() == 4 && m & 1 == 1).collect()
}

/// Largest `|e(t_k)|`.
pub fn max_modulus<T: Real>(t: &Point<T>) -> f64 {
    t.iter().map(|x| to_f64(e(*x).norm())).fold(0.0, f64::max)
}

/// A W(E7)-image of `t` with every `|e(t_k)| < 1`, preferring a comfortable margin.
pub fn admissible_representative<T: Real>(t: &Point<T>) -> Result<Point<T>> {
    let mut best = (max_modulus(t), *t);
    if best.0 < GOOD_ENOUGH {
        return Ok(*t);
    }
    let masks = block_masks();
    let mut frontier = vec![*t];
    for _ in 0..SEARCH_DEPTH {
        let mut next = Vec::with_capacity(frontier.len() * (masks.len() + 1));
        for x in &frontier {
            next.push(hat(x));
            for &m in &masks {
                next.push(block_reflect(x, m));
            }
        }
        for y in &next {
            let m = max_modulus(y);
            if m < best.0 {
                best = (m, *y);
            }
        }
        if best.0 < GOOD_ENOUGH {
            return Ok(best.1);
        }
        frontier = next;
    }
    if best.0 < 1.0 {
        Ok(best.1)
    } else {
        Err(Error::NoAdmissibleRepresentative { best: best.0 })
    }
}

/// `prod_{i<j} Gamma(e(t_i + t_j); p, q, q)`.
pub fn pair_triple_gamma<T: Real>(t: &Point<T>, params: &EllipticParams<T>) -> Result<Complex<T>> {
    let mut acc = Complex::new(T::one(), T::zero());
    for i in 0..8 {
        for j in (i + 1)..8 {
            acc = acc * triple_gamma(e(t[i] + t[j]), params.p, params.q, params.q, params.trunc_tol)?;
        }
    }
    Ok(acc)
}

/// Required level `varpi + (2 - n) delta`, up to an integer.
pub fn check_balanced<T: Real>(t: &Point<T>, n: usize, params: &EllipticParams<T>) -> Result<()> {
    let want = params.varpi + params.delta * lit::<T>(2.0 - n as f64);
    let d = level(t) - want;
    let off = to_f64((d - Complex::new(d.re.round(), T::zero())).norm() + d.im.abs());
    if off > 1e-8 {
        return Err(Error::Balancing(off));
    }
    Ok(())
}

/// `Psi_n(e(t))` on the balanced hyperplane, continued through W(E7) when needed.
pub fn psi_n<T: Real>(t: &Point<T>, n: usize, params: &EllipticParams<T>, quad: &QuadConfig) -> Result<Complex<T>> {
    check_balanced(t, n, params)?;
    if n == 0 {
        return pair_triple_gamma(t, params);
    }
    let rep = admissible_representative(t)?;
    let ctx = IntegrandContext::new(rep.map(e), *params, n, *quad);
    Ok(elliptic_integral_n(&ctx)? * pair_triple_gamma(&rep, params)?)
}

/// `I_n(e(t))` on the balanced hyperplane, continued through W(E7) when needed.
pub fn balanced_integral<T: Real>(t: &Point<T>, n: usize, params: &EllipticParams<T>, quad: &QuadConfig) -> Result<Complex<T>> {
    check_balanced(t, n, params)?;
    if max_modulus(t) < 1.0 {
        let ctx = IntegrandContext::new(t.map(e), *params, n, *quad);
        return elliptic_integral_n(&ctx);
    }
    Ok(psi_n(t, n, params, quad)? / pair_triple_gamma(t, params)?)
}
