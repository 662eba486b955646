//! The hypergeometric solution: the two seed levels and the chain generated from them.

use std::sync::Arc;

use num_complex::Complex;

use super::function::{quad_form, Domain, Tau};
use crate::error::{Error, Result};
use crate::integrals::{pair_triple_gamma, psi_n, Point, QuadConfig};
use crate::lattice::{named, LatticeVector};
use crate::scalar::{e, lit, Real};
use crate::specialfn::{bracket_pm, EllipticParams};

/// Default highest level of a chain, and the hard cap.
pub const DEFAULT_N_MAX: i64 = 2;
pub const N_MAX_CAP: i64 = 3;

/// `F(x) = prod_{i<j} Gamma(u_i u_j; p, q, q)`, `u = e(x)`.
pub fn pair_gamma_f<T: Real>(x: &Point<T>, params: &EllipticParams<T>) -> Result<Complex<T>> {
    pair_triple_gamma(x, params)
}

/// Level zero: `tau^0(x) = F(x + phi delta) = prod_{i<j} Gamma(q u_i u_j; p, q, q)` on `<phi,x> = varpi`.
pub fn hg_tau0<T: Real>(x: &Point<T>, params: &EllipticParams<T>) -> Result<Complex<T>> {
    check_level(x, params, 0)?;
    pair_triple_gamma(&LatticeVector::phi().shift(x, params.delta), params)
}

/// Level one: `tau^1(x) = e(-Q(x)) I(u) prod_{i<j} Gamma(u_i u_j; p, q, q)` on `<phi,x> = varpi + delta`.
pub fn hg_tau1<T: Real>(x: &Point<T>, params: &EllipticParams<T>, quad: &QuadConfig) -> Result<Complex<T>> {
    check_level(x, params, 1)?;
    Ok(e(-quad_form(x, params)) * psi_n(x, 1, params, quad)?)
}

fn check_level<T: Real>(x: &Point<T>, params: &EllipticParams<T>, n: i64) -> Result<()> {
    let dom = Domain::phi_levels(params.varpi, params.delta);
    match dom.level(x)? {
        Some(m) if m == n => Ok(()),
        Some(m) => Err(Error::Invalid(format!("point is on level {m}, expected {n}"))),
        None => Ok(()),
    }
}

/// One step of the Toda-type recursion along the type-II frame `{a0, ai, aj}` (`<phi,a0> = 1`):
///
/// `tau^{n+1}(x) = ( tau^n(x - (a0 +- ai) delta) [<a0 +- aj, x> - delta]
///                 - tau^n(x - (a0 +- aj) delta) [<a0 +- ai, x> - delta] )
///                 / ( tau^{n-1}(x - 2 a0 delta) [<ai +- aj, x>] )`.
pub fn toda_step<T: Real, P, C>(
    prev: P,
    cur: C,
    frame: &[LatticeVector; 3],
    x: &Point<T>,
    params: &EllipticParams<T>,
) -> Result<Complex<T>>
where
    P: Fn(&Point<T>) -> Result<Complex<T>>,
    C: Fn(&Point<T>) -> Result<Complex<T>>,
{
    let [a0, ai, aj] = *frame;
    let d = params.delta;
    let pair_of = |a: LatticeVector, b: LatticeVector| -> Result<Complex<T>> {
        Ok(cur(&(a + b).shift(x, -d))? * cur(&(a - b).shift(x, -d))?)
    };
    let shifted = |a: LatticeVector, b: LatticeVector| bracket_pm(a.pair(x) - d, b.pair(x), params);
    let num = pair_of(a0, ai)? * shifted(a0, aj) - pair_of(a0, aj)? * shifted(a0, ai);
    let den_bracket = bracket_pm(ai.pair(x), aj.pair(x), params);
    let den = prev(&(a0 * 2).shift(x, -d))? * den_bracket;
    if den.norm() == T::zero() {
        return Err(Error::VanishingBracket { what: "recursion denominator".into(), modulus: 0.0 });
    }
    Ok(num / den)
}

/// The recursion written directly in the basis `v_i`, for the frame with `a0 = (v0 - v1 + phi)/2`;
/// `i, j` are distinct indices in `2..=7`.
pub fn toda_step_explicit<T: Real, P, C>(
    prev: P,
    cur: C,
    i: usize,
    j: usize,
    x: &Point<T>,
    params: &EllipticParams<T>,
) -> Result<Complex<T>>
where
    P: Fn(&Point<T>) -> Result<Complex<T>>,
    C: Fn(&Point<T>) -> Result<Complex<T>>,
{
    if i == j || !(2..=7).contains(&i) || !(2..=7).contains(&j) {
        return Err(Error::Invalid(format!("indices ({i}, {j}) must be distinct in 2..=7")));
    }
    let v = LatticeVector::basis;
    let phi = LatticeVector::phi();
    let d = params.delta;
    let br = |w: LatticeVector, s: Complex<T>| crate::specialfn::bracket(w.pair(x) + s, params);
    let zero = Complex::new(T::zero(), T::zero());
    let t_i = cur(&(v(0) + v(i)).shift(x, -d))? * cur(&(phi - v(1) - v(i)).shift(x, -d))?;
    let t_j = cur(&(v(0) + v(j)).shift(x, -d))? * cur(&(phi - v(1) - v(j)).shift(x, -d))?;
    let num = t_i * br(v(0) + v(j), -d) * br(phi - v(1) - v(j), -d) - t_j * br(v(0) + v(i), -d) * br(phi - v(1) - v(i), -d);
    let den = prev(&(phi + v(0) - v(1)).shift(x, -d))?
        * br(v(j) - v(i), zero)
        * br(phi - v(0) - v(1) - v(i) - v(j), zero);
    Ok(num / den)
}

type LevelFn<T> = Arc<dyn Fn(&Point<T>) -> Result<Complex<T>> + Send + Sync>;

/// A solution on `D_c` built from two seed levels by [`toda_step`] along a fixed frame.
pub struct TauChain<T: Real> {
    pub params: EllipticParams<T>,
    pub base: Complex<T>,
    pub frame: [LatticeVector; 3],
    pub n_max: i64,
    level0: LevelFn<T>,
    level1: LevelFn<T>,
}

impl<T: Real> TauChain<T> {
    pub fn eval_level(&self, n: i64, x: &Point<T>) -> Result<Complex<T>> {
        match n {
            n if n < 0 => Ok(Complex::new(T::zero(), T::zero())),
            0 => (self.level0)(x),
            1 => (self.level1)(x),
            n if n > self.n_max => Err(Error::LevelTooHigh { level: n, max: self.n_max }),
            n => toda_step(
                |y: &Point<T>| self.eval_level(n - 2, y),
                |y: &Point<T>| self.eval_level(n - 1, y),
                &self.frame,
                x,
                &self.params,
            ),
        }
    }

    /// The same solution continued with a different recursion frame.
    pub fn with_frame(&self, frame: [LatticeVector; 3]) -> Self {
        Self { frame, ..self.clone_levels() }
    }

    fn clone_levels(&self) -> Self {
        Self {
            params: self.params,
            base: self.base,
            frame: self.frame,
            n_max: self.n_max,
            level0: self.level0.clone(),
            level1: self.level1.clone(),
        }
    }
}

impl<T: Real> Tau<T> for TauChain<T> {
    fn eval(&self, x: &Point<T>) -> Result<Complex<T>> {
        let n = self.domain().level(x)?.unwrap_or(0);
        self.eval_level(n, x)
    }
    fn domain(&self) -> Domain<T> {
        Domain::phi_levels(self.base, self.params.delta)
    }
}

/// Builds a chain on `D_c` from its levels 0 and 1 and a type-II frame `{a0, a1, a2}` with `<phi,a0> = 1`.
pub fn build_chain<T: Real>(
    params: EllipticParams<T>,
    base: Complex<T>,
    level0: LevelFn<T>,
    level1: LevelFn<T>,
    frame: [LatticeVector; 3],
    n_max: i64,
) -> Result<TauChain<T>> {
    if n_max > N_MAX_CAP {
        return Err(Error::LevelTooHigh { level: n_max, max: N_MAX_CAP });
    }
    if frame[0].phi8() != 8 || frame[1].phi8() != 0 || frame[2].phi8() != 0 {
        return Err(Error::Invalid("recursion frame must have phi-values (1, 0, 0)".into()));
    }
    crate::lattice::Frame::new(&frame)?;
    Ok(TauChain { params, base, frame, n_max, level0, level1 })
}

/// The hypergeometric chain on `D_varpi`, levels `0..=n_max`.
pub fn hypergeometric_chain<T: Real>(params: EllipticParams<T>, quad: QuadConfig, n_max: i64) -> Result<TauChain<T>> {
    let p0 = params;
    let p1 = params;
    build_chain(
        params,
        params.varpi,
        Arc::new(move |x: &Point<T>| hg_tau0(x, &p0)),
        Arc::new(move |x: &Point<T>| hg_tau1(x, &p1, &quad)),
        named::recursion_triple(),
        n_max,
    )
}

/// A point on `<phi, x> = varpi + m delta` (`m` may be a half-integer).
pub fn level_point<T: Real>(params: &EllipticParams<T>, m: f64) -> Complex<T> {
    params.varpi + params.delta * lit::<T>(m)
}
