//! Tau functions as evaluators on a domain, and the transformations between solutions.

use std::sync::Arc;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::integrals::Point;
use crate::lattice::{LatticeVector, WeylWord};
use crate::scalar::{e, lit, to_f64, Real};
use crate::specialfn::{bracket, EllipticParams};

/// Where a tau function is defined.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Domain<T: Real> {
    /// All of `V`.
    All,
    /// The union of hyperplanes `<direction, x> = base + n step`, `n` an integer.
    Levels { direction: LatticeVector, base: Complex<T>, step: Complex<T> },
}

const LEVEL_TOL: f64 = 1e-8;

impl<T: Real> Domain<T> {
    /// `D_c` for the direction `phi`.
    pub fn phi_levels(base: Complex<T>, step: Complex<T>) -> Self {
        Domain::Levels { direction: LatticeVector::phi(), base, step }
    }

    /// The integer level of `x`, or `None` for the whole space.
    pub fn level(&self, x: &Point<T>) -> Result<Option<i64>> {
        match self {
            Domain::All => Ok(None),
            Domain::Levels { direction, base, step } => {
                let offset = (direction.pair(x) - *base) / *step;
                let n = offset.re.round();
                let dist = to_f64((offset - Complex::new(n, T::zero())).norm());
                if dist > LEVEL_TOL {
                    return Err(Error::OffDomain(dist));
                }
                Ok(Some(n.to_i64().unwrap_or(0)))
            }
        }
    }

    pub fn contains(&self, x: &Point<T>) -> bool {
        self.level(x).is_ok()
    }
}

/// A tau function: a map from its domain to `C`.
pub trait Tau<T: Real>: Send + Sync {
    fn eval(&self, x: &Point<T>) -> Result<Complex<T>>;
    fn domain(&self) -> Domain<T>;
}

impl<T: Real, F: Tau<T> + ?Sized> Tau<T> for Arc<F> {
    fn eval(&self, x: &Point<T>) -> Result<Complex<T>> {
        (**self).eval(x)
    }
    fn domain(&self) -> Domain<T> {
        (**self).domain()
    }
}

/// `<x, x>` with the complex bilinear form.
pub fn inner<T: Real>(x: &Point<T>, y: &Point<T>) -> Complex<T> {
    x.iter().zip(y.iter()).fold(Complex::new(T::zero(), T::zero()), |a, (p, q)| a + *p * *q)
}

/// `Q(x) = <x, x> / (2 delta)`.
pub fn quad_form<T: Real>(x: &Point<T>, params: &EllipticParams<T>) -> Complex<T> {
    inner(x, x) / (params.delta * lit::<T>(2.0))
}

/// `[<x, x>/(2 delta) + c]`, a solution on all of `V`.
#[derive(Clone, Copy, Debug)]
pub struct CanonicalTau<T: Real> {
    pub params: EllipticParams<T>,
    pub c: Complex<T>,
}

impl<T: Real> CanonicalTau<T> {
    pub fn new(params: EllipticParams<T>, c: Complex<T>) -> Self {
        Self { params, c }
    }
}

impl<T: Real> Tau<T> for CanonicalTau<T> {
    fn eval(&self, x: &Point<T>) -> Result<Complex<T>> {
        Ok(bracket(quad_form(x, &self.params) + self.c, &self.params))
    }
    fn domain(&self) -> Domain<T> {
        Domain::All
    }
}

/// `e(k<x,x> + <v,x> + c) tau(eps x)` with `eps = +-1`.
pub struct ExpGauge<T: Real> {
    pub inner: Arc<dyn Tau<T>>,
    pub k: Complex<T>,
    pub v: Point<T>,
    pub c: Complex<T>,
    pub flip: bool,
}

impl<T: Real> Tau<T> for ExpGauge<T> {
    fn eval(&self, x: &Point<T>) -> Result<Complex<T>> {
        let y = if self.flip { x.map(|a| -a) } else { *x };
        let phase = self.k * inner(x, x) + inner(&self.v, x) + self.c;
        Ok(e(phase) * self.inner.eval(&y)?)
    }
    fn domain(&self) -> Domain<T> {
        match self.inner.domain() {
            Domain::Levels { direction, base, step } if self.flip => Domain::Levels { direction: -direction, base, step },
            d => d,
        }
    }
}

/// `(w.tau)(x) = tau(w^{-1} x)`.
pub struct WeylTransformed<T: Real> {
    pub inner: Arc<dyn Tau<T>>,
    pub word: WeylWord,
}

impl<T: Real> Tau<T> for WeylTransformed<T> {
    fn eval(&self, x: &Point<T>) -> Result<Complex<T>> {
        self.inner.eval(&self.word.inverse().apply_point(x))
    }
    fn domain(&self) -> Domain<T> {
        match self.inner.domain() {
            Domain::Levels { direction, base, step } => Domain::Levels { direction: self.word.apply(&direction), base, step },
            d => d,
        }
    }
}

/// `e(S(x; v, omega)) tau(x - v omega)` for `v` in `P` and a period `omega = m + l varpi`,
/// where `S = eta/(2 delta^2) <v,x><x, x - v omega>` and `eta = -l`.
pub struct PeriodTranslated<T: Real> {
    pub inner: Arc<dyn Tau<T>>,
    pub params: EllipticParams<T>,
    pub v: LatticeVector,
    pub m: i64,
    pub l: i64,
}

impl<T: Real> PeriodTranslated<T> {
    pub fn new(inner: Arc<dyn Tau<T>>, params: EllipticParams<T>, v: LatticeVector, m: i64, l: i64) -> Result<Self> {
        if !v.in_p() {
            return Err(Error::Invalid("period translation needs v in P".into()));
        }
        Ok(Self { inner, params, v, m, l })
    }

    fn omega(&self) -> Complex<T> {
        Complex::new(lit(self.m as f64), T::zero()) + self.params.varpi * lit::<T>(self.l as f64)
    }
}

impl<T: Real> Tau<T> for PeriodTranslated<T> {
    fn eval(&self, x: &Point<T>) -> Result<Complex<T>> {
        let omega = self.omega();
        let eta = lit::<T>(-(self.l as f64));
        let shifted = self.v.shift(x, -omega);
        let d = self.params.delta;
        let s = self.v.pair(x) * inner(x, &shifted) * eta / (d * d * lit::<T>(2.0));
        Ok(e(s) * self.inner.eval(&shifted)?)
    }
    fn domain(&self) -> Domain<T> {
        match self.inner.domain() {
            Domain::Levels { direction, base, step } => {
                let shift = self.omega() * lit::<T>(direction.ip(&self.v));
                Domain::Levels { direction, base: base + shift, step }
            }
            d => d,
        }
    }
}

/// Wraps a closure as a tau function.
pub struct FnTau<T: Real, F> {
    pub f: F,
    pub domain: Domain<T>,
}

impl<T: Real, F> Tau<T> for FnTau<T, F>
where
    F: Fn(&Point<T>) -> Result<Complex<T>> + Send + Sync,
{
    fn eval(&self, x: &Point<T>) -> Result<Complex<T>> {
        (self.f)(x)
    }
    fn domain(&self) -> Domain<T> {
        self.domain
    }
}
