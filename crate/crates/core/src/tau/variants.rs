//! The four W(E7)-invariant hypergeometric solutions in the directions `+-phi` with initial levels `+-varpi`.

use num_complex::Complex;

use super::casorati::level_prefactor;
use super::function::{Domain, Tau};
use crate::error::{Error, Result};
use crate::integrals::{psi_n, Point, QuadConfig};
use crate::lattice::LatticeVector;
use crate::scalar::{lit, Real};
use crate::specialfn::EllipticParams;

/// Direction sign and initial-level sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Direction `phi`, initial level `varpi`: the original chain.
    PP,
    /// Direction `phi`, initial level `-varpi`.
    PM,
    /// Direction `-phi`, initial level `varpi`.
    MP,
    /// Direction `-phi`, initial level `-varpi`.
    MM,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::PP, Variant::PM, Variant::MP, Variant::MM];

    pub fn name(self) -> &'static str {
        match self {
            Variant::PP => "pp",
            Variant::PM => "pm",
            Variant::MP => "mp",
            Variant::MM => "mm",
        }
    }

    fn direction(self) -> LatticeVector {
        match self {
            Variant::PP | Variant::PM => LatticeVector::phi(),
            Variant::MP | Variant::MM => -LatticeVector::phi(),
        }
    }

    fn base<T: Real>(self, params: &EllipticParams<T>) -> Complex<T> {
        match self {
            Variant::PP | Variant::MP => params.varpi,
            Variant::PM | Variant::MM => -params.varpi,
        }
    }

    pub fn domain<T: Real>(self, params: &EllipticParams<T>) -> Domain<T> {
        Domain::Levels { direction: self.direction(), base: self.base(params), step: params.delta }
    }

    fn has_prefactor(self) -> bool {
        matches!(self, Variant::PP | Variant::MP)
    }

    /// The argument of `Psi_n` for `x` on level `n`; `second` picks the reflected form.
    pub fn argument<T: Real>(self, n: usize, x: &Point<T>, second: bool, params: &EllipticParams<T>) -> Point<T> {
        let (w, d) = (params.varpi, params.delta);
        let h = lit::<T>(0.5);
        let m = lit::<T>((1.0 - n as f64) / 2.0);
        let (shift, sign) = match (self, second) {
            (Variant::PP, false) => (d * m, 1.0),
            (Variant::PP, true) => ((w + d) * h, -1.0),
            (Variant::PM, false) => (w * h + d * m, 1.0),
            (Variant::PM, true) => (d * h, -1.0),
            (Variant::MP, false) => ((w + d) * h, 1.0),
            (Variant::MP, true) => (d * m, -1.0),
            (Variant::MM, false) => (d * h, 1.0),
            (Variant::MM, true) => (w * h + d * m, -1.0),
        };
        let s = lit::<T>(sign);
        x.map(|a| shift + a * s)
    }
}

/// The value of a variant at `x` on its level `n`, through the chosen argument form.
pub fn psi_variant<T: Real>(
    variant: Variant,
    n: usize,
    x: &Point<T>,
    second: bool,
    params: &EllipticParams<T>,
    quad: &QuadConfig,
) -> Result<Complex<T>> {
    let t = variant.argument(n, x, second, params);
    let v = psi_n(&t, n, params, quad)?;
    Ok(if variant.has_prefactor() { level_prefactor(n, x, params) * v } else { v })
}

/// A variant as a tau function on its domain; levels above `n_max` are rejected.
#[derive(Clone, Copy, Debug)]
pub struct VariantTau<T: Real> {
    pub variant: Variant,
    pub params: EllipticParams<T>,
    pub quad: QuadConfig,
    pub n_max: i64,
    pub second: bool,
}

impl<T: Real> VariantTau<T> {
    pub fn new(variant: Variant, params: EllipticParams<T>, quad: QuadConfig, n_max: i64) -> Self {
        Self { variant, params, quad, n_max, second: false }
    }
}

impl<T: Real> Tau<T> for VariantTau<T> {
    fn eval(&self, x: &Point<T>) -> Result<Complex<T>> {
        let n = self.domain().level(x)?.unwrap_or(0);
        if n < 0 {
            return Ok(Complex::new(T::zero(), T::zero()));
        }
        if n > self.n_max {
            return Err(Error::LevelTooHigh { level: n, max: self.n_max });
        }
        psi_variant(self.variant, n as usize, x, self.second, &self.params, &self.quad)
    }
    fn domain(&self) -> Domain<T> {
        self.variant.domain(&self.params)
    }
}
