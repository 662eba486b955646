//! The bilinear equation attached to a C3-frame.

use num_complex::Complex;

use super::function::Tau;
use crate::error::{Error, Result};
use crate::integrals::Point;
use crate::lattice::LatticeVector;
use crate::residual::Residual;
use crate::scalar::{to_f64, Real};
use crate::specialfn::{bracket_pm, EllipticParams};

/// Terms below this size count as vanishing.
pub const DEGENERATE_FLOOR: f64 = 1e-250;

/// Defect of `sum_{cyclic (a,b,c)} [<b +- c, x>] tau(x + a delta) tau(x - a delta) = 0`.
pub fn hirota_residual<T: Real>(
    tau: &dyn Tau<T>,
    frame: &[LatticeVector; 3],
    x: &Point<T>,
    params: &EllipticParams<T>,
) -> Result<Residual> {
    hirota_residual_split(tau, tau, frame, x, params)
}

/// As [`hirota_residual`], evaluating the `x + a delta` factors with `plus` and the
/// `x - a delta` factors with `minus`.
pub fn hirota_residual_split<T: Real>(
    plus: &dyn Tau<T>,
    minus: &dyn Tau<T>,
    frame: &[LatticeVector; 3],
    x: &Point<T>,
    params: &EllipticParams<T>,
) -> Result<Residual> {
    let terms = hirota_terms(plus, minus, frame, x, params)?;
    Ok(Residual::from_terms(&terms, DEGENERATE_FLOOR))
}

pub fn hirota_terms<T: Real>(
    plus: &dyn Tau<T>,
    minus: &dyn Tau<T>,
    frame: &[LatticeVector; 3],
    x: &Point<T>,
    params: &EllipticParams<T>,
) -> Result<[Complex<T>; 3]> {
    let d = params.delta;
    let mut terms = [Complex::new(T::zero(), T::zero()); 3];
    for (s, term) in terms.iter_mut().enumerate() {
        let a = frame[s];
        let b = frame[(s + 1) % 3];
        let c = frame[(s + 2) % 3];
        let coeff = bracket_pm(b.pair(x), c.pair(x), params);
        *term = coeff * plus.eval(&a.shift(x, d))? * minus.eval(&a.shift(x, -d))?;
    }
    Ok(terms)
}

/// Smallest `|[<b +- c, x>]|` factor among the three coefficients.
pub fn min_coefficient<T: Real>(frame: &[LatticeVector; 3], x: &Point<T>, params: &EllipticParams<T>) -> f64 {
    let mut m = f64::INFINITY;
    for s in 0..3 {
        let (b, c) = (frame[(s + 1) % 3], frame[(s + 2) % 3]);
        for w in [b + c, b - c] {
            m = m.min(to_f64(crate::specialfn::bracket(w.pair(x), params).norm()));
        }
    }
    m
}

/// Rejects sample points where a coefficient nearly vanishes.
pub fn check_generic<T: Real>(frame: &[LatticeVector; 3], x: &Point<T>, params: &EllipticParams<T>, floor: f64) -> Result<()> {
    let m = min_coefficient(frame, x, params);
    if m < floor {
        return Err(Error::VanishingBracket { what: "Hirota coefficient".into(), modulus: m });
    }
    Ok(())
}

/// Rejection attempts before a frame is declared degenerate on a hyperplane.
pub const GENERIC_ATTEMPTS: usize = 200;

/// A near-centre point on `<phi, x> = level` where the frame's coefficients exceed `floor`.
///
/// Some frames have an identically vanishing coefficient on a given hyperplane (for instance
/// `[<a0 + a1, x>] = [varpi]` when `a0 + a1 = phi` at level 0); these fail after
/// [`GENERIC_ATTEMPTS`] draws.
pub fn generic_point<T: Real>(
    sampler: &mut crate::sampling::Sampler,
    level: Complex<T>,
    frame: &[LatticeVector; 3],
    params: &EllipticParams<T>,
    floor: f64,
) -> Result<Point<T>> {
    let mut best = 0.0f64;
    for _ in 0..GENERIC_ATTEMPTS {
        let x = sampler.hyperplane_point(level, 0.4, 0.05);
        let m = min_coefficient(frame, &x, params);
        if m >= floor {
            return Ok(x);
        }
        best = best.max(m);
    }
    Err(Error::VanishingBracket { what: "Hirota coefficient on this hyperplane".into(), modulus: best })
}
