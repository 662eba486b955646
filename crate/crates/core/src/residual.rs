use num_complex::Complex;
use serde::Serialize;

use crate::scalar::{compensated_sum, to_f64, Real};

/// Size of an identity's defect relative to its largest term.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Residual {
    pub relative: f64,
    pub scale: f64,
    pub degenerate: bool,
}

impl Residual {
    /// `|sum terms| / max |term|`; flagged degenerate when every term is below `floor`.
    pub fn from_terms<T: Real>(terms: &[Complex<T>], floor: f64) -> Self {
        let scale = terms.iter().map(|t| to_f64(t.norm())).fold(0.0, f64::max);
        let sum = to_f64(compensated_sum(terms.iter().copied()).norm());
        if !(scale > floor) {
            return Self { relative: if scale.is_nan() { f64::NAN } else { 0.0 }, scale, degenerate: true };
        }
        Self { relative: sum / scale, scale, degenerate: false }
    }

    /// Relative difference `|a - b| / max(|a|, |b|)`.
    pub fn between<T: Real>(a: Complex<T>, b: Complex<T>) -> Self {
        let scale = to_f64(a.norm()).max(to_f64(b.norm()));
        let diff = to_f64((a - b).norm());
        if !(scale > 0.0) {
            return Self { relative: if diff == 0.0 { 0.0 } else { f64::INFINITY }, scale, degenerate: true };
        }
        Self { relative: diff / scale, scale, degenerate: false }
    }
}
