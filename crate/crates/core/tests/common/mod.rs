#![allow(dead_code)]

use std::sync::OnceLock;

use e8tau::integrals::{Point, QuadConfig};
use e8tau::lattice::{enumerate_frames, Frame, FrameType, LatticeVector};
use e8tau::sampling::Sampler;
use e8tau::specialfn::EllipticParams;
use e8tau::Params;
use num_complex::Complex64;

/// Nomes at which every level of the chain up to 2 has admissible representatives near the
/// centre of its hyperplane.
pub fn chain_params() -> EllipticParams<f64> {
    Params::real(0.05, 0.3, 0.12).unwrap()
}

pub fn quad() -> QuadConfig {
    QuadConfig::default()
}

pub fn frames() -> &'static [Frame] {
    static F: OnceLock<Vec<Frame>> = OnceLock::new();
    F.get_or_init(|| enumerate_frames(3).unwrap())
}

pub fn random_frame(s: &mut Sampler, ty: FrameType) -> [LatticeVector; 3] {
    let cand: Vec<&Frame> = frames().iter().filter(|f| f.classify().unwrap() == ty).collect();
    let o = cand[s.index(cand.len())].oriented();
    [o[0], o[1], o[2]]
}

/// `<phi, x> = c + m delta`.
pub fn level(params: &EllipticParams<f64>, c: Complex64, m: f64) -> Complex64 {
    c + params.delta * m
}

/// A point near the centre of the hyperplane, resampled until the frame's coefficients are generic.
pub fn generic_point(s: &mut Sampler, lev: Complex64, frame: &[LatticeVector; 3], params: &EllipticParams<f64>) -> Point<f64> {
    e8tau::tau::generic_point(s, lev, frame, params, 1e-6).unwrap()
}

pub fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}
