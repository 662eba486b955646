//! Frequently used frames, with their conventional ordering.

use super::frames::Frame;
use super::vector::{vsum, LatticeVector};

fn half(v: LatticeVector) -> LatticeVector {
    v.halve().expect("even quarter coordinates")
}

/// `{v_0, ..., v_7}`.
pub fn a0_vectors() -> [LatticeVector; 8] {
    std::array::from_fn(LatticeVector::basis)
}

pub fn a1_vectors() -> [LatticeVector; 8] {
    [
        LatticeVector::from_halves([1, 1, 1, 1, 0, 0, 0, 0]),
        LatticeVector::from_halves([1, 1, -1, -1, 0, 0, 0, 0]),
        LatticeVector::from_halves([1, -1, 1, -1, 0, 0, 0, 0]),
        LatticeVector::from_halves([1, -1, -1, 1, 0, 0, 0, 0]),
        LatticeVector::from_halves([0, 0, 0, 0, 1, -1, -1, 1]),
        LatticeVector::from_halves([0, 0, 0, 0, -1, 1, -1, 1]),
        LatticeVector::from_halves([0, 0, 0, 0, -1, -1, 1, 1]),
        LatticeVector::from_halves([0, 0, 0, 0, 1, 1, 1, 1]),
    ]
}

/// Type-II frame whose two `phi = 1` vectors sum to `phi` through `v_0` and `v_7`.
pub fn a2_vectors() -> [LatticeVector; 8] {
    let phi = LatticeVector::phi();
    let (v0, v7) = (LatticeVector::basis(0), LatticeVector::basis(7));
    let mut out = [LatticeVector::ZERO; 8];
    out[0] = half(phi + v0 - v7);
    out[7] = half(phi - v0 + v7);
    for (j, slot) in out.iter_mut().enumerate().take(7).skip(1) {
        *slot = LatticeVector::basis(j) + half(v0 + v7 - phi);
    }
    out
}

/// Type-II frame used by the explicit two-step recursion: `a_0, a_1` have `phi = 1`.
pub fn c801_vectors() -> [LatticeVector; 8] {
    let phi = LatticeVector::phi();
    let (v0, v1) = (LatticeVector::basis(0), LatticeVector::basis(1));
    let mut out = [LatticeVector::ZERO; 8];
    out[0] = half(v0 - v1 + phi);
    out[1] = half(v1 - v0 + phi);
    for (j, slot) in out.iter_mut().enumerate().skip(2) {
        *slot = LatticeVector::basis(j) + half(v0 + v1 - phi);
    }
    out
}

pub fn frame_a0() -> Frame {
    Frame::new(&a0_vectors()).expect("valid frame")
}

pub fn frame_a1() -> Frame {
    Frame::new(&a1_vectors()).expect("valid frame")
}

pub fn frame_a2() -> Frame {
    Frame::new(&a2_vectors()).expect("valid frame")
}

pub fn frame_c801() -> Frame {
    Frame::new(&c801_vectors()).expect("valid frame")
}

/// `{a_0, a_1, a_2}` of [`a1_vectors`], a frame of type II with one `phi = 1` vector.
pub fn recursion_triple() -> [LatticeVector; 3] {
    let a = a1_vectors();
    [a[0], a[1], a[2]]
}

pub fn recursion_frame() -> Frame {
    Frame::new(&recursion_triple()).expect("valid frame")
}

/// `{a_7, a_1, a_2}` of [`a1_vectors`], the mirror of [`recursion_triple`].
pub fn mirrored_triple() -> [LatticeVector; 3] {
    let a = a1_vectors();
    [a[7], a[1], a[2]]
}

/// Representatives of the five W(E7)-orbits on the norm-4 vectors, by `phi`-level 2, 1, 0, -1, -2.
pub fn e7_orbit_representatives() -> [(i64, LatticeVector); 5] {
    let phi = LatticeVector::phi();
    let v = LatticeVector::basis;
    [
        (2, phi - v(0) + v(1)),
        (1, phi - v(0) * 2),
        (0, phi - v(0) * 2 - vsum(&[6, 7])),
        (-1, -(v(0) * 2)),
        (-2, -phi - v(0) + v(1)),
    ]
}
