//! C_l-frames in `(1/2) P` and their classification by `phi`-values.

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::roots::{enumerate_norm, reflect};
use super::vector::LatticeVector;
use crate::error::{Error, Result};

/// A set `{+-a_0, ..., +-a_{l-1}}`, stored as sorted sign-normalised representatives.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Frame {
    vectors: Vec<LatticeVector>,
}

/// Frame type by the multiset of `|<phi, a_i>|`: all one half, or `k` ones and the rest zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FrameType {
    I,
    II(u8),
}

impl fmt::Display for FrameType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrameType::I => write!(f, "I"),
            FrameType::II(k) => write!(f, "II{k}"),
        }
    }
}

impl Frame {
    /// Validates the frame conditions and stores the canonical form.
    pub fn new(vectors: &[LatticeVector]) -> Result<Self> {
        if vectors.is_empty() || vectors.len() > 8 {
            return Err(Error::FrameSize(vectors.len()));
        }
        for (i, a) in vectors.iter().enumerate() {
            if a.norm16() != 16 {
                return Err(Error::NotAFrame(format!("{a:?} does not have norm 1")));
            }
            if !(*a * 2).in_p() {
                return Err(Error::NotAFrame(format!("2 * {a:?} is not in P")));
            }
            for b in &vectors[i + 1..] {
                if a.ip16(b) != 0 {
                    return Err(Error::NotAFrame(format!("{a:?} and {b:?} are not orthogonal")));
                }
                if !(*a + *b).in_p() {
                    return Err(Error::NotAFrame(format!("{a:?} + {b:?} is not in P")));
                }
            }
        }
        Ok(Self::canonical(vectors))
    }

    fn canonical(vectors: &[LatticeVector]) -> Self {
        let mut v: Vec<LatticeVector> = vectors.iter().map(LatticeVector::sign_normalized).collect();
        v.sort();
        v.dedup();
        Self { vectors: v }
    }

    pub fn vectors(&self) -> &[LatticeVector] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn classify(&self) -> Result<FrameType> {
        let phis: Vec<i64> = self.vectors.iter().map(|a| a.phi8().abs()).collect();
        if phis.iter().all(|&p| p == 4) {
            return Ok(FrameType::I);
        }
        if phis.iter().all(|&p| p == 0 || p == 8) {
            let ones = phis.iter().filter(|&&p| p == 8).count();
            if ones <= 2 {
                return Ok(FrameType::II(ones as u8));
            }
        }
        Err(Error::Unclassifiable(phis.iter().map(|&p| p as f64 / 8.0).collect()))
    }

    /// Representatives with `<phi, a> >= 0`, the largest `phi`-values first.
    pub fn oriented(&self) -> Vec<LatticeVector> {
        let mut v: Vec<LatticeVector> =
            self.vectors.iter().map(|a| if a.phi8() < 0 { -*a } else { *a }).collect();
        v.sort_by(|a, b| b.phi8().cmp(&a.phi8()).then(b.cmp(a)));
        v
    }

    pub fn phi_values(&self) -> Vec<f64> {
        self.oriented().iter().map(LatticeVector::phi_value).collect()
    }

    pub fn reflect(&self, alpha: &LatticeVector) -> Self {
        let images: Vec<LatticeVector> =
            self.vectors.iter().map(|a| reflect(alpha, a).expect("roots reflect the half lattice")).collect();
        Self::canonical(&images)
    }

    /// `sum a_i` over the oriented representatives.
    pub fn oriented_sum(&self) -> LatticeVector {
        self.oriented().into_iter().fold(LatticeVector::ZERO, |acc, a| acc + a)
    }

    /// One line of the dump format: vectors separated by `;`.
    pub fn dump_line(&self) -> String {
        self.vectors.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(";")
    }

    pub fn parse_dump_line(line: &str) -> Result<Self> {
        let vectors = line.split(';').map(LatticeVector::parse_quarters).collect::<Result<Vec<_>>>()?;
        Frame::new(&vectors)
    }
}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Frame{{{}}}", self.dump_line())
    }
}

/// The unit vectors of `(1/2) P`, sign-normalised and deduplicated (1080 of them).
pub fn unit_half_vectors() -> Vec<LatticeVector> {
    let mut out: Vec<LatticeVector> = enumerate_norm(4)
        .expect("norm 4 is supported")
        .iter()
        .map(|b| b.halve().expect("quarter coordinates are even").sign_normalized())
        .collect();
    out.sort();
    out.dedup();
    out
}

/// The unique C8-frame containing `a`.
pub fn frame_containing(a: &LatticeVector) -> Result<Frame> {
    if a.norm16() != 16 {
        return Err(Error::WrongNorm { norm: a.ip(a), expected: 1.0 });
    }
    if !a.in_half_p() {
        return Err(Error::NotInHalfLattice);
    }
    let mut members = vec![*a];
    for b in unit_half_vectors() {
        if a.ip16(&b) == 0 && (*a + b).in_p() {
            members.push(b);
        }
    }
    Frame::new(&members)
}

/// All 135 C8-frames.
pub fn c8_frames() -> &'static [Frame] {
    static FRAMES: OnceLock<Vec<Frame>> = OnceLock::new();
    FRAMES.get_or_init(|| {
        let units = unit_half_vectors();
        let mut seen: HashSet<LatticeVector> = HashSet::new();
        let mut frames = Vec::new();
        for a in &units {
            if seen.contains(a) {
                continue;
            }
            let frame = frame_containing(a).expect("every unit vector lies in a frame");
            seen.extend(frame.vectors().iter().copied());
            frames.push(frame);
        }
        frames.sort();
        frames
    })
}

/// All C_l-frames, as the `l`-subsets of the C8-frames.
pub fn enumerate_frames(l: usize) -> Result<Vec<Frame>> {
    if l == 0 || l > 8 {
        return Err(Error::FrameSize(l));
    }
    let mut out = Vec::new();
    for frame in c8_frames() {
        let v = frame.vectors();
        for mask in 0u32..256 {
            if mask.count_ones() as usize == l {
                let subset: Vec<LatticeVector> = (0..8).filter(|k| mask >> k & 1 == 1).map(|k| v[k]).collect();
                out.push(Frame::canonical(&subset));
            }
        }
    }
    Ok(out)
}

pub fn classify_frame(frame: &Frame) -> Result<FrameType> {
    frame.classify()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::named;

    #[test]
    fn c8_count_and_partition() {
        let frames = c8_frames();
        assert_eq!(frames.len(), 135);
        let total: HashSet<LatticeVector> = frames.iter().flat_map(|f| f.vectors().iter().copied()).collect();
        assert_eq!(total.len(), 1080);
    }

    #[test]
    fn every_frame_satisfies_the_frame_conditions() {
        for f in c8_frames() {
            assert_eq!(f.len(), 8);
            Frame::new(f.vectors()).unwrap();
        }
    }

    #[test]
    fn frame_containing_v0_is_a0() {
        let f = frame_containing(&LatticeVector::basis(0)).unwrap();
        assert_eq!(f, named::frame_a0());
        assert!(matches!(
            frame_containing(&(LatticeVector::basis(0) * 2)),
            Err(Error::WrongNorm { .. })
        ));
    }

    #[test]
    fn named_frames_have_expected_types() {
        assert_eq!(named::frame_a0().classify().unwrap(), FrameType::I);
        assert_eq!(named::frame_a1().classify().unwrap(), FrameType::II(2));
        assert_eq!(named::frame_a2().classify().unwrap(), FrameType::II(2));
        assert_eq!(named::recursion_frame().classify().unwrap(), FrameType::II(1));
        assert_eq!(named::frame_c801().classify().unwrap(), FrameType::II(2));
    }

    #[test]
    fn c8_type_split() {
        let (mut one, mut two) = (0, 0);
        for f in c8_frames() {
            match f.classify().unwrap() {
                FrameType::I => {
                    one += 1;
                    assert_eq!(f.oriented_sum() * 1, LatticeVector::phi() * 2);
                }
                FrameType::II(2) => {
                    two += 1;
                    let o = f.oriented();
                    assert_eq!(o[0] + o[1], LatticeVector::phi());
                }
                other => panic!("unexpected C8 type {other}"),
            }
        }
        assert_eq!((one, two), (72, 63));
    }

    #[test]
    fn c3_counts_by_type() {
        let frames = enumerate_frames(3).unwrap();
        assert_eq!(frames.len(), 7560);
        let mut counts = std::collections::HashMap::new();
        for f in &frames {
            *counts.entry(f.classify().unwrap()).or_insert(0) += 1;
        }
        assert_eq!(counts[&FrameType::I], 4032);
        assert_eq!(counts[&FrameType::II(0)], 1260);
        assert_eq!(counts[&FrameType::II(1)], 1890);
        assert_eq!(counts[&FrameType::II(2)], 378);
    }

    #[test]
    fn c1_count() {
        assert_eq!(enumerate_frames(1).unwrap().len(), 1080);
        assert!(enumerate_frames(9).is_err());
    }

    #[test]
    fn dump_round_trip() {
        let f = named::frame_a1();
        assert_eq!(Frame::parse_dump_line(&f.dump_line()).unwrap(), f);
    }
}
