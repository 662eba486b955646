//! Root systems, vectors of fixed norm and reflections.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::vector::{vsum, LatticeVector};
use crate::error::{Error, Result};
use crate::scalar::{lit, Real};

/// Simple roots `alpha_0..alpha_7` of E8. The first seven span E7, the orthogonal complement of `phi`.
pub fn simple_roots() -> [LatticeVector; 8] {
    let mut roots = [LatticeVector::ZERO; 8];
    roots[0] = LatticeVector::phi() - vsum(&[0, 1, 2, 3]);
    for j in 1..7 {
        roots[j] = LatticeVector::basis(j) - LatticeVector::basis(j + 1);
    }
    roots[7] = LatticeVector::basis(7) + LatticeVector::basis(0);
    roots
}

/// All vectors of `P` with `<a, a> = norm`.
///
/// Norms 2 and 4 use explicit sign patterns; other even norms fall back to a bounded search.
pub fn enumerate_norm(norm: i64) -> Result<Vec<LatticeVector>> {
    if norm < 0 || norm % 2 != 0 {
        return Err(Error::UnsupportedNorm(norm));
    }
    let mut out = match norm {
        2 => norm_two(),
        4 => norm_four(),
        _ => bounded_search(norm),
    };
    out.sort();
    Ok(out)
}

/// Every vector of `P` of the given norm found by scanning all coordinate choices.
pub fn bounded_search(norm: i64) -> Vec<LatticeVector> {
    let target = 16 * norm;
    let mut out = Vec::new();
    let max = (norm as f64).sqrt().floor() as i32 + 1;
    // integral coordinates, then half-odd ones
    let ints: Vec<i32> = (-max..=max).map(|k| 4 * k).collect();
    let halves: Vec<i32> = (-max..max).map(|k| 4 * k + 2).collect();
    for choices in [ints, halves] {
        let mut buf = [0i32; 8];
        search(&choices, 0, target, &mut buf, &mut out);
    }
    out
}

fn search(choices: &[i32], depth: usize, remaining: i64, buf: &mut [i32; 8], out: &mut Vec<LatticeVector>) {
    if depth == 8 {
        if remaining == 0 {
            let v = LatticeVector::from_quarters(*buf);
            if v.in_p() {
                out.push(v);
            }
        }
        return;
    }
    for &c in choices {
        let sq = (c as i64) * (c as i64);
        if sq <= remaining {
            buf[depth] = c;
            search(choices, depth + 1, remaining - sq, buf, out);
        }
    }
}

fn norm_two() -> Vec<LatticeVector> {
    let mut out = Vec::with_capacity(240);
    for i in 0..8 {
        for j in (i + 1)..8 {
            for si in [1, -1] {
                for sj in [1, -1] {
                    let mut q = [0; 8];
                    q[i] = 4 * si;
                    q[j] = 4 * sj;
                    out.push(LatticeVector::from_quarters(q));
                }
            }
        }
    }
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            out.push(LatticeVector::from_quarters(signed(mask, [2; 8])));
        }
    }
    out
}

fn norm_four() -> Vec<LatticeVector> {
    let mut out = Vec::with_capacity(2160);
    for i in 0..8 {
        for s in [8, -8] {
            let mut q = [0; 8];
            q[i] = s;
            out.push(LatticeVector::from_quarters(q));
        }
    }
    for support in 0u32..256 {
        if support.count_ones() != 4 {
            continue;
        }
        let idx: Vec<usize> = (0..8).filter(|k| support >> k & 1 == 1).collect();
        for signs in 0u32..16 {
            let mut q = [0; 8];
            for (b, &k) in idx.iter().enumerate() {
                q[k] = if signs >> b & 1 == 1 { -4 } else { 4 };
            }
            out.push(LatticeVector::from_quarters(q));
        }
    }
    for i in 0..8 {
        let mut mags = [2; 8];
        mags[i] = 6;
        for mask in 0u32..256 {
            if mask.count_ones() % 2 == 1 {
                out.push(LatticeVector::from_quarters(signed(mask, mags)));
            }
        }
    }
    out
}

fn signed(mask: u32, mags: [i32; 8]) -> [i32; 8] {
    let mut q = mags;
    for (k, x) in q.iter_mut().enumerate() {
        if mask >> k & 1 == 1 {
            *x = -*x;
        }
    }
    q
}

/// Roots of E8 orthogonal to `phi` (the E7 subsystem).
pub fn e7_roots() -> Vec<LatticeVector> {
    norm_two().into_iter().filter(|a| a.phi8() == 0).collect()
}

/// `r_alpha(v) = v - (2<alpha,v>/<alpha,alpha>) alpha`, computed exactly.
pub fn reflect(alpha: &LatticeVector, v: &LatticeVector) -> Result<LatticeVector> {
    let aa = alpha.norm16();
    if aa == 0 {
        return Err(Error::NullRoot);
    }
    let num = 2 * alpha.ip16(v);
    let mut q = v.quarters();
    for (x, a) in q.iter_mut().zip(alpha.quarters()) {
        let t = num * a as i64;
        if t % aa != 0 {
            return Err(Error::NotRepresentable);
        }
        *x -= (t / aa) as i32;
    }
    Ok(LatticeVector::from_quarters(q))
}

/// Reflection of a complex point in a lattice vector.
pub fn reflect_point<T: Real>(alpha: &LatticeVector, x: &[Complex<T>; 8]) -> [Complex<T>; 8] {
    let aa = lit::<T>(alpha.ip(alpha));
    let k = alpha.pair(x) * (lit::<T>(2.0) / aa);
    alpha.shift(x, -k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum WeylGroup {
    E7,
    E8,
}

impl WeylGroup {
    pub fn rank(self) -> usize {
        match self {
            WeylGroup::E7 => 7,
            WeylGroup::E8 => 8,
        }
    }
}

/// A word `s_{g_0} s_{g_1} ... s_{g_k}` in the simple reflections.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylWord {
    pub group: WeylGroup,
    pub generators: Vec<usize>,
}

impl WeylWord {
    pub fn new(group: WeylGroup, generators: Vec<usize>) -> Result<Self> {
        if let Some(&index) = generators.iter().find(|&&g| g >= group.rank()) {
            return Err(Error::Generator { index, rank: group.rank() });
        }
        Ok(Self { group, generators })
    }

    pub fn identity(group: WeylGroup) -> Self {
        Self { group, generators: Vec::new() }
    }

    pub fn inverse(&self) -> Self {
        Self { group: self.group, generators: self.generators.iter().rev().copied().collect() }
    }

    pub fn apply(&self, v: &LatticeVector) -> LatticeVector {
        let roots = simple_roots();
        self.generators
            .iter()
            .rev()
            .fold(*v, |acc, &g| reflect(&roots[g], &acc).expect("simple roots have norm 2"))
    }

    pub fn apply_point<T: Real>(&self, x: &[Complex<T>; 8]) -> [Complex<T>; 8] {
        let roots = simple_roots();
        self.generators.iter().rev().fold(*x, |acc, &g| reflect_point(&roots[g], &acc))
    }
}
