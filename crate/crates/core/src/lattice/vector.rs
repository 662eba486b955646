//! Exact vectors of the quarter-integral lattice `(1/4) Z^8`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{lit, Real};

/// A vector of `V = C^8` with quarter-integral coordinates, stored as numerators over 4.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticeVector {
    quarters: [i32; 8],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    P,
    HalfPOnly,
    Neither,
}

impl LatticeVector {
    pub const ZERO: LatticeVector = LatticeVector { quarters: [0; 8] };

    pub const fn from_quarters(quarters: [i32; 8]) -> Self {
        Self { quarters }
    }

    pub fn from_halves(halves: [i32; 8]) -> Self {
        Self { quarters: halves.map(|h| 2 * h) }
    }

    pub fn from_ints(ints: [i32; 8]) -> Self {
        Self { quarters: ints.map(|h| 4 * h) }
    }

    /// Builds a vector from real coordinates, which must be multiples of 1/4.
    pub fn from_f64(coords: [f64; 8]) -> Result<Self> {
        let mut quarters = [0; 8];
        for (q, c) in quarters.iter_mut().zip(coords) {
            let scaled = c * 4.0;
            if (scaled - scaled.round()).abs() > 1e-9 {
                return Err(Error::NotQuarterIntegral);
            }
            *q = scaled.round() as i32;
        }
        Ok(Self { quarters })
    }

    /// The orthonormal basis vector `v_i`.
    pub fn basis(i: usize) -> Self {
        let mut quarters = [0; 8];
        quarters[i] = 4;
        Self { quarters }
    }

    /// `phi = (v_0 + ... + v_7) / 2`.
    pub const fn phi() -> Self {
        Self { quarters: [2; 8] }
    }

    pub fn quarters(&self) -> [i32; 8] {
        self.quarters
    }

    pub fn coord(&self, i: usize) -> f64 {
        self.quarters[i] as f64 / 4.0
    }

    pub fn to_f64(&self) -> [f64; 8] {
        self.quarters.map(|q| q as f64 / 4.0)
    }

    pub fn is_zero(&self) -> bool {
        self.quarters == [0; 8]
    }

    /// Sixteen times the inner product.
    pub fn ip16(&self, other: &Self) -> i64 {
        self.quarters.iter().zip(other.quarters.iter()).map(|(&a, &b)| a as i64 * b as i64).sum()
    }

    pub fn ip(&self, other: &Self) -> f64 {
        self.ip16(other) as f64 / 16.0
    }

    pub fn norm16(&self) -> i64 {
        self.ip16(self)
    }

    /// Eight times `<phi, self>`.
    pub fn phi8(&self) -> i64 {
        self.quarters.iter().map(|&q| q as i64).sum()
    }

    /// `<phi, self>` as a float.
    pub fn phi_value(&self) -> f64 {
        self.phi8() as f64 / 8.0
    }

    pub fn membership(&self) -> Membership {
        if in_p(&self.quarters) {
            return Membership::P;
        }
        let doubled = self.quarters.map(|q| 2 * q);
        if in_p(&doubled) {
            Membership::HalfPOnly
        } else {
            Membership::Neither
        }
    }

    pub fn in_p(&self) -> bool {
        in_p(&self.quarters)
    }

    pub fn in_half_p(&self) -> bool {
        self.membership() != Membership::Neither
    }

    /// Exact division by two, when the result stays quarter-integral.
    pub fn halve(&self) -> Option<Self> {
        if self.quarters.iter().all(|q| q % 2 == 0) {
            Some(Self { quarters: self.quarters.map(|q| q / 2) })
        } else {
            None
        }
    }

    /// Sign-normalised representative: the lexicographically larger of `self` and `-self`.
    pub fn sign_normalized(&self) -> Self {
        let neg = -*self;
        if neg > *self {
            neg
        } else {
            *self
        }
    }

    /// Pairing `<self, x>` with a complex point.
    pub fn pair<T: Real>(&self, x: &[Complex<T>; 8]) -> Complex<T> {
        let quarter = lit::<T>(0.25);
        let mut acc = Complex::new(T::zero(), T::zero());
        for (q, xi) in self.quarters.iter().zip(x.iter()) {
            if *q != 0 {
                acc = acc + *xi * (lit::<T>(*q as f64) * quarter);
            }
        }
        acc
    }

    /// `x + s * self` for a complex scalar `s`.
    pub fn shift<T: Real>(&self, x: &[Complex<T>; 8], s: Complex<T>) -> [Complex<T>; 8] {
        let quarter = lit::<T>(0.25);
        let mut out = *x;
        for (o, q) in out.iter_mut().zip(self.quarters.iter()) {
            if *q != 0 {
                *o = *o + s * (lit::<T>(*q as f64) * quarter);
            }
        }
        out
    }

    /// Parses 8 comma-separated quarter numerators.
    pub fn parse_quarters(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 8 {
            return Err(Error::Invalid(format!("expected 8 coordinates, got {}", parts.len())));
        }
        let mut quarters = [0; 8];
        for (q, p) in quarters.iter_mut().zip(parts) {
            *q = p.parse().map_err(|_| Error::Invalid(format!("bad coordinate `{p}`")))?;
        }
        Ok(Self { quarters })
    }
}

fn in_p(q: &[i32; 8]) -> bool {
    let all_int = q.iter().all(|x| x.rem_euclid(4) == 0);
    let all_half = q.iter().all(|x| x.rem_euclid(4) == 2);
    let sum: i64 = q.iter().map(|&x| x as i64).sum();
    (all_int || all_half) && sum.rem_euclid(8) == 0
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.quarters.iter().map(|q| q.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]/4", self)
    }
}

impl Add for LatticeVector {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let mut quarters = self.quarters;
        for (a, b) in quarters.iter_mut().zip(o.quarters) {
            *a += b;
        }
        Self { quarters }
    }
}

impl Sub for LatticeVector {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for LatticeVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self { quarters: self.quarters.map(|q| -q) }
    }
}

impl Mul<i32> for LatticeVector {
    type Output = Self;
    fn mul(self, k: i32) -> Self {
        Self { quarters: self.quarters.map(|q| q * k) }
    }
}

/// `v_i + v_j + ...` for the given indices.
pub fn vsum(indices: &[usize]) -> LatticeVector {
    indices.iter().fold(LatticeVector::ZERO, |acc, &i| acc + LatticeVector::basis(i))
}
