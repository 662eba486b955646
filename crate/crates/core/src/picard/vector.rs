//! The rank-10 lattice with form `diag(-1, 1, ..., 1)`, its affine E8 roots and Kac translations.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lattice::LatticeVector;

/// Exact coefficients over `e0; e1, ..., e9`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PicardVector {
    pub coeffs: [Rational64; 10],
}

fn r(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

fn half() -> Rational64 {
    Rational64::new(1, 2)
}

impl PicardVector {
    pub fn zero() -> Self {
        Self { coeffs: [Rational64::zero(); 10] }
    }

    pub fn from_ints(c: [i64; 10]) -> Self {
        Self { coeffs: c.map(r) }
    }

    /// `e_j`, `j = 0..=9`.
    pub fn e(j: usize) -> Self {
        let mut v = Self::zero();
        v.coeffs[j] = Rational64::one();
        v
    }

    /// The null class `c = 3 e0 - e1 - ... - e9`.
    pub fn c() -> Self {
        Self::from_ints([3, -1, -1, -1, -1, -1, -1, -1, -1, -1])
    }

    /// `d = -e9 - c/2`.
    pub fn d() -> Self {
        -Self::e(9) - Self::c() * half()
    }

    /// Affine simple roots: `alpha_0 = e0 - e1 - e2 - e3`, `alpha_j = e_j - e_{j+1}`.
    pub fn simple_root(j: usize) -> Self {
        match j {
            0 => Self::e(0) - Self::e(1) - Self::e(2) - Self::e(3),
            1..=8 => Self::e(j) - Self::e(j + 1),
            _ => panic!("affine simple roots are indexed 0..=8"),
        }
    }

    /// The orthonormal vector `v_k` of the classical part: `v_j = e_j - (e0 - e9)/2 + c/2`, `v_0 = -v_8`.
    pub fn v(k: usize) -> Self {
        let j = if k == 0 { 8 } else { k };
        let vj = Self::e(j) - (Self::e(0) - Self::e(9)) * half() + Self::c() * half();
        if k == 0 {
            -vj
        } else {
            vj
        }
    }

    /// `sum_k x_k v_k`.
    pub fn embed(a: &LatticeVector) -> Self {
        let q = a.quarters();
        (0..8).fold(Self::zero(), |acc, k| acc + Self::v(k) * Rational64::new(q[k] as i64, 4))
    }

    pub fn ip(&self, other: &Self) -> Rational64 {
        let mut s = -self.coeffs[0] * other.coeffs[0];
        for j in 1..10 {
            s += self.coeffs[j] * other.coeffs[j];
        }
        s
    }

    pub fn norm(&self) -> Rational64 {
        self.ip(self)
    }

    /// `<c, self>`.
    pub fn level(&self) -> Rational64 {
        Self::c().ip(self)
    }

    /// The classical part `sum_k <v_k, self> v_k`, which must lie in `(1/4) Z^8`.
    pub fn classical_part(&self) -> Result<LatticeVector> {
        let mut q = [0i32; 8];
        for (k, qk) in q.iter_mut().enumerate() {
            let x = Self::v(k).ip(self) * r(4);
            if !x.is_integer() {
                return Err(Error::NotQuarterIntegral);
            }
            *qk = *x.numer() as i32;
        }
        Ok(LatticeVector::from_quarters(q))
    }

    pub fn reflect(&self, alpha: &Self) -> Result<Self> {
        let n = alpha.norm();
        if n.is_zero() {
            return Err(Error::NullRoot);
        }
        Ok(*self - *alpha * (r(2) * alpha.ip(self) / n))
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

/// `T_alpha(h) = h + <c,h> alpha - (<alpha,alpha><c,h>/2 + <alpha,h>) c` for `<c, alpha> = 0`.
pub fn kac_translate(alpha: &PicardVector, h: &PicardVector) -> Result<PicardVector> {
    if !alpha.level().is_zero() {
        return Err(Error::NotClassical);
    }
    let ch = h.level();
    Ok(*h + *alpha * ch - PicardVector::c() * (alpha.norm() * ch * half() + alpha.ip(h)))
}

/// For `Lambda` with `<Lambda,Lambda> = 1` and `<c,Lambda> = -1`, the unique `alpha` in the E8 lattice with
/// `Lambda = e9 + alpha + <alpha,alpha> c / 2`; `None` otherwise.
pub fn in_orbit_m(lambda: &PicardVector) -> Option<LatticeVector> {
    if !lambda.is_integral() || lambda.norm() != r(1) || lambda.level() != r(-1) {
        return None;
    }
    let alpha = (*lambda - PicardVector::e(9)).classical_part().ok()?;
    if !alpha.in_p() {
        return None;
    }
    let a = PicardVector::embed(&alpha);
    (PicardVector::e(9) + a + PicardVector::c() * (a.norm() * half()) == *lambda).then_some(alpha)
}

impl Add for PicardVector {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self { coeffs: std::array::from_fn(|j| self.coeffs[j] + o.coeffs[j]) }
    }
}

impl Sub for PicardVector {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self { coeffs: std::array::from_fn(|j| self.coeffs[j] - o.coeffs[j]) }
    }
}

impl Neg for PicardVector {
    type Output = Self;
    fn neg(self) -> Self {
        Self { coeffs: self.coeffs.map(|c| -c) }
    }
}

impl Mul<Rational64> for PicardVector {
    type Output = Self;
    fn mul(self, k: Rational64) -> Self {
        Self { coeffs: self.coeffs.map(|c| c * k) }
    }
}

impl Mul<i64> for PicardVector {
    type Output = Self;
    fn mul(self, k: i64) -> Self {
        self * r(k)
    }
}

impl fmt::Display for PicardVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "({}; {})", parts[0], parts[1..].join(", "))
    }
}

/// Coefficients over `h1, h2, f1, ..., f8` (the eight-point basis), with `<h1,h2> = -1`, `<h_i,h_i> = 0`,
/// `<f_i,f_j> = delta_ij`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct P1P1Vector {
    pub coeffs: [Rational64; 10],
}

impl P1P1Vector {
    pub fn ip(&self, o: &Self) -> Rational64 {
        let (a, b) = (&self.coeffs, &o.coeffs);
        let mut s = -(a[0] * b[1] + a[1] * b[0]);
        for j in 2..10 {
            s += a[j] * b[j];
        }
        s
    }
}

/// `e0 = h1 + h2 - f1`, `e1 = h1 - f1`, `e2 = h2 - f1`, `e_j = f_{j-1}` (`j >= 3`).
pub fn to_p1p1(v: &PicardVector) -> P1P1Vector {
    let l = &v.coeffs;
    let mut c = [Rational64::zero(); 10];
    c[0] = l[0] + l[1];
    c[1] = l[0] + l[2];
    c[2] = -l[0] - l[1] - l[2];
    c[3..10].copy_from_slice(&l[3..10]);
    P1P1Vector { coeffs: c }
}

/// `h1 = e0 - e2`, `h2 = e0 - e1`, `f1 = e0 - e1 - e2`, `f_j = e_{j+1}` (`j >= 2`).
pub fn from_p1p1(v: &P1P1Vector) -> PicardVector {
    let m = &v.coeffs;
    let mut c = [Rational64::zero(); 10];
    c[0] = m[0] + m[1] + m[2];
    c[1] = -m[1] - m[2];
    c[2] = -m[0] - m[2];
    c[3..10].copy_from_slice(&m[3..10]);
    PicardVector { coeffs: c }
}
