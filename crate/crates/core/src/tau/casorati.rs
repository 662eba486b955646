//! Two-directional Casorati determinants, their gauge factors, and the multiple-integral
//! form of the hypergeometric chain.

use num_complex::Complex;

use super::function::quad_form;
use crate::error::{Error, Result};
use crate::integrals::{balanced_integral, block_reflect, psi_n, Point, QuadConfig};
use crate::lattice::{named, LatticeVector};
use crate::residual::Residual;
use crate::scalar::{binom, e, lit, powi, Real};
use crate::specialfn::{bracket_pm, theta, theta_poch, triple_gamma, EllipticParams};

/// Which type-II(1) frame drives the recursion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Case {
    /// `{a0, a1, a2}`; the kernel is the integral at the block-reflected point.
    FrameA0,
    /// `{a7, a1, a2}` with `a0 + a7 = phi`; the kernel is the integral itself.
    FrameA7,
}

impl Case {
    pub fn frame(self) -> [LatticeVector; 3] {
        match self {
            Case::FrameA0 => named::recursion_triple(),
            Case::FrameA7 => named::mirrored_triple(),
        }
    }
}

/// Determinant by Gaussian elimination with partial pivoting.
pub fn det<T: Real>(mut m: Vec<Vec<Complex<T>>>) -> Complex<T> {
    let n = m.len();
    let mut d = Complex::new(T::one(), T::zero());
    for c in 0..n {
        let piv = (c..n).max_by(|&a, &b| m[a][c].norm().partial_cmp(&m[b][c].norm()).unwrap()).unwrap();
        if m[piv][c].norm() == T::zero() {
            return Complex::new(T::zero(), T::zero());
        }
        if piv != c {
            m.swap(piv, c);
            d = -d;
        }
        d = d * m[c][c];
        for r in (c + 1)..n {
            let f = m[r][c] / m[c][c];
            for k in c..n {
                let sub = f * m[c][k];
                m[r][k] = m[r][k] - sub;
            }
        }
    }
    d
}

/// The kernel `psi` on `H_{varpi + delta}`.
pub fn kernel<T: Real>(y: &Point<T>, case: Case, params: &EllipticParams<T>, quad: &QuadConfig) -> Result<Complex<T>> {
    let t = match case {
        Case::FrameA0 => block_reflect(y, 0x0f),
        Case::FrameA7 => *y,
    };
    balanced_integral(&t, 1, params, quad)
}

/// Shift vector `(1-n) a0 + (n+1-i-j) a1 + (j-i) a2` of entry `(i, j)`, 1-based.
pub fn grid_vector(frame: &[LatticeVector; 3], n: i32, i: i32, j: i32) -> LatticeVector {
    frame[0] * (1 - n) + frame[1] * (n + 1 - i - j) + frame[2] * (j - i)
}

/// `K^(n)(x) = det psi(x + v_ij delta)`, with `kernel` on `H_{varpi + delta}`.
pub fn casorati_k_with<T: Real, F>(n: usize, x: &Point<T>, frame: &[LatticeVector; 3], params: &EllipticParams<T>, kernel: F) -> Result<Complex<T>>
where
    F: Fn(&Point<T>) -> Result<Complex<T>>,
{
    let ni = n as i32;
    let mut m = vec![vec![Complex::new(T::zero(), T::zero()); n]; n];
    for i in 1..=ni {
        for j in 1..=ni {
            let v = grid_vector(frame, ni, i, j);
            m[(i - 1) as usize][(j - 1) as usize] = kernel(&v.shift(x, params.delta))?;
        }
    }
    Ok(det(m))
}

pub fn casorati_k<T: Real>(n: usize, x: &Point<T>, case: Case, params: &EllipticParams<T>, quad: &QuadConfig) -> Result<Complex<T>> {
    casorati_k_with(n, x, &case.frame(), params, |y| kernel(y, case, params, quad))
}

/// The additive parameters `t` entering the d-factor.
fn d_parameters<T: Real>(n: usize, x: &Point<T>, case: Case, params: &EllipticParams<T>) -> Point<T> {
    match case {
        Case::FrameA0 => {
            let (lo, hi): (Complex<T>, Complex<T>) = (x[..4].iter().sum(), x[4..].iter().sum());
            let c = params.varpi + params.delta;
            std::array::from_fn(|k| x[k] + (c - if k < 4 { lo } else { hi }) * lit::<T>(0.5))
        }
        Case::FrameA7 => x.map(|a| a + params.delta * lit::<T>((1.0 - n as f64) / 2.0)),
    }
}

/// `d^(n) = q^{2 C(n,3)} (t2 t3)^{C(n,2)} prod_k theta(t0 (q^{k-1} t3)^{+-1}; p; q)_{n-k} theta(t1 (q^{k-1} t2)^{+-1}; p; q)_{n-k}`.
pub fn dfactor_d<T: Real>(n: usize, x: &Point<T>, case: Case, params: &EllipticParams<T>) -> Result<Complex<T>> {
    let t = d_parameters(n, x, case, params);
    let ni = n as i64;
    let (p, q, tol) = (params.p, params.q, params.trunc_tol);
    let mut acc = powi(q, 2 * binom(ni, 3)) * e((t[2] + t[3]) * lit::<T>(binom(ni, 2) as f64));
    for k in 1..=ni {
        let qk = params.delta * lit::<T>((k - 1) as f64);
        for (a, b) in [(t[0], t[3]), (t[1], t[2])] {
            acc = acc * theta_poch(e(a + b + qk), p, q, ni - k, tol)? * theta_poch(e(a - b - qk), p, q, ni - k, tol)?;
        }
    }
    Ok(acc)
}

/// `prod Gamma(q^{m_ij} u_i u_j; p, q, q)` with `m_ij = 1` inside the blocks (case A0) and `1 - n` otherwise.
pub fn gauge_gamma<T: Real>(n: usize, x: &Point<T>, case: Case, params: &EllipticParams<T>) -> Result<Complex<T>> {
    let mut acc = Complex::new(T::one(), T::zero());
    for i in 0..8 {
        for j in (i + 1)..8 {
            let same_block = (i < 4) == (j < 4);
            let m = if case == Case::FrameA0 && same_block { 1.0 } else { 1.0 - n as f64 };
            let z = e(x[i] + x[j] + params.delta * lit::<T>(m));
            acc = acc * triple_gamma(z, params.p, params.q, params.q, params.trunc_tol)?;
        }
    }
    Ok(acc)
}

/// `p^{C(n,2)} e(-n Q(x))`.
pub fn level_prefactor<T: Real>(n: usize, x: &Point<T>, params: &EllipticParams<T>) -> Complex<T> {
    powi(params.p, binom(n as i64, 2)) * e(-quad_form(x, params) * lit::<T>(n as f64))
}

/// The gauge factor `g^(n) = p^{C(n,2)} e(-n Q) G^(n) / d^(n)`.
pub fn gauge_g<T: Real>(n: usize, x: &Point<T>, case: Case, params: &EllipticParams<T>) -> Result<Complex<T>> {
    let d = dfactor_d(n, x, case, params)?;
    if d.norm() == T::zero() {
        return Err(Error::VanishingBracket { what: "d-factor".into(), modulus: 0.0 });
    }
    Ok(level_prefactor(n, x, params) * gauge_gamma(n, x, case, params)? / d)
}

/// `tau^(n)(x) = g^(n)(x) K^(n)(x)`.
pub fn tau_n_det<T: Real>(n: usize, x: &Point<T>, case: Case, params: &EllipticParams<T>, quad: &QuadConfig) -> Result<Complex<T>> {
    Ok(gauge_g(n, x, case, params)? * casorati_k(n, x, case, params, quad)?)
}

/// Parameter choice for the multiple-integral form of `tau^(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    /// `Psi_n(q^{(1-n)/2} u)`.
    Direct,
    /// `I_n` at the block-rescaled parameters.
    Tilde,
    /// `I_n(sqrt(pq)/u)`.
    Hat,
}

pub fn tau_n_int<T: Real>(n: usize, x: &Point<T>, route: Route, params: &EllipticParams<T>, quad: &QuadConfig) -> Result<Complex<T>> {
    let pre = level_prefactor(n, x, params);
    let half = lit::<T>(0.5);
    match route {
        Route::Direct => {
            let t = x.map(|a| a + params.delta * lit::<T>((1.0 - n as f64) / 2.0));
            Ok(pre * psi_n(&t, n, params, quad)?)
        }
        Route::Tilde => {
            let t = d_parameters(n, x, Case::FrameA0, params);
            Ok(pre * gauge_gamma(n, x, Case::FrameA0, params)? * balanced_integral(&t, n, params, quad)?)
        }
        Route::Hat => {
            let c = (params.varpi + params.delta) * half;
            let t = x.map(|a| c - a);
            let mut g = Complex::new(T::one(), T::zero());
            for i in 0..8 {
                for j in (i + 1)..8 {
                    g = g * triple_gamma(e(x[i] + x[j] + params.delta), params.p, params.q, params.q, params.trunc_tol)?;
                }
            }
            Ok(pre * g * balanced_integral(&t, n, params, quad)?)
        }
    }
}

/// Defect of `g^(n-1)(x - a0 d) g^(n+1)(x + a0 d) / g^(n)(x +- a1 d) = [<a0 +- a2, x>] / [<a1 +- a2, x>]`
/// for `x` on `H_{varpi + n delta}`.
pub fn gauge_recurrence_residual<T: Real>(n: usize, x: &Point<T>, case: Case, params: &EllipticParams<T>) -> Result<Residual> {
    let [a0, a1, a2] = case.frame();
    let d = params.delta;
    let lhs = gauge_g(n - 1, &a0.shift(x, -d), case, params)? * gauge_g(n + 1, &a0.shift(x, d), case, params)?
        * bracket_pm(a1.pair(x), a2.pair(x), params);
    let rhs = gauge_g(n, &a1.shift(x, d), case, params)? * gauge_g(n, &a1.shift(x, -d), case, params)?
        * bracket_pm(a0.pair(x), a2.pair(x), params);
    Ok(Residual::between(lhs, rhs))
}

/// Defect of `g^(n)(x +- a1 d) [<a0 +- a2, x>] = g^(n)(x +- a2 d) [<a0 +- a1, x>]`.
pub fn gauge_ratio_residual<T: Real>(n: usize, x: &Point<T>, case: Case, params: &EllipticParams<T>) -> Result<Residual> {
    let [a0, a1, a2] = case.frame();
    let d = params.delta;
    let g = |v: LatticeVector, s: Complex<T>| gauge_g(n, &v.shift(x, s), case, params);
    let lhs = g(a1, d)? * g(a1, -d)? * bracket_pm(a0.pair(x), a2.pair(x), params);
    let rhs = g(a2, d)? * g(a2, -d)? * bracket_pm(a0.pair(x), a1.pair(x), params);
    Ok(Residual::between(lhs, rhs))
}

/// Defect of `K^(n-1)(x - a0 d) K^(n+1)(x + a0 d) = K^(n)(x +- a1 d) - K^(n)(x +- a2 d)` on `H_{varpi + n delta}`.
pub fn casorati_recurrence_residual<T: Real>(
    n: usize,
    x: &Point<T>,
    case: Case,
    params: &EllipticParams<T>,
    quad: &QuadConfig,
) -> Result<Residual> {
    let [a0, a1, a2] = case.frame();
    let d = params.delta;
    let k = |m: usize, y: &Point<T>| casorati_k(m, y, case, params, quad);
    let lhs = k(n - 1, &a0.shift(x, -d))? * k(n + 1, &a0.shift(x, d))?;
    let r1 = k(n, &a1.shift(x, d))? * k(n, &a1.shift(x, -d))?;
    let r2 = k(n, &a2.shift(x, d))? * k(n, &a2.shift(x, -d))?;
    Ok(Residual::from_terms(&[lhs, -r1, r2], super::hirota::DEGENERATE_FLOOR))
}

/// The elliptic theta determinant evaluation: relative defect of
/// `det(theta(a z_i^{+-1}; p; q)_{j-1} theta(b z_i^{+-1}; p; q)_{n-j})
///  = q^{C(n,3)} a^{C(n,2)} prod_k theta(b (q^{k-1} a)^{+-1}; p; q)_{n-k} prod_{i<j} z_i^{-1} theta(z_i z_j^{+-1}; p)`.
pub fn theta_det_residual<T: Real>(a: Complex<T>, b: Complex<T>, z: &[Complex<T>], p: Complex<T>, q: Complex<T>, tol: T) -> Result<Residual> {
    let n = z.len();
    let ni = n as i64;
    let pm = |c: Complex<T>, w: Complex<T>, k: i64| -> Result<Complex<T>> { Ok(theta_poch(c * w, p, q, k, tol)? * theta_poch(c / w, p, q, k, tol)?) };
    let mut m = vec![vec![Complex::new(T::zero(), T::zero()); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let j1 = j as i64 + 1;
            *cell = pm(a, z[i], j1 - 1)? * pm(b, z[i], ni - j1)?;
        }
    }
    let lhs = det(m);
    let mut rhs = powi(q, binom(ni, 3)) * powi(a, binom(ni, 2));
    for k in 1..=ni {
        rhs = rhs * pm(b, powi(q, k - 1) * a, ni - k)?;
    }
    for i in 0..n {
        for j in (i + 1)..n {
            rhs = rhs * theta(z[i] * z[j], p, tol)? * theta(z[i] / z[j], p, tol)? / z[i];
        }
    }
    Ok(Residual::between(lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::integrals::check_balanced;
    use crate::sampling::Sampler;
    use crate::specialfn::Params;

    fn setup() -> (EllipticParams<f64>, QuadConfig) {
        (Params::real(0.05, 0.3, 0.12).unwrap(), QuadConfig::default())
    }

    fn point(s: &mut Sampler, params: &EllipticParams<f64>, n: usize) -> Point<f64> {
        s.hyperplane_point(params.varpi + params.delta * n as f64, 0.4, 0.05)
    }

    #[test]
    fn determinant_of_small_matrices() {
        let c = |a: f64| Complex::new(a, 0.0);
        assert_eq!(det(vec![vec![c(2.0)]]), c(2.0));
        let d = det(vec![vec![c(0.0), c(1.0), c(2.0)], vec![c(1.0), c(0.0), c(3.0)], vec![c(4.0), c(-3.0), c(8.0)]]);
        assert!((d - c(-2.0)).norm() < 1e-14);
        assert_eq!(det(vec![vec![c(1.0), c(2.0)], vec![c(2.0), c(4.0)]]), c(0.0));
    }

    #[test]
    fn grid_shifts_stay_on_the_kernel_level() {
        for case in [Case::FrameA0, Case::FrameA7] {
            for n in 1..=3 {
                for i in 1..=n {
                    for j in 1..=n {
                        // <phi, v_ij> = 1 - n for both frames
                        assert_eq!(grid_vector(&case.frame(), n, i, j).phi8(), 8 * (1 - n as i64));
                    }
                }
            }
        }
    }

    #[test]
    fn mirrored_kernel_shifts_are_balanced() {
        // ψ_ij for {a7, a1, a2} shifts the first four parameters by (n-i, n-j, j-1, i-1) delta.
        let (params, _) = setup();
        let mut s = Sampler::new(31);
        let n = 2usize;
        let x = point(&mut s, &params, n);
        let t = x.map(|a| a + params.delta * ((1.0 - n as f64) / 2.0));
        let shifted = |sh: [i32; 4]| -> Point<f64> {
            std::array::from_fn(|k| if k < 4 { t[k] + params.delta * sh[k] as f64 } else { t[k] })
        };
        let ni = n as i32;
        for i in 1..=ni {
            for j in 1..=ni {
                assert!(check_balanced(&shifted([ni - i, ni - j, j - 1, i - 1]), 1, &params).is_ok());
            }
        }
        // the exponents 1-j, 1-i instead leave the balancing hyperplane off the anti-diagonal
        assert!(check_balanced(&shifted([ni - 1, ni - 1, 0, 0]), 1, &params).is_ok());
        assert!(check_balanced(&shifted([ni - 1, ni - 2, -1, 0]), 1, &params).is_err());
    }

    #[test]
    fn mirrored_d_factor_matches_its_product_form() {
        // q^{-C(n+1,3)} (u2 u3)^{C(n,2)} prod theta(q^{1-k} u0 u3; p; q)_{k-1} theta(q^{k-n} u0/u3; p; q)_{k-1} (and u1, u2)
        let (params, _) = setup();
        let (p, q, tol) = (params.p, params.q, params.trunc_tol);
        let mut s = Sampler::new(2);
        for n in 1..=3usize {
            let x = point(&mut s, &params, n);
            let u = x.map(e);
            let ni = n as i64;
            let mut want = powi(q, -binom(ni + 1, 3)) * powi(u[2] * u[3], binom(ni, 2));
            for k in 1..=ni {
                for (a, b) in [(u[0], u[3]), (u[1], u[2])] {
                    want *= theta_poch(powi(q, 1 - k) * a * b, p, q, k - 1, tol).unwrap()
                        * theta_poch(powi(q, k - ni) * a / b, p, q, k - 1, tol).unwrap();
                }
            }
            let got = dfactor_d(n, &x, Case::FrameA7, &params).unwrap();
            assert!((got - want).norm() / want.norm() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn determinant_and_integral_routes_agree() {
        let (params, quad) = setup();
        let mut s = Sampler::new(5);
        for n in 0..=2usize {
            let x = point(&mut s, &params, n);
            let direct = tau_n_int(n, &x, Route::Direct, &params, &quad).unwrap();
            for case in [Case::FrameA0, Case::FrameA7] {
                let d = tau_n_det(n, &x, case, &params, &quad).unwrap();
                assert!((d - direct).norm() / direct.norm() < 1e-10, "n={n} {case:?}");
            }
            for route in [Route::Tilde, Route::Hat] {
                let v = tau_n_int(n, &x, route, &params, &quad).unwrap();
                assert!((v - direct).norm() / direct.norm() < 1e-10, "n={n} {route:?}");
            }
        }
    }

    #[test]
    fn first_d_factor_has_no_power_of_q_at_level_two() {
        // the power is q^{2 C(n,3)}; q^{2 C(3,2)} = q^6 would put the determinant off by q^-6
        let (params, quad) = setup();
        let mut s = Sampler::new(6);
        let x = point(&mut s, &params, 2);
        let direct = tau_n_int(2, &x, Route::Direct, &params, &quad).unwrap();
        let det = tau_n_det(2, &x, Case::FrameA0, &params, &quad).unwrap();
        let q6 = powi(params.q, 6);
        assert!((det - direct).norm() / direct.norm() < 1e-10);
        assert!((det / q6 - direct).norm() / direct.norm() > 1e-3);
    }

    #[test]
    fn gauge_and_casorati_recurrences() {
        let (params, quad) = setup();
        let mut s = Sampler::new(8);
        for n in 1..=2usize {
            let x = point(&mut s, &params, n);
            for case in [Case::FrameA0, Case::FrameA7] {
                assert!(gauge_recurrence_residual(n, &x, case, &params).unwrap().relative < 1e-10);
                assert!(gauge_ratio_residual(n, &x, case, &params).unwrap().relative < 1e-10);
                assert!(casorati_recurrence_residual(n, &x, case, &params, &quad).unwrap().relative < 1e-10);
            }
        }
    }

    #[test]
    fn theta_determinant_evaluation() {
        let mut s = Sampler::new(3);
        let (p, q) = (Complex::new(0.2, 0.0), Complex::new(0.3, 0.1));
        for n in [1usize, 2, 3, 4] {
            let z: Vec<Complex<f64>> = (0..n).map(|_| e(s.complex_box(0.8, 0.2))).collect();
            let a = e(s.complex_box::<f64>(0.5, 0.1));
            let b = e(s.complex_box::<f64>(0.5, 0.1));
            assert!(theta_det_residual(a, b, &z, p, q, 1e-18).unwrap().relative < 1e-10, "n={n}");
        }
    }
}
