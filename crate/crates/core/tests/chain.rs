//! The hypergeometric chain: initial-data conditions, the recursion, and its invariances.

mod common;

use common::{chain_params, generic_point, level, quad, random_frame, rel};
use e8tau::integrals::Point;
use e8tau::lattice::{named, FrameType, LatticeVector, WeylGroup, WeylWord};
use e8tau::sampling::Sampler;
use e8tau::tau::*;
use e8tau::Residual;
use num_complex::Complex64 as C;

#[test]
fn initial_levels_satisfy_their_conditions() {
    let params = chain_params();
    let chain = hypergeometric_chain(params, quad(), 2).unwrap();
    let mut s = Sampler::new(1);
    for _ in 0..4 {
        // level-0 ratio condition on type-II(1) frames
        let [a0, a1, a2] = random_frame(&mut s, FrameType::II(1));
        let x = generic_point(&mut s, level(&params, params.varpi, 0.0), &[a0, a1, a2], &params);
        let d = params.delta;
        let t0 = |y: &Point<f64>| chain.eval_level(0, y).unwrap();
        let lhs = t0(&a1.shift(&x, d)) * t0(&a1.shift(&x, -d)) * e8tau::specialfn::bracket_pm(a0.pair(&x), a2.pair(&x), &params);
        let rhs = t0(&a2.shift(&x, d)) * t0(&a2.shift(&x, -d)) * e8tau::specialfn::bracket_pm(a0.pair(&x), a1.pair(&x), &params);
        assert!(Residual::between(lhs, rhs).relative < 1e-9);
        // bilinear relation between levels 0 and 1 on type-I frames
        let f = random_frame(&mut s, FrameType::I);
        let x = generic_point(&mut s, level(&params, params.varpi, 0.5), &f, &params);
        assert!(hirota_residual(&chain, &f, &x, &params).unwrap().relative < 1e-9);
    }
}

#[test]
fn recursion_is_independent_of_the_frame() {
    let params = chain_params();
    let chain = hypergeometric_chain(params, quad(), 2).unwrap();
    let mut s = Sampler::new(5);
    let x = s.hyperplane_point(level(&params, params.varpi, 2.0), 0.4, 0.05);
    let base = chain.eval_level(2, &x).unwrap();
    for i in 2..8 {
        for j in (i + 1)..8 {
            let v = toda_step_explicit(|y: &Point<f64>| chain.eval_level(0, y), |y: &Point<f64>| chain.eval_level(1, y), i, j, &x, &params)
                .unwrap();
            assert!(rel(v, base) < 1e-8, "({i},{j})");
        }
    }
    let mirrored = chain.with_frame(named::mirrored_triple());
    assert!(rel(mirrored.eval_level(2, &x).unwrap(), base) < 1e-8);
}

#[test]
fn chain_satisfies_the_bilinear_equations_at_the_next_levels() {
    let params = chain_params();
    let chain = hypergeometric_chain(params, quad(), 2).unwrap();
    let mut s = Sampler::new(7);
    for (ty, m) in [(FrameType::II(2), 1.0), (FrameType::I, 1.5), (FrameType::II(0), 2.0), (FrameType::II(0), 1.0)] {
        for _ in 0..2 {
            let f = random_frame(&mut s, ty);
            let x = generic_point(&mut s, level(&params, params.varpi, m), &f, &params);
            let r = hirota_residual(&chain, &f, &x, &params).unwrap().relative;
            assert!(r < 1e-9, "{ty:?} at {m}: {r}");
        }
    }
}

#[test]
fn chain_agrees_with_the_closed_forms() {
    let params = chain_params();
    let q = quad();
    let chain = hypergeometric_chain(params, q, 2).unwrap();
    let mut s = Sampler::new(2);
    for n in 0..=2usize {
        let x = s.hyperplane_point(level(&params, params.varpi, n as f64), 0.4, 0.05);
        let c = chain.eval_level(n as i64, &x).unwrap();
        assert!(rel(tau_n_det(n, &x, Case::FrameA0, &params, &q).unwrap(), c) < 1e-10);
        assert!(rel(tau_n_det(n, &x, Case::FrameA7, &params, &q).unwrap(), c) < 1e-10);
        assert!(rel(tau_n_int(n, &x, Route::Direct, &params, &q).unwrap(), c) < 1e-10);
    }
}

#[test]
fn chain_is_invariant_under_the_stabiliser_of_phi() {
    let params = chain_params();
    let chain = hypergeometric_chain(params, quad(), 2).unwrap();
    let mut s = Sampler::new(13);
    for n in 0..=2i64 {
        let x = s.hyperplane_point(level(&params, params.varpi, n as f64), 0.4, 0.05);
        let w = WeylWord::new(WeylGroup::E7, (0..6).map(|_| s.index(7)).collect()).unwrap();
        let a = chain.eval_level(n, &x).unwrap();
        assert!(rel(chain.eval_level(n, &w.apply_point(&x)).unwrap(), a) < 1e-10, "n={n}");
    }
}

#[test]
fn pair_gamma_product_telescopes() {
    let params = chain_params();
    let mut s = Sampler::new(17);
    let phi = LatticeVector::phi();
    let d = params.delta;
    for _ in 0..5 {
        let x: Point<f64> = std::array::from_fn(|_| s.complex_box(0.3, 0.05));
        for k in 0..8 {
            let vk = LatticeVector::basis(k);
            let f = |y: &Point<f64>| pair_gamma_f(y, &params).unwrap();
            let lhs = f(&(phi - vk).shift(&x, d)) * f(&vk.shift(&x, d));
            let rhs = f(&phi.shift(&x, d)) * f(&x);
            assert!(rel(lhs, rhs) < 1e-10, "k={k}");
        }
    }
}

#[test]
fn other_sign_variants_solve_the_same_equations() {
    let params = chain_params();
    let q = quad();
    let mut s = Sampler::new(9);
    for v in Variant::ALL {
        let tau = VariantTau::new(v, params, q, 2);
        let (sign, base) = match v {
            Variant::PP => (1.0, params.varpi),
            Variant::PM => (1.0, -params.varpi),
            Variant::MP => (-1.0, params.varpi),
            Variant::MM => (-1.0, -params.varpi),
        };
        for n in 0..=2usize {
            let x = s.hyperplane_point((base + params.delta * n as f64) * sign, 0.4, 0.05);
            let a = psi_variant(v, n, &x, false, &params, &q).unwrap();
            let b = psi_variant(v, n, &x, true, &params, &q).unwrap();
            assert!(rel(b, a) < 1e-10, "{v:?} n={n}");
        }
        for (ty, m) in [(FrameType::I, 0.5), (FrameType::II(2), 1.0), (FrameType::II(0), 1.0)] {
            let f = random_frame(&mut s, ty).map(|a| a * sign as i32);
            let x = generic_point(&mut s, (base + params.delta * m) * sign, &f, &params);
            assert!(hirota_residual(&tau, &f, &x, &params).unwrap().relative < 1e-9, "{v:?} {ty:?}");
        }
        assert_eq!(tau.eval(&s.hyperplane_point((base - params.delta) * sign, 0.4, 0.05)).unwrap(), C::new(0.0, 0.0));
    }
}
