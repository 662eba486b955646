use std::collections::HashMap;
use std::sync::Arc;

use num_complex::Complex64 as C;

use super::{Check, Identity, SuiteConfig, SuiteName};
use crate::error::{Error, Result};
use crate::integrals::{
    bailey_residual, contiguity_residual, in_transform_residual, terminating_eval, terminating_sample, BaileyKind, Point,
    Termination,
};
use crate::lattice::{
    c8_frames, enumerate_frames, enumerate_norm, named, weyl_orbit, Frame, FrameType, LatticeVector, WeylGroup, WeylWord,
};
use crate::picard::{
    coords_back, coords_forward, frame_form_agreement, gamma_point, hirota39_residual, kac_translate, PicardVector,
};
use crate::residual::Residual;
use crate::sampling::Sampler;
use crate::scalar::e;
use crate::specialfn::{bracket_pm, elliptic_gamma, theta, three_term_residual, EllipticParams};
use crate::tau::{
    generic_point, hirota_residual, hypergeometric_chain, tau_n_det, tau_n_int, toda_step_explicit, CanonicalTau, Case,
    Domain, ExpGauge, FnTau, PeriodTranslated, Route, Tau, TauChain, Variant, VariantTau, WeylTransformed,
};

pub(super) fn run(name: SuiteName, cfg: &SuiteConfig) -> Result<Vec<Check>> {
    match name {
        SuiteName::Counts => Ok(counts()),
        SuiteName::Specialfn => specialfn(cfg),
        SuiteName::Hirota => hirota(cfg),
        SuiteName::Bailey => bailey(cfg),
        SuiteName::Chain => chain(cfg),
        SuiteName::Picard => picard(cfg),
        SuiteName::All => Err(Error::Invalid("`all` is not a single part".into())),
    }
}

/// Independent, reproducible stream per check.
fn sampler(cfg: &SuiteConfig, salt: u64) -> Sampler {
    Sampler::new(cfg.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn counts() -> Vec<Check> {
    let mut out = vec![
        Check::count("roots", "norm-2 vectors of the E8 lattice", enumerate_norm(2).map_or(0, |v| v.len() as u64), 240),
        Check::count("norm4", "norm-4 vectors of the E8 lattice", enumerate_norm(4).map_or(0, |v| v.len() as u64), 2160),
        Check::count("c8_frames", "C8-frames", c8_frames().len() as u64, 135),
    ];
    let c3 = enumerate_frames(3).unwrap_or_default();
    out.push(Check::count("c3_frames", "C3-frames, one bilinear equation each", c3.len() as u64, 7560));
    let tally = |frames: &[Frame]| {
        let mut m: HashMap<Option<FrameType>, u64> = HashMap::new();
        for f in frames {
            *m.entry(f.classify().ok()).or_default() += 1;
        }
        m
    };
    let c8 = tally(c8_frames());
    out.push(Check::count("c8_type_i", "C8-frames of type I", c8.get(&Some(FrameType::I)).copied().unwrap_or(0), 72));
    out.push(Check::count("c8_type_ii", "C8-frames of type II", c8.get(&Some(FrameType::II(2))).copied().unwrap_or(0), 63));
    let c3t = tally(&c3);
    for (ty, want) in [(FrameType::I, 4032), (FrameType::II(0), 1260), (FrameType::II(1), 1890), (FrameType::II(2), 378)] {
        let id = format!("c3_type_{}", ty.to_string().to_lowercase());
        out.push(Check::count(&id, &format!("C3-frames of type {ty}"), c3t.get(&Some(ty)).copied().unwrap_or(0), want));
    }
    for ((lvl, rep), want) in named::e7_orbit_representatives().into_iter().zip([126u64, 576, 756, 576, 126]) {
        let id = format!("e7_orbit_level_{lvl}");
        out.push(Check::count(&id, "W(E7)-orbit of norm-4 vectors by phi-level", weyl_orbit(&rep, WeylGroup::E7).len() as u64, want));
    }
    out
}

fn specialfn(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let tol = &cfg.tolerances;
    let base = cfg.params()?;
    let mut s = sampler(cfg, 1);
    let three = (0..cfg.trials.three_term).map(|_| {
        let modulus = s.uniform(0.02, 0.5);
        let arg = s.uniform(-std::f64::consts::PI, std::f64::consts::PI);
        let params = EllipticParams::new(C::from_polar(modulus, arg), base.q, base.r)?;
        let mut z = || s.complex_box::<f64>(1.0, 0.3);
        Ok(three_term_residual(z(), z(), z(), z(), &params).relative)
    });
    let mut out = vec![Check::worst("three_term", "three-term relation of the bracket", tol.three_term, three.collect::<Vec<_>>())];

    let mut s = sampler(cfg, 2);
    let shift = (0..20).map(|_| {
        let z = e(s.complex_box::<f64>(0.5, 0.1));
        let lhs = elliptic_gamma(base.q * z, base.p, base.q, base.trunc_tol)?;
        let rhs = theta(z, base.p, base.trunc_tol)? * elliptic_gamma(z, base.p, base.q, base.trunc_tol)?;
        Ok(Residual::between(lhs, rhs).relative)
    });
    out.push(Check::worst("gamma_q_shift", "q-difference equation of the elliptic gamma function", tol.three_term, shift.collect::<Vec<_>>()));

    for (n, t) in [(2usize, tol.theta_det_2), (3, tol.theta_det_3)] {
        let mut s = sampler(cfg, 10 + n as u64);
        let draws = (0..cfg.trials.theta_det).map(|_| {
            let z: Vec<C> = (0..n).map(|_| e(s.complex_box(0.8, 0.2))).collect();
            let a = e(s.complex_box::<f64>(0.5, 0.1));
            let b = e(s.complex_box::<f64>(0.5, 0.1));
            Ok(crate::tau::theta_det_residual(a, b, &z, base.p, base.q, base.trunc_tol)?.relative)
        });
        out.push(Check::worst(&format!("theta_det_n{n}"), "elliptic determinant evaluation", t, draws.collect::<Vec<_>>()));
    }
    Ok(out)
}

/// `[<x,x>/(2 delta) + c] + 1`, which solves nothing.
pub fn broken_tau(params: EllipticParams<f64>) -> impl Tau<f64> {
    let canon = CanonicalTau::new(params, C::new(0.1, 0.05));
    FnTau { f: move |x: &Point<f64>| Ok(canon.eval(x)? + C::new(1.0, 0.0)), domain: Domain::All }
}

fn box_point(s: &mut Sampler) -> Point<f64> {
    std::array::from_fn(|_| s.complex_box(0.3, 0.1))
}

fn hirota(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let params = cfg.params()?;
    let tol = cfg.tolerances.canonical;
    let frames = enumerate_frames(3)?;
    let base: Arc<dyn Tau<f64>> = if cfg.inject_broken_tau {
        Arc::new(broken_tau(params))
    } else {
        Arc::new(CanonicalTau::new(params, C::new(0.1, 0.05)))
    };
    let mut s = sampler(cfg, 20);
    let gauge: Arc<dyn Tau<f64>> = Arc::new(ExpGauge {
        inner: base.clone(),
        k: C::new(0.3, -0.1),
        v: box_point(&mut s),
        c: C::new(0.2, 0.4),
        flip: true,
    });
    let word = WeylWord::new(WeylGroup::E8, (0..8).map(|_| s.index(8)).collect())?;
    let weyl: Arc<dyn Tau<f64>> = Arc::new(WeylTransformed { inner: base.clone(), word });
    let period: Arc<dyn Tau<f64>> =
        Arc::new(PeriodTranslated::new(base.clone(), params, LatticeVector::basis(2) + LatticeVector::basis(6), 1, 1)?);
    let mut out = Vec::new();
    for (id, anchor, tau) in [
        ("canonical", "canonical solution", &base),
        ("canonical_gauge", "canonical solution under exponential gauge and reflection x -> -x", &gauge),
        ("canonical_weyl", "canonical solution under the Weyl group of E8", &weyl),
        ("canonical_period", "canonical solution under a period translation", &period),
    ] {
        let mut s = sampler(cfg, 21);
        let draws = (0..cfg.trials.canonical).map(|_| {
            let f = frames[s.index(frames.len())].oriented();
            let x = box_point(&mut s);
            Ok(hirota_residual(&**tau, &[f[0], f[1], f[2]], &x, &params)?.relative)
        });
        out.push(Check::worst(id, anchor, tol, draws.collect::<Vec<_>>()));
    }
    let broken = broken_tau(params);
    let mut s = sampler(cfg, 22);
    let mut least = f64::INFINITY;
    for _ in 0..10 {
        let f = frames[s.index(frames.len())].oriented();
        match hirota_residual(&broken, &[f[0], f[1], f[2]], &box_point(&mut s), &params) {
            Ok(r) => least = least.min(r.relative),
            Err(e) => return Ok([out, vec![Check::failed("negative_control", "broken solution", 0.0, &e)]].concat()),
        }
    }
    out.push(Check::above("negative_control", "bilinear residual of a broken solution", least, cfg.tolerances.negative_control));
    Ok(out)
}

fn bailey(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for id in [Identity::Bailey, Identity::Contiguity, Identity::TransformIn, Identity::Terminating] {
        out.extend(verify(id, cfg)?);
    }
    Ok(out)
}

/// One family of integral identities, sampled `trials` times as set in the config.
pub fn verify(identity: Identity, cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let params = cfg.params()?;
    let tol = &cfg.tolerances;
    let quad = cfg.quad;
    let mut out = Vec::new();
    match identity {
        Identity::Bailey => {
            for (k, (kind, id, anchor)) in [
                (BaileyKind::Tilde, "bailey_tilde", "integral transformation on blocks of four"),
                (BaileyKind::Hat, "bailey_hat", "integral transformation under u -> sqrt(pq)/u"),
                (BaileyKind::PsiTilde, "bailey_psi_tilde", "invariance of the normalised integral under the block map"),
                (BaileyKind::PsiHat, "bailey_psi_hat", "invariance of the normalised integral under inversion"),
            ]
            .into_iter()
            .enumerate()
            {
                let mut s = sampler(cfg, 30 + k as u64);
                let draws = (0..cfg.trials.bailey).map(|_| {
                    // seven free phases on |u| = |pq|^(1/4), the eighth solved
                    let x = s.hyperplane_point(params.varpi + params.delta, 0.5, 0.0);
                    Ok(bailey_residual(&x, kind, &params, &quad)?.relative)
                });
                out.push(Check::worst(id, anchor, tol.bailey, draws.collect::<Vec<_>>()));
            }
        }
        Identity::Contiguity => {
            let mut s = sampler(cfg, 35);
            let draws = (0..cfg.trials.contiguity).map(|_| {
                let u: [C; 8] = std::array::from_fn(|_| e(C::new(s.uniform(-0.5, 0.5), s.uniform(0.03, 0.2))));
                let i = s.index(8);
                let j = (i + 1 + s.index(7)) % 8;
                let k = (0..8).filter(|&m| m != i && m != j).nth(s.index(6)).unwrap_or(0);
                Ok(contiguity_residual(&u, (i, j, k), &params, &quad)?.relative)
            });
            out.push(Check::worst("contiguity", "three-term contiguity relation of the integral", tol.contiguity, draws.collect::<Vec<_>>()));
        }
        Identity::TransformIn => {
            for (k, (kind, id)) in [(BaileyKind::Tilde, "transform_in_tilde"), (BaileyKind::Hat, "transform_in_hat")].into_iter().enumerate() {
                let mut s = sampler(cfg, 36 + k as u64);
                let draws = (0..cfg.trials.transform_in).map(|_| {
                    let t = s.hyperplane_point(params.varpi, 0.5, 0.1);
                    Ok(in_transform_residual(&t, 2, kind, &params, &quad)?.relative)
                });
                out.push(Check::worst(id, "two-dimensional integral transformation", tol.transform_in, draws.collect::<Vec<_>>()));
            }
        }
        Identity::Terminating => {
            // at the chain nomes both sides stay admissible for N = 1, 2
            let chain_params = cfg.chain_params()?;
            let mut s = sampler(cfg, 38);
            let mut draws = Vec::new();
            for n in [1usize, 2] {
                for cond in [Termination::Pair(1), Termination::Pair(4), Termination::Seventh] {
                    for _ in 0..cfg.trials.terminating {
                        let y = terminating_sample(n, cond, &chain_params, &mut s);
                        draws.push(terminating_eval(&y, n, cond, &chain_params, &quad).map(|c| c.residual.relative));
                    }
                }
            }
            out.push(Check::worst("terminating", "terminating integral against the 12V11 sum", tol.terminating, draws));
        }
    }
    Ok(out)
}

fn random_frame(s: &mut Sampler, frames: &[Frame], ty: FrameType) -> [LatticeVector; 3] {
    let cand: Vec<&Frame> = frames.iter().filter(|f| f.classify().ok() == Some(ty)).collect();
    let o = cand[s.index(cand.len())].oriented();
    [o[0], o[1], o[2]]
}

fn bilinear_batch(cfg: &SuiteConfig, salt: u64, tau: &dyn Tau<f64>, ty: FrameType, level: C, trials: usize, params: &EllipticParams<f64>) -> Vec<Result<f64>> {
    let frames = enumerate_frames(3).unwrap_or_default();
    let mut s = sampler(cfg, salt);
    (0..trials)
        .map(|_| {
            let f = random_frame(&mut s, &frames, ty);
            let x = generic_point(&mut s, level, &f, params, 1e-6)?;
            Ok(hirota_residual(tau, &f, &x, params)?.relative)
        })
        .collect()
}

fn chain(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let params = cfg.chain_params()?;
    let tol = &cfg.tolerances;
    let quad = cfg.quad;
    let chain = hypergeometric_chain(params, quad, cfg.n_max)?;
    let lev = |m: f64| params.varpi + params.delta * m;
    let frames = enumerate_frames(3)?;
    let mut out = Vec::new();

    let mut s = sampler(cfg, 40);
    let ratio = (0..cfg.trials.initial_data).map(|_| {
        let [a0, a1, a2] = random_frame(&mut s, &frames, FrameType::II(1));
        let x = generic_point(&mut s, lev(0.0), &[a0, a1, a2], &params, 1e-6)?;
        let d = params.delta;
        let t0 = |y: &Point<f64>| chain.eval_level(0, y);
        let lhs = t0(&a1.shift(&x, d))? * t0(&a1.shift(&x, -d))? * bracket_pm(a0.pair(&x), a2.pair(&x), &params);
        let rhs = t0(&a2.shift(&x, d))? * t0(&a2.shift(&x, -d))? * bracket_pm(a0.pair(&x), a1.pair(&x), &params);
        Ok(Residual::between(lhs, rhs).relative)
    });
    out.push(Check::worst("initial_ratio", "level-0 ratio condition on type-II1 frames", tol.ratio_condition, ratio.collect::<Vec<_>>()));
    out.push(Check::worst(
        "initial_bilinear",
        "levels 0 and 1 on type-I frames",
        tol.initial_bilinear,
        bilinear_batch(cfg, 41, &chain, FrameType::I, lev(0.5), cfg.trials.initial_data, &params),
    ));

    let mut s = sampler(cfg, 42);
    let x = s.hyperplane_point(lev(2.0), 0.4, 0.05);
    out.push(toda_spread(&chain, &x, &params, tol.toda_spread));
    for (salt, id, anchor, ty, m) in [
        (43, "level1_type_ii2", "level 1 on type-II2 frames", FrameType::II(2), 1.0),
        (44, "level3half_type_i", "levels 1 and 2 on type-I frames", FrameType::I, 1.5),
        (45, "level2_type_ii0", "level 2 on type-II0 frames", FrameType::II(0), 2.0),
    ] {
        out.push(Check::worst(id, anchor, tol.chain_bilinear, bilinear_batch(cfg, salt, &chain, ty, lev(m), cfg.trials.recursion, &params)));
    }

    let mut s = sampler(cfg, 46);
    let mut det_int = Vec::new();
    let mut det_det = Vec::new();
    for _ in 0..cfg.trials.det_vs_int {
        let x = s.hyperplane_point(lev(2.0), 0.4, 0.05);
        let values = tau_n_int(2, &x, Route::Direct, &params, &quad).and_then(|int| {
            Ok((int, tau_n_det(2, &x, Case::FrameA0, &params, &quad)?, tau_n_det(2, &x, Case::FrameA7, &params, &quad)?))
        });
        match values {
            Ok((int, d0, d7)) => {
                det_int.push(Ok(Residual::between(d0, int).relative.max(Residual::between(d7, int).relative)));
                det_det.push(Ok(Residual::between(d0, d7).relative));
            }
            Err(e) => {
                det_det.push(Err(Error::Invalid(e.to_string())));
                det_int.push(Err(e));
            }
        }
    }
    out.push(Check::worst("det_vs_integral", "Casorati determinant against the double integral at level 2", tol.det_vs_int, det_int));
    out.push(Check::worst("det_cases_agree", "the two Casorati determinants at level 2", tol.det_vs_int, det_det));

    let mut s = sampler(cfg, 47);
    let inv = (0..=2i64).map(|n| {
        let x = s.hyperplane_point(lev(n as f64), 0.4, 0.05);
        let w = WeylWord::new(WeylGroup::E7, (0..6).map(|_| s.index(7)).collect())?;
        Ok(Residual::between(chain.eval_level(n, &w.apply_point(&x))?, chain.eval_level(n, &x)?).relative)
    });
    out.push(Check::worst("e7_invariance", "W(E7)-invariance of the chain", tol.chain_bilinear, inv.collect::<Vec<_>>()));
    Ok(out)
}

fn toda_spread(chain: &TauChain<f64>, x: &Point<f64>, params: &EllipticParams<f64>, tol: f64) -> Check {
    let (id, anchor) = ("toda_independence", "level 2 from the recursion is independent of the frame (15 pairs)");
    let mut values = Vec::new();
    for i in 2..8 {
        for j in (i + 1)..8 {
            match toda_step_explicit(|y: &Point<f64>| chain.eval_level(0, y), |y: &Point<f64>| chain.eval_level(1, y), i, j, x, params) {
                Ok(v) => values.push(v),
                Err(e) => return Check::failed(id, anchor, tol, &e),
            }
        }
    }
    let mut spread: f64 = 0.0;
    for a in &values {
        for b in &values {
            spread = spread.max(Residual::between(*a, *b).relative);
        }
    }
    Check::residual(id, anchor, spread, tol)
}

fn random_level_zero(s: &mut Sampler) -> PicardVector {
    (0..9).fold(PicardVector::zero(), |acc, j| acc + PicardVector::simple_root(j) * (s.index(5) as i64 - 2))
}

/// Checks the Kac translation group laws on random integral vectors; returns `(checked, violations)`.
pub fn picard_group_laws(seed: u64, trials: usize) -> (u64, u64) {
    let mut s = Sampler::new(seed);
    let c = PicardVector::c();
    let (mut checked, mut bad) = (0u64, 0u64);
    let mut tally = |ok: bool| {
        checked += 1;
        bad += u64::from(!ok);
    };
    for _ in 0..trials {
        let h = PicardVector::from_ints(std::array::from_fn(|_| s.index(9) as i64 - 4));
        let g = PicardVector::from_ints(std::array::from_fn(|_| s.index(9) as i64 - 4));
        let a = random_level_zero(&mut s);
        let b = random_level_zero(&mut s);
        let r = PicardVector::simple_root(s.index(9));
        let t = |v: &PicardVector, h: &PicardVector| kac_translate(v, h).expect("level zero");
        tally(t(&a, &h).ip(&t(&a, &g)) == h.ip(&g));
        tally(t(&a, &t(&b, &h)) == t(&(a + b), &h));
        tally(t(&(c * (s.index(7) as i64 - 3)), &h) == h);
        tally(t(&PicardVector::zero(), &h) == h);
        let w = |v: &PicardVector| v.reflect(&r).expect("real root");
        tally(w(&t(&a, &w(&h))) == t(&w(&a), &h));
        tally(w(&w(&h)) == h);
        tally(t(&a, &h).level() == h.level());
        tally(t(&(-a), &t(&a, &h)) == h);
    }
    (checked, bad)
}

fn picard(cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let params = cfg.chain_params()?;
    let tol = &cfg.tolerances;
    let (checked, bad) = picard_group_laws(cfg.seed ^ 0x51, 200);
    let mut out = vec![Check::count("kac_group_laws", "violations of the Kac translation group laws (exact)", bad, 0)];
    debug_assert!(checked > 0);

    let mut s = sampler(cfg, 50);
    let trips = (0..50).map(|_| {
        let x: Point<f64> = std::array::from_fn(|_| s.complex_box(0.7, 0.4));
        let mu = s.complex_box::<f64>(1.0, 0.5);
        let kappa = C::from_polar(s.uniform(0.3, 1.0), s.uniform(-3.0, 3.0));
        let eps = coords_forward(&x, mu, kappa)?;
        let alt = gamma_point(&x, mu, kappa)?;
        let (y, m, k) = coords_back(&eps)?;
        let mut err = ((m - mu).norm() / mu.norm().max(1.0)).max((k - kappa).norm());
        for j in 0..10 {
            err = err.max((eps[j] - alt[j]).norm());
        }
        for j in 0..8 {
            err = err.max((x[j] - y[j]).norm());
        }
        Ok(err)
    });
    out.push(Check::worst("coordinate_round_trip", "coordinates (x; mu, kappa) <-> h and back", tol.round_trip, trips.collect::<Vec<_>>()));

    let tau = VariantTau::new(Variant::PM, params, cfg.quad, cfg.n_max);
    let mut s = sampler(cfg, 51);
    let h39 = (0..cfg.trials.picard).map(|_| {
        let x = s.hyperplane_point(-params.varpi + params.delta * 2.0, 0.4, 0.05);
        let eps = coords_forward(&x, s.complex_box(0.3, 0.3), params.delta)?;
        let mut idx: Vec<usize> = (1..=7).collect();
        for k in 0..4 {
            let m = k + s.index(7 - k);
            idx.swap(k, m);
        }
        let w = WeylWord::new(WeylGroup::E7, (0..4).map(|_| s.index(7)).collect())?;
        Ok(hirota39_residual(&tau, &w, &eps, [idx[0], idx[1], idx[2], idx[3]], &params)?.relative)
    });
    out.push(Check::worst("hirota39", "bilinear equations of the lattice tau functions", tol.hirota39, h39.collect::<Vec<_>>()));

    let frames = enumerate_frames(3)?;
    let mut s = sampler(cfg, 52);
    let agree = (0..cfg.trials.picard).map(|_| {
        let f = random_frame(&mut s, &frames, FrameType::II(0));
        let x = generic_point(&mut s, -params.varpi + params.delta, &f, &params, 1e-6)?;
        let eps = coords_forward(&x, s.complex_box(0.3, 0.3), params.delta)?;
        frame_form_agreement(&tau, &f, &eps, &params)
    });
    out.push(Check::worst("frame_form", "frame form via Kac translations against the bilinear residual", tol.frame_form, agree.collect::<Vec<_>>()));
    Ok(out)
}
