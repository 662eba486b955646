//! The report behind `tau build`: the chain checked level by level.

use serde::Serialize;

use super::SuiteConfig;
use crate::error::{Error, Result};
use crate::lattice::{enumerate_frames, Frame, FrameType, WeylGroup, WeylWord};
use crate::residual::Residual;
use crate::tau::{generic_point, hirota_residual, hypergeometric_chain, tau_n_det, tau_n_int, Case, Route, N_MAX_CAP};

#[derive(Clone, Debug, Serialize)]
pub struct LevelRow {
    /// `<phi, x> = varpi + level delta`.
    pub level: f64,
    pub frame_type: String,
    pub samples: usize,
    /// `None` when a coefficient vanishes identically on this hyperplane.
    pub max_residual: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelDelta {
    pub level: i64,
    /// Relative difference of the Casorati determinant from the chain.
    pub det: f64,
    /// Relative difference of the multiple integral from the chain, up to level 2.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub integral: Option<f64>,
    /// Largest relative change under random W(E7) words.
    pub invariance: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct BuildReport {
    pub n: i64,
    pub hirota: Vec<LevelRow>,
    pub closed_forms: Vec<LevelDelta>,
    pub tolerance: f64,
    pub pass: bool,
}

/// Builds the chain up to level `n` and tabulates the bilinear residual for every frame type whose
/// shifts stay within the built levels, the closed-form deltas and the W(E7) deltas.
pub fn build_report(cfg: &SuiteConfig, n: i64, samples: usize) -> Result<BuildReport> {
    if !(1..=N_MAX_CAP).contains(&n) {
        return Err(Error::LevelTooHigh { level: n, max: N_MAX_CAP });
    }
    let params = cfg.chain_params()?;
    let quad = cfg.quad;
    let chain = hypergeometric_chain(params, quad, n.max(2))?;
    let frames = enumerate_frames(3)?;
    let mut s = crate::sampling::Sampler::new(cfg.seed);
    let lev = |m: f64| params.varpi + params.delta * m;
    let tol = cfg.tolerances.chain_bilinear;

    let mut rows = Vec::new();
    for twice in 0..=(2 * n) {
        let m = twice as f64 / 2.0;
        let types: Vec<(FrameType, i64)> = if twice % 2 == 1 {
            vec![(FrameType::I, 1)]
        } else {
            vec![(FrameType::II(0), 0), (FrameType::II(1), 2), (FrameType::II(2), 2)]
        };
        for (ty, reach2) in types {
            // the highest level touched is m + reach2 / 2
            if twice + reach2 > 2 * n {
                continue;
            }
            let cand: Vec<&Frame> = frames.iter().filter(|f| f.classify().ok() == Some(ty)).collect();
            let mut worst = Some(0.0f64);
            for _ in 0..samples {
                let o = cand[s.index(cand.len())].oriented();
                let f = [o[0], o[1], o[2]];
                match generic_point(&mut s, lev(m), &f, &params, 1e-6) {
                    Ok(x) => worst = worst.map(|w| w.max(hirota_residual(&chain, &f, &x, &params).map_or(f64::NAN, |r| r.relative))),
                    Err(Error::VanishingBracket { .. }) => {
                        worst = None;
                        break;
                    }
                    Err(e) => return Err(e),
                }
            }
            rows.push(LevelRow { level: m, frame_type: ty.to_string(), samples, max_residual: worst });
        }
    }

    let mut deltas = Vec::new();
    for level in 0..=n {
        let x = s.hyperplane_point(lev(level as f64), 0.4, 0.05);
        let c = chain.eval_level(level, &x)?;
        let k = level as usize;
        let det = Residual::between(tau_n_det(k, &x, Case::FrameA0, &params, &quad)?, c).relative;
        let integral = if level <= 2 {
            Some(Residual::between(tau_n_int(k, &x, Route::Direct, &params, &quad)?, c).relative)
        } else {
            None
        };
        let w = WeylWord::new(WeylGroup::E7, (0..6).map(|_| s.index(7)).collect())?;
        let invariance = Residual::between(chain.eval_level(level, &w.apply_point(&x))?, c).relative;
        deltas.push(LevelDelta { level, det, integral, invariance });
    }
    let pass = rows.iter().all(|r| r.max_residual.is_none_or(|v| v < tol))
        && deltas.iter().all(|d| d.det < cfg.tolerances.det_vs_int && d.integral.is_none_or(|v| v < cfg.tolerances.det_vs_int) && d.invariance < tol);
    Ok(BuildReport { n, hirota: rows, closed_forms: deltas, tolerance: tol, pass })
}
