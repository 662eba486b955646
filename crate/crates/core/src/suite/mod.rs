//! Configurable batches of numerical checks with a JSON report.
//!
//! A config file is JSON; every key is optional and complex numbers are `[re, im]` pairs:
//!
//! ```json
//! { "p": [0.15, 0], "q": [0.1, 0], "r": [0.12, 0], "chain_p": [0.05, 0], "chain_q": [0.3, 0],
//!   "seed": 1, "n_max": 2, "quad": { "initial_points": 256, "max_points_1d": 4096, "max_points_2d": 1024, "tol": 1e-14 },
//!   "trials": { "three_term": 1000 }, "tolerances": { "bailey": 1e-8 }, "inject_broken_tau": false }
//! ```

mod checks;

use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::integrals::QuadConfig;
use crate::specialfn::EllipticParams;
use crate::tau::N_MAX_CAP;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SuiteName {
    Counts,
    Specialfn,
    Hirota,
    Bailey,
    Chain,
    Picard,
    All,
}

impl SuiteName {
    pub const PARTS: [SuiteName; 6] =
        [SuiteName::Counts, SuiteName::Specialfn, SuiteName::Hirota, SuiteName::Bailey, SuiteName::Chain, SuiteName::Picard];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteName::Counts => "counts",
            SuiteName::Specialfn => "specialfn",
            SuiteName::Hirota => "hirota",
            SuiteName::Bailey => "bailey",
            SuiteName::Chain => "chain",
            SuiteName::Picard => "picard",
            SuiteName::All => "all",
        }
    }
}

impl FromStr for SuiteName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SuiteName::PARTS
            .into_iter()
            .chain([SuiteName::All])
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown suite `{s}`")))
    }
}

/// Integral identities that can be checked on their own.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    Bailey,
    Contiguity,
    TransformIn,
    Terminating,
}

impl Identity {
    pub fn as_str(self) -> &'static str {
        match self {
            Identity::Bailey => "bailey",
            Identity::Contiguity => "contiguity",
            Identity::TransformIn => "transform-in",
            Identity::Terminating => "terminating",
        }
    }

    /// Sets the trial count this identity reads from the config.
    pub fn set_trials(self, trials: &mut Trials, n: usize) {
        match self {
            Identity::Bailey => trials.bailey = n,
            Identity::Contiguity => trials.contiguity = n,
            Identity::TransformIn => trials.transform_in = n,
            Identity::Terminating => trials.terminating = n,
        }
    }
}

impl FromStr for Identity {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        [Identity::Bailey, Identity::Contiguity, Identity::TransformIn, Identity::Terminating]
            .into_iter()
            .find(|i| i.as_str() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown identity `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Trials {
    pub three_term: usize,
    pub canonical: usize,
    pub bailey: usize,
    pub contiguity: usize,
    pub transform_in: usize,
    pub terminating: usize,
    pub initial_data: usize,
    pub recursion: usize,
    pub det_vs_int: usize,
    pub theta_det: usize,
    pub picard: usize,
}

impl Default for Trials {
    fn default() -> Self {
        Self {
            three_term: 1000,
            canonical: 100,
            bailey: 10,
            contiguity: 10,
            transform_in: 3,
            terminating: 1,
            initial_data: 10,
            recursion: 10,
            det_vs_int: 3,
            theta_det: 10,
            picard: 5,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    pub three_term: f64,
    pub canonical: f64,
    pub bailey: f64,
    pub contiguity: f64,
    pub transform_in: f64,
    pub terminating: f64,
    pub ratio_condition: f64,
    pub initial_bilinear: f64,
    pub toda_spread: f64,
    pub chain_bilinear: f64,
    pub det_vs_int: f64,
    pub theta_det_2: f64,
    pub theta_det_3: f64,
    pub round_trip: f64,
    pub hirota39: f64,
    pub frame_form: f64,
    /// A broken tau function must exceed this.
    pub negative_control: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            three_term: 1e-10,
            canonical: 1e-9,
            bailey: 1e-8,
            contiguity: 1e-8,
            transform_in: 1e-6,
            terminating: 1e-9,
            ratio_condition: 1e-9,
            initial_bilinear: 1e-7,
            toda_spread: 1e-8,
            chain_bilinear: 1e-7,
            det_vs_int: 1e-6,
            theta_det_2: 1e-10,
            theta_det_3: 1e-9,
            round_trip: 1e-12,
            hirota39: 1e-6,
            frame_form: 1e-10,
            negative_control: 1e-2,
        }
    }
}

impl Tolerances {
    /// Sets every upper bound to `tol`; the negative-control floor is left alone.
    pub fn override_all(&mut self, tol: f64) {
        let keep = self.negative_control;
        let mut v = serde_json::to_value(&*self).expect("plain struct");
        if let Some(map) = v.as_object_mut() {
            for x in map.values_mut() {
                *x = serde_json::json!(tol);
            }
        }
        *self = serde_json::from_value(v).expect("same shape");
        self.negative_control = keep;
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SuiteConfig {
    /// Nomes for the special-function and integral checks.
    pub p: [f64; 2],
    pub q: [f64; 2],
    pub r: [f64; 2],
    /// Nomes for the chain and lattice checks.
    pub chain_p: [f64; 2],
    pub chain_q: [f64; 2],
    pub quad: QuadConfig,
    pub seed: u64,
    pub n_max: i64,
    pub trials: Trials,
    pub tolerances: Tolerances,
    /// Replace the canonical solution by a broken one in the bilinear checks.
    pub inject_broken_tau: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            p: [0.15, 0.0],
            q: [0.1, 0.0],
            r: [0.12, 0.0],
            chain_p: [0.05, 0.0],
            chain_q: [0.3, 0.0],
            quad: QuadConfig::default(),
            seed: 1,
            n_max: 2,
            trials: Trials::default(),
            tolerances: Tolerances::default(),
            inject_broken_tau: false,
        }
    }
}

fn cx(v: [f64; 2]) -> Complex64 {
    Complex64::new(v[0], v[1])
}

impl SuiteConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: Self = serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        self.params()?;
        self.chain_params()?;
        if !(2..=N_MAX_CAP).contains(&self.n_max) {
            return Err(Error::Config(format!("n_max must lie in 2..={N_MAX_CAP}")));
        }
        let q = &self.quad;
        if q.initial_points < 4 || q.initial_points > q.max_points_1d.min(q.max_points_2d) || !(q.tol > 0.0) {
            return Err(Error::Config("quadrature settings are inconsistent".into()));
        }
        Ok(())
    }

    pub fn params(&self) -> Result<EllipticParams<f64>> {
        EllipticParams::new(cx(self.p), cx(self.q), cx(self.r)).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn chain_params(&self) -> Result<EllipticParams<f64>> {
        EllipticParams::new(cx(self.chain_p), cx(self.chain_q), cx(self.r)).map_err(|e| Error::Config(e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Measured {
    Residual { residual: f64 },
    Count { count: u64, expected: u64 },
}

/// One line of a report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    /// The identity or count being checked.
    pub anchor: String,
    #[serde(flatten)]
    pub measured: Measured,
    pub tolerance: f64,
    /// Whether the residual must stay below (the default) or exceed the tolerance.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub must_exceed: bool,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Check {
    pub fn residual(id: &str, anchor: &str, residual: f64, tolerance: f64) -> Self {
        Self {
            id: id.into(),
            anchor: anchor.into(),
            measured: Measured::Residual { residual },
            tolerance,
            must_exceed: false,
            pass: residual < tolerance,
            error: None,
        }
    }

    pub fn above(id: &str, anchor: &str, residual: f64, floor: f64) -> Self {
        Self { must_exceed: true, pass: residual > floor, ..Self::residual(id, anchor, residual, floor) }
    }

    pub fn count(id: &str, anchor: &str, count: u64, expected: u64) -> Self {
        Self {
            id: id.into(),
            anchor: anchor.into(),
            measured: Measured::Count { count, expected },
            tolerance: 0.0,
            must_exceed: false,
            pass: count == expected,
            error: None,
        }
    }

    pub fn failed(id: &str, anchor: &str, tolerance: f64, err: &Error) -> Self {
        Self {
            measured: Measured::Residual { residual: f64::NAN },
            pass: false,
            error: Some(err.to_string()),
            ..Self::residual(id, anchor, f64::NAN, tolerance)
        }
    }

    /// The worst residual of a batch, or a failed check at the first error.
    pub fn worst<I>(id: &str, anchor: &str, tolerance: f64, residuals: I) -> Self
    where
        I: IntoIterator<Item = Result<f64>>,
    {
        let mut worst: f64 = 0.0;
        for r in residuals {
            match r {
                Ok(v) if v.is_nan() => worst = f64::NAN,
                Ok(v) => worst = worst.max(v),
                Err(e) => return Self::failed(id, anchor, tolerance, &e),
            }
        }
        Self::residual(id, anchor, worst, tolerance)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub seed: u64,
    pub pass: bool,
    pub checks: Vec<Check>,
    pub wall_time_s: f64,
}

/// Runs a suite; `all` runs the six parts concurrently and concatenates them in a fixed order.
pub fn run_suite(name: SuiteName, config: &SuiteConfig) -> Result<Report> {
    config.validate()?;
    let start = Instant::now();
    let checks = match name {
        SuiteName::All => {
            let parts: Vec<Result<Vec<Check>>> = SuiteName::PARTS.par_iter().map(|n| checks::run(*n, config)).collect();
            let mut all = Vec::new();
            for p in parts {
                all.extend(p?);
            }
            all
        }
        n => checks::run(n, config)?,
    };
    Ok(Report {
        suite: name.as_str().into(),
        seed: config.seed,
        pass: checks.iter().all(|c| c.pass),
        checks,
        wall_time_s: start.elapsed().as_secs_f64(),
    })
}

mod build;

pub use build::{build_report, BuildReport, LevelRow};
pub use checks::{broken_tau, picard_group_laws, verify};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_round_trip_and_validation() {
        let cfg = SuiteConfig::from_json(r#"{"p": [0.2, 0.01], "trials": {"bailey": 3}}"#).unwrap();
        assert_eq!(cfg.p, [0.2, 0.01]);
        assert_eq!(cfg.trials.bailey, 3);
        assert_eq!(cfg.trials.canonical, 100);
        let text = serde_json::to_string(&cfg).unwrap();
        assert_eq!(SuiteConfig::from_json(&text).unwrap(), cfg);
        assert!(matches!(SuiteConfig::from_json(r#"{"p": [1.2, 0]}"#), Err(Error::Config(_))));
        assert!(matches!(SuiteConfig::from_json(r#"{"n_max": 7}"#), Err(Error::Config(_))));
        assert!(matches!(SuiteConfig::from_json(r#"{"unknown": 1}"#), Err(Error::Config(_))));
        assert!(matches!(SuiteConfig::from_json("not json"), Err(Error::Config(_))));
    }

    #[test]
    fn suite_names() {
        assert_eq!("chain".parse::<SuiteName>().unwrap(), SuiteName::Chain);
        assert!("nope".parse::<SuiteName>().is_err());
    }

    #[test]
    fn tolerance_override_keeps_the_floor() {
        let mut t = Tolerances::default();
        t.override_all(1e-3);
        assert_eq!(t.bailey, 1e-3);
        assert_eq!(t.negative_control, 1e-2);
    }

    #[test]
    fn counts_suite_passes() {
        let report = run_suite(SuiteName::Counts, &SuiteConfig::default()).unwrap();
        assert!(report.pass);
        let json = serde_json::to_value(&report).unwrap();
        let first = &json["checks"][0];
        assert!(first["count"].is_u64() && first["anchor"].is_string());
    }
}
