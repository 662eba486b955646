//! Command-line front end: frame dumps, identity checks, the tau chain and the verification suites.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use e8tau::lattice::{enumerate_frames, FrameType};
use e8tau::suite::{build_report, run_suite, verify, Identity, SuiteConfig, SuiteName};
use e8tau::tau::{hypergeometric_chain, Tau};
use num_complex::Complex64;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "e8tau", version, about = "E8 frames, elliptic hypergeometric integrals and tau functions")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// JSON config file (see the README for keys)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// RNG seed, overriding the config
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Tolerance applied to every residual check, overriding the config
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Also write the JSON output to this file
    #[arg(long, global = true)]
    json: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Dump C_l-frames, one per line: vectors of 8 quarter-integer numerators separated by `;`
    Frames {
        #[arg(long, default_value_t = 3)]
        size: usize,
        /// Only frames of this type: I, II0, II1 or II2
        #[arg(long = "type")]
        frame_type: Option<String>,
    },
    /// Check one family of integral identities at random points
    Verify {
        /// bailey, contiguity, transform-in or terminating
        identity: String,
        #[arg(long)]
        trials: Option<usize>,
        /// Node cap of the one-dimensional trapezoid rule
        #[arg(long)]
        quad: Option<usize>,
    },
    /// The hypergeometric tau chain
    Tau {
        #[command(subcommand)]
        action: TauAction,
    },
    /// Lattice-side checks
    Picard {
        #[command(subcommand)]
        action: PicardAction,
    },
    /// Run a verification suite: counts, specialfn, hirota, bailey, chain, picard or all
    Suite {
        name: String,
        /// Replace the canonical solution by a broken one (the suite must then fail)
        #[arg(long)]
        inject_broken_tau: bool,
    },
}

#[derive(Subcommand)]
enum TauAction {
    /// Build the chain up to level n and check it level by level
    Build {
        #[arg(long, default_value_t = 2)]
        n: i64,
        /// Sample points per (level, frame type)
        #[arg(long, default_value_t = 3)]
        samples: usize,
        /// Write the report to this file
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Evaluate the chain at one point
    Probe {
        /// Eight coordinates, each `re,im`
        #[arg(long, num_args = 8, value_parser = parse_complex, allow_hyphen_values = true)]
        x: Vec<Complex64>,
        /// Expected level; the point must lie on it
        #[arg(long)]
        n: Option<i64>,
    },
}

#[derive(Subcommand)]
enum PicardAction {
    /// Kac translation laws, coordinate round trips and the lattice bilinear equations
    Check,
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parts: Vec<&str> = s.split(',').collect();
    let num = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("`{t}`: {e}"));
    match parts.as_slice() {
        [re] => Ok(Complex64::new(num(re)?, 0.0)),
        [re, im] => Ok(Complex64::new(num(re)?, num(im)?)),
        _ => Err(format!("expected `re,im`, got `{s}`")),
    }
}

fn parse_type(s: &str) -> Result<FrameType, String> {
    match s.to_ascii_uppercase().as_str() {
        "I" => Ok(FrameType::I),
        "II0" => Ok(FrameType::II(0)),
        "II1" => Ok(FrameType::II(1)),
        "II2" => Ok(FrameType::II(2)),
        _ => Err(format!("unknown frame type `{s}`")),
    }
}

fn load_config(g: &Global) -> e8tau::Result<SuiteConfig> {
    let mut cfg = match &g.config {
        Some(path) => SuiteConfig::load(path)?,
        None => SuiteConfig::default(),
    };
    if let Some(seed) = g.seed {
        cfg.seed = seed;
    }
    if let Some(tol) = g.tol {
        cfg.tolerances.override_all(tol);
    }
    Ok(cfg)
}

fn emit(g: &Global, value: &Value) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    println!("{text}");
    if let Some(path) = &g.json {
        std::fs::write(path, text + "\n").map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(())
}

fn params_echo(cfg: &SuiteConfig) -> Value {
    json!({ "p": cfg.p, "q": cfg.q, "r": cfg.r, "chain_p": cfg.chain_p, "chain_q": cfg.chain_q, "quad": cfg.quad, "seed": cfg.seed })
}

/// `Ok(true)` when everything checked passed.
fn run(cli: Cli) -> Result<bool, String> {
    let g = &cli.global;
    let err = |e: e8tau::Error| e.to_string();
    match cli.command {
        Command::Frames { size, frame_type } => {
            let filter = frame_type.as_deref().map(parse_type).transpose()?;
            let frames = enumerate_frames(size).map_err(err)?;
            let lines: Vec<String> = frames
                .iter()
                .filter(|f| filter.is_none_or(|t| f.classify().ok() == Some(t)))
                .map(|f| f.dump_line())
                .collect();
            let mut out = std::io::stdout().lock();
            for l in &lines {
                if let Err(e) = writeln!(out, "{l}") {
                    if e.kind() == std::io::ErrorKind::BrokenPipe {
                        return Ok(true);
                    }
                    return Err(e.to_string());
                }
            }
            if let Some(path) = &g.json {
                let text = serde_json::to_string_pretty(&json!({ "size": size, "count": lines.len(), "frames": lines }))
                    .map_err(|e| e.to_string())?;
                std::fs::write(path, text + "\n").map_err(|e| e.to_string())?;
            }
            Ok(true)
        }
        Command::Verify { identity, trials, quad } => {
            let id: Identity = identity.parse().map_err(err)?;
            let mut cfg = load_config(g).map_err(err)?;
            let n = trials.unwrap_or(match id {
                Identity::Bailey => cfg.trials.bailey,
                Identity::Contiguity => cfg.trials.contiguity,
                Identity::TransformIn => cfg.trials.transform_in,
                Identity::Terminating => cfg.trials.terminating,
            });
            id.set_trials(&mut cfg.trials, n);
            if let Some(q) = quad {
                cfg.quad.max_points_1d = q;
                cfg.quad.initial_points = cfg.quad.initial_points.min(q);
            }
            cfg.validate().map_err(err)?;
            let checks = verify(id, &cfg).map_err(err)?;
            let pass = checks.iter().all(|c| c.pass);
            let max_residual = checks
                .iter()
                .map(|c| match c.measured {
                    e8tau::suite::Measured::Residual { residual } => residual,
                    e8tau::suite::Measured::Count { .. } => 0.0,
                })
                .fold(0.0, |m: f64, r| if r.is_nan() || m.is_nan() { f64::NAN } else { m.max(r) });
            emit(
                g,
                &json!({
                    "identity": id.as_str(),
                    "trials": n,
                    "max_residual": max_residual,
                    "params_echo": params_echo(&cfg),
                    "checks": checks,
                    "pass": pass,
                }),
            )?;
            Ok(pass)
        }
        Command::Tau { action: TauAction::Build { n, samples, report } } => {
            let cfg = load_config(g).map_err(err)?;
            let r = build_report(&cfg, n, samples).map_err(err)?;
            let value = serde_json::to_value(&r).map_err(|e| e.to_string())?;
            if let Some(path) = report {
                let text = serde_json::to_string_pretty(&value).map_err(|e| e.to_string())?;
                std::fs::write(&path, text + "\n").map_err(|e| format!("{}: {e}", path.display()))?;
            }
            emit(g, &value)?;
            Ok(r.pass)
        }
        Command::Tau { action: TauAction::Probe { x, n } } => {
            let cfg = load_config(g).map_err(err)?;
            let params = cfg.chain_params().map_err(err)?;
            let chain = hypergeometric_chain(params, cfg.quad, cfg.n_max).map_err(err)?;
            let point: [Complex64; 8] = x.try_into().map_err(|_| "--x needs eight values".to_string())?;
            let level = chain.domain().level(&point).map_err(err)?.unwrap_or(0);
            if let Some(want) = n {
                if want != level {
                    return Err(format!("point lies on level {level}, not {want}"));
                }
            }
            let v = chain.eval(&point).map_err(err)?;
            emit(g, &json!({ "x": point.map(|z| [z.re, z.im]), "level": level, "value": [v.re, v.im] }))?;
            Ok(true)
        }
        Command::Picard { action: PicardAction::Check } => {
            let cfg = load_config(g).map_err(err)?;
            let report = run_suite(SuiteName::Picard, &cfg).map_err(err)?;
            emit(g, &serde_json::to_value(&report).map_err(|e| e.to_string())?)?;
            Ok(report.pass)
        }
        Command::Suite { name, inject_broken_tau } => {
            let suite: SuiteName = name.parse().map_err(err)?;
            let mut cfg = load_config(g).map_err(err)?;
            cfg.inject_broken_tau |= inject_broken_tau;
            let report = run_suite(suite, &cfg).map_err(err)?;
            emit(g, &serde_json::to_value(&report).map_err(|e| e.to_string())?)?;
            Ok(report.pass)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
