use std::process::{Command, Output};

use e8tau::sampling::Sampler;
use e8tau::suite::SuiteConfig;
use e8tau::tau::level_point;
use serde_json::Value;

fn e8tau(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_e8tau")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn frames_lists_every_oriented_triple() {
    let out = e8tau(&["frames"]);
    assert!(out.status.success());
    let n = String::from_utf8(out.stdout).unwrap().lines().count();
    assert_eq!(n, 7560);
}

#[test]
fn frames_type_filter() {
    let all = e8tau(&["frames"]);
    let ii2 = e8tau(&["frames", "--type", "II2"]);
    assert!(ii2.status.success());
    let text = String::from_utf8(ii2.stdout).unwrap();
    let n = text.lines().count();
    assert!(n > 0 && n < 7560);
    assert_eq!(n, 378);
    let total: usize = ["I", "II0", "II1", "II2"]
        .iter()
        .map(|t| String::from_utf8(e8tau(&["frames", "--type", t]).stdout).unwrap().lines().count())
        .sum();
    assert_eq!(total, String::from_utf8(all.stdout).unwrap().lines().count());
}

#[test]
fn verify_reports_expected_keys() {
    let out = e8tau(&["verify", "contiguity", "--trials", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    for key in ["identity", "trials", "max_residual", "params_echo", "checks", "pass"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["identity"], "contiguity");
    assert_eq!(v["trials"], 2);
    assert_eq!(v["pass"], true);
}

#[test]
fn suite_exit_codes() {
    assert_eq!(e8tau(&["suite", "counts"]).status.code(), Some(0));
    assert_eq!(e8tau(&["suite", "hirota", "--inject-broken-tau"]).status.code(), Some(1));
    let bad = e8tau(&["suite", "nonsense"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
}

#[test]
fn probe_reports_level() {
    let cfg = SuiteConfig::default();
    let params = cfg.chain_params().unwrap();
    let x = Sampler::new(11).hyperplane_point(level_point(&params, 1.0), 0.4, 0.05);
    let mut args = vec!["tau".to_string(), "probe".into(), "--n".into(), "1".into(), "--x".into()];
    args.extend(x.iter().map(|z| format!("{},{}", z.re, z.im)));
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    let out = e8tau(&args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = stdout_json(&out);
    assert_eq!(v["level"], 1);
    let val = v["value"].as_array().unwrap();
    assert!(val.iter().all(|c| c.as_f64().unwrap().is_finite()));

    let mut wrong = args.clone();
    wrong[3] = "2";
    assert_eq!(e8tau(&wrong).status.code(), Some(2));
}

#[test]
fn picard_check_passes() {
    let out = e8tau(&["picard", "check"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(stdout_json(&out)["pass"], true);
}

#[test]
fn config_and_seed_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.json");
    std::fs::write(&cfg, r#"{ "seed": 5, "trials": { "bailey": 2 } }"#).unwrap();
    let cfg = cfg.to_str().unwrap();
    let a = e8tau(&["--config", cfg, "verify", "bailey"]);
    let b = e8tau(&["--config", cfg, "verify", "bailey"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let va = stdout_json(&a);
    assert_eq!(va["params_echo"]["seed"], 5);
    assert_eq!(va["trials"], 2);

    let c = e8tau(&["--config", cfg, "--seed", "6", "verify", "bailey"]);
    assert_eq!(stdout_json(&c)["params_echo"]["seed"], 6);

    std::fs::write(dir.path().join("bad.json"), r#"{ "sede": 5 }"#).unwrap();
    let bad = e8tau(&["--config", dir.path().join("bad.json").to_str().unwrap(), "suite", "counts"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn json_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = e8tau(&["--json", path.to_str().unwrap(), "suite", "counts"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["suite"], "counts");
    assert_eq!(v["pass"], true);
    assert!(v["checks"].as_array().unwrap().len() >= 15);
}
