//! End-to-end CLI tests: preset catalog, exit-status contract, report
//! determinism, and golden-file comparison for two presets.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_holobound"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

#[test]
fn presets_list_contains_the_six_presets() {
    let out = run(&["presets", "list"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let names: Vec<&str> = text.lines().collect();
    assert_eq!(
        names,
        vec![
            "fock-theorem-f",
            "fock-aniso",
            "ball-bergman",
            "polydisc-bergman",
            "scheme-generic",
            "integrated-remark",
        ]
    );
}

#[test]
fn presets_round_trip_through_config_serialization() {
    for name in [
        "fock-theorem-f",
        "fock-aniso",
        "ball-bergman",
        "polydisc-bergman",
        "scheme-generic",
        "integrated-remark",
    ] {
        let out = run(&["presets", "show", name]);
        assert!(out.status.success(), "{name}");
        let text = String::from_utf8(out.stdout).unwrap();
        let parsed: holobound_cli::RunConfig = serde_json::from_str(&text).unwrap();
        let reserialized = serde_json::to_string_pretty(&parsed).unwrap();
        assert_eq!(text.trim(), reserialized.trim(), "{name} round trip");
    }
}

#[test]
fn ball_preset_declares_admissible_alpha_range() {
    // the Bergman parameter range is α > −1; the preset must sit inside it
    // and the library must reject the boundary value
    let out = run(&["presets", "show", "ball-bergman"]);
    let cfg: holobound_cli::RunConfig =
        serde_json::from_slice(&out.stdout).unwrap();
    for space in &cfg.spaces {
        if space.weight == "ball" {
            assert!(space.alpha.unwrap() > -1.0);
        }
    }
    let mut bad = cfg.clone();
    bad.spaces[0].alpha = Some(-1.0);
    assert!(holobound_cli::runner::run(&bad).is_err());
}

#[test]
fn unknown_preset_exits_with_config_status() {
    let out = run(&["presets", "show", "no-such-preset"]);
    assert_eq!(out.status.code(), Some(64));
}

fn write_config(dir: &tempfile::TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

const TINY_CONFIG: &str = r#"{
  "seed": 7,
  "integration": { "mc_samples": 20000 },
  "spaces": [
    { "id": "s", "domain": "fock", "n": 1, "weight": "fock", "alpha": 1.0, "p": 2.0 }
  ],
  "functions": [
    { "id": "f", "terms": [
      { "coeff_re": 1.0, "coeff_im": 0.0, "powers": [0], "exp_re": [0.0], "exp_im": [0.0] },
      { "coeff_re": 0.5, "coeff_im": 0.0, "powers": [1], "exp_re": [0.0], "exp_im": [0.0] }
    ] }
  ],
  "automorphisms": [],
  "checks": [
    { "check": "bound", "space": "s", "function": "f", "point_re": [0.4], "point_im": [-0.3] },
    { "check": "sup-bound", "space": "s", "function": "f" }
  ]
}"#;

#[test]
fn verify_passes_and_reports_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(&dir, "tiny.json", TINY_CONFIG);
    let out_a = dir.path().join("a.json");
    let out_b = dir.path().join("b.json");
    let st1 = run(&["verify", "--config", cfg.to_str().unwrap(), "--out", out_a.to_str().unwrap()]);
    let st2 = run(&["verify", "--config", cfg.to_str().unwrap(), "--out", out_b.to_str().unwrap()]);
    assert_eq!(st1.status.code(), Some(0));
    assert_eq!(st2.status.code(), Some(0));
    let mut a: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_a).unwrap()).unwrap();
    let mut b: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_b).unwrap()).unwrap();
    // identical modulo the timestamp metadata
    a.as_object_mut().unwrap().remove("meta");
    b.as_object_mut().unwrap().remove("meta");
    assert_eq!(
        serde_json::to_string(&a).unwrap(),
        serde_json::to_string(&b).unwrap()
    );
}

#[test]
fn seed_override_changes_the_digest() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(&dir, "tiny.json", TINY_CONFIG);
    let out_a = dir.path().join("a.json");
    let out_b = dir.path().join("b.json");
    run(&["verify", "--config", cfg.to_str().unwrap(), "--out", out_a.to_str().unwrap()]);
    run(&[
        "verify",
        "--config",
        cfg.to_str().unwrap(),
        "--seed",
        "99",
        "--out",
        out_b.to_str().unwrap(),
    ]);
    let a: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_a).unwrap()).unwrap();
    let b: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_b).unwrap()).unwrap();
    assert_ne!(a["summary"]["config_digest"], b["summary"]["config_digest"]);
    assert_eq!(b["summary"]["seed"], 99);
}

#[test]
fn undefined_function_id_is_a_config_error() {
    let dir = tempfile::tempdir().unwrap();
    let broken = TINY_CONFIG.replace(r#""function": "f""#, r#""function": "nope""#);
    let cfg = write_config(&dir, "broken.json", &broken);
    let out = run(&["verify", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(64));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("checks[0].function"), "stderr: {err}");
    assert!(err.contains("nope"), "stderr: {err}");
}

#[test]
fn empty_check_list_passes_with_zero_checks() {
    let dir = tempfile::tempdir().unwrap();
    let empty = TINY_CONFIG.replace(
        r#""checks": [
    { "check": "bound", "space": "s", "function": "f", "point_re": [0.4], "point_im": [-0.3] },
    { "check": "sup-bound", "space": "s", "function": "f" }
  ]"#,
        r#""checks": []"#,
    );
    let cfg = write_config(&dir, "empty.json", &empty);
    let out = run(&["verify", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["summary"]["total"], 0);
}

#[test]
fn starved_integration_reports_inconclusive_with_status_2() {
    // p = 0.5 forces Monte Carlo; 300 samples cannot reach the convergence
    // target, so the row lands as inconclusive and the exit status is 2.
    let starved = TINY_CONFIG
        .replace(r#""p": 2.0"#, r#""p": 0.5"#)
        .replace(r#""mc_samples": 20000"#, r#""mc_samples": 300"#)
        .replace(
            r#"{ "check": "sup-bound", "space": "s", "function": "f" }"#,
            r#"{ "check": "bound", "space": "s", "function": "f", "point_re": [0.1], "point_im": [0.2] }"#,
        );
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(&dir, "starved.json", &starved);
    let out = run(&["verify", "--config", cfg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "stderr: {}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn exit_code_mapping() {
    use holobound_cli::runner::{exit_code, RunSummary};
    let base = RunSummary {
        pass: 3,
        fail: 0,
        inconclusive: 0,
        total: 3,
        seed: 1,
        config_digest: String::new(),
        parallel: true,
        mc_samples: 0,
        spaces: vec![],
    };
    assert_eq!(exit_code(&base), 0);
    let failing = RunSummary { fail: 1, ..base.clone() };
    assert_eq!(exit_code(&failing), 1);
    let inconclusive = RunSummary { inconclusive: 2, ..base };
    assert_eq!(exit_code(&inconclusive), 2);
}

/// Golden comparison: verdicts match exactly and numeric columns agree to
/// 1e-10 relative, so report regressions surface without binding the test
/// to bit-level formatting.
#[test]
fn golden_reports_for_two_presets() {
    for name in ["fock-theorem-f", "ball-bergman"] {
        let show = run(&["presets", "show", name]);
        assert!(show.status.success());
        let dir = tempfile::tempdir().unwrap();
        let cfg = write_config(&dir, "cfg.json", &String::from_utf8(show.stdout).unwrap());
        let out_path = dir.path().join("report.json");
        let st = run(&[
            "verify",
            "--config",
            cfg.to_str().unwrap(),
            "--out",
            out_path.to_str().unwrap(),
        ]);
        assert_eq!(st.status.code(), Some(0), "{name}");
        let got: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
        let want: serde_json::Value = serde_json::from_str(
            &std::fs::read_to_string(golden_dir().join(format!("{name}.json"))).unwrap(),
        )
        .unwrap();
        let (got_rows, want_rows) = (
            got["results"].as_array().unwrap(),
            want["results"].as_array().unwrap(),
        );
        assert_eq!(got_rows.len(), want_rows.len(), "{name} row count");
        for (g, w) in got_rows.iter().zip(want_rows) {
            for key in ["case_id", "check", "geometry", "verdict", "point", "method"] {
                assert_eq!(g[key], w[key], "{name}: column {key}");
            }
            for key in ["lhs", "rhs", "ratio"] {
                let (gv, wv) = (g[key].as_f64().unwrap(), w[key].as_f64().unwrap());
                assert!(
                    (gv - wv).abs() <= 1e-10 * (1.0 + wv.abs()),
                    "{name}: column {key}: {gv} vs {wv}"
                );
            }
        }
        assert_eq!(got["summary"]["pass"], want["summary"]["pass"], "{name}");
        assert_eq!(
            got["summary"]["config_digest"], want["summary"]["config_digest"],
            "{name}"
        );
    }
}

#[test]
fn csv_report_has_the_documented_columns() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(&dir, "tiny.json", TINY_CONFIG);
    let out = run(&["verify", "--config", cfg.to_str().unwrap(), "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let header = text.lines().next().unwrap();
    assert_eq!(
        header,
        "case_id,check,geometry,n,p,alpha,point,lhs,rhs,ratio,err_est,verdict"
    );
    assert_eq!(text.lines().count(), 3); // header + 2 checks
}
