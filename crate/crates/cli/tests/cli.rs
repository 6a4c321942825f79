use std::process::{Command, Output};

fn covolume(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_covolume")).args(args).env_remove("COVOLUME_PRECISION").output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn nu_json_carries_exact_chi() {
    let out = covolume(&["nu", "--d", "3", "--n", "9", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["chi"], "-809/5746705367040");
    assert_eq!(v["exact"], true);
}

#[test]
fn nu_defaults_to_json_when_piped() {
    let out = covolume(&["nu", "--d", "3", "--n", "2"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["nu"], "1/72");
    let vol = v["volume"].as_f64().unwrap();
    let expected = std::f64::consts::PI.powi(2) / 27.0;
    assert!((vol - expected).abs() / expected < 1e-11);
}

#[test]
fn interval_row_for_two_ramified_primes() {
    let out = covolume(&["nu", "--d", "5", "--n", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["exact"], false);
    let lo: covolume_core::ExactRational = v["nu"]["lower"].as_str().unwrap().parse().unwrap();
    let hi: covolume_core::ExactRational = v["nu"]["upper"].as_str().unwrap().parse().unwrap();
    assert_eq!(hi.checked_div(&lo).unwrap(), covolume_core::ExactRational::from(2i64));
    assert_eq!(v["epsilon"], "2..4");
}

#[test]
fn scan_csv_header_and_order() {
    let out = covolume(&["scan", "--n", "2", "--max-disc", "30", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "d,disc,n,nu,chi,volume,h,h_torsion,r,epsilon,mult_lo,mult_hi,exact");
    assert!(lines.next().unwrap().starts_with("3,3,2,1/72,"));
    let discs: Vec<u64> = text.lines().skip(1).map(|l| l.split(',').nth(1).unwrap().parse().unwrap()).collect();
    assert!(discs.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn minimal_commands() {
    let out = covolume(&["minimal", "--n", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["result"]["d"], 3);

    let out = covolume(&["minimal", "--n", "2", "--verbose", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let gauss = v["certificate"]["candidates"].as_array().unwrap().iter().find(|c| c["d"] == 1).unwrap();
    assert_eq!(gauss["nu"], "1/32");

    let out = covolume(&["minimal", "--overall", "--n-max", "30", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["n_star"], 9);
    assert_eq!(v["n_star_volume"], 9);
}

#[test]
fn growth_hwang_classgroup() {
    let out = covolume(&["growth", "--d", "3", "--n-from", "9", "--n-to", "9", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["q"], "20317/60");

    let out = covolume(&["hwang", "--n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!((v["bound"].as_f64().unwrap() - 1.193_602_951).abs() < 1e-9);

    let out = covolume(&["classgroup", "--d", "23", "--torsion", "2", "--torsion", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["h"], 3);
    assert_eq!(v["torsion"][0]["count"], 1);
    assert_eq!(v["torsion"][1]["count"], 3);
}

#[test]
fn table_format_is_aligned_text() {
    let out = covolume(&["nu", "--d", "3", "--n", "2", "--format", "table"]);
    let text = stdout(&out);
    assert!(text.starts_with("d  disc  n  nu"));
    assert!(text.lines().nth(1).unwrap().starts_with("-  ----"));
}

#[test]
fn selfcheck_runs() {
    let out = covolume(&["selfcheck", "--quick", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 4);
    let out = covolume(&["selfcheck"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn precision_variable_tightens_only() {
    let run = |value: &str| {
        Command::new(env!("CARGO_BIN_EXE_covolume"))
            .args(["selfcheck", "--quick", "--format", "json"])
            .env("COVOLUME_PRECISION", value)
            .output()
            .unwrap()
    };
    let out = run("1e-30");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("d=3 n="));
    let out = run("1e-3");
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("\"tolerance\":1e-9"));
    assert_eq!(run("abc").status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["nu", "--d", "4", "--n", "2"][..],
        &["nu", "--d", "3", "--n", "1"],
        &["nu", "--d", "3"],
        &["scan", "--n", "2", "--max-disc", "2"],
        &["minimal"],
        &["minimal", "--overall", "--n-max", "5"],
        &["frobnicate"],
        &["nu", "--d", "3", "--n", "2", "--format", "xml"],
    ] {
        let out = covolume(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}
