use std::fs;
use std::process::{Command, Output};

fn laqc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_laqc")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn field(text: &str, key: &str) -> f64 {
    let v: serde_json::Value = serde_json::from_str(text).unwrap();
    v[key].as_f64().unwrap_or_else(|| panic!("missing {key} in {text}"))
}

#[test]
fn singlet_report() {
    let o = laqc(&["compute", "--family", "werner", "--param", "1", "--format", "json"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!((field(&text, "laqc") - 1.0).abs() <= 1e-9);
    assert!((field(&text, "concurrence") - 1.0).abs() <= 1e-9);
    assert!((field(&text, "mutual_information") - 2.0).abs() <= 1e-9);
}

#[test]
fn separable_endpoint_is_zero() {
    let o = laqc(&["compute", "--family", "psi-minus-mix", "--param", "0", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let row = text.lines().nth(1).unwrap();
    assert!(row.split(',').all(|v| v.parse::<f64>().unwrap().abs() <= 1e-12), "{row}");
}

#[test]
fn werner_ad_flags() {
    let o = laqc(&["compute", "--z", "0.8", "--p", "0.3", "--format", "json"]);
    assert!(o.status.success());
    assert!(field(&stdout(&o), "laqc") > 0.0);
}

#[test]
fn invalid_trace_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rho.json");
    let one = r#"{"re": 1}"#;
    let zero = r#"{"re": 0}"#;
    let rows: Vec<String> = (0..4)
        .map(|r| format!("[{}]", (0..4).map(|c| if r == c { one } else { zero }).collect::<Vec<_>>().join(",")))
        .collect();
    fs::write(&path, format!("[{}]", rows.join(","))).unwrap();
    let o = laqc(&["compute", "--matrix", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unit-trace"));
}

#[test]
fn missing_input_exits_3() {
    let o = laqc(&["compute", "--bloch", "/nonexistent/state.json"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn unwritable_output_exits_3() {
    let o = laqc(&["compute", "--family", "werner", "--param", "0.3", "--out", "/nonexistent/dir/out.txt"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn non_x_state_needs_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bloch.json");
    fs::write(&path, r#"{"x3": 0.3, "y3": 0.1, "T1": 0.2, "T2": -0.1, "T3": 0.1}"#).unwrap();
    let o = laqc(&["compute", "--bloch", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = laqc(&["compute", "--bloch", path.to_str().unwrap(), "--oracle", "--grid", "16", "--format", "json"]);
    assert!(o.status.success());
    assert_eq!(serde_json::from_slice::<serde_json::Value>(&o.stdout).unwrap()["source"], "oracle");
}

#[test]
fn preset_sweep_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        let o = laqc(&["sweep", "--preset", "fig4", "--out", path.to_str().unwrap()]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    }
    let first = fs::read(&a).unwrap();
    assert_eq!(first, fs::read(&b).unwrap());
    let text = String::from_utf8(first).unwrap();
    assert_eq!(text.lines().next(), Some("F,gplus,g1"));
    assert_eq!(text.lines().count(), 102);
}

#[test]
fn generic_family_sweep() {
    let o = laqc(&["sweep", "--family", "werner", "--points", "5", "--quantities", "laqc,concurrence"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("z,laqc,concurrence"));
    assert_eq!(text.lines().count(), 6);
}

#[test]
fn oracle_agrees_on_werner() {
    let o = laqc(&["oracle", "--family", "werner", "--param", "0.5", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["closed_form"]["laqc_difference"].as_f64().unwrap() < 1e-5);
    assert!(v["closed_form"]["classical_difference"].as_f64().unwrap() < 1e-5);
}

#[test]
fn oracle_flags_degeneracy_for_maximally_mixed() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mixed.json");
    fs::write(&path, r#"{"x3": 0, "y3": 0, "T1": 0, "T2": 0, "T3": 0}"#).unwrap();
    let o = laqc(&["oracle", "--bloch", path.to_str().unwrap()]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("degenerate=yes"), "{text}");
}

#[test]
fn channel_output_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("evolved.json");
    let o = laqc(&[
        "channel", "--family", "werner", "--param", "0.8", "--channel", "amplitude-damping", "--p", "0.3", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let direct = laqc(&["compute", "--z", "0.8", "--p", "0.3", "--format", "json"]);
    let loaded = laqc(&["compute", "--matrix", path.to_str().unwrap(), "--format", "json"]);
    let (a, b) = (stdout(&direct), stdout(&loaded));
    for key in ["laqc", "classical", "discord", "concurrence"] {
        assert!((field(&a, key) - field(&b, key)).abs() <= 1e-12, "{key}");
    }
}
