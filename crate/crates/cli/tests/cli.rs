use std::path::Path;
use std::process::{Command, Output};

use rpt_cli::output::SpectrumDocument;

fn rpt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rpt")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn spectrum_json_round_trip() {
    let o = rpt(&["spectrum", "--alpha", "3.3", "--beta", "1.1", "--epsilon", "0.5"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: SpectrumDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc.schema_version, 1);
    assert_eq!((doc.couplings.alpha, doc.couplings.beta, doc.couplings.epsilon), (3.3, 1.1, 0.5));
    let e: Vec<f64> = doc.states.iter().map(|s| s.energy).collect();
    assert_eq!(e.len(), 3);
    for (g, w) in e.iter().zip([-11.56, -1.96, -1.44]) {
        assert!((g - w).abs() < 1e-13, "{e:?}");
    }
    assert_eq!((doc.states[2].sigma, doc.states[2].tau, doc.states[2].n), (-1, 1, 0));
    let raw: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(raw["report"].is_null());
}

#[test]
fn spectrum_csv_and_fraction_flag() {
    let o = rpt(&["spectrum", "--alpha", "2", "--beta", "2", "--epsilon-frac", "0.5", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "sigma,tau,n,energy,kappa");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].starts_with("-1,-1,0,-9.00000000000e0,"));
}

#[test]
fn wavefunction_csv_shape() {
    let o = rpt(&[
        "wavefunction", "--alpha", "3.3", "--beta", "1.1", "--epsilon", "0.5", "--sigma", "-1", "--tau", "-1",
        "--n", "0", "--xmin", "-8", "--xmax", "8", "--step", "0.01",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(!text.contains('\r'));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,re_psi,im_psi,abs_psi"));
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|v| v.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 1601);
    assert_eq!(rows[0][0], -8.0);
    assert_eq!(rows[1600][0], 8.0);
    for r in &rows {
        assert!((r[1].hypot(r[2]) - r[3]).abs() <= 1e-10 * r[3]);
    }
}

#[test]
fn potential_json_samples() {
    let o = rpt(&[
        "potential", "--alpha", "3.3", "--beta", "1.1", "--epsilon", "0.7853981633974483", "--xmin", "-1",
        "--xmax", "1", "--step", "0.5", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let samples = v["samples"].as_array().unwrap();
    assert_eq!(samples.len(), 5);
    assert!((samples[2]["re_V"].as_f64().unwrap() + 23.2).abs() < 1e-12);
}

#[test]
fn invalid_input_exits_with_two() {
    let cases: &[&[&str]] = &[
        &["spectrum", "--alpha", "0", "--beta", "1", "--epsilon", "0.5"],
        &["spectrum", "--alpha", "1", "--beta", "-0.2", "--epsilon", "0.5"],
        &["spectrum", "--alpha", "1", "--beta", "1", "--epsilon", "1.5707963267948966"],
        &["spectrum", "--alpha", "1", "--beta", "1", "--epsilon", "0"],
        &["spectrum", "--alpha", "1", "--beta", "1", "--epsilon-frac", "1"],
        &["spectrum", "--alpha", "1", "--beta", "1", "--epsilon", "0.5", "--epsilon-frac", "0.3"],
        &["spectrum", "--alpha", "1", "--beta", "1"],
        &["wavefunction", "--alpha", "3.3", "--beta", "1.1", "--epsilon", "0.5", "--sigma", "1", "--tau", "1",
          "--n", "0", "--xmin", "-1", "--xmax", "1", "--step", "0.1"],
        &["wavefunction", "--alpha", "3.3", "--beta", "1.1", "--epsilon", "0.5", "--sigma", "2", "--tau", "1",
          "--n", "0", "--xmin", "-1", "--xmax", "1", "--step", "0.1"],
        &["verify", "--alpha", "3.3", "--beta", "1.1", "--epsilon", "0.5", "--L", "12", "--h", "0.007"],
        &["scan-epsilon", "--alpha", "3.3", "--beta", "1.1", "--eps-list", "0.3,1.7"],
    ];
    for args in cases {
        let o = rpt(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["spectrum", "--alpha", "1.1", "--beta", "3.4", "--epsilon", "0.5"];
    assert_eq!(rpt(&args).stdout, rpt(&args).stdout);
    let wf = [
        "wavefunction", "--alpha", "1.1", "--beta", "3.4", "--epsilon", "0.5", "--sigma", "1", "--tau", "-1",
        "--n", "0", "--xmin", "-3", "--xmax", "3", "--step", "0.05",
    ];
    assert_eq!(rpt(&wf).stdout, rpt(&wf).stdout);
}

#[test]
fn verify_passes_on_the_worked_set() {
    let o = rpt(&["verify", "--alpha", "3.3", "--beta", "1.1", "--epsilon", "0.5"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["report"]["passed"], serde_json::Value::Bool(true));
    assert_eq!(v["report"]["states"].as_array().unwrap().len(), 3);
    assert_eq!(v["states"].as_array().unwrap().len(), 3);
}

#[test]
fn scan_epsilon_report() {
    let o = rpt(&["scan-epsilon", "--alpha", "3.3", "--beta", "1.1", "--eps-list", "0.3,0.8,1.2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let scan = v["report"]["epsilon_scan"].as_array().unwrap();
    assert_eq!(scan.len(), 3);
    assert!(v["report"]["max_pairwise_energy_deviation"].as_f64().unwrap() <= 1e-4);
    assert_eq!(v["couplings"]["epsilon"].as_f64(), Some(0.3));
}

#[test]
fn writes_to_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spectrum.json");
    let o = rpt(&[
        "spectrum", "--alpha", "3.3", "--beta", "1.1", "--epsilon", "0.5", "--output", path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let doc: SpectrumDocument = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc.states.len(), 3);
    let direct = rpt(&["spectrum", "--alpha", "3.3", "--beta", "1.1", "--epsilon", "0.5"]);
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);

    let missing = dir.path().join("no").join("such").join("dir.json");
    let o = rpt(&["spectrum", "--alpha", "3.3", "--beta", "1.1", "--epsilon", "0.5", "--output", missing.to_str().unwrap()]);
    assert_ne!(o.status.code(), Some(0));
    assert!(!Path::new(&missing).exists());
}

#[test]
fn in_process_entry_point() {
    assert_eq!(rpt_cli::run_from_args(["rpt", "spectrum", "--alpha", "0.4", "--beta", "0.4", "--epsilon", "0.5", "--format", "csv"]), 0);
    assert_eq!(rpt_cli::run_from_args(["rpt", "spectrum", "--alpha", "-1", "--beta", "0.4", "--epsilon", "0.5"]), 2);
}
