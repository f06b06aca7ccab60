use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn workbench(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_abc-workbench"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("abc-workbench-{}-{name}", std::process::id()))
}

#[test]
fn wave_report() {
    let v = json(&workbench(&["wave", "--a", "-1", "--b", "1", "--c", "-1", "--eta0", "-1.5", "--n", "1024"]));
    assert_eq!(v["schema_version"], "1.0");
    assert_eq!(v["command"], "wave");
    assert_eq!(v["wave"]["w"].as_f64().unwrap(), 0.0);
    assert!((v["wave"]["lambda"].as_f64().unwrap() - 0.5).abs() < 1e-15);
    assert!((v["wave"]["B"].as_f64().unwrap() - std::f64::consts::SQRT_2).abs() < 1e-12);
    assert!(v["residuals"]["r1"].as_f64().unwrap() < 1e-9);
    assert!(v["residuals"]["r2"].as_f64().unwrap() < 1e-9);
    assert_eq!(v["grid"]["half_length"].as_f64().unwrap(), 100.0);
}

#[test]
fn reports_are_reproducible_apart_from_the_timestamp() {
    let args = ["index", "--eta0", "-1", "--n", "256"];
    let strip = |o: Output| -> String {
        String::from_utf8(o.stdout)
            .unwrap()
            .lines()
            .filter(|l| !l.contains("\"generated_at\""))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(workbench(&args)), strip(workbench(&args)));
}

#[test]
fn invalid_input_exits_with_two() {
    for args in [
        vec!["wave", "--a", "1", "--eta0", "-1"],
        vec!["wave", "--eta0", "-1", "--re-tol", "0"],
        vec!["wave"],
        vec!["wave", "--eta0", "-1", "--n", "7"],
        vec!["scan", "--from", "1"],
    ] {
        let out = workbench(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn flags_override_the_config_file() {
    let path = scratch("precedence.conf");
    std::fs::write(&path, "# test settings\na = -1\nb = 1\nc = -1\neta0 = -1.0\nn = 128\nformat = json\n").unwrap();
    let v = json(&workbench(&["wave", "--config", path.to_str().unwrap(), "--eta0", "-0.5"]));
    std::fs::remove_file(&path).ok();
    assert_eq!(v["wave"]["eta0"].as_f64().unwrap(), -0.5);
    assert_eq!(v["grid"]["n_points"].as_u64().unwrap(), 128);
}

#[test]
fn traveling_index_and_verdict() {
    let v = json(&workbench(&["index", "--eta0", "-1", "--n", "512"]));
    let closed = v["index"]["index_value"].as_f64().unwrap();
    assert!((closed + 432.0 / 35.0).abs() < 1e-10);
    assert!((v["index_numeric"].as_f64().unwrap() - closed).abs() < 1e-6 * closed.abs());
    assert_eq!(v["index"]["method"], "closed_form");
    assert_eq!(v["index_sign"], "neg");

    let v = json(&workbench(&["jl-spectrum", "--eta0", "-1", "--n", "512"]));
    assert_eq!(v["verdict"]["verdict"], "stable");
    assert_eq!(v["verdict"]["n_tilde_L"], 1);
    assert!(v["spectrum"]["max_real_part"].as_f64().unwrap() < 1e-6);
}

#[test]
fn indeterminate_index_exits_with_four() {
    let out = workbench(&["index", "--eta0", "-1", "--n", "256", "--len", "80", "--index-tol", "100"]);
    assert_eq!(out.status.code(), Some(4));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["index_sign"], "indeterminate");
}

#[test]
fn csv_outputs() {
    let out = workbench(&["spectrum", "--eta0", "-1", "--n", "256", "--len", "80", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("k,eigenvalue\n"));
    let lowest: f64 = text.lines().nth(1).unwrap().split(',').nth(1).unwrap().parse().unwrap();
    assert!(lowest < 0.0);

    let path = scratch("profile.csv");
    let out = workbench(&["wave", "--eta0", "-1", "--n", "64", "--format", "csv", "--output", path.to_str().unwrap()]);
    assert!(out.status.success() && out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(text.lines().count(), 65);
    assert!(text.starts_with("x,phi,psi\n"));
}

#[test]
fn ratio_scan_rows_are_ordered_and_thread_independent() {
    let args = [
        "scan", "--param", "z", "--from", "1", "--to", "20", "--steps", "3", "--n", "768", "--len", "120",
    ];
    let run = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_abc-workbench"))
            .args(args)
            .env("WORKBENCH_THREADS", threads)
            .output()
            .unwrap();
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
        String::from_utf8(out.stdout).unwrap()
    };
    let serial = run("1");
    assert_eq!(serial, run("3"));
    let mut lines = serial.lines();
    assert_eq!(
        lines.next().unwrap(),
        "z,w,n_tilde_L,index_value,lower_bound,upper_bound,max_real_JL,verdict"
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.iter().map(|r| r[0]).collect::<Vec<_>>(), ["1", "10.5", "20"]);
    assert_eq!(rows[0][7], "stable");
    assert_eq!(rows[2][7], "unstable");
    // The z = 1 point is on the traveling family, which has no bounds.
    assert_eq!((rows[0][4], rows[0][5]), ("", ""));
    for r in &rows[1..] {
        let (lo, idx, hi): (f64, f64, f64) = (r[4].parse().unwrap(), r[3].parse().unwrap(), r[5].parse().unwrap());
        assert!(lo - 1e-6 <= idx && idx <= hi + 1e-6, "{r:?}");
    }
}

#[test]
fn failing_scan_points_are_annotated() {
    // eta0 = 0 is the trivial wave.
    let out = workbench(&["scan", "--from", "-1", "--to", "0", "--steps", "2", "--n", "512"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let verdicts: Vec<&str> = text.lines().skip(1).map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(verdicts, ["stable", "error"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn threshold_search() {
    let v = json(&workbench(&["threshold", "--zmin", "8", "--zmax", "12", "--tol", "1e-2", "--n", "512", "--len", "80"]));
    assert_eq!(v["status"], "converged");
    let z = v["result"]["z_star"].as_f64().unwrap();
    let bracket = v["analytic_bracket"].as_array().unwrap();
    assert!(z > bracket[0].as_f64().unwrap() && z < bracket[1].as_f64().unwrap(), "{z}");

    let v = json(&workbench(&["threshold", "--zmin", "2", "--zmax", "3", "--n", "512", "--len", "80"]));
    assert_eq!(v["status"], "no_sign_change");
    assert!(v["result"].is_null());
    assert!(v["index_at_zmin"].as_f64().unwrap() < 0.0);
}
