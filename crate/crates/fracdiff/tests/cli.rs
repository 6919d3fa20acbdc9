use std::f64::consts::PI;
use std::fs;
use std::process::{Command, Output};

fn fracdiff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fracdiff"))
        .args(args)
        .env_remove("FRACDIFF_TOL_FILE")
        .output()
        .expect("binary runs")
}

fn rows(out: &Output) -> Vec<csv::StringRecord> {
    csv::Reader::from_reader(out.stdout.as_slice())
        .records()
        .map(|r| r.unwrap())
        .collect()
}

fn num(record: &csv::StringRecord, i: usize) -> f64 {
    record[i].parse().unwrap()
}

#[test]
fn step_half_derivative_table() {
    let out = fracdiff(&[
        "differint",
        "--kernel",
        "step",
        "--order",
        "0.5",
        "--grid",
        "0.1:5:50",
        "--method",
        "closed",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert!(text.starts_with("x,re,im,method,error_bound,status\n"));
    let rows = rows(&out);
    assert_eq!(rows.len(), 50);
    assert_eq!(num(&rows[0], 0), 0.1);
    assert_eq!(num(&rows[49], 0), 5.0);
    for r in &rows {
        let x = num(r, 0);
        assert!((num(r, 1) - 1.0 / (PI * x).sqrt()).abs() < 1e-14);
        assert_eq!(num(r, 2), 0.0);
        assert_eq!(&r[3], "closed");
        assert_eq!(&r[5], "ok");
    }
}

#[test]
fn zeroth_order_is_identity() {
    let out = fracdiff(&["differint", "--kernel", "step", "--order", "0", "--grid", "0.5:3:6"]);
    assert!(out.status.success());
    assert!(rows(&out).iter().all(|r| num(r, 1) == 1.0));
}

#[test]
fn bromwich_rows_agree_with_closed_within_bound() {
    let grid = ["--grid", "0.5:2:4"];
    let base = ["differint", "--kernel", "step", "--order", "0.25"];
    let closed = fracdiff(&[&base[..], &grid[..], &["--method", "closed"]].concat());
    let line = fracdiff(&[&base[..], &grid[..], &["--method", "bromwich"]].concat());
    assert!(closed.status.success() && line.status.success());
    for (c, b) in rows(&closed).iter().zip(rows(&line).iter()) {
        let delta = (num(c, 1) - num(b, 1)).hypot(num(c, 2) - num(b, 2));
        assert!(delta <= num(b, 4), "delta {delta:e} bound {}", &b[4]);
    }
}

#[test]
fn output_is_deterministic_and_json_mirrors_csv() {
    let args = [
        "differint",
        "--kernel",
        "exp",
        "--b",
        "-1.5",
        "--order",
        "0.5",
        "--grid",
        "0.2:4:25",
    ];
    let a = fracdiff(&args);
    let b = fracdiff(&args);
    assert_eq!(a.stdout, b.stdout);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.json");
    let json_args = [&args[..], &["--format", "json", "--out", path.to_str().unwrap()]].concat();
    let j = fracdiff(&json_args);
    assert!(j.status.success());
    assert!(j.stdout.is_empty());
    let parsed: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let objs = parsed.as_array().unwrap();
    let csv_rows = rows(&a);
    assert_eq!(objs.len(), csv_rows.len());
    for (o, r) in objs.iter().zip(&csv_rows) {
        assert_eq!(o["re"].as_f64().unwrap(), num(r, 1));
        assert_eq!(o["im"].as_f64().unwrap(), num(r, 2));
        assert_eq!(o["status"], "ok");
    }
}

#[test]
fn physical_option_keeps_real_part() {
    let full = fracdiff(&["differint", "--kernel", "exp", "--order", "0.5", "--grid", "1:2:3"]);
    let phys = fracdiff(&[
        "differint",
        "--kernel",
        "exp",
        "--order",
        "0.5",
        "--grid",
        "1:2:3",
        "--physical",
    ]);
    let text = String::from_utf8(phys.stdout.clone()).unwrap();
    assert!(text.starts_with("x,value,method,error_bound,status\n"));
    for (f, p) in rows(&full).iter().zip(rows(&phys).iter()) {
        assert_eq!(num(f, 1), num(p, 1));
    }
}

#[test]
fn gl_method_tracks_closed_form() {
    let base = [
        "differint",
        "--kernel",
        "power",
        "--mu",
        "0.75",
        "--order",
        "0.25",
        "--grid",
        "0.5:2:4",
    ];
    let closed = fracdiff(&[&base[..], &["--method", "closed"]].concat());
    let gl = fracdiff(&[&base[..], &["--method", "gl"]].concat());
    for (c, g) in rows(&closed).iter().zip(rows(&gl).iter()) {
        assert!((num(c, 1) - num(g, 1)).abs() < 1e-3 * num(c, 1).abs());
    }
}

#[test]
fn integration_constants_on_negative_integer_orders() {
    let out = fracdiff(&[
        "differint",
        "--kernel",
        "step",
        "--order",
        "-2",
        "--grid",
        "1:2:2",
        "--constants",
        "1,0.5",
    ]);
    assert!(out.status.success());
    let r = rows(&out);
    assert_eq!(num(&r[1], 1), 4.0);
}

#[test]
fn exit_codes() {
    let usage = [
        vec![
            "differint",
            "--kernel",
            "delta",
            "--order",
            "0.5",
            "--grid",
            "1:2:3",
            "--method",
            "gl",
        ],
        vec!["differint", "--kernel", "step", "--order", "0.5", "--grid", "1:2:1"],
        vec![
            "differint",
            "--kernel",
            "step",
            "--order",
            "0.5",
            "--grid",
            "1:2:3",
            "--constants",
            "1",
        ],
        vec!["differint", "--kernel", "teapot", "--order", "0.5", "--grid", "1:2:3"],
        vec!["cable", "--x-grid", "0.01:1:3", "--pde-h", "0.1"],
        vec!["cable", "--r", "-1"],
        vec!["specfun", "--function", "rgamma", "--grid", "1:2:3", "--arg", "1"],
        vec!["verify", "--suite", "nonsense"],
    ];
    for args in &usage {
        assert_eq!(fracdiff(args).status.code(), Some(2), "{args:?}");
    }

    let numeric = fracdiff(&["differint", "--kernel", "step", "--order", "2", "--grid", "1:2:3"]);
    assert_eq!(numeric.status.code(), Some(3));
    let r = rows(&numeric);
    assert_eq!(r.len(), 3);
    assert!(r.iter().all(|row| row[1].is_empty() && row[5].contains("δ^(1)")));

    let pole = fracdiff(&["specfun", "--function", "gamma", "--grid", "-2:1:4"]);
    assert_eq!(pole.status.code(), Some(3));
    let r = rows(&pole);
    assert!(r[..3].iter().all(|row| row[5].contains("pole")));
    assert_eq!(&r[3][5], "ok");
}

#[test]
fn verify_suite_filter_and_tolerance_file() {
    let out = fracdiff(&["verify", "--suite", "kummer"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let checks: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with("PASS") || l.starts_with("FAIL"))
        .collect();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|l| l.contains("[kummer]")));

    let dir = tempfile::tempdir().unwrap();
    let tight = dir.path().join("tight.toml");
    fs::write(&tight, "kummer_rel = 1e-30\n").unwrap();
    let flagged = fracdiff(&["verify", "--suite", "kummer", "--tol-file", tight.to_str().unwrap()]);
    assert_eq!(flagged.status.code(), Some(1));

    let via_env = Command::new(env!("CARGO_BIN_EXE_fracdiff"))
        .args(["verify", "--suite", "kummer"])
        .env("FRACDIFF_TOL_FILE", &tight)
        .output()
        .unwrap();
    assert_eq!(via_env.status.code(), Some(1));

    let broken = dir.path().join("broken.toml");
    fs::write(&broken, "no_such_tolerance = 1\n").unwrap();
    assert_eq!(
        fracdiff(&["verify", "--tol-file", broken.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn shown_tolerances_round_trip_as_override_file() {
    let dir = tempfile::tempdir().unwrap();
    let tight = dir.path().join("tight.toml");
    fs::write(&tight, "kummer_rel = 1e-30\n").unwrap();
    let shown = fracdiff(&["verify", "--show-tolerances", "--tol-file", tight.to_str().unwrap()]);
    assert!(shown.status.success());
    let text = String::from_utf8(shown.stdout).unwrap();
    assert!(text.contains("kummer_rel = 1e-30"), "{text}");

    let dumped = dir.path().join("dumped.toml");
    fs::write(&dumped, &text).unwrap();
    let rerun = fracdiff(&["verify", "--suite", "kummer", "--tol-file", dumped.to_str().unwrap()]);
    assert_eq!(rerun.status.code(), Some(1));
}

#[test]
fn verify_cable_suite() {
    let out = fracdiff(&["verify", "--suite", "cable"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text
        .lines()
        .filter(|l| l.starts_with("PASS"))
        .all(|l| l.contains("[cable]")));
}

#[test]
fn cable_default_sweep() {
    let out = fracdiff(&["cable", "--x-grid", "0.1:2:20", "--t-grid", "0.5:10:20"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = rows(&out);
    assert_eq!(rows.len(), 400);
    assert!(rows.iter().all(|r| num(r, 7) <= 1e-9));

    let k = (0.5f64).sqrt();
    let at_t0: Vec<_> = rows.iter().filter(|r| num(r, 1) == 0.5).collect();
    assert_eq!(at_t0.len(), 20);
    for r in &at_t0 {
        let modulus = num(r, 2).hypot(num(r, 3));
        assert!((modulus - (-k * num(r, 0)).exp()).abs() < 1e-14);
    }

    for chunk in rows.chunks(20) {
        let habitual: Vec<f64> = chunk.iter().map(|r| num(r, 8)).collect();
        assert!(habitual.windows(2).all(|w| w[1] < w[0]), "{habitual:?}");
    }
}
