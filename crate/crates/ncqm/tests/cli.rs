//! Black-box runs of the `ncqm` binary.

use std::process::Command;

use serde_json::Value;

fn ncqm(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ncqm"))
        .args(args)
        .env("NCQM_THREADS", "2")
        .output()
        .unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let (code, out) = ncqm(args);
    (code, serde_json::from_str(&out).unwrap())
}

#[test]
fn classify_generic_point() {
    let (code, v) = json(&["classify", "--F", "0,0,0,0,1,1,2", "--abg", "1,1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["family"], "Generic4D");
    assert_eq!(v["dimension"], 4);
    assert_eq!(v["ok"], true);
}

#[test]
fn classify_surface_point() {
    let (code, v) = json(&["classify", "--F", "1,2,3,4,1,1,1", "--abg", "1,1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["family"], "Surface2D");
    assert_eq!(v["det_w"], "0/1");
}

#[test]
fn surface_csv_rows_lie_on_det_w_zero() {
    let dir = std::env::temp_dir().join(format!("ncqm-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("pts.csv");
    let (code, v) = json(&[
        "surface",
        "--which",
        "s-rho-zeta",
        "--abg",
        "2,3,5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{v}");
    let csv = std::fs::read_to_string(&path).unwrap();
    let mut rows = 0;
    for line in csv.lines().skip(1) {
        let x: Vec<f64> = line.split(',').map(|s| s.parse().unwrap()).collect();
        let (rho, sigma, tau) = (x[0], x[1], x[2]);
        // det_w = α²ρ² − βγστ with (α, β, γ) = (2, 3, 5)
        assert!(
            (4.0 * rho * rho - 15.0 * sigma * tau).abs() <= 1e-9 * (1.0 + rho * rho),
            "{line}"
        );
        rows += 1;
    }
    assert_eq!(rows, v["count"].as_u64().unwrap() as usize);
    assert!(rows > 0);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_reports_each_criterion() {
    let (code, v) = json(&["verify", "--suite", "all", "--seed", "7"]);
    assert_eq!(code, 0, "{v}");
    let criteria = v["criteria"].as_array().unwrap();
    assert_eq!(criteria.len(), 12);
    assert!(criteria.iter().all(|c| c["pass"] == true && c["name"].is_string()));
    let total: u64 = v["suites"]
        .as_object()
        .unwrap()
        .values()
        .map(|s| s["passed"].as_u64().unwrap())
        .sum();
    assert_eq!(total, 12);
}

#[test]
fn identical_arguments_give_identical_bytes() {
    for args in [
        &["verify", "--suite", "orbits", "--seed", "3"][..],
        &["transform-gens", "--random", "--seed", "9"][..],
        &[
            "uir-check",
            "--label",
            "surface",
            "--params",
            "1/2,-1,2,3",
            "--trials",
            "10",
        ][..],
    ] {
        assert_eq!(ncqm(args), ncqm(args));
    }
}

#[test]
fn exit_codes() {
    assert_eq!(ncqm(&["compose", "--g1", "1,2,3"]).0, 2);
    assert_eq!(ncqm(&["nonsense"]).0, 2);
    assert_eq!(ncqm(&["orbit-rep", "--family", "Generic4D", "--params", "0,1,1"]).0, 2);
    let (code, v) = json(&["biorthogonality", "--max", "1", "--g", "sym:1/4"]);
    assert_eq!(code, 2, "{v}");
    let (code, v) = json(&[
        "gauge-matrix",
        "--landau-to-sym",
        "--hbar",
        "1",
        "--vartheta",
        "1",
        "--Bcal",
        "1",
    ]);
    assert_eq!(code, 1);
    assert!(v["error"].as_str().unwrap().contains("degenerate"));
}

#[test]
fn hermite_and_biorthogonality() {
    let (code, v) = json(&["hermite", "--n", "2", "--k", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["exact"]["sqrt"], "2");
    let (code, v) = json(&[
        "biorthogonality",
        "--max",
        "2",
        "--g",
        "polar:0.6,0.3,1.1",
        "--vartheta",
        "1/2",
    ]);
    assert_eq!(code, 0, "{v}");
    assert!(v["max_deviation"].as_f64().unwrap() < 1e-10);
}

#[test]
fn exact_commutators_for_every_case() {
    for case in [
        "landau",
        "degenerate-1d",
        "theta-only",
        "landau-system",
        "standard-qm",
        "two-nc-planes",
        "nc-plane-momentum",
        "nc-plane-position",
        "trivial",
        "symmetric",
    ] {
        let (code, v) = json(&[
            "commutators",
            "--case",
            case,
            "--hbar",
            "1",
            "--vartheta",
            "3/4",
            "--Bcal",
            "1",
            "--extra",
            "1,2,3,4",
        ]);
        assert_eq!(code, 0, "{case}: {v}");
        assert_eq!(v["exact"], true, "{case}");
    }
}
