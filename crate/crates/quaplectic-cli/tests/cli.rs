use std::process::{Command, Output};

use quaplectic::liealg::{algebra_from_json, builtin_algebra};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quaplectic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn value(out: &str, key: &str) -> String {
    out.lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix(' ')))
        .unwrap_or_else(|| panic!("no `{key}` line in\n{out}"))
        .to_string()
}

#[test]
fn hamilton_composition() {
    let o = run(&["compose", "--kind", "hamilton", "--p1", "4,5,6", "--p2", "1,2,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "5 7 12\n");
}

#[test]
fn poincare_has_no_extension() {
    let o = run(&["extend", "--algebra", "poincare13"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("h2_dim 0"));
}

#[test]
fn inhomogeneous_unitary_has_one_extension() {
    for alg in ["inhom_unitary(1,1)", "inhom_unitary13"] {
        let o = run(&["extend", "--algebra", alg]);
        assert_eq!(value(&stdout(&o), "h2_dim"), "1", "{alg}");
    }
}

#[test]
fn null_surface_transform_is_rejected() {
    let o = run(&["transform", "--kind", "reciprocal", "--params", "0.6,0.8,0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("domain"));
    assert!(o.stdout.is_empty());
}

#[test]
fn input_errors_exit_with_one() {
    for args in [
        &["bogus"][..],
        &["compose", "--kind", "hamilton", "--p1", "1,2", "--p2", "1,2,3"],
        &["compose", "--kind", "warp", "--p1", "1,2,3", "--p2", "1,2,3"],
        &["extend", "--algebra", "nonsense7"],
        &["extend"],
        &["rep-check", "--sig", "1,1", "--cutoff", "2"],
        &["contract", "--algebra", "su11", "--weights", "0,0,3"],
        &["jacobi", "--file", "/nonexistent/algebra.json"],
    ] {
        assert_eq!(run(args).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn negative_parameters_parse() {
    let o = run(&["compose", "--kind", "hamilton", "--p1", "-1,-2,-3", "--p2", "1,2,3"]);
    assert_eq!(stdout(&o), "0 0 0\n");
}

#[test]
fn velocity_addition_prints_seventeen_digits() {
    let o = run(&["compose", "--kind", "reciprocal", "--p1", "0.5,0,0", "--p2", "0.5,0,0"]);
    assert_eq!(stdout(&o), "0.80000000000000004 0 0\n");
}

#[test]
fn dimensional_constants_are_honored() {
    let o = run(&["null-surface", "--params", "1.8,4,0", "--c", "3", "--b", "5"]);
    assert_eq!(stdout(&o), "residual 0\nfixed_point true\n");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &[
            "transform",
            "--kind",
            "reciprocal",
            "--params",
            "0.3,-0.2,0.1",
            "--apply",
            "1,2,3,4",
        ][..],
        &["extend", "--algebra", "inhom_unitary13"],
        &["casimir", "--sig", "1,1", "--cutoff", "6", "--order", "3"],
        &["spectrum", "--operator", "oscillator-combined"],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn exported_algebra_reloads_identically() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.json");
    let p = path.to_str().unwrap();
    let o = run(&["jacobi", "--algebra", "quaplectic13", "--export", p]);
    assert_eq!(o.status.code(), Some(0));
    let loaded = algebra_from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(loaded, builtin_algebra("quaplectic13").unwrap());
    let again = run(&["extend", "--file", p]);
    assert_eq!(value(&stdout(&again), "h2_dim"), "0");
}

#[test]
fn contraction_presets() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let o = run(&[
        "contract",
        "--algebra",
        "unitary13",
        "--preset",
        "nr",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(value(&out, "killing_signature"), "0 9");
    assert_eq!(value(&out, "center"), "1");
    assert!(algebra_from_json(&std::fs::read_to_string(&path).unwrap()).is_ok());
    let sr = stdout(&run(&["contract", "--algebra", "unitary13", "--preset", "sr"]));
    assert_eq!(value(&sr, "killing_signature"), "3 3");
}

#[test]
fn representation_checks_pass_and_fail_on_tolerance() {
    let o = run(&["rep-check", "--sig", "1,1", "--cutoff", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(value(&stdout(&o), "w_exact_zero"), "true");
    let strict = run(&["rep-check", "--sig", "1,1", "--cutoff", "8", "--tol", "0"]);
    assert_eq!(strict.status.code(), Some(2));
}

#[test]
fn coarse_grid_is_a_tolerance_failure() {
    let o = run(&["spectrum", "--operator", "oscillator", "--stencil", "second"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn spectrum_csv() {
    let o = run(&["spectrum", "--operator", "number", "--sig", "0,1", "--cutoff", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("index,eigenvalue,method"));
    let vals: Vec<f64> = lines.map(|l| l.split(',').nth(1).unwrap().parse().unwrap()).collect();
    assert_eq!(vals.len(), 5);
    for (n, v) in vals.iter().enumerate() {
        assert!((v - n as f64).abs() < 1e-12);
    }

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("osc.csv");
    let o = run(&[
        "spectrum",
        "--operator",
        "oscillator",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("index,eigenvalue,method\n0,"));
    assert!(csv.lines().nth(1).unwrap().ends_with(",grid"));
}

#[test]
fn wave_operator_with_central_eps_block() {
    let dir = tempfile::tempdir().unwrap();
    let eps = dir.path().join("eps.json");
    std::fs::write(
        &eps,
        r#"{"dim":1,"modes":2,"ops":[{"a":0,"b":0,"re":[-0.5]},{"a":1,"b":1,"re":[0.5]}]}"#,
    )
    .unwrap();
    let csv = dir.path().join("w.csv");
    let o = run(&[
        "wave",
        "--sig",
        "1,1",
        "--cutoff",
        "6",
        "--k",
        "3",
        "--eps",
        eps.to_str().unwrap(),
        "--output",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(value(&stdout(&o), "hermiticity"), "0");
    let rows = std::fs::read_to_string(&csv).unwrap().lines().count();
    assert_eq!(rows, 1 + 49 * 49);
}

#[test]
fn casimir_report() {
    let o = run(&["casimir", "--sig", "1,1", "--cutoff", "8", "--order", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let n: f64 = value(&out, "n").parse().unwrap();
    assert!((n + 1.0).abs() < 1e-10);
    let g3: f64 = value(&out, "g_identity 3").parse().unwrap();
    assert!(g3 < 1e-10);
}
