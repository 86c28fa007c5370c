//! End-to-end checks of the command-line surface: flag parsing, exit codes,
//! JSON schema stability and the describe -> residual round trip.

use serde_json::Value;

fn run_capture(args: &[&str], out: &std::path::Path) -> (i32, Value) {
    let mut argv = vec!["grs3d"];
    argv.extend_from_slice(args);
    argv.push("--output");
    let out_str = out.to_str().unwrap();
    argv.push(out_str);
    let code = grs3d_cli::run(argv);
    let value = std::fs::read_to_string(out)
        .ok()
        .and_then(|t| serde_json::from_str(&t).ok())
        .unwrap_or(Value::Null);
    (code, value)
}

#[test]
fn describe_reports_group_and_ricci() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("describe.json");
    let (code, v) = run_capture(
        &[
            "describe",
            "--family",
            "riem-unimodular",
            "--params",
            "A=1,B=1,C=1",
        ],
        &out,
    );
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["group"], "SU(2)");
    for i in 0..3 {
        assert_eq!(v["curvature"]["ricci"][i][i], 0.5);
    }
}

#[test]
fn describe_residual_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let describe_out = dir.path().join("inst.json");
    let (code, described) = run_capture(
        &["describe", "--family", "g1", "--params", "A=1,B=2"],
        &describe_out,
    );
    assert_eq!(code, 0);

    // With X = 0, alpha = 0, beta = -1/2, lambda = 0 the residual matrix is
    // exactly the Ricci matrix, so the round trip compares matrices directly.
    let residual_out = dir.path().join("residual.json");
    let (code, res) = run_capture(
        &[
            "residual",
            "--instance-file",
            describe_out.to_str().unwrap(),
            "--alpha",
            "0",
            "--beta",
            "-0.5",
            "--lambda",
            "0",
            "--x",
            "0,0,0",
        ],
        &residual_out,
    );
    assert_eq!(code, 0);
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(
                res["residual"]["matrix"][i][j], described["curvature"]["ricci"][i][j],
                "entry ({i},{j})"
            );
        }
    }
}

#[test]
fn residual_passes_on_known_solution() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("res.json");
    let (code, v) = run_capture(
        &[
            "residual",
            "--family",
            "g4",
            "--params",
            "A=1,B=2,eta=1",
            "--alpha",
            "1",
            "--beta",
            "-1",
            "--lambda",
            "-0.5",
            "--x",
            "0,-1,1",
        ],
        &out,
    );
    assert_eq!(code, 0);
    assert_eq!(v["residual"]["passes"], true);
    assert_eq!(v["residual"]["trivial"], false);
}

#[test]
fn classify_examples() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c.json");
    let (code, v) = run_capture(
        &["classify", "--alpha", "1", "--beta", "0.5", "--lambda", "2"],
        &out,
    );
    assert_eq!(code, 0);
    assert_eq!(v["primary"], "NEAR_HORIZON");

    let (_, v) = run_capture(&["classify", "--alpha", "0", "--beta", "0"], &out);
    assert_eq!(v["primary"], "KILLING");

    let (_, v) = run_capture(&["classify", "--alpha", "2", "--beta", "-0.5"], &out);
    assert_eq!(v["primary"], "GENERIC");
    assert_eq!(v["compat"]["einstein_weyl"], true);
}

#[test]
fn solve_labels_theorem_solutions() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("solve.json");
    let (code, v) = run_capture(
        &[
            "solve",
            "--family",
            "g5",
            "--params",
            "A=1,B=0,C=0,D=1",
            "--alpha",
            "1",
            "--beta",
            "0",
            "--starts",
            "60",
            "--tol",
            "1e-9",
        ],
        &out,
    );
    assert_eq!(code, 0);
    let solutions = v["solutions"].as_array().unwrap();
    assert!(
        solutions.iter().any(|s| {
            s["matched_case"] == "g5-1" && (s["lambda"].as_f64().unwrap() + 1.0).abs() < 1e-6
        }),
        "{solutions:?}"
    );
}

#[test]
fn sweep_emits_stable_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("sweep.csv");
    let mut argv = vec![
        "grs3d",
        "sweep",
        "--family",
        "riem-unimodular",
        "--grid",
        "A=-1:1:3,B=1,C=1",
        "--alpha",
        "0",
        "--beta",
        "1",
        "--starts",
        "20",
        "--tol",
        "1e-9",
        "--output",
    ];
    let out_str = out.to_str().unwrap();
    argv.push(out_str);
    assert_eq!(grs3d_cli::run(argv), 0);
    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "family,A,B,C,D,eta,alpha,beta,n_solutions,min_residual,ew_compat,ps_compat,vnh_compat"
    );
    assert_eq!(lines.count(), 3);
}

#[test]
fn verify_single_case_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("verify.json");
    let (code, v) = run_capture(
        &[
            "verify",
            "--theorem",
            "riem-unimodular-4",
            "--corollary",
            "g3",
            "--samples",
            "25",
            "--tol",
            "1e-9",
        ],
        &out,
    );
    assert_eq!(code, 0);
    assert_eq!(v["all_passed"], true);
    assert_eq!(v["theorem_reports"][0]["case_id"], "riem-unimodular-4");
    assert_eq!(v["corollary_reports"][0]["claim_id"], "g3");
}

#[test]
fn usage_errors_exit_2() {
    // unknown family
    assert_eq!(
        grs3d_cli::run(vec![
            "grs3d", "describe", "--family", "nope", "--params", "A=1",
        ]),
        2
    );
    // constraint violation
    assert_eq!(
        grs3d_cli::run(vec![
            "grs3d",
            "describe",
            "--family",
            "g5",
            "--params",
            "A=1,B=0,C=0,D=-1",
        ]),
        2
    );
    // malformed params
    assert_eq!(
        grs3d_cli::run(vec![
            "grs3d", "describe", "--family", "g1", "--params", "A=x",
        ]),
        2
    );
    // unknown flag (clap usage error)
    assert_eq!(grs3d_cli::run(vec!["grs3d", "classify", "--frob", "1"]), 2);
    // missing instance source
    assert_eq!(
        grs3d_cli::run(vec![
            "grs3d", "residual", "--alpha", "0", "--beta", "0", "--lambda", "0", "--x", "0,0,0",
        ]),
        2
    );
}

#[test]
fn env_var_overrides_tolerance() {
    // A loose tolerance accepts a sloppy candidate; GRS3D_TOL drives it.
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("res.json");
    std::env::set_var("GRS3D_TOL", "10.0");
    let (_, v) = run_capture(
        &[
            "residual",
            "--family",
            "riem-unimodular",
            "--params",
            "A=1,B=1,C=1",
            "--alpha",
            "0",
            "--beta",
            "1",
            "--lambda",
            "0",
            "--x",
            "0,0,0",
        ],
        &out,
    );
    std::env::remove_var("GRS3D_TOL");
    assert_eq!(v["tol"], 10.0);
    assert_eq!(v["residual"]["passes"], true);
    let (_, v) = run_capture(
        &[
            "residual",
            "--family",
            "riem-unimodular",
            "--params",
            "A=1,B=1,C=1",
            "--alpha",
            "0",
            "--beta",
            "1",
            "--lambda",
            "0",
            "--x",
            "0,0,0",
        ],
        &out,
    );
    assert_eq!(v["residual"]["passes"], false);
}
