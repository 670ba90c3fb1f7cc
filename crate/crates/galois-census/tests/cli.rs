//! End-to-end checks of the command-line interface: output shapes, exit
//! codes, determinism under a fixed seed, and the config file.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_galois-census"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn resolvent_command_prints_the_square_root_resolvent() {
    let out = run(&[
        "resolvent",
        "--poly",
        "X^2 - T1",
        "--subgroup",
        "trivial",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("phi = Z^2 - T1^3"), "got: {text}");
    assert!(text.contains("gamma = 0"));
    assert!(text.contains("e = 1,2"));
}

#[test]
fn resolvent_accepts_explicit_params() {
    let out = run(&[
        "resolvent",
        "--poly",
        "X^2 - T1",
        "--subgroup",
        "trivial",
        "--params",
        "gamma=0;e=1,2;d=1",
    ]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("phi = Z^2 - T1^3"));
}

#[test]
fn resolvent_for_the_full_group_is_linear() {
    let out = run(&["resolvent", "--poly", "X^2 - T1", "--subgroup", "S2"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("m = 1"), "got: {text}");
}

#[test]
fn malformed_polynomial_is_a_usage_error() {
    let out = run(&["resolvent", "--poly", "X^^2", "--subgroup", "trivial"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["identify", "--poly", "Y + 1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["count", "--poly", "X^2 - T1", "--mode", "Q", "--heights", "10"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["count", "--poly", "X^2 - T1", "--mode", "R", "--heights", ""]);
    assert_eq!(out.status.code(), Some(2));
    // missing required flag: clap exits 2 on its own
    let out = run(&["resolvent", "--poly", "X^2 - T1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_overflow_is_exit_code_3() {
    let out = run(&[
        "count",
        "--poly",
        "X^2 - T1*X + T2",
        "--mode",
        "R",
        "--heights",
        "100000",
    ]);
    assert_eq!(out.status.code(), Some(3), "stderr: {}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn count_reducible_quintic_known_values() {
    let out = run(&[
        "count",
        "--poly",
        "X^5 - T1",
        "--mode",
        "R",
        "--heights",
        "100,1000,10000",
        "--workers",
        "2",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[1].starts_with("100,R,-,5,"));
    assert!(lines[2].starts_with("1000,R,-,7,"));
    assert!(lines[3].starts_with("10000,R,-,13,"));
}

#[test]
fn identify_outputs_group_tag_json() {
    let out = run(&["identify", "--poly", "X^2 - 2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["kind"], "identified");
    assert_eq!(v["name"], "S2");
    assert_eq!(v["order"], 2);

    let out = run(&["identify", "--poly", "X^2 - 4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["kind"], "reducible");

    let out = run(&["identify", "--poly", "X^5 - 2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["name"], "F20");
    assert_eq!(v["order"], 20);
    assert_eq!(v["confidence"]["kind"], "monte-carlo");
}

#[test]
fn invariants_reference_values() {
    let out = run(&["invariants", "--group", "S5"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("delta     = 1/2"), "got: {text}");

    let out = run(&["invariants", "--group", "A5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["delta"], "1/5");
    assert_eq!(v["order"], 60);

    let out = run(&["invariants", "--group", "C2"]);
    let text = stdout_of(&out);
    assert!(text.contains("delta     = 1/2"));
    assert!(text.contains("gamma     = 1/2"));
}

#[test]
fn identical_seeds_give_identical_bytes() {
    let args = [
        "count",
        "--poly",
        "X^3 - T1",
        "--mode",
        "N",
        "--subgroup",
        "S3",
        "--heights",
        "20,40",
        "--format",
        "json",
        "--seed",
        "7",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(stdout_of(&a), stdout_of(&b));

    // worker count must not change the bytes either
    let mut with_workers: Vec<&str> = args.to_vec();
    with_workers.extend(["--workers", "3"]);
    let c = run(&with_workers);
    assert_eq!(stdout_of(&a), stdout_of(&c));
}

#[test]
fn config_file_and_out_flag() {
    let dir = std::env::temp_dir().join(format!("gcensus-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg_path = dir.join("run.conf");
    std::fs::write(&cfg_path, "format=json\nseed=9\n").unwrap();
    let out_path = dir.join("report.json");
    let out = bin()
        .args([
            "count",
            "--poly",
            "X^2 - T1",
            "--mode",
            "R",
            "--heights",
            "10,20",
            "--config",
            cfg_path.to_str().unwrap(),
            "--out",
            out_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let content = std::fs::read_to_string(&out_path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&content).unwrap();
    assert_eq!(v["seed"], 9);
    assert_eq!(v["mode"], "R");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn config_env_var_is_honored() {
    let dir = std::env::temp_dir().join(format!("gcensus-env-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg_path = dir.join("env.conf");
    std::fs::write(&cfg_path, "format=json\n").unwrap();
    let out = bin()
        .env("GALOIS_CENSUS_CONFIG", cfg_path.to_str().unwrap())
        .args(["count", "--poly", "X^2 - T1", "--mode", "R", "--heights", "5"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout_of(&out).trim_start().starts_with('{'));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn non_monic_input_is_monicized_with_notice() {
    let out = run(&["resolvent", "--poly", "2*X^2 - T1", "--subgroup", "trivial"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("monic companion"));
}

#[test]
fn resolvent_count_inequality_visible() {
    let out = run(&[
        "resolvent-count",
        "--poly",
        "X^2 - T1",
        "--subgroup",
        "trivial",
        "--heights",
        "50,100",
    ]);
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines.len(), 3);
    // H = 100: 11 integer-root points, 11 trivial-group points
    assert!(lines[2].starts_with("100,11,11,S2"), "got: {text}");
}
