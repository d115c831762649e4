//! End-to-end tests of the `dualcheck` binary: exit codes, file outputs,
//! config handling, and run-to-run determinism.

use std::path::Path;
use std::process::{Command, Output};

fn dualcheck(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dualcheck"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn passing_sweep_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let out = dualcheck(
        &["verify", "--check", "kw,main-theorem", "--primes", "5..13", "--x", "0,1,2"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).contains("\"pass\": true"));
}

#[test]
fn failing_probe_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let out = dualcheck(
        &["verify", "--check", "main-theorem", "--primes", "5", "--x", "1", "--exp", "4"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("FAIL"));
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    // non-prime in an explicit list
    let out = dualcheck(&["verify", "--check", "kw", "--primes", "9,11"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("9 is not prime"));
    // unknown check id
    let out = dualcheck(&["verify", "--check", "nonsense", "--primes", "5"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    // decimal point value
    let out = dualcheck(
        &["verify", "--check", "main-theorem", "--primes", "5", "--x", "0.5"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    // clap-level: unknown flag
    let out = dualcheck(&["verify", "--frobnicate"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn skipped_only_sweep_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let out = dualcheck(
        &["verify", "--check", "main-theorem", "--primes", "5", "--x", "-1/2"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("\"status\": \"skipped\""));
}

#[test]
fn report_file_and_formats() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("report.json");
    let out = dualcheck(
        &[
            "verify", "--check", "kw", "--primes", "3,5,7",
            "--out", json_path.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let body = std::fs::read_to_string(&json_path).unwrap();
    let rows: Vec<serde_json::Value> = serde_json::from_str(&body).unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["lhs"], "26"); // kw anchor at p = 3

    let csv_path = dir.path().join("report.csv");
    let out = dualcheck(
        &[
            "verify", "--check", "kw", "--primes", "3,5,7",
            "--format", "csv", "--out", csv_path.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    let body = std::fs::read_to_string(&csv_path).unwrap();
    assert!(body.starts_with("check,p,x,modulus,lhs,rhs,pass,status,elapsed_ms,seed"));
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg_path = dir.path().join("sweep.conf");
    std::fs::write(
        &cfg_path,
        "# sweep\nchecks = kw\nprimes = 3..7\nformat = csv\n",
    )
    .unwrap();
    let out = dualcheck(
        &[
            "verify", "--config", cfg_path.to_str().unwrap(),
            "--primes", "11", // overrides the file
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let body = stdout(&out);
    assert!(body.starts_with("check,"), "format from file should stand");
    assert!(body.contains("kw,11,"));
    assert!(!body.contains("kw,3,"));
}

#[test]
fn cache_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cache_path = dir.path().join("special.cache");
    // absence of the file is never an error; the run creates it
    let out = dualcheck(
        &[
            "verify", "--check", "rv-refinement,p4", "--primes", "5..13",
            "--cache", cache_path.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let cache_text = std::fs::read_to_string(&cache_path).unwrap();
    assert!(cache_text.starts_with("dualcheck-cache 1"));
    assert!(cache_text.contains("B 2 1/6"));
    assert!(cache_text.contains("E 4 5"));
    // second run loads it cleanly
    let out = dualcheck(
        &[
            "verify", "--check", "rv-refinement", "--primes", "5..13",
            "--cache", cache_path.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    // a corrupted cache is rejected, not silently used
    std::fs::write(&cache_path, cache_text.replace("B 2 1/6", "B 2 1/5")).unwrap();
    let out = dualcheck(
        &[
            "verify", "--check", "rv-refinement", "--primes", "5",
            "--cache", cache_path.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cache"));
}

#[test]
fn runs_are_deterministic_apart_from_elapsed() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "verify",
        "--check", "main-theorem,parametric-dual,identity-poly-y",
        "--primes", "5..11",
        "--x", "1,-1/3",
        "--seed", "2024",
    ];
    let scrub = |body: &str| -> String {
        let rows: Vec<serde_json::Value> = serde_json::from_str(body).unwrap();
        let scrubbed: Vec<serde_json::Value> = rows
            .into_iter()
            .map(|mut row| {
                row["elapsed_ms"] = 0.into();
                row
            })
            .collect();
        serde_json::to_string_pretty(&scrubbed).unwrap()
    };
    let a = dualcheck(&args, dir.path());
    let b = dualcheck(&args, dir.path());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(scrub(&stdout(&a)), scrub(&stdout(&b)));
    // different worker counts agree too
    let mut serial = args.to_vec();
    serial.extend(["--jobs", "1"]);
    let mut par = args.to_vec();
    par.extend(["--jobs", "4"]);
    let s = dualcheck(&serial, dir.path());
    let p = dualcheck(&par, dir.path());
    assert_eq!(scrub(&stdout(&s)), scrub(&stdout(&p)));
}

#[test]
fn full_registry_small_scale() {
    let dir = tempfile::tempdir().unwrap();
    let out = dualcheck(
        &[
            "verify", "--check", "all", "--primes", "5,7", "--x", "1,-1/3",
            "--seed", "99",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    // every family shows up and nothing fails or errors
    for id in [
        "main-theorem", "mod-p2", "kw", "rv-refinement",
        "parametric-dual:constant", "parametric-dual:random4", "p4-half", "p4-sixth",
        "binom-p1", "coeff-expansion:low", "coeff-expansion:high", "halfline",
        "sigma-1", "sigma-5", "block-decomposition", "identity-jk", "binom-column-sum",
    ] {
        assert!(rows.iter().any(|r| r["check"] == id), "missing {id}");
    }
    for row in &rows {
        let status = row["status"].as_str().unwrap();
        assert!(
            status == "ok" || status == "evidence" || status == "skipped",
            "unexpected row: {row}"
        );
    }
}

#[test]
fn list_checks_prints_registry() {
    let dir = tempfile::tempdir().unwrap();
    let out = dualcheck(&["verify", "--list-checks"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let body = stdout(&out);
    for id in ["main-theorem", "kw", "sigma", "block-decomposition", "identities"] {
        assert!(body.contains(id), "missing {id}");
    }
}
