use std::process::{Command, Output};

use tempfile::TempDir;

fn lab(cache: &TempDir, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heller-lab"))
        .args(args)
        .env("HELLER_LAB_CACHE_DIR", cache.path())
        .env_remove("HELLER_LAB_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn verify_prints_a_passing_report() {
    let dir = TempDir::new().unwrap();
    let o = lab(&dir, &["verify", "trivial-omega-table", "--p", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["verdict"], "pass");
    assert_eq!(report["check_id"], "trivial-omega-table");
    assert_eq!(report["params"]["seed"], 0x4C49454D);
}

#[test]
fn report_goes_to_out_file_and_is_reproducible() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for out in [&a, &b] {
        let o = lab(&dir, &["verify", "lie-klyachko-model", "--p", "3", "--k", "2", "--out", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).is_empty());
    }
    let body = |p: &std::path::Path| {
        let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap();
        v.as_object_mut().unwrap().remove("timing");
        v
    };
    assert_eq!(body(&a), body(&b));
}

#[test]
fn seed_flag_and_env_are_honoured() {
    let dir = TempDir::new().unwrap();
    let o = lab(&dir, &["--seed", "0x10", "verify", "algebra-smoke"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["params"]["seed"], 16);
    let o = Command::new(env!("CARGO_BIN_EXE_heller-lab"))
        .args(["verify", "algebra-smoke"])
        .env("HELLER_LAB_SEED", "99")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["params"]["seed"], 99);
}

#[test]
fn usage_errors_exit_with_four() {
    let dir = TempDir::new().unwrap();
    assert_eq!(lab(&dir, &["no-such-command"]).status.code(), Some(4));
    assert_eq!(lab(&dir, &["verify", "no-such-check"]).status.code(), Some(4));
    assert_eq!(lab(&dir, &["verify", "lie-period", "--p", "3"]).status.code(), Some(4));
    assert_eq!(lab(&dir, &["verify", "lie-period", "--p", "4", "--k", "1"]).status.code(), Some(4));
    assert_eq!(lab(&dir, &["suite", "no-such-suite"]).status.code(), Some(4));
    assert_eq!(lab(&dir, &["--help"]).status.code(), Some(0));
}

#[test]
fn budget_overrun_exits_with_three() {
    let dir = TempDir::new().unwrap();
    let o = lab(&dir, &["--budget-dim", "50", "verify", "lie-heller-shift", "--p", "3", "--k", "2"]);
    assert_eq!(o.status.code(), Some(3));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "budget-exceeded");
}

#[test]
fn smoke_suite_passes_in_parallel() {
    let dir = TempDir::new().unwrap();
    let o = lab(&dir, &["--jobs", "3", "suite", "smoke"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let reports: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(reports.len(), 5);
    assert_eq!(reports[0]["check_id"], "algebra-smoke");
}

#[test]
fn build_and_manage_the_cache() {
    let dir = TempDir::new().unwrap();
    let o = lab(&dir, &["build", "family", "--p", "3", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let built = stdout(&o);
    assert!(built.contains("Lie(3)"));
    assert!(dir.path().join("manifests/3-1.toml").exists());

    // a second build is served from the manifest
    let again = lab(&dir, &["build", "family", "--p", "3", "--k", "1"]);
    assert_eq!(stdout(&again), built);

    let o = lab(&dir, &["build", "lie", "--p", "2", "--k", "1"]);
    let hash = stdout(&o).split_whitespace().next().unwrap().to_string();
    let ls = stdout(&lab(&dir, &["cache", "ls"]));
    assert!(ls.contains(&hash));
    assert!(ls.contains("manifest p=3 k=1"));

    let elsewhere = TempDir::new().unwrap();
    let file = elsewhere.path().join("lie2.mod");
    assert_eq!(lab(&dir, &["cache", "export", &hash, file.to_str().unwrap()]).status.code(), Some(0));
    let gc = stdout(&lab(&dir, &["cache", "gc"]));
    assert!(gc.contains(&hash));
    assert!(!stdout(&lab(&dir, &["cache", "ls"])).contains(&hash));
    let o = lab(&dir, &["cache", "import", file.to_str().unwrap()]);
    assert!(stdout(&o).starts_with(&hash));

    assert_eq!(lab(&dir, &["cache", "rm", &hash]).status.code(), Some(0));
    assert_eq!(lab(&dir, &["cache", "rm", &hash]).status.code(), Some(4));
}

#[test]
fn group_describes_subgroup_specs() {
    let dir = TempDir::new().unwrap();
    let o = lab(&dir, &["group", "S3 x S2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("order 12"));
    assert_eq!(lab(&dir, &["group", "nonsense("]).status.code(), Some(2));
}
