//! End-to-end runs of the `rpl` binary: output formats, exit codes, the
//! `--out` flag and the field-cap environment variable.

use std::process::{Command, Output};

fn rpl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rpl"))
        .args(args)
        .env_remove("RPL_MAX_FIELD")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn points_homma_json() {
    let o = rpl(&["points-homma", "--q", "3", "--ell", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    for (k, want) in [("affine", 2), ("infinity", 4), ("total", 6), ("degree", 4)] {
        assert_eq!(v[k], want, "{k}");
    }
    assert_eq!(v["ratio"], "3/2");
    let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
    assert_eq!(
        keys,
        ["schema", "q", "ell", "affine", "infinity", "total", "degree", "ratio"]
    );
}

#[test]
fn q_two_exits_with_validation_code() {
    let o = rpl(&["points-homma", "--q", "2", "--ell", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("q > 2"));
    assert!(o.stdout.is_empty());
}

#[test]
fn malformed_arguments_exit_2() {
    assert_eq!(
        rpl(&["gs", "--q", "two", "--m", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(rpl(&["gs", "--q", "6", "--m", "1"]).status.code(), Some(2));
    assert_eq!(
        rpl(&["semigroup", "--q", "2", "--m", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(rpl(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn help_exits_0() {
    assert_eq!(rpl(&["--help"]).status.code(), Some(0));
}

#[test]
fn gs_text_output() {
    let o = rpl(&["gs", "--q", "2", "--m", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let field = |name: &str| {
        text.lines()
            .find_map(|l| {
                let mut it = l.split_whitespace();
                (it.next() == Some(name)).then(|| it.next().unwrap_or("").to_string())
            })
            .unwrap()
    };
    assert_eq!(field("genus"), "9");
    assert_eq!(field("split"), "16");
    assert_eq!(field("c_m"), "12");
    assert_eq!(field("gamma_ell"), "19");
    assert_eq!(field("gamma_ell_ok"), "true");
}

#[test]
fn bounds_table_csv_schema() {
    let o = rpl(&["bounds", "--table", "32", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "q,upper,best_lower,best_lower_name");
    assert_eq!(lines[1], "2,1,,");
    assert!(lines.contains(&"9,8,3/2,gs_tower"));
    assert_eq!(lines.len(), 19);
    assert!(!text.contains('\r'));
}

#[test]
fn verify_scopes_name_their_checks() {
    let o = rpl(&["verify", "bounds"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o)
        .lines()
        .any(|l| l.starts_with("exceptional_quartic=14 PASS")));

    let o = rpl(&["verify", "gs"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o)
        .lines()
        .any(|l| l.starts_with("gap_count==genus for (2,2..8) PASS")));
}

#[test]
fn verify_all_runs_at_least_20_checks() {
    let o = rpl(&["verify", "all", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["checks"].as_array().unwrap().len() >= 20);
    assert_eq!(v["failed"], 0);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("rpl-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bounds.json");
    let o = rpl(&[
        "bounds",
        "--q",
        "9",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["rows"][0]["value"], "8");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn env_cap_lowers_the_field_limit() {
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_rpl"))
            .args(["gs", "--q", "4", "--m", "2"])
            .env("RPL_MAX_FIELD", cap)
            .output()
            .unwrap()
    };
    assert_eq!(run("8").status.code(), Some(2));
    assert_eq!(run("16").status.code(), Some(0));
    assert_eq!(run("not-a-number").status.code(), Some(2));
}
