//! Every program under `examples/` runs to completion.

use std::path::PathBuf;
use std::process::Command;

const EXAMPLES: [&str; 6] = [
    "finite_fields",
    "projective_family",
    "gs_tower",
    "weierstrass_semigroup",
    "dq_bounds",
    "exceptional_quartic",
];

fn examples_dir() -> PathBuf {
    // target/<profile>/deps/<this test> -> target/<profile>/examples
    let exe = std::env::current_exe().unwrap();
    exe.parent().unwrap().parent().unwrap().join("examples")
}

#[test]
fn examples_exit_cleanly() {
    let dir = examples_dir();
    for name in EXAMPLES {
        let path = dir.join(format!("{name}{}", std::env::consts::EXE_SUFFIX));
        assert!(path.exists(), "example binary {} not built", path.display());
        let o = Command::new(&path).output().unwrap();
        assert!(
            o.status.success(),
            "{name}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        assert!(!o.stdout.is_empty(), "{name} printed nothing");
    }
}

#[test]
fn exceptional_quartic_example_reports_14() {
    let path = examples_dir().join(format!(
        "exceptional_quartic{}",
        std::env::consts::EXE_SUFFIX
    ));
    let o = Command::new(path).output().unwrap();
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text
        .lines()
        .any(|l| l.starts_with("points on the quartic") && l.ends_with(" 14")));
}
