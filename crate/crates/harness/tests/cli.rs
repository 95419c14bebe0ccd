use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn pesoa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pesoa"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_into(dir: &Path, extra: &[&str]) -> Output {
    let out = dir.to_str().unwrap();
    let mut args = vec![
        "run",
        "--algo",
        "pesoa",
        "--bench",
        "F07,F20",
        "--seeds",
        "3",
        "--max-evals",
        "5000",
        "--out",
        out,
    ];
    args.extend_from_slice(extra);
    pesoa(&args)
}

#[test]
fn run_writes_traces_and_summaries() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_into(dir.path(), &[]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(String::from_utf8_lossy(&out.stdout).contains("budget: max_evaluations=5000"));
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 2 * 3 + 2);

    let summary = fs::read_to_string(dir.path().join("summary.csv")).unwrap();
    let lines: Vec<&str> = summary.lines().collect();
    assert_eq!(
        lines[0],
        "benchmark,algorithm,n_runs,mean_best,std_best,mean_wall_time_s"
    );
    assert!(lines[1].starts_with("F07,pesoa,3,"));
    assert!(lines[2].starts_with("F20,pesoa,3,"));
}

#[test]
fn no_timing_output_is_byte_identical() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    assert!(run_into(a.path(), &["--no-timing"]).status.success());
    assert!(run_into(b.path(), &["--no-timing", "--serial"])
        .status
        .success());
    for entry in fs::read_dir(a.path()).unwrap() {
        let name = entry.unwrap().file_name();
        assert_eq!(
            fs::read(a.path().join(&name)).unwrap(),
            fs::read(b.path().join(&name)).unwrap(),
            "{name:?}"
        );
    }
}

#[test]
fn config_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    for args in [
        vec!["run", "--algo", "ga", "--out", out],
        vec!["run", "--bench", "F42", "--out", out],
        vec!["run", "--groups", "0", "--out", out],
        vec!["run", "--seeds", "0", "--out", out],
        vec!["sweep-groups", "--k", "9..3", "--out", out],
        vec!["run", "--bogus-flag"],
    ] {
        assert_eq!(pesoa(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn unwritable_output_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("blocker");
    fs::write(&blocker, "").unwrap();
    let out = run_into(&blocker.join("out"), &[]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("blocker"));
}

#[test]
fn sweeps_write_tables() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    let common = [
        "--bench",
        "sphere,branin",
        "--seeds",
        "2",
        "--max-evals",
        "3000",
        "--out",
        out,
    ];
    let mut args = vec!["sweep-groups", "--k", "2,3"];
    args.extend_from_slice(&common);
    assert!(pesoa(&args).status.success());
    let mut args = vec!["sweep-size", "--sizes", "5..15:5"];
    args.extend_from_slice(&common);
    assert!(pesoa(&args).status.success());

    let groups = fs::read_to_string(dir.path().join("sweep_groups.csv")).unwrap();
    assert_eq!(
        groups.lines().filter(|l| !l.starts_with('#')).count(),
        1 + 2
    );
    let sizes = fs::read_to_string(dir.path().join("sweep_group_size.csv")).unwrap();
    let data: Vec<&str> = sizes.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(
        data[0],
        "group_size,mean_amelioration,mean_wall_time_s,performance_ratio"
    );
    assert_eq!(data.len(), 1 + 3);
}
