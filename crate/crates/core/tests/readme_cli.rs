//! Runs every `$ qm ...` line of the README through the built binary.

use std::process::Command;

// Splits on whitespace, keeping double-quoted words together.
fn words(line: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut quoted = false;
    let mut any = false;
    for ch in line.chars() {
        match ch {
            '"' => {
                quoted = !quoted;
                any = true;
            }
            c if c.is_whitespace() && !quoted => {
                if any {
                    out.push(std::mem::take(&mut cur));
                    any = false;
                }
            }
            c => {
                cur.push(c);
                any = true;
            }
        }
    }
    if any {
        out.push(cur);
    }
    out
}

#[test]
fn readme_commands_run_with_the_documented_exit_codes() {
    let readme =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../README.md")).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let mut ran = 0;
    for line in readme.lines() {
        let Some(cmd) = line.strip_prefix("$ qm ") else {
            continue;
        };
        let (cmd, expected) = match cmd.split_once("# exit ") {
            Some((c, code)) => (c, code.trim().parse::<i32>().unwrap()),
            None => (cmd, 0),
        };
        let out = Command::new(env!("CARGO_BIN_EXE_qm"))
            .args(words(cmd))
            .current_dir(dir.path())
            .env_remove("QM_THREADS")
            .output()
            .unwrap();
        assert_eq!(
            out.status.code(),
            Some(expected),
            "qm {cmd}\nstdout:\n{}\nstderr:\n{}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        );
        ran += 1;
    }
    assert!(ran >= 15);
    assert!(dir.path().join("thm41.json").exists());
    assert!(dir.path().join("run.json").exists());
    let csv = std::fs::read_to_string(dir.path().join("thm11.csv")).unwrap();
    assert_eq!(csv.lines().count(), 7);
}

#[test]
fn documented_spec_run_produces_six_rows() {
    let out = Command::new(env!("CARGO_BIN_EXE_qm"))
        .args([
            "verify",
            "thm1.2",
            "--field",
            "-4",
            "--m",
            "1+1*w",
            "--theta",
            "pi/3",
            "--z",
            "1,0",
            "--grid",
            "50:400:6:log",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout.lines().count(), 7);
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("PASS"));
}

#[test]
fn threads_do_not_change_the_report() {
    let run = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_qm"))
            .args([
                "verify",
                "thm4.1",
                "--field",
                "-3",
                "--k",
                "1+1*w",
                "--grid",
                "20:60:4:lin",
                "--format",
                "json",
            ])
            .env("QM_THREADS", threads)
            .output()
            .unwrap();
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        v["report"].to_string()
    };
    assert_eq!(run("1"), run("3"));
}

#[test]
fn bad_thread_count_is_a_config_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_qm"))
        .args(["field", "--field", "-4"])
        .env("QM_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
