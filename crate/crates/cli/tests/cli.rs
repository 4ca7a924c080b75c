use std::path::Path;
use std::process::{Command, Output};

fn rcx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rcx"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn porcelain_value(o: &Output, key: &str) -> String {
    stdout(o)
        .lines()
        .find_map(|l| l.strip_prefix(&format!("{key}: ")))
        .unwrap_or_else(|| panic!("no `{key}` in {}", stdout(o)))
        .to_string()
}

#[test]
fn claim_one_arrows() {
    let o = rcx(&["arrows", "--host", "K5-M2", "--red", "M2", "--blue", "M2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Arrows"));
}

#[test]
fn free_coloring_is_written_and_rechecked() {
    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.cert");
    let ws = w.to_str().unwrap();
    let o = rcx(&[
        "arrows",
        "--host",
        "K5-K3",
        "--red",
        "M2",
        "--blue",
        "M2",
        "--witness",
        ws,
        "--porcelain",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(porcelain_value(&o, "verdict"), "NotArrows");
    assert!(w.exists());

    let o = rcx(&["check-cert", ws]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("free of (M2, M2)"));

    let text = std::fs::read_to_string(&w).unwrap();
    let tampered = dir.path().join("t.cert");
    std::fs::write(&tampered, text.replacen(" blue\n", " red\n", 1)).unwrap();
    let o = rcx(&["check-cert", tampered.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("red M2"));
}

#[test]
fn witness_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str, extra: &[&str]| {
        let p = dir.path().join(name);
        let mut args = vec![
            "arrows",
            "--host",
            "K8-K2",
            "--red",
            "2K3",
            "--blue",
            "K3",
            "--witness",
            p.to_str().unwrap(),
        ];
        args.extend_from_slice(extra);
        assert_eq!(rcx(&args).status.code(), Some(0));
        std::fs::read(p).unwrap()
    };
    let a = run("a.cert", &["--deterministic"]);
    let b = run("b.cert", &["--deterministic"]);
    let c = run("c.cert", &["--threads", "4"]);
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn usage_and_limit_errors_exit_two() {
    assert_eq!(
        rcx(&["arrows", "--host", "K99", "--red", "S1", "--blue", "S1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        rcx(&["arrows", "--host", "K9", "--red", "S1", "--blue", "S1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        rcx(&["arrows", "--host", "K5-Q2", "--red", "S1", "--blue", "S1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        rcx(&["arrows", "--host", "K5", "--red", "S0", "--blue", "S1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(rcx(&["params", "--graph", "K13"]).status.code(), Some(2));
    assert_eq!(
        rcx(&["construct", "star-even", "--m", "3", "--n", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        rcx(&["check-cert", "/nonexistent/file.cert"]).status.code(),
        Some(2)
    );
    assert_eq!(rcx(&["no-such-command"]).status.code(), Some(2));
    let o = rcx(&["arrows", "--host", "K5-Q2", "--red", "S1", "--blue", "S1"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("column 4"));
}

#[test]
fn timeout_exits_three() {
    let o = rcx(&[
        "arrows",
        "--host",
        "K8",
        "--red",
        "M3",
        "--blue",
        "M3",
        "--timeout",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("indeterminate"));
}

#[test]
fn critical_numbers() {
    let o = rcx(&[
        "critical",
        "--class",
        "matching",
        "--red",
        "S2",
        "--blue",
        "S3",
        "--porcelain",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(porcelain_value(&o, "value"), "2");
    assert_eq!(porcelain_value(&o, "closed_form"), "2");

    let o = rcx(&[
        "critical",
        "--class",
        "complete",
        "--red",
        "M2",
        "--blue",
        "M2",
        "--porcelain",
    ]);
    assert_eq!(porcelain_value(&o, "value"), "2");

    let o = rcx(&[
        "star-critical",
        "--red",
        "2K2",
        "--blue",
        "2K2",
        "--porcelain",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(porcelain_value(&o, "r_star"), "2");
    assert_eq!(porcelain_value(&o, "identity"), "holds");

    let o = rcx(&["ramsey", "--red", "K3", "--blue", "K3", "--porcelain"]);
    assert_eq!(porcelain_value(&o, "ramsey"), "6");
}

#[test]
fn bracketing_certificates_are_emitted() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let o = rcx(&[
        "critical",
        "--class",
        "star",
        "--red",
        "S2",
        "--blue",
        "S3",
        "--emit-certs",
        d,
        "--porcelain",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let path = porcelain_value(&o, "certificate");
    assert_eq!(rcx(&["check-cert", &path]).status.code(), Some(0));
    assert!(Path::new(&path).starts_with(dir.path()));
}

#[test]
fn params_report() {
    let o = rcx(&["params", "--graph", "C4", "--porcelain"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(porcelain_value(&o, "chi"), "2");
    assert_eq!(porcelain_value(&o, "s"), "2");
    assert_eq!(porcelain_value(&o, "tau"), "2");
    let o = rcx(&["params", "--graph", "K3", "--porcelain"]);
    assert_eq!(
        (
            porcelain_value(&o, "chi"),
            porcelain_value(&o, "s"),
            porcelain_value(&o, "tau")
        ),
        ("3".into(), "1".into(), "1".into())
    );
    let o = rcx(&["params", "--graph", "P4", "--porcelain"]);
    assert_eq!(porcelain_value(&o, "delta"), "1");
}

#[test]
fn porcelain_lines_split_on_colon() {
    for args in [
        vec![
            "arrows",
            "--host",
            "K6",
            "--red",
            "K3",
            "--blue",
            "K3",
            "--porcelain",
        ],
        vec![
            "construct",
            "matching-join",
            "--m",
            "2",
            "--n",
            "3",
            "--porcelain",
        ],
        vec!["verify-paper", "--only", "3,11", "--porcelain"],
    ] {
        let o = rcx(&args);
        assert_eq!(o.status.code(), Some(0));
        for line in stdout(&o).lines() {
            let (k, v) = line.split_once(": ").expect("key: value");
            assert!(!k.is_empty() && !k.contains(' ') && !v.is_empty(), "{line}");
        }
    }
}

#[test]
fn constructions_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    for (kind, m, n) in [
        ("star-even", "2", "4"),
        ("star-extension", "4", "2"),
        ("star-odd", "1", "3"),
        ("matching-join", "2", "2"),
    ] {
        let p = dir.path().join(format!("{kind}.cert"));
        let ps = p.to_str().unwrap();
        assert_eq!(
            rcx(&["construct", kind, "--m", m, "--n", n, "--out", ps])
                .status
                .code(),
            Some(0)
        );
        assert_eq!(rcx(&["check-cert", ps]).status.code(), Some(0));
        let spec = format!("file:{ps}");
        let o = rcx(&[
            "arrows",
            "--host",
            &spec,
            "--red",
            &format!("{}{m}", if kind == "matching-join" { "M" } else { "S" }),
            "--blue",
            &format!("{}{n}", if kind == "matching-join" { "M" } else { "S" }),
            "--porcelain",
        ]);
        assert_eq!(porcelain_value(&o, "verdict"), "NotArrows");
    }
}

#[test]
fn verify_paper_detects_injected_fault() {
    let o = rcx(&["verify-paper", "--only", "1", "--inject-fault", "detector"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("criterion  1 FAIL"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("failed criteria: 1"));
    assert_eq!(
        rcx(&["verify-paper", "--only", "14"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_paper_fast_tier_passes() {
    let o = rcx(&["verify-paper", "--tier", "fast"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(
        stdout(&o).lines().filter(|l| l.contains(" PASS ")).count(),
        13
    );
}

#[test]
fn pruning_can_be_disabled() {
    let o = rcx(&[
        "arrows",
        "--host",
        "K6",
        "--red",
        "K3",
        "--blue",
        "K3",
        "--disable",
        "all",
        "--porcelain",
    ]);
    assert_eq!(porcelain_value(&o, "verdict"), "Arrows");
    let o = rcx(&[
        "arrows",
        "--host",
        "K6-K2",
        "--red",
        "K3",
        "--blue",
        "K3",
        "--disable",
        "orbits,hints",
        "--porcelain",
    ]);
    assert_eq!(porcelain_value(&o, "verdict"), "NotArrows");
}
