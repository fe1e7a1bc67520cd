//! End-to-end tests of the binary: flags, formats and the exit-code
//! contract (0 success, 1 check failures, 2 usage/parse, 3 caps).

use std::process::{Command, Output};

fn fairdom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fairdom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8")
}

#[test]
fn compute_petersen_fd() {
    let out = fairdom(&["compute", "--family", "petersen", "--param", "fd"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let fields: Vec<&str> = text.trim().split('\t').collect();
    assert_eq!(fields[1], "fd");
    assert_eq!(fields[2], "4");
    assert_eq!(fields[3].split(',').count(), 4, "four-vertex witness");
    assert_eq!(fields[4], "k=1");
}

#[test]
fn compute_cycle_fd_and_gamma() {
    let out = fairdom(&["compute", "--family", "cycle:8", "--param", "fd,gamma"]);
    assert!(out.status.success());
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].contains("\tfd\t4\t"));
    assert!(lines[1].contains("\tgamma\t3\t"));
}

#[test]
fn compute_g6_literal() {
    let out = fairdom(&["compute", "--g6", "Bw", "--param", "fd"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("Bw\tfd\t1\t"));
}

#[test]
fn compute_json_rows() {
    let out = fairdom(&[
        "compute", "--family", "petersen", "--param", "fd,chi", "--format", "json",
    ]);
    assert!(out.status.success());
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines.len(), 2);
    let fd: serde_json::Value = serde_json::from_str(&lines[0]).unwrap();
    assert_eq!(fd["param"], "fd");
    assert_eq!(fd["value"], 4);
    assert_eq!(fd["witness"].as_array().unwrap().len(), 4);
    assert_eq!(fd["k"], "1");
    let chi: serde_json::Value = serde_json::from_str(&lines[1]).unwrap();
    assert_eq!(chi["value"], 3);
    assert_eq!(chi["coloring"].as_array().unwrap().len(), 10);
}

#[test]
fn compute_from_edge_list_file() {
    let dir = std::env::temp_dir().join("fairdom-cli-test-edges");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p3.txt");
    std::fs::write(&path, "3 2\n0 1\n1 2\n").unwrap();
    let out = fairdom(&[
        "compute",
        "--edges",
        path.to_str().unwrap(),
        "--param",
        "fd",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("\tfd\t1\t"));
}

#[test]
fn compute_from_g6_file_preserves_order() {
    let dir = std::env::temp_dir().join("fairdom-cli-test-g6");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("graphs.g6");
    std::fs::write(&path, "Bw\nA?\n").unwrap();
    let out = fairdom(&[
        "compute",
        "--g6-file",
        path.to_str().unwrap(),
        "--param",
        "fd",
    ]);
    assert!(out.status.success());
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert!(lines[0].starts_with("Bw\t"));
    assert!(lines[1].starts_with("A?\t"));
    assert!(lines[1].contains("\tfd\t2\t")); // edgeless pair
}

#[test]
fn compute_parse_error_is_exit_2() {
    let out = fairdom(&["compute", "--g6", "B\u{1}", "--param", "fd"]);
    assert_eq!(out.status.code(), Some(2));
    let out = fairdom(&["compute", "--family", "petersen", "--param", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    let out = fairdom(&["compute", "--family", "cycle:two", "--param", "fd"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn solver_cap_is_exit_3() {
    let out = Command::new(env!("CARGO_BIN_EXE_fairdom"))
        .args(["compute", "--family", "petersen", "--param", "fd"])
        .env("FD_MAX_N", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));

    // chromatic search refuses orders above 30
    let out = fairdom(&["compute", "--family", "empty:40", "--param", "chi"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn generate_family_single_line() {
    let out = fairdom(&["generate", "--family", "extremal_H:4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0].as_bytes()[0], 63 + 8, "eight-vertex record");
}

#[test]
fn generate_streams_counts() {
    let out = fairdom(&["generate", "--stream", "trees:4"]);
    assert_eq!(stdout(&out).lines().count(), 16);
    let out = fairdom(&["generate", "--stream", "mops:6"]);
    assert_eq!(stdout(&out).lines().count(), 14);
    let out = fairdom(&["generate", "--stream", "graphs:3"]);
    assert_eq!(stdout(&out).lines().count(), 8);
}

#[test]
fn generate_random_streams_deterministic_per_seed() {
    let a = fairdom(&["--seed", "9", "generate", "--stream", "random_trees:7,5"]);
    let b = fairdom(&["--seed", "9", "generate", "--stream", "random_trees:7,5"]);
    let c = fairdom(&["--seed", "10", "generate", "--stream", "random_trees:7,5"]);
    assert_eq!(stdout(&a), stdout(&b));
    assert_ne!(stdout(&a), stdout(&c));
    assert_eq!(stdout(&a).lines().count(), 5);
}

#[test]
fn generate_bad_spec_is_exit_2() {
    let out = fairdom(&["generate", "--stream", "trees:99"]);
    assert_eq!(out.status.code(), Some(2));
    let out = fairdom(&["generate", "--family", "wat:3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = fairdom(&["generate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generate_to_file() {
    let dir = std::env::temp_dir().join("fairdom-cli-test-out");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c5.g6");
    let out = fairdom(&[
        "generate",
        "--family",
        "cycle:5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let body = std::fs::read_to_string(&path).unwrap();
    assert_eq!(body.lines().count(), 1);
}

#[test]
fn verify_duality_passes() {
    let out = fairdom(&["verify", "--suite", "duality", "--max-n", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("result: PASS"));
}

#[test]
fn verify_trees_small_passes() {
    let out = fairdom(&["verify", "--suite", "trees", "--max-n", "6"]);
    assert!(out.status.success());
}

#[test]
fn verify_unknown_suite_is_exit_2() {
    let out = fairdom(&["verify", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_json_report_to_file() {
    let dir = std::env::temp_dir().join("fairdom-cli-test-report");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = fairdom(&[
        "verify",
        "--suite",
        "nordhaus_gaddum",
        "--max-n",
        "5",
        "--format",
        "json",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["suite"], "nordhaus_gaddum");
    assert_eq!(report["failures"].as_array().unwrap().len(), 0);
    assert!(report["instances_checked"].as_u64().unwrap() >= 1024);
}

#[test]
fn closed_pipe_exits_quietly() {
    use std::io::Read;
    use std::process::Stdio;
    // a stream far too long to fit any pipe buffer; the reader hangs up
    // after one line and the tool must exit 0 without a panic
    let mut child = Command::new(env!("CARGO_BIN_EXE_fairdom"))
        .args(["generate", "--stream", "graphs:7"])
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut head = [0u8; 16];
    child.stdout.take().unwrap().read_exact(&mut head).unwrap();
    // dropping stdout closes the read end
    let status = child.wait().unwrap();
    assert!(status.success(), "broken pipe must not be an error");
    let mut err = String::new();
    child
        .stderr
        .take()
        .unwrap()
        .read_to_string(&mut err)
        .unwrap();
    assert!(err.is_empty(), "no panic output expected, got: {err}");
}

#[test]
fn verify_list_prints_registry() {
    let out = fairdom(&["verify", "--suite", "list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for id in ["basic", "duality", "trees", "mop", "caro_wei"] {
        assert!(text.contains(id), "{id} missing from listing");
    }
}
