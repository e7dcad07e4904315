//! End-to-end tests against the built binary.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use rotnum_cli::docs::{AnalysisDocument, LoopDocument};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rotnum"))
}

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name]
        .iter()
        .collect();
    path.to_str().unwrap().to_string()
}

fn run_ok(args: &[&str]) -> String {
    let out = bin().args(args).output().unwrap();
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn run_err(args: &[&str]) -> (i32, String) {
    let out = bin().args(args).output().unwrap();
    assert!(!out.status.success(), "command {args:?} unexpectedly passed");
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn analyze_square_golden_output() {
    let stdout = run_ok(&["analyze", "--input", &fixture("square.json")]);
    let expected = "\
loop square: d = 4

  edge | eps | a | x | y | l | terms
     1 |   1 | 0 | 0 | 0 | 0 |
     2 |   1 | 0 | 0 | 0 | 0 |
     3 |   1 | 0 | 0 | 0 | 0 |
     4 |   1 | 0 | 0 | 0 | 0 |

signed term sum:  12
sum of a:         0
sum of (x+y)/eps: 0

rotation number:  1
winding (exact):  1
winding (float):  1.000000 -> 1
refined rotation: 1

refined loop (4 vertices):
  (1, 0)  [vertex 1]
  (0, 1)  [vertex 2]
  (-1, 0)  [vertex 3]
  (0, -1)  [vertex 4]
";
    assert_eq!(stdout, expected);
}

#[test]
fn analyze_sample_d5_golden_output() {
    let stdout = run_ok(&["analyze", "--input", &fixture("sample-d5.json")]);
    let expected = "\
loop sample-d5: d = 5

  edge | eps |    a | x | y | l | terms
     1 |   3 |   -2 | 2 | 2 | 2 |   2 2
     2 |   5 | 1/15 | 2 | 3 | 2 |   3 2
     3 |  -4 | 7/20 | 1 | 1 | 1 |     4
     4 |   1 | 11/4 | 0 | 0 | 0 |
     5 |   3 |  1/3 | 1 | 1 | 1 |     3

signed term sum:  13
sum of a:         3/2
sum of (x+y)/eps: 5/2

rotation number:  1
winding (exact):  1
winding (float):  1.000000 -> 1
refined rotation: 1

refined loop (11 vertices):
  (1, 0)  [vertex 1]
  (1, 1)  [edge 1 insert 1]
  (1, 2)  [edge 1 insert 2]
  (1, 3)  [vertex 2]
  (0, 1)  [edge 2 insert 1]
  (-1, 0)  [edge 2 insert 2]
  (-2, -1)  [vertex 3]
  (-1, 0)  [edge 3 insert 1]
  (-2, 1)  [vertex 4]
  (5, -3)  [vertex 5]
  (2, -1)  [edge 5 insert 1]
";
    assert_eq!(stdout, expected);
}

#[test]
fn plain_format_matches_structured() {
    let structured = run_ok(&["rotation", "--input", &fixture("sample-d5.json")]);
    let plain = run_ok(&[
        "rotation",
        "--input",
        &fixture("sample-d5.txt"),
        "--format",
        "plain",
    ]);
    assert_eq!(structured.trim(), "1");
    assert_eq!(plain.trim(), "1");
}

#[test]
fn rotation_reads_stdin() {
    let mut child = bin()
        .args(["rotation", "--input", "-", "--format", "plain"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"1 0\n0 1\n-1 0\n0 -1\n")
        .unwrap();
    let out: Output = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "1");
}

#[test]
fn oracle_reports_both_values() {
    let stdout = run_ok(&["oracle", "--input", &fixture("sample-d5.json")]);
    assert_eq!(
        stdout,
        "winding (exact): 1\nwinding (float): 1.000000 -> 1\n"
    );
}

#[test]
fn invalid_loop_exits_2_with_located_message() {
    let (code, stderr) = run_err(&["analyze", "--input", &fixture("collinear.json")]);
    assert_eq!(code, 2);
    assert!(stderr.contains("edge 1"), "{stderr}");

    let (code, stderr) = run_err(&["analyze", "--input", &fixture("nonprimitive.json")]);
    assert_eq!(code, 2);
    assert!(stderr.contains("vertex 1"), "{stderr}");
}

#[test]
fn io_and_parse_failures_exit_1() {
    let (code, _) = run_err(&["analyze", "--input", "does-not-exist.json"]);
    assert_eq!(code, 1);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "not json").unwrap();
    let (code, _) = run_err(&["analyze", "--input", path.to_str().unwrap()]);
    assert_eq!(code, 1);
}

#[test]
fn fuzz_zero_count_is_a_usage_error() {
    let (code, stderr) = run_err(&["fuzz", "--count", "0"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("--count"), "{stderr}");
}

#[test]
fn fuzz_handles_the_shortest_loops() {
    let stdout = run_ok(&[
        "fuzz",
        "--count",
        "1",
        "--max-d",
        "2",
        "--coord-bound",
        "5",
        "--seed",
        "1",
    ]);
    assert!(stdout.ends_with("ok: 1 passed, 0 failed\n"), "{stdout}");
}

#[test]
fn fuzz_transcript_is_deterministic() {
    let args = [
        "fuzz",
        "--count",
        "40",
        "--seed",
        "11",
        "--max-d",
        "8",
        "--coord-bound",
        "25",
    ];
    let first = run_ok(&args);
    let second = run_ok(&args);
    assert_eq!(first, second);
    assert!(first.ends_with("ok: 40 passed, 0 failed\n"), "{first}");
}

#[test]
fn gen_output_feeds_back_into_analyze() {
    let dir = tempfile::tempdir().unwrap();
    let stdout = run_ok(&[
        "gen",
        "--count",
        "3",
        "--seed",
        "5",
        "--max-d",
        "7",
        "--coord-bound",
        "15",
    ]);
    for (k, line) in stdout.lines().enumerate() {
        let doc = LoopDocument::parse_structured(line).unwrap();
        assert_eq!(doc.name.as_deref(), Some(format!("random-5-{}", k + 1).as_str()));
        let path = dir.path().join(format!("loop-{k}.json"));
        std::fs::write(&path, line).unwrap();
        run_ok(&["analyze", "--input", path.to_str().unwrap()]);
    }
    assert_eq!(stdout.lines().count(), 3);
}

#[test]
fn refine_output_is_unimodular_and_value_preserving() {
    let dir = tempfile::tempdir().unwrap();

    // plain refine output parses back through --format plain
    let refined_plain = run_ok(&["refine", "--input", &fixture("sample-d5.json")]);
    let plain_path = dir.path().join("refined.txt");
    std::fs::write(&plain_path, &refined_plain).unwrap();
    let rotation = run_ok(&[
        "rotation",
        "--input",
        plain_path.to_str().unwrap(),
        "--format",
        "plain",
    ]);
    assert_eq!(rotation.trim(), "1");

    // JSON refine output is a loop document; re-analyzing it shows every
    // edge determinant at +-1 and the same rotation number
    let refined_json = run_ok(&["refine", "--input", &fixture("sample-d5.json"), "--json"]);
    let json_path = dir.path().join("refined.json");
    std::fs::write(&json_path, &refined_json).unwrap();
    let report = run_ok(&["analyze", "--input", json_path.to_str().unwrap(), "--json"]);
    let doc: AnalysisDocument = serde_json::from_str(&report).unwrap();
    assert_eq!(doc.vertices.len(), 11);
    assert_eq!(doc.rotation.to_string(), "1");
    for edge in &doc.edges {
        assert_eq!(edge.l, 0);
        assert!(edge.eps.to_string() == "1" || edge.eps.to_string() == "-1");
    }
}

#[test]
fn analyze_json_round_trips() {
    let stdout = run_ok(&["analyze", "--input", &fixture("sample-d5.json"), "--json"]);
    let doc: AnalysisDocument = serde_json::from_str(&stdout).unwrap();
    let again = serde_json::to_string_pretty(&doc).unwrap();
    let back: AnalysisDocument = serde_json::from_str(&again).unwrap();
    assert_eq!(back, doc);
    assert_eq!(doc.edges.len(), 5);
    assert_eq!(doc.a_sum.to_string(), "3/2");
    assert_eq!(doc.xy_sum.to_string(), "5/2");
    assert_eq!(doc.signed_term_sum.to_string(), "13");
}

#[test]
fn huge_coordinates_survive_the_json_pipeline() {
    // a unimodular image of the square: coordinates far beyond 64 bits,
    // every edge determinant still +-1, rotation still 1
    let mut m = rotnum::Mat2::identity();
    for k in 0..30 {
        let factor = rotnum::Mat2::new(0, -1, 1, 2 + (k % 8));
        m = &m * &factor;
    }
    let square = [(1i64, 0i64), (0, 1), (-1, 0), (0, -1)];
    let vertices: Vec<rotnum::LatticeVector> = square
        .iter()
        .map(|&(x, y)| m.mul_vec(&rotnum::LatticeVector::new(x, y)))
        .collect();
    let max_len = vertices
        .iter()
        .map(|v| v.x.to_string().len().max(v.y.to_string().len()))
        .max()
        .unwrap();
    assert!(max_len > 19, "expected > 64-bit coordinates, got {max_len} digits");
    let vl = rotnum::VectorLoop::new(vertices).unwrap();
    let doc = LoopDocument::from_loop(Some("sheared-square".into()), &vl);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("huge.json");
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();

    let stdout = run_ok(&["analyze", "--input", path.to_str().unwrap(), "--json"]);
    let report: AnalysisDocument = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report.rotation.to_string(), "1");
    assert_eq!(report.vertices, doc.vertices);
    for edge in &report.edges {
        assert_eq!(edge.eps.to_string(), "1");
        assert_eq!(edge.l, 0);
    }
}

#[test]
fn help_and_version_exit_0() {
    let out = bin().arg("--help").output().unwrap();
    assert!(out.status.success());
    let out = bin().arg("--version").output().unwrap();
    assert!(out.status.success());
}
