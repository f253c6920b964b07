use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_chordgirth"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("chordgirth-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    let _ = std::fs::remove_file(&path);
    path
}

#[test]
fn construct_pipes_into_solve() {
    let built = run(&["construct", "gamma2", "--l", "1"]);
    assert!(built.status.success());
    let solved = run_with_stdin(&["solve", "--in", "-", "--k", "2"], &built.stdout);
    assert!(solved.status.success());
    assert!(
        stdout(&solved).starts_with("length=6 chords="),
        "{}",
        stdout(&solved)
    );
}

#[test]
fn solve_json_fields() {
    let built = run(&["construct", "gamma3", "--l", "2"]);
    let solved = run_with_stdin(&["solve", "--in", "-", "--k", "3", "--json"], &built.stdout);
    let v: serde_json::Value = serde_json::from_slice(&solved.stdout).unwrap();
    for field in ["n", "k", "length", "witness", "chords_used", "elapsed_ms"] {
        assert!(v.get(field).is_some(), "missing {field}");
    }
    assert_eq!(v["n"], 44);
    assert_eq!(v["length"], 6);
    assert_eq!(v["witness"].as_array().unwrap().len(), 6);
}

#[test]
fn solve_all_k() {
    let o = run(&[
        "solve",
        "--in",
        "petersen.g6",
        "--k",
        "2",
        "--all-k",
        "--json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let lengths: Vec<_> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["length"].as_u64().unwrap())
        .collect();
    assert_eq!(lengths, vec![5, 5, 5]);
    let text = stdout(&run(&[
        "solve",
        "--in",
        "petersen.g6",
        "--k",
        "1",
        "--all-k",
    ]));
    assert_eq!(text.lines().count(), 2);
    assert!(text.starts_with("k=0 length=5"));
}

#[test]
fn bundled_tutte_coxeter_budget_zero() {
    let o = run(&["solve", "--in", "tutte_coxeter.decomp", "--k", "0"]);
    assert!(o.status.success());
    assert!(
        stdout(&o).starts_with("length=10 chords=0"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn bounds_table() {
    let o = run(&["bounds", "--n", "14", "--k", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(
        text.lines()
            .any(|l| l.starts_with("upper") && l.contains("√(2n)+2 = 7.29")),
        "{text}"
    );

    let o = run(&[
        "bounds", "--n", "100", "--k", "2", "--d", "3", "--g", "8", "--json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["moore_bound"], "30");
    assert_eq!(v["assertable_upper"], 16);
}

#[test]
fn decompose_and_blow_up() {
    let o = run(&["decompose", "--in", "petersen.g6"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("n 10\n"));
    assert_eq!(text.lines().filter(|l| l.starts_with("chord")).count(), 5);

    let out = scratch("petersen_blowup.decomp");
    let o = run(&[
        "construct",
        "blowup",
        "--base",
        "petersen.g6",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let o = run(&["solve", "--in", out.to_str().unwrap(), "--k", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((v["n"].as_u64(), v["length"].as_u64()), (Some(60), Some(6)));
}

#[test]
fn projective_plane_is_graph6() {
    let o = run(&["construct", "pg", "--q", "2"]);
    assert!(o.status.success());
    // 14 vertices -> header byte 63 + 14
    assert_eq!(o.stdout[0], b'M');
    let o = run_with_stdin(&["solve", "--in", "-", "--k", "2"], &o.stdout);
    assert!(stdout(&o).starts_with("length=6"));
}

#[test]
fn random_is_deterministic() {
    let a = run(&[
        "construct",
        "random",
        "--n",
        "12",
        "--d",
        "4",
        "--seed",
        "7",
    ]);
    let b = run(&[
        "construct",
        "random",
        "--n",
        "12",
        "--d",
        "4",
        "--seed",
        "7",
    ]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(
        stdout(&a)
            .lines()
            .filter(|l| l.starts_with("chord"))
            .count(),
        12
    );
}

#[test]
fn fix_bridges_output_is_bridgeless() {
    // two K4s with a subdivided edge each, joined through the subdivision vertices
    let g = chordgirth::Graph::new(
        10,
        [
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 4),
            (2, 3),
            (3, 4),
            (5, 6),
            (5, 7),
            (5, 8),
            (6, 7),
            (6, 9),
            (7, 8),
            (8, 9),
            (4, 9),
        ],
    )
    .unwrap();
    let mut bytes = chordgirth::graph::graph6::write_graph6(&g);
    bytes.push(b'\n');
    let o = run_with_stdin(&["fix-bridges", "--in", "-", "--trace"], &bytes);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bridge {4,9}"));
    let fixed = chordgirth::graph::graph6::parse_graph6(&o.stdout).unwrap();
    assert!(fixed.is_cubic());
    assert!(chordgirth::graph::find_bridges(&fixed).is_empty());
    // the rewired graph decomposes
    let o = run_with_stdin(&["decompose", "--in", "-"], &o.stdout);
    assert!(o.status.success());
}

#[test]
fn search_emits_a_reusable_witness() {
    let o = run(&["search", "--n", "8", "--k", "1", "--threads", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("# gamma_1(8) = 5\n"), "{text}");
    let o = run_with_stdin(&["solve", "--in", "-", "--k", "1"], text.as_bytes());
    assert!(stdout(&o).starts_with("length=5"));
}

#[test]
fn search_interrupt_and_resume() {
    let ckpt = scratch("search.ckpt");
    let witness = scratch("witness.decomp");
    let c = ckpt.to_str().unwrap();
    let o = run(&[
        "search",
        "--n",
        "10",
        "--k",
        "2",
        "--checkpoint",
        c,
        "--max-units",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("interrupted after 3"));
    let o = run(&[
        "search",
        "--n",
        "10",
        "--k",
        "2",
        "--checkpoint",
        c,
        "--witness",
        witness.to_str().unwrap(),
        "--json",
    ]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["gamma"], 5);
    assert_eq!(v["resumed_units"], 3);
    let o = run(&["solve", "--in", witness.to_str().unwrap(), "--k", "2"]);
    assert!(stdout(&o).starts_with("length=5"));
}

#[test]
fn verify_suite_passes() {
    let o = run(&["verify", "--suite", "paper"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.starts_with("[PASS]")).count(), 11);
}

#[test]
fn exit_codes() {
    // bad parameter
    assert_eq!(run(&["construct", "pg", "--q", "4"]).status.code(), Some(2));
    assert_eq!(
        run(&["construct", "gamma2", "--l", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["search", "--n", "16", "--k", "1"]).status.code(),
        Some(2)
    );
    // clap usage errors
    assert_eq!(run(&["solve", "--k", "1"]).status.code(), Some(2));
    assert_eq!(
        run(&["solve", "--in", "x", "--k", "-1"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "--suite", "other"]).status.code(), Some(2));
    // I/O and format
    assert_eq!(
        run(&["solve", "--in", "/nonexistent/file", "--k", "1"])
            .status
            .code(),
        Some(3)
    );
    let o = run_with_stdin(
        &["solve", "--in", "-", "--k", "1"],
        b"n 4\nfactor 0 1\nfactor 2 3\n",
    );
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cycle length ≥ 3"));
    let o = run_with_stdin(&["decompose", "--in", "-"], b"Bg\n");
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn data_directory_override() {
    let dir = scratch("data");
    std::fs::create_dir_all(&dir).unwrap();
    // K4 under the Petersen name
    std::fs::write(dir.join("petersen.g6"), "C~\n").unwrap();
    let o = bin()
        .args(["solve", "--in", "petersen.g6", "--k", "1", "--json"])
        .env("CHORDGIRTH_DATA_DIR", &dir)
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["n"], 4);
}
