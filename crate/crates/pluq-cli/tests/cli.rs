use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use pluq::{arithmetic_cost, parse_matrix, parse_permutation, Side};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pluq"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawning pluq")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn tmpdir() -> PathBuf {
    let dir = std::env::temp_dir().join(format!("pluq-cli-test-{}", std::process::id()));
    fs::create_dir_all(&dir).expect("creating temp dir");
    dir
}

const EXAMPLE: &str = "4 4 101\n2 0 3 0\n1 0 0 0\n0 0 4 0\n0 2 0 1\n";

#[test]
fn rpm_prints_pivots_of_example() {
    let path = tmpdir().join("ex1.mat");
    fs::write(&path, EXAMPLE).unwrap();
    for algo in ["crout", "recursive", "left", "right"] {
        let out = run(&["rpm", "--in", path.to_str().unwrap(), "--algo", algo]);
        assert!(out.status.success(), "{algo}: {out:?}");
        assert_eq!(stdout(&out), "3 pivots: (1,1) (2,3) (4,2)\n", "{algo}");
    }
}

#[test]
fn gen_is_deterministic_and_honors_rank() {
    let a = run(&["gen", "--m", "6", "--n", "5", "--r", "3", "--p", "101", "--seed", "9"]);
    let b = run(&["gen", "--m", "6", "--n", "5", "--r", "3", "--p", "101", "--seed", "9"]);
    assert!(a.status.success());
    assert_eq!(stdout(&a), stdout(&b));
    let m = parse_matrix(&stdout(&a)).unwrap();
    assert_eq!((m.rows(), m.cols()), (6, 5));
    assert_eq!(pluq::oracle::rank(&m), 3);
    let c = run(&["gen", "--m", "6", "--n", "5", "--r", "3", "--p", "101", "--seed", "10"]);
    assert_ne!(stdout(&a), stdout(&c));
}

#[test]
fn pluq_writes_factor_files_that_reconstruct() {
    let dir = tmpdir();
    let path = dir.join("fac-in.mat");
    fs::write(&path, EXAMPLE).unwrap();
    let prefix = dir.join("fac").to_str().unwrap().to_string();
    let out = run(&[
        "pluq",
        "--in",
        path.to_str().unwrap(),
        "--algo",
        "iter",
        "--search",
        "product",
        "--out-prefix",
        &prefix,
    ]);
    assert!(out.status.success(), "{out:?}");
    assert!(stdout(&out).contains("rank 3 of 4x4 over GF(101)"));
    let p = parse_permutation(&fs::read_to_string(format!("{prefix}.P.perm")).unwrap()).unwrap();
    let l = parse_matrix(&fs::read_to_string(format!("{prefix}.L.mat")).unwrap()).unwrap();
    let u = parse_matrix(&fs::read_to_string(format!("{prefix}.U.mat")).unwrap()).unwrap();
    let q = parse_permutation(&fs::read_to_string(format!("{prefix}.Q.perm")).unwrap()).unwrap();
    let lu = l.matmul(&u).unwrap();
    let luq = q.apply(&lu, Side::Cols, false).unwrap();
    let a = p.apply(&luq, Side::Rows, false).unwrap();
    assert_eq!(a, parse_matrix(EXAMPLE).unwrap());
}

#[test]
fn bench_reports_exact_cost() {
    for (m, n, r) in [(16usize, 16usize, 8usize), (24, 16, 10), (10, 30, 5)] {
        let (ms, ns, rs) = (m.to_string(), n.to_string(), r.to_string());
        let out = run(&[
            "bench", "--m", &ms, "--n", &ns, "--r", &rs, "--reps", "1", "--algo", "crout",
        ]);
        assert!(out.status.success(), "{out:?}");
        let text = stdout(&out);
        let cost_tok = text
            .lines()
            .next()
            .unwrap()
            .split_whitespace()
            .nth(9)
            .unwrap();
        assert_eq!(cost_tok.parse::<f64>().unwrap(), arithmetic_cost(m, n, r));
    }
}

#[test]
fn verify_table_passes_quickly() {
    let out = run(&[
        "verify-table",
        "--trials",
        "10",
        "--seed",
        "3",
        "--p",
        "7",
        "--max-dim",
        "6",
    ]);
    assert!(out.status.success(), "{out:?}");
    assert_eq!(stdout(&out).matches(" ok (10 instances)").count(), 11);
}

#[test]
fn input_errors_exit_2_and_verification_failures_exit_1() {
    let dir = tmpdir();
    let bad = dir.join("bad.mat");
    fs::write(&bad, "2 2 7\n1 9\n0 1\n").unwrap();
    let out = run(&["rpm", "--in", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");

    let missing = run(&["rpm", "--in", dir.join("nope.mat").to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(2));

    let usage = run(&["rpm", "--no-such-flag"]);
    assert_eq!(usage.status.code(), Some(2));

    // non-revealing strategy rejected for rpm
    let good = dir.join("good.mat");
    fs::write(&good, EXAMPLE).unwrap();
    let out = run(&[
        "rpm", "--in", good.to_str().unwrap(), "--algo", "iter", "--search", "lex",
        "--row-perm", "trans", "--col-perm", "trans",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn echelon_and_leu_and_bruhat_run_clean() {
    let dir = tmpdir();
    let path = dir.join("forms.mat");
    fs::write(&path, EXAMPLE).unwrap();
    let p = path.to_str().unwrap();

    let col = run(&["echelon", "--in", p]);
    assert!(col.status.success());
    assert!(stdout(&col).starts_with("pivots: (1,1) (2,2) (4,3)\n"));

    let row = run(&["echelon", "--in", p, "--rows"]);
    assert!(row.status.success());

    let lead = run(&["echelon", "--in", p, "--leading", "2", "3"]);
    assert!(lead.status.success());
    assert!(stdout(&lead).starts_with("pivots: (1,1) (2,2)\n"), "{}", stdout(&lead));

    for cmd in ["leu", "bruhat", "generic"] {
        let out = run(&[cmd, "--in", p]);
        assert!(out.status.success(), "{cmd}: {out:?}");
    }
}
