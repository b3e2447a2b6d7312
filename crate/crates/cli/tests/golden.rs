//! Byte-exact command line tests. Every documented exit code is exercised.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_linkhom"))
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    let mut cmd = bin();
    for a in args {
        if let Some(name) = a.strip_prefix('@') {
            cmd.arg(data(name));
        } else {
            cmd.arg(a);
        }
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn table_of_trivial_diagram() {
    let out = run(&["table", "@trivial2.gd"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "mu 12 = 0\nmu 21 = 0\n");
}

#[test]
fn table_of_single_crossing() {
    let out = run(&["table", "@single.gd"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "mu 12 = 1\nmu 21 = 0\n");
}

#[test]
fn mu_single_value() {
    let out = run(&["mu", "@single.gd", "--index", "12"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "mu 12 = 1\n");
}

#[test]
fn mu_rejects_repeated_index_with_code_8() {
    let out = run(&["mu", "@single.gd", "--index", "112"]);
    assert_eq!(code(&out), 8);
    assert!(stdout(&out).is_empty());
}

#[test]
fn phi_prints_longitudes_and_expansions() {
    let out = run(&["phi", "@single.gd"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "lambda 1: e\nlambda~ 1: 1\nlambda 2: x1\nlambda~ 2: 1 + X1\n"
    );

    // the kink contributes a meridian power to its own longitude, which
    // the normalized expansion drops
    let out = run(&["phi", "@kinked.gd"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "lambda 1: x1^-1\nlambda~ 1: 1\nlambda 2: x1\nlambda~ 2: 1 + X1\n"
    );
}

#[test]
fn equiv_verdicts_and_exit_codes() {
    let out = run(&["equiv", "@single.gd", "@trivial2.gd"]);
    assert_eq!(code(&out), 1);
    assert_eq!(stdout(&out), "distinct\n");

    // a kink is invisible to the invariants
    let out = run(&["equiv", "@single.gd", "@kinked.gd"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "equivalent\n");
}

#[test]
fn equiv_rejects_mismatched_strands_with_code_5() {
    let out = run(&["equiv", "@single.gd", "@trivial3.gd"]);
    assert_eq!(code(&out), 5);
}

#[test]
fn stack_writes_canonical_file() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("stacked.gd");
    let out = run(&[
        "stack",
        "@single.gd",
        "@single.gd",
        "-o",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        std::fs::read_to_string(&out_path).unwrap(),
        "gauss v1\nstrands 2\narrow t=1.1 h=2.1 s=+\narrow t=1.2 h=2.2 s=+\n"
    );
}

#[test]
fn realize_commutator_target() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("comm.gd");
    let out = run(&["realize", "@comm.targets", "-o", out_path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        std::fs::read_to_string(&out_path).unwrap(),
        "gauss v1\nstrands 3\narrow t=1.1 h=3.1 s=-\narrow t=1.2 h=3.3 s=+\n\
         arrow t=2.1 h=3.2 s=-\narrow t=2.2 h=3.4 s=+\n"
    );
    let table = run(&["table", out_path.to_str().unwrap()]);
    let text = stdout(&table);
    assert!(text.contains("mu 123 = 1\n"));
    assert!(text.contains("mu 213 = -1\n"));
    assert!(text.starts_with("mu 12 = 0\n"));
}

#[test]
fn realize_rejects_own_meridian_with_code_7() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("never.gd");
    let out = run(&["realize", "@bad.targets", "-o", out_path.to_str().unwrap()]);
    assert_eq!(code(&out), 7);
    assert!(!out_path.exists());
}

#[test]
fn move_roundtrip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let kinked = dir.path().join("kinked.gd");
    let back = dir.path().join("back.gd");
    let out = run(&[
        "move",
        "@single.gd",
        "--kind",
        "r1+",
        "--at",
        "1.1,-,ht",
        "-o",
        kinked.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        std::fs::read_to_string(&kinked).unwrap(),
        "gauss v1\nstrands 2\narrow t=1.2 h=1.1 s=-\narrow t=1.3 h=2.1 s=+\n"
    );
    let out = run(&[
        "move",
        kinked.to_str().unwrap(),
        "--kind",
        "r1-",
        "--at",
        "0",
        "-o",
        back.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        std::fs::read_to_string(&back).unwrap(),
        "gauss v1\nstrands 2\narrow t=1.1 h=2.1 s=+\n"
    );
}

#[test]
fn move_rejects_missing_pattern_with_code_6() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("never.gd");
    let out = run(&[
        "move",
        "@single.gd",
        "--kind",
        "sv",
        "--at",
        "0",
        "-o",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 6);
    let out = run(&[
        "move",
        "@single.gd",
        "--kind",
        "oc",
        "--at",
        "zzz",
        "-o",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 6);
}

#[test]
fn count_prints_both_closed_forms() {
    for (n, total, rank) in [("2", "2", "2"), ("3", "12", "9"), ("4", "60", "32")] {
        let out = run(&["count", "--strands", n]);
        assert_eq!(code(&out), 0);
        assert_eq!(stdout(&out), format!("total {total}\nrank {rank}\n"));
    }
}

#[test]
fn gamma_on_obstructed_data_exits_1() {
    let out = run(&["gamma", "@d0.sd"]);
    assert_eq!(code(&out), 1);
    assert_eq!(
        stdout(&out),
        "Gamma[1,2] = 00\nGamma[1,3] = 11\nGamma[2,1] = 00\nGamma[2,3] = 01\n\
         Gamma[3,1] = 00\nGamma[3,2] = 00\n\
         obstruction: Gamma[1,3] and Gamma[2,3] are distinct and nonzero\n"
    );
}

#[test]
fn gamma_on_clean_data_exits_0() {
    let out = run(&["gamma", "@shared.sd"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).ends_with("no obstruction\n"));
}

#[test]
fn unknown_subcommand_is_usage_error_code_2() {
    let out = run(&["frobnicate"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn missing_file_is_io_error_code_3() {
    let out = run(&["table", "/nonexistent/zzz.gd"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn malformed_file_is_parse_error_code_4() {
    let out = run(&["table", "@malformed.gd"]);
    assert_eq!(code(&out), 4);
}

#[test]
fn duplicate_slot_is_validation_error_code_5() {
    let out = run(&["table", "@dup.gd"]);
    assert_eq!(code(&out), 5);
}

#[test]
fn selftest_is_reproducible() {
    let a = run(&["selftest", "--seed", "42", "--iters", "5"]);
    let b = run(&["selftest", "--seed", "42", "--iters", "5"]);
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).contains("ok move-invariance (5 iters)"));
    assert!(stdout(&a).ends_with("selftest passed (seed=42)\n"));
}

#[test]
fn output_is_byte_stable_across_runs() {
    for args in [
        vec!["table", "@kinked.gd"],
        vec!["phi", "@kinked.gd"],
        vec!["gamma", "@d0.sd"],
        vec!["count", "--strands", "4"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert_eq!(stdout(&a), stdout(&b), "{args:?}");
        assert_eq!(code(&a), code(&b), "{args:?}");
    }
}
