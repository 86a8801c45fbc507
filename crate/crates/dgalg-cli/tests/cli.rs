//! End-to-end tests of the command-line interface: round trips, exit
//! codes, determinism of reports and the documented file formats.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dgalg"))
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("dgalg-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).to_string()
}

/// Strips the timing line, the only nondeterministic part of a report.
fn stable(report: &str) -> String {
    report
        .lines()
        .filter(|l| !l.starts_with("time_ms"))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn gen_auslander_gram_pipeline() {
    let file = tmp("e1.dga");
    let out = run(&["gen", "exterior", "1", "--out", file.to_str().unwrap()]);
    assert!(out.status.success());
    let gram = run(&["gram", file.to_str().unwrap(), "--normalize"]);
    assert!(gram.status.success());
    let text = stdout(&gram);
    assert!(text.contains("gram [1 2]"), "got: {text}");
    assert!(text.contains("gram [0 1]"));
    let auslander = run(&["auslander", file.to_str().unwrap()]);
    assert!(auslander.status.success());
    assert!(stdout(&auslander).contains("end_dim 5"));
}

#[test]
fn verify_truncated_exits_zero() {
    let file = tmp("t3.dga");
    assert!(run(&["gen", "truncated", "3", "--out", file.to_str().unwrap()]).status.success());
    let verify = run(&["verify", file.to_str().unwrap()]);
    assert!(verify.status.success(), "{}", stdout(&verify));
    assert!(stdout(&verify).contains("status PASS"));
}

#[test]
fn validate_rejects_corrupted_file() {
    let file = tmp("bad.dga");
    // d(x) = 1 violates D_DEGREE (and D_UNIT stays fine): degree drops
    std::fs::write(
        &file,
        "dgalgebra v1\nfield Q\nbasis 1 0\nbasis x 1\nunit 1*1\nmult 1 1 = 1*1\n\
         mult 1 x = 1*x\nmult x 1 = 1*x\ndiff x = 1*1\n",
    )
    .unwrap();
    let out = run(&["validate", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("D_DEGREE"), "stderr: {err}");
}

#[test]
fn validate_rejects_d_squared() {
    let file = tmp("d2.dga");
    // three-step identity chain: d fails d^2 = 0
    std::fs::write(
        &file,
        "dgalgebra v1\nfield Q\nbasis 1 0\nbasis a 0\nbasis b 1\nbasis c 2\n\
         unit 1*1\nmult 1 1 = 1*1\nmult 1 a = 1*a\nmult a 1 = 1*a\nmult 1 b = 1*b\n\
         mult b 1 = 1*b\nmult 1 c = 1*c\nmult c 1 = 1*c\n\
         diff a = 1*b\ndiff b = 1*c\n",
    )
    .unwrap();
    let out = run(&["validate", file.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("D_SQUARED"));
}

#[test]
fn all_families_round_trip() {
    for (family, n) in [
        ("exterior", "2"),
        ("truncated", "4"),
        ("beilinson", "2"),
        ("double-arrow", "3"),
        ("a-n", "3"),
    ] {
        let file = tmp(&format!("rt-{family}.dga"));
        assert!(run(&["gen", family, n, "--out", file.to_str().unwrap()]).status.success());
        let first = std::fs::read_to_string(&file).unwrap();
        // parse and re-serialize through validate + gen quiver is not
        // possible generically; re-generate instead and compare bytes
        let file2 = tmp(&format!("rt2-{family}.dga"));
        assert!(run(&["gen", family, n, "--out", file2.to_str().unwrap()]).status.success());
        let second = std::fs::read_to_string(&file2).unwrap();
        assert_eq!(first, second, "generation must be deterministic for {family}");
        // the serialized file must parse and validate
        let out = run(&["validate", file.to_str().unwrap()]);
        assert!(out.status.success(), "{family}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn info_reports_are_deterministic() {
    let file = tmp("det.dga");
    assert!(run(&["gen", "exterior", "2", "--out", file.to_str().unwrap()]).status.success());
    let a = stable(&stdout(&run(&["info", file.to_str().unwrap()])));
    let b = stable(&stdout(&run(&["info", file.to_str().unwrap()])));
    assert_eq!(a, b);
    assert!(a.contains("nilpotency_index 3"));
}

#[test]
fn glue_two_points_is_arrow_algebra() {
    let point = tmp("point.dga");
    assert!(run(&["gen", "truncated", "1", "--out", point.to_str().unwrap()]).status.success());
    let bimodule = tmp("arrow.dgb");
    std::fs::write(
        &bimodule,
        "dgbimodule v1\nbasis t 0\nleft 1 t = 1*t\nright t 1 = 1*t\n",
    )
    .unwrap();
    let out_file = tmp("glued.dga");
    let out = run(&[
        "glue",
        "--r",
        point.to_str().unwrap(),
        "--s",
        point.to_str().unwrap(),
        "--t",
        bimodule.to_str().unwrap(),
        "--out",
        out_file.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let info = stdout(&run(&["info", out_file.to_str().unwrap()]));
    assert!(info.contains("dim 3"), "{info}");
    // same algebra as the built-in two-vertex quiver, up to labels
    let direct = tmp("a2.dga");
    assert!(run(&["gen", "a-n", "2", "--out", direct.to_str().unwrap()]).status.success());
    let info2 = stdout(&run(&["info", direct.to_str().unwrap()]));
    assert_eq!(
        stable(&info).lines().filter(|l| l.starts_with("graded")).collect::<Vec<_>>(),
        stable(&info2).lines().filter(|l| l.starts_with("graded")).collect::<Vec<_>>(),
    );
}

#[test]
fn quiver_file_builds_path_algebra() {
    let quiver = tmp("kronecker-like.dgq");
    std::fs::write(
        &quiver,
        "dgquiver v1\nvertex 1\nvertex 2\narrow a 1 2 0\narrow b 1 2 -1\ndiff b = 1:a\n",
    )
    .unwrap();
    let out_file = tmp("from-quiver.dga");
    let out = run(&[
        "gen",
        "quiver",
        quiver.to_str().unwrap(),
        "--out",
        out_file.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let info = stdout(&run(&["info", out_file.to_str().unwrap()]));
    assert!(info.contains("dim 4"), "{info}");
    // d(b) = a kills the arrow in cohomology
    assert!(info.contains("cohomology_dims {0:2}"), "{info}");
}

#[test]
fn corpus_command_is_reproducible() {
    let dir1 = tmp("corpus1");
    let dir2 = tmp("corpus2");
    assert!(run(&["corpus", "--out-dir", dir1.to_str().unwrap()]).status.success());
    assert!(run(&["corpus", "--out-dir", dir2.to_str().unwrap()]).status.success());
    let mut names: Vec<String> = std::fs::read_dir(&dir1)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert!(names.len() >= 20);
    for name in names {
        let a = std::fs::read(dir1.join(&name)).unwrap();
        let b = std::fs::read(dir2.join(&name)).unwrap();
        assert_eq!(a, b, "{name} must be byte-identical across runs");
    }
}

#[test]
fn prime_field_generation() {
    let file = tmp("f7.dga");
    let out = run(&[
        "gen",
        "truncated",
        "3",
        "--field",
        "Fp:101",
        "--out",
        file.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&file).unwrap();
    assert!(text.contains("field Fp 101"));
    let info = run(&["info", file.to_str().unwrap()]);
    assert!(info.status.success());
    assert!(stdout(&info).contains("nilpotency_index 3"));
}

#[test]
fn round_trip_over_the_corpus() {
    use dgalg_cli::format::{parse_algebra, serialize_algebra};
    for entry in dgalg::corpus::corpus(dgalg::exactlin::FieldSpec::Rationals) {
        let text = serialize_algebra(&entry.algebra);
        let parsed = parse_algebra(&text).unwrap_or_else(|e| {
            panic!("{} does not round-trip: {e}", entry.name)
        });
        assert_eq!(parsed, entry.algebra, "{} structure constants", entry.name);
        // serialization is canonical: a second pass is byte-identical
        assert_eq!(serialize_algebra(&parsed), text, "{}", entry.name);
    }
}
