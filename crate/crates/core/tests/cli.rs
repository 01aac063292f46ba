use std::path::PathBuf;
use std::process::Command;

use corings::cli::parse_workspace;
use corings::constr::{tensor_coring, tensor_extension};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_corings"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("utf-8 report"),
        out.status.code().expect("exit code"),
    )
}

fn in_workspace(file: &str, args: &[&str]) -> (String, i32) {
    let ws = data(file);
    let mut all = vec!["--workspace", ws.to_str().unwrap()];
    all.extend_from_slice(args);
    run(&all)
}

/// Compares against `tests/golden/<name>`; `UPDATE_GOLDEN=1` rewrites the file.
fn golden(name: &str, file: &str, args: &[&str], code: i32) {
    let (out, actual_code) = in_workspace(file, args);
    assert_eq!(actual_code, code, "exit code for {name}:\n{out}");
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden file {path:?}"));
    assert_eq!(out, expected, "report mismatch for {name}");
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("corings-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn check_matrix_coalgebra() {
    golden("check_c2matrix.txt", "f5.json", &["check", "C2matrix"], 0);
}

#[test]
fn tensor_square_of_matrix_coalgebra() {
    golden("tensor_c2matrix.txt", "f5.json", &["tensor", "C2matrix", "C2matrix"], 0);
}

#[test]
fn dims_of_matrix_coalgebra() {
    golden("dims_c2matrix.txt", "f5.json", &["dims", "C2matrix"], 0);
}

#[test]
fn check_regular_extension() {
    golden("check_regular.txt", "f5.json", &["check", "R"], 0);
}

#[test]
fn compose_extension_morphisms() {
    golden("compose_ext.txt", "f5.json", &["compose", "to_k", "id_m"], 0);
    golden(
        "compose_ext.json",
        "f5.json",
        &["--json-report", "compose", "to_k", "id_m"],
        0,
    );
}

#[test]
fn compose_corings_morphisms() {
    golden("compose_corings.txt", "f5.json", &["compose", "eps_s", "id_s"], 0);
}

#[test]
fn extend_tensor() {
    golden("extend_tensor.txt", "f5.json", &["extend-tensor", "id_m", "grp"], 0);
}

#[test]
fn base_extend_counit() {
    golden("base_extend.txt", "f5.json", &["base-extend", "eps_s"], 0);
}

#[test]
fn broken_counit_names_e12() {
    golden("broken_counit.txt", "broken_counit.json", &["check", "C2matrix"], 1);
}

#[test]
fn broken_coassociativity() {
    golden("noncoassociative.txt", "noncoassociative.json", &["check", "G"], 1);
}

#[test]
fn broken_colinearity() {
    golden("noncolinear.txt", "noncolinear.json", &["check", "E"], 1);
}

#[test]
fn broken_multiplicativity() {
    golden("nonmultiplicative.txt", "nonmultiplicative.json", &["check", "bad"], 1);
}

#[test]
fn broken_delta_linearity() {
    golden("nonlinear_delta.txt", "nonlinear_delta.json", &["check", "E"], 1);
}

#[test]
fn non_prime_field_is_input_error() {
    golden("nonprime.txt", "nonprime.json", &["check", "K"], 2);
}

#[test]
fn unknown_name_is_input_error() {
    let (out, code) = in_workspace("f5.json", &["check", "nope"]);
    assert_eq!(code, 2);
    assert!(out.contains("error: unknown-reference"));
}

#[test]
fn missing_workspace_file() {
    let (out, code) = run(&["--workspace", "/nonexistent/ws.json", "check", "k"]);
    assert_eq!(code, 2);
    assert!(out.contains("error: io-error"));
}

#[test]
fn reports_are_byte_stable() {
    for args in [
        &["check", "C2matrix"][..],
        &["compose", "to_k", "id_m"],
        &["eta-naturality", "C2matrix", "S"],
    ] {
        assert_eq!(in_workspace("f5.json", args), in_workspace("f5.json", args));
    }
}

#[test]
fn seed_changes_samples_not_verdict() {
    let (a, code_a) = in_workspace("q.json", &["--seed", "1", "eta-naturality", "G", "T", "--samples", "5"]);
    let (b, code_b) = in_workspace("q.json", &["--seed", "2", "eta-naturality", "G", "T", "--samples", "5"]);
    assert_eq!((code_a, code_b), (0, 0));
    assert!(a.contains("seed: 1") && b.contains("seed: 2"));
}

#[test]
fn tensor_then_check_the_dump() {
    let dump = scratch("tensor.json");
    let (_, code) = in_workspace(
        "f5.json",
        &[
            "--dump",
            dump.to_str().unwrap(),
            "tensor",
            "C2matrix",
            "C2matrix",
            "--out",
            "T",
        ],
    );
    assert_eq!(code, 0);
    let (out, code) = run(&["--workspace", dump.to_str().unwrap(), "check", "T"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("dim: 16"));
}

#[test]
fn dumped_tensor_coring_has_identical_matrices() {
    let ws = parse_workspace(&std::fs::read_to_string(data("q.json")).unwrap()).unwrap();
    let dump = scratch("sweedler_tensor.json");
    let (_, code) = in_workspace(
        "q.json",
        &["--dump", dump.to_str().unwrap(), "tensor", "S", "G", "--out", "SG"],
    );
    assert_eq!(code, 0);
    let again = parse_workspace(&std::fs::read_to_string(&dump).unwrap()).unwrap();
    let t = again.coring("SG").unwrap();
    let expected = tensor_coring(ws.coring("S").unwrap(), ws.coring("G").unwrap()).unwrap();
    assert_eq!(**t, expected);
    assert_eq!(t.comul_lift(), expected.comul_lift());
    assert_eq!(t.counit(), expected.counit());
    assert_eq!(t.check(), Ok(()));
}

#[test]
fn dumped_extension_round_trips() {
    let ws = parse_workspace(&std::fs::read_to_string(data("f5.json")).unwrap()).unwrap();
    let dump = scratch("ext_tensor.json");
    let (_, code) = in_workspace(
        "f5.json",
        &[
            "--dump",
            dump.to_str().unwrap(),
            "extend-tensor",
            "id_m",
            "grp",
            "--out",
            "E",
        ],
    );
    assert_eq!(code, 0);
    let again = parse_workspace(&std::fs::read_to_string(&dump).unwrap()).unwrap();
    let e = again.extension("E").unwrap();
    let expected = tensor_extension(
        ws.ext_morphism("id_m").unwrap().extension(),
        ws.ext_morphism("grp").unwrap().extension(),
    )
    .unwrap();
    assert_eq!(e.coact_lift(), expected.coact_lift());
    assert_eq!(e.right_acts(), expected.right_acts());
    assert_eq!(e.c(), expected.c());
    assert!(e.check_conditions().iter().all(|(_, v)| matches!(v, Some(Ok(())))));
}
