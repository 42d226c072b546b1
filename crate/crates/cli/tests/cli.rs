use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn effspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_effspec"))
        .args(args)
        .env_remove("EFFSPEC_MAX_N")
        .output()
        .expect("binary runs")
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = effspec(args);
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

struct Files(TempDir);

impl Files {
    fn new() -> Self {
        Files(tempfile::tempdir().unwrap())
    }

    fn write(&self, name: &str, text: &str) -> String {
        let path = self.0.path().join(name);
        std::fs::write(&path, text).unwrap();
        path.to_str().unwrap().to_string()
    }
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn radius_of_rotation() {
    let (code, out, _) = run(&["radius", p(&fixture("rotation.txt")), "--eta", "1,1"]);
    assert_eq!((code, out.as_str()), (0, "radius: 1.414213562373\n"));
}

#[test]
fn radius_defaults_to_unit_eta() {
    let (code, out, _) = run(&["radius", p(&fixture("rotation.txt"))]);
    assert_eq!((code, out.as_str()), (0, "radius: 1.414213562373\n"));
}

#[test]
fn radius_of_identity_at_zero() {
    let f = Files::new();
    let id = f.write("id.txt", "3\n1 0 0\n0 1 0\n0 0 1\n");
    let (code, out, _) = run(&["radius", &id, "--eta", "0,0,0"]);
    assert_eq!((code, out.as_str()), (0, "radius: 0\n"));
}

#[test]
fn spectrum_pairs() {
    let f = Files::new();
    let k = f.write("k.txt", "2\n0 1\n4 0\n");
    let (code, out, _) = run(&["spectrum", &k]);
    assert_eq!(
        (code, out.as_str()),
        (0, "eigenvalue: 2 0\neigenvalue: -2 0\n")
    );
    let (_, out, _) = run(&["spectrum", p(&fixture("rotation.txt"))]);
    assert_eq!(out, "eigenvalue: 1 1\neigenvalue: 1 -1\n");
}

#[test]
fn bad_eta_is_a_usage_error() {
    let k = fixture("swap.txt");
    assert_eq!(run(&["radius", p(&k), "--eta", "1"]).0, 64);
    assert_eq!(run(&["radius", p(&k), "--eta", "1,-2"]).0, 64);
    assert_eq!(run(&["radius", p(&k), "--eta", "1,x"]).0, 64);
}

#[test]
fn compare_signed_sign_flip_is_inconclusive() {
    let (code, out, _) = run(&[
        "compare",
        p(&fixture("swap.txt")),
        p(&fixture("swap_signed.txt")),
        "--signed",
    ]);
    assert_eq!(code, 2);
    assert!(out.contains("outcome: inconclusive\n"), "{out}");
    assert!(out.contains("precondition: "), "{out}");
}

#[test]
fn compare_signed_rotation_pair_differs() {
    let (code, out, _) = run(&[
        "compare",
        p(&fixture("rotation_sym.txt")),
        p(&fixture("rotation.txt")),
        "--signed",
    ]);
    assert_eq!(code, 1);
    assert!(
        out.contains("outcome: not-equal\nmethod: signed-principal-minors\nwitness: {1,2}\n"),
        "{out}"
    );
}

#[test]
fn compare_with_transpose_is_equal() {
    let f = Files::new();
    let k = f.write("k.txt", "3\n0.5 2 0\n0 1 3\n1 0 0.25\n");
    let kt = f.write("kt.txt", "3\n0.5 0 1\n2 1 0\n0 3 0.25\n");
    let (code, out, _) = run(&["compare", &k, &kt]);
    assert_eq!(code, 0);
    assert!(
        out.starts_with("outcome: equal\nmethod: principal-minors\n"),
        "{out}"
    );
}

#[test]
fn compare_rejects_negative_without_signed() {
    let (code, _, err) = run(&[
        "compare",
        p(&fixture("swap.txt")),
        p(&fixture("swap_signed.txt")),
    ]);
    assert_eq!(code, 65);
    assert!(err.contains("negative"), "{err}");
}

#[test]
fn compare_dimension_mismatch() {
    let f = Files::new();
    let one = f.write("one.txt", "1\n2\n");
    let (code, _, _) = run(&["compare", &one, p(&fixture("swap.txt"))]);
    assert_eq!(code, 64);
}

#[test]
fn minors_listing() {
    let (code, out, _) = run(&["minors", p(&fixture("swap_signed.txt"))]);
    assert_eq!((code, out.as_str()), (0, "{1}: 0\n{2}: 0\n{1,2}: 1\n"));
}

#[test]
fn atoms_of_triangular() {
    let f = Files::new();
    let k = f.write("k.txt", "2\n1 5\n0 2\n");
    let (code, out, _) = run(&["atoms", &k]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "atom: {1}\natom: {2}\nirreducible: false\ncompletely_reducible: false\n"
    );
}

#[test]
fn clans_on_three_by_three_is_empty() {
    let f = Files::new();
    let k = f.write("k.txt", "3\n1 2 3\n4 5 6\n7 8 10\n");
    let (code, out, _) = run(&["clans", &k]);
    assert_eq!((code, out.as_str()), (0, "count: 0\n"));
}

const CLAN4: &str = "4\n1 2 2 4\n3 1 1 2\n6 3 1 2\n2 1 3 5\n";

#[test]
fn clans_and_partial_transpose() {
    let f = Files::new();
    let k = f.write("k.txt", CLAN4);
    let (code, out, _) = run(&["clans", &k]);
    assert_eq!(code, 0);
    assert!(
        out.contains("clan: {1,2}\n") && out.contains("clan: {3,4}\n"),
        "{out}"
    );

    let (code, out, _) = run(&["partial-transpose", &k, "--alpha", "1,2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("4\n"));
    let kt = f.write("kt.txt", &out);
    let (code, cmp, _) = run(&["compare", &k, &kt]);
    assert_eq!(code, 0, "{cmp}");
}

#[test]
fn partial_transpose_rejects_non_clan() {
    let f = Files::new();
    let k = f.write("k.txt", "4\n1 2 3 4\n5 6 7 8\n9 1 2 3\n4 5 7 6\n");
    let (code, _, err) = run(&["partial-transpose", &k, "--alpha", "1,2"]);
    assert_eq!(code, 65, "{err}");
    assert_eq!(run(&["partial-transpose", &k, "--alpha", "1,9"]).0, 64);
}

#[test]
fn diagsim_recovers_scaling() {
    let f = Files::new();
    // second = D⁻¹·first·D with D = diag(1, 2, 4)
    let k = f.write("k.txt", "3\n1 2 4\n1 3 2\n0.5 1 5\n");
    let kt = f.write("kt.txt", "3\n1 4 16\n0.5 3 4\n0.125 0.5 5\n");
    let (code, out, _) = run(&["diagsim", &k, &kt]);
    assert_eq!(code, 0, "{out}");
    assert!(
        out.starts_with("similar: true\nd: 1 2 4\nresidual: 0\n"),
        "{out}"
    );

    let other = f.write("o.txt", "3\n1 4 16\n0.5 3 4\n0.125 0.5 6\n");
    let (code, out, _) = run(&["diagsim", &k, &other]);
    assert_eq!((code, out.as_str()), (1, "similar: false\n"));
}

#[test]
fn minimize_reports_all_ties() {
    let f = Files::new();
    let id = f.write("id.txt", "3\n1 0 0\n0 1 0\n0 0 1\n");
    let (code, out, _) = run(&["minimize", &id, "--budget", "1"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "budget: 1\nradius: 1\nargmin: {1}\nargmin: {2}\nargmin: {3}\n"
    );
    let (code, out, _) = run(&["minimize", p(&fixture("swap.txt")), "--budget", "1"]);
    assert_eq!(
        (code, out.as_str()),
        (0, "budget: 1\nradius: 0\nargmin: {1}\nargmin: {2}\n")
    );
}

#[test]
fn minimize_matches_per_subset_radii() {
    let f = Files::new();
    let k = f.write(
        "k.txt",
        "4\n0.3 1.2 0.7 2\n0.9 0.1 1.5 0.4\n1.1 0.6 0.2 0.8\n0.5 1.9 0.3 1\n",
    );
    let (_, out, _) = run(&["minimize", &k, "--budget", "2"]);
    let mut best = f64::INFINITY;
    for zeroed in [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4]] {
        let eta: Vec<&str> = (1..=4)
            .map(|i| if zeroed.contains(&i) { "0" } else { "1" })
            .collect();
        let (_, r, _) = run(&["radius", &k, "--eta", &eta.join(",")]);
        let r: f64 = r.trim().trim_start_matches("radius: ").parse().unwrap();
        best = best.min(r);
    }
    let reported: f64 = out
        .lines()
        .nth(1)
        .unwrap()
        .trim_start_matches("radius: ")
        .parse()
        .unwrap();
    assert!((reported - best).abs() < 1e-12, "{out}");
}

#[test]
fn cap_override_from_environment() {
    let f = Files::new();
    let id = f.write("id.txt", "3\n1 0 0\n0 1 0\n0 0 1\n");
    let out = Command::new(env!("CARGO_BIN_EXE_effspec"))
        .args(["minors", &id])
        .env("EFFSPEC_MAX_N", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(64));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap of 2"));
    assert_eq!(run(&["minors", &id]).0, 0);
}

#[test]
fn json_lines_output() {
    let (code, out, _) = run(&["--json-lines", "radius", p(&fixture("rotation.txt"))]);
    assert_eq!((code, out.as_str()), (0, "{\"radius\":1.414213562373}\n"));
    let (_, out, _) = run(&["spectrum", "--json-lines", p(&fixture("rotation.txt"))]);
    assert_eq!(
        out,
        "{\"eigenvalue\":[1.0,1.0]}\n{\"eigenvalue\":[1.0,-1.0]}\n"
    );
    let (_, out, _) = run(&[
        "--json-lines",
        "compare",
        p(&fixture("swap.txt")),
        p(&fixture("swap.txt")),
    ]);
    for line in out.lines() {
        let value: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(value.as_object().unwrap().len(), 1, "{line}");
    }
}

#[test]
fn output_is_deterministic() {
    let f = Files::new();
    let k = f.write("k.txt", CLAN4);
    for args in [
        vec!["minors", k.as_str()],
        vec!["clans", k.as_str()],
        vec!["--json-lines", "spectrum", k.as_str(), "--eta", "0.5,1,2,0"],
    ] {
        let a = effspec(&args);
        let b = effspec(&args);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn reads_standard_input() {
    use std::io::Write;
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_effspec"))
        .args(["radius", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"1\n3.5\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "radius: 3.5\n");
}

#[test]
fn error_exit_codes() {
    let f = Files::new();
    let ragged = f.write("ragged.txt", "2\n0 1\n1\n");
    let (code, _, err) = run(&["radius", &ragged]);
    assert_eq!(code, 65);
    assert!(
        err.contains("ragged.txt: line 3: row has 1 entries, expected 2"),
        "{err}"
    );
    assert_eq!(run(&["radius", "/nonexistent/matrix.txt"]).0, 66);
    assert_eq!(run(&["radius"]).0, 64);
    assert_eq!(run(&["frobnicate"]).0, 64);
    assert_eq!(run(&["minimize", p(&fixture("swap.txt"))]).0, 64);
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["--version"]).0, 0);
}
