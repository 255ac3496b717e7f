//! End-to-end tests of the `pgro` binary: exit codes, file outputs and
//! determinism.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn pgro(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pgro"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn dump_corpus(dir: &Path) {
    let out = pgro(&["corpus", "dump", "-o", dir.to_str().unwrap()]);
    assert!(out.status.success());
}

#[test]
fn corpus_list_names_every_entry() {
    let out = pgro(&["corpus", "list"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for label in [
        "c2", "c4", "q8", "es27", "e8c4", "d32", "sd32", "m32", "q32",
    ] {
        assert!(text.contains(label), "missing {label} in:\n{text}");
    }
}

#[test]
fn corpus_dump_writes_parseable_files() {
    let tmp = tempfile::tempdir().unwrap();
    dump_corpus(tmp.path());
    let count = fs::read_dir(tmp.path()).unwrap().count();
    assert_eq!(count, 16);
    let c4 = fs::read_to_string(tmp.path().join("c4.grp")).unwrap();
    assert!(c4.contains("perm 4 1"));
}

#[test]
fn info_reports_group_statistics() {
    let tmp = tempfile::tempdir().unwrap();
    dump_corpus(tmp.path());

    let out = pgro(&["info", tmp.path().join("c4.grp").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("order: 4 = 2^2"));
    assert!(text.contains("nilpotency degree: 4"));
    assert!(text.contains("radical layer dimensions: 1 1 1 1"));
    assert!(text.contains("jennings basis size: 3"));

    let out = pgro(&["info", tmp.path().join("e8c4.grp").to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("order: 32 = 2^5"));
    assert!(text.contains("jennings layer counts: 2 2 1"));
    assert!(text.contains("jennings basis size: 15"));

    let out = pgro(&["info", tmp.path().join("c2c2.grp").to_str().unwrap()]);
    assert!(stdout(&out).contains("radical layer dimensions: 1 2 1"));
}

#[test]
fn grobner_outputs_are_exact_and_deterministic() {
    let tmp = tempfile::tempdir().unwrap();
    dump_corpus(tmp.path());
    let c4 = tmp.path().join("c4.grp");

    let run = |out_dir: &Path| {
        let out = pgro(&[
            "grobner",
            c4.to_str().unwrap(),
            "--ordering",
            "jennings",
            "--seed",
            "5",
            "-o",
            out_dir.to_str().unwrap(),
        ]);
        assert!(
            out.status.success(),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        (
            fs::read_to_string(out_dir.join("c4.jennings.nontips")).unwrap(),
            fs::read_to_string(out_dir.join("c4.jennings.basis")).unwrap(),
        )
    };
    let dir1 = tempfile::tempdir().unwrap();
    let dir2 = tempfile::tempdir().unwrap();
    let (nontips1, basis1) = run(dir1.path());
    let (nontips2, basis2) = run(dir2.path());
    assert_eq!(nontips1, nontips2);
    assert_eq!(basis1, basis2);

    assert_eq!(basis1, "a1*a1 = 1*a2\na1*a2 = 1*a2*a1\na2*a2 = 0\n");
    assert!(nontips1.starts_with("nontips 2 2 2 4 jennings\n"));

    // An RLL dump carries the length caveat.
    let out = pgro(&[
        "grobner",
        c4.to_str().unwrap(),
        "--ordering",
        "rll",
        "-o",
        dir1.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let basis = fs::read_to_string(dir1.path().join("c4.rll.basis")).unwrap();
    assert!(basis.starts_with("modulo words of length >= 4\n"));
}

#[test]
fn experiment_reports_are_consistent() {
    let tmp = tempfile::tempdir().unwrap();
    dump_corpus(tmp.path());

    let out = pgro(&[
        "experiment",
        tmp.path().join("c2c4.grp").to_str().unwrap(),
        "--ordering",
        "jennings",
        "--attempts",
        "4",
        "--seed",
        "2",
        "--json",
    ]);
    assert!(out.status.success());
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let r = &reports[0];
    assert_eq!(r["group"], "c2c4");
    assert_eq!(r["min"], 6);
    assert_eq!(r["max"], 6);
    assert_eq!(r["stddev"], 0.0);
    assert_eq!(r["sizes"].as_array().unwrap().len(), 4);

    let out = pgro(&[
        "experiment",
        tmp.path().join("d8.grp").to_str().unwrap(),
        "--ordering",
        "ll",
        "--attempts",
        "5",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("group=d8 ordering=ll selection=smallest attempts=5"));
}

#[test]
fn experiment_runs_over_a_directory() {
    let tmp = tempfile::tempdir().unwrap();
    let sub = tmp.path().join("groups");
    fs::create_dir(&sub).unwrap();
    for label in ["c4", "c2c2"] {
        let entry = pgro::corpus::corpus_entry(label).unwrap();
        fs::write(sub.join(format!("{label}.grp")), &entry.content).unwrap();
    }
    let out = pgro(&[
        "experiment",
        sub.to_str().unwrap(),
        "--ordering",
        "rll",
        "--attempts",
        "3",
        "--json",
    ]);
    assert!(out.status.success());
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(reports.as_array().unwrap().len(), 2);
    // Directory listing is sorted: c2c2 before c4.
    assert_eq!(reports[0]["group"], "c2c2");
    assert_eq!(reports[1]["group"], "c4");
}

#[test]
fn input_errors_exit_with_code_2() {
    // Missing file.
    let out = pgro(&["info", "/nonexistent/file.grp"]);
    assert_eq!(out.status.code(), Some(2));

    // Malformed file.
    let tmp = tempfile::tempdir().unwrap();
    let bad = tmp.path().join("bad.grp");
    fs::write(&bad, "perm 4 1\n1 1 2 3\n").unwrap();
    let out = pgro(&["info", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // Not a p-group: S3 as a table would do, but two disjoint cycles of
    // coprime order are quicker to write down.
    let s = tmp.path().join("order6.grp");
    fs::write(&s, "perm 5 2\n2 3 1 4 5\n1 2 3 5 4\n").unwrap();
    let out = pgro(&["info", s.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // Jennings with given generators needs a pc family.
    dump_corpus(tmp.path());
    let out = pgro(&[
        "grobner",
        tmp.path().join("c4.grp").to_str().unwrap(),
        "--ordering",
        "jennings",
        "--use-given-generators",
        "-o",
        tmp.path().join("out").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));

    // Zero attempts.
    let out = pgro(&[
        "experiment",
        tmp.path().join("c4.grp").to_str().unwrap(),
        "--ordering",
        "ll",
        "--attempts",
        "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn given_generators_are_honored() {
    let tmp = tempfile::tempdir().unwrap();
    // C4 with a redundant generating pair {g, g^3}.
    let file = tmp.path().join("c4-redundant.grp");
    fs::write(&file, "perm 4 2\n2 3 4 1\n4 1 2 3\n").unwrap();
    let out_dir = tmp.path().join("out");
    let out = pgro(&[
        "grobner",
        file.to_str().unwrap(),
        "--ordering",
        "ll",
        "--use-given-generators",
        "-o",
        out_dir.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let nontips = fs::read_to_string(out_dir.join("c4-redundant.ll.nontips")).unwrap();
    // Alphabet of size 2 even though one generator would do.
    assert!(nontips.starts_with("nontips 2 2 2 4 ll\n"));
}
