use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use agq::CayleyTable;

fn agq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_agq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_table(dir: &Path, name: &str, t: &CayleyTable) -> String {
    let p = dir.join(name);
    fs::write(&p, t.to_text()).unwrap();
    p.to_str().unwrap().to_owned()
}

fn z(n: usize) -> CayleyTable {
    CayleyTable::from_fn(n, |i, j| (i + j) % n).unwrap()
}

#[test]
fn enumerate_reproduces_the_ag_counts() {
    let o = agq(&["enumerate", "--kind", "ag", "--from", "3", "--to", "20"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let rows: Vec<Vec<usize>> = out
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().map(|w| w.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 18);
    assert_eq!(rows[5], vec![8, 3, 7, 10]);
    assert_eq!(rows[13], vec![16, 5, 24, 29]);
    // byte-stable
    assert_eq!(
        stdout(&agq(&[
            "enumerate",
            "--kind",
            "ag",
            "--from",
            "3",
            "--to",
            "20"
        ])),
        out
    );
}

#[test]
fn enumerate_json_and_listing() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let o = agq(&[
        "enumerate",
        "--kind",
        "bolstar",
        "--from",
        "8",
        "--to",
        "8",
        "--json",
        "--list",
        d,
    ]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o).trim(),
        r#"{"order":8,"kind":"bolstar","associative":5,"nonassociative":12,"total":17}"#
    );
    let mut tables = Vec::new();
    for i in 0..17 {
        let text = fs::read_to_string(dir.path().join(format!("bolstar_8_{i}.tbl"))).unwrap();
        let t: CayleyTable = text.parse().unwrap();
        assert_eq!(t.to_text(), text);
        tables.push(t);
    }
    assert!(!dir.path().join("bolstar_8_17.tbl").exists());
    for (i, a) in tables.iter().enumerate() {
        for b in &tables[i + 1..] {
            assert!(agq::tables::quasigroup_isomorphic(a, b).unwrap().is_none());
        }
    }
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let z6 = write_table(dir.path(), "z6.tbl", &z(6));
    assert_eq!(agq(&["verify", "--kind", "ag", &z6]).status.code(), Some(0));

    let s3 = agq::catalog::groups_of_order(6).unwrap().pop().unwrap();
    let s3 = write_table(dir.path(), "s3.tbl", &s3);
    let o = agq(&["verify", "--kind", "ag", &s3]);
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stdout(&o).contains("left-invertive: fails at ["),
        "{}",
        stdout(&o)
    );
    assert_eq!(
        agq(&["verify", "--kind", "bolstar", &s3]).status.code(),
        Some(0)
    );

    let bad = dir.path().join("bad.tbl");
    fs::write(&bad, "# comment\n3\n0 1 2\n1 2 x\n2 0 1\n").unwrap();
    let o = agq(&["verify", "--kind", "ag", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        String::from_utf8_lossy(&o.stderr).contains("line 4"),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
}

#[test]
fn iso_prints_the_witness() {
    let dir = tempfile::tempdir().unwrap();
    let t = agq::twist::twist(
        &agq::TwistSpec::new(
            z(6),
            agq::BaseKind::Abelian,
            agq::twist::parse_alpha(&z(6), "neg").unwrap(),
        )
        .unwrap(),
    );
    let relabeled = t.relabel(&[3, 5, 0, 1, 4, 2]).unwrap();
    let a = write_table(dir.path(), "a.tbl", &t);
    let b = write_table(dir.path(), "b.tbl", &relabeled);
    let o = agq(&["iso", &a, &b]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let cycles = out.trim().strip_prefix("isomorphic via ").unwrap();
    let p = agq::Permutation::from_cycles(6, cycles).unwrap();
    assert_eq!(t.relabel(p.images()).unwrap(), relabeled);

    let c = write_table(dir.path(), "c.tbl", &z(6));
    assert_eq!(agq(&["iso", &a, &c]).status.code(), Some(1));
}

#[test]
fn construct_recover_and_mulgroup() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("q.tbl");
    let fs_ = f.to_str().unwrap();
    assert!(agq(&[
        "construct",
        "--abelian",
        "C6",
        "--alpha",
        "neg",
        "--out",
        fs_
    ])
    .status
    .success());

    let o = agq(&["recover", fs_]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("kind: AG-group over abelian group"), "{out}");
    assert!(out.contains("alpha: neg"));
    let base: CayleyTable = out.split_once("# base\n").unwrap().1.parse().unwrap();
    assert_eq!(base, z(6));

    let o = agq(&["mulgroup", fs_]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(
        out.contains("|M| = 12") && out.contains("|Inn| = 2") && out.contains("dihedral: true"),
        "{out}"
    );
    assert_eq!(out.matches(": holds").count(), 5);

    let z6 = write_table(dir.path(), "z6.tbl", &z(6));
    let o = agq(&["twist", "--base", &z6, "--alpha", "neg", "--kind", "ag"]);
    assert_eq!(o.stdout, fs::read(&f).unwrap());
    let o = agq(&["twist", "--base", &z6, "--alpha", "(0 1)", "--kind", "ag"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn aut_of_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_table(dir.path(), "z5.tbl", &z(5));
    let o = agq(&["aut", &f]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("|Aut| = 4"));
    assert!(stdout(&o).contains("involution classes: 2"));
    assert_eq!(agq(&["aut"]).status.code(), Some(2));
}

#[test]
fn bol_loop_twist_from_the_command_line() {
    let base = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/bol8.tbl");
    let o = agq(&[
        "twist",
        "--base",
        base,
        "--alpha",
        "(2 6)(4 7)",
        "--kind",
        "bol",
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("q.tbl");
    fs::write(&f, &o.stdout).unwrap();
    assert_eq!(
        agq(&["verify", "--kind", "bol", f.to_str().unwrap()])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        agq(&["verify", "--kind", "bolstar", f.to_str().unwrap()])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        agq(&["recover", f.to_str().unwrap()]).status.code(),
        Some(1)
    );
}
