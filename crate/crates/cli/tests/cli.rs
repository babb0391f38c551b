use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn bst(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bst")).current_dir(fixtures()).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn order_of_m11() {
    let o = bst(&["order", "groups/m11.grp"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "7920");
}

#[test]
fn m11_base_size_and_certificate_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("m11.cert");
    let o = bst(&["base-size", "groups/m11.grp", "groups/h_3_2_sd16.grp", "--max-c", "3", "--seed", "1", "--emit-cert", cert.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "b = 3"));
    let v = bst(&["witness", "verify", "groups/m11.grp", "groups/h_3_2_sd16.grp", "--cert", cert.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).lines().any(|l| l == "b = 3"));

    // Swapping a conjugator for the identity breaks the witness.
    let text = std::fs::read_to_string(&cert).unwrap();
    let ident = (1..=11).map(|i| i.to_string()).collect::<Vec<_>>().join(" ");
    let mut done = false;
    let bad: String = text
        .lines()
        .map(|l| {
            if !done && l.starts_with("CONJUGATOR") {
                done = true;
                format!("CONJUGATOR {ident}\n")
            } else {
                format!("{l}\n")
            }
        })
        .collect();
    std::fs::write(&cert, bad).unwrap();
    let v = bst(&["witness", "verify", "groups/m11.grp", "groups/h_3_2_sd16.grp", "--cert", cert.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(1));
    assert!(stdout(&v).contains("INVALID"));
}

#[test]
fn exhaustive_fallback_settles_s8() {
    // b = 5 here, so the capped random search fails and the exhaustive oracle decides.
    let o = bst(&["base-size", "groups/s8.grp", "catalog/s8/s4_wr_s2.grp", "--max-c", "3", "--trials", "50"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("b = 5"));
}

#[test]
fn capped_search_is_not_established() {
    let o = bst(&["base-size", "groups/m24.grp", "catalog/m24/h_2_6_3s3wrs2.grp", "--max-c", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("3 <= b <= 27"), "{}", stdout(&o));
}

#[test]
fn bad_inputs_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.grp");
    std::fs::write(&p, "degree 3\ngen 1 1 2\n").unwrap();
    let o = bst(&["order", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    // Not a subgroup.
    let o = bst(&["base-size", "groups/m11.grp", "groups/m12.grp"]);
    assert_eq!(o.status.code(), Some(2));
    // Missing certificate file.
    let o = bst(&["witness", "verify", "groups/m11.grp", "groups/h_3_2_sd16.grp", "--cert", "/nonexistent"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn double_coset_census_of_m12() {
    let o = bst(&["double-cosets", "groups/m12.grp", "catalog/m12/h_2_1+4_s3.grp", "--summary"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("covered: 95040 of 95040"));
    assert!(s.contains("regular (size |K|^2): 0"));
    let o = bst(&["double-cosets", "groups/m12.grp", "catalog/m12/h_2_1+4_s3.grp", "--budget", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("budget reached"));
}

#[test]
fn reports() {
    for suite in ["monster", "baby-parabolics", "baby-nonparabolic"] {
        let o = bst(&["report", suite, "--data", "."]);
        assert_eq!(o.status.code(), Some(0), "{suite}: {}", stdout(&o));
        assert!(!stdout(&o).contains("FAILS"));
    }
    // Two printed O10-(2) cells disagree with the fused table, so strict loading refuses the data.
    let o = bst(&["report", "monster", "--data", ".", "--strict"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("O10-(2)"));
    let o = bst(&["report", "monster", "--data", "groups"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn qhat_command() {
    let o = bst(&["qhat", "--data", "classdata", "--group", "B", "--subgroup", "Fi23", "--c", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Q^ < 1"));
    let o = bst(&["qhat", "--data", "classdata", "--group", "B", "--subgroup", "Fi23", "--c", "1"]);
    assert_eq!(o.status.code(), Some(1));
    let o = bst(&["qhat", "--data", "classdata", "--group", "B", "--subgroup", "nope", "--c", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn survey_writes_tsv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("m11.tsv");
    let o = bst(&["survey", "groups/m11.grp", "--catalog", "catalog/m11", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("s = 3 over this catalog"));
    let tsv = std::fs::read_to_string(&out).unwrap();
    let mut lines = tsv.lines();
    assert_eq!(lines.next().unwrap(), "name\torder\tsoluble\tcorefree\tlower\tupper\texact\tcertificate-path");
    let row = lines.find(|l| l.starts_with("3^2:SD16\t")).unwrap();
    let cols: Vec<&str> = row.split('\t').collect();
    assert_eq!(&cols[1..7], ["144", "true", "true", "3", "3", "true"]);
    let v = bst(&["witness", "verify", "groups/m11.grp", "groups/h_3_2_sd16.grp", "--cert", cols[7]]);
    assert_eq!(v.status.code(), Some(0));
}
