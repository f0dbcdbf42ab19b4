use std::path::PathBuf;
use std::process::{Command, Output};

use equichar::cyclo::rational::int;
use equichar::json::{self, ClassFunctionJson, ReportJson, TableJson};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equichar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn curve_chi_hyperelliptic() {
    let o = run(&["curve-chi", "--datum", &data("hyperelliptic_z2.json")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("(1, 1)"), "{out}");
    assert!(out.contains("trivial character"), "{out}");
}

#[test]
fn curve_chi_modes_agree() {
    let direct = stdout(&run(&[
        "curve-chi",
        "--datum",
        &data("hyperelliptic_z2.json"),
        "--json",
    ]));
    let hrr = stdout(&run(&[
        "curve-chi",
        "--datum",
        &data("hyperelliptic_z2_hrr.json"),
        "--json",
    ]));
    assert_eq!(direct, hrr);
    let f: ClassFunctionJson = json::from_str(&direct).unwrap();
    assert_eq!(f.build().unwrap().rational_values().unwrap(), vec![int(1), int(1)]);
}

#[test]
fn curve_chi_decompose() {
    let o = run(&["curve-chi", "--datum", &data("hyperelliptic_z2.json"), "--decompose"]);
    assert!(stdout(&o).contains("multiplicities: [1, 0] (integral)"));
}

#[test]
fn curve_chi_wild() {
    let o = run(&["curve-chi", "--datum", &data("wild_z3.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("(1)\ntrivial character"));
}

#[test]
fn oracle_compare_minus_sign() {
    let o = run(&["oracle-p1", "--spec", "cyclic(2)", "--degree", "-2", "--compare"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("EQUAL"), "{out}");
    assert!(out.contains("cohomology: (-1, 1)"));
    assert!(out.contains("formula:    (-1, 1)"));
}

#[test]
fn oracle_report_json() {
    let o = run(&[
        "oracle-p1",
        "--spec",
        "dihedral(3)",
        "--degree",
        "3",
        "--compare",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report: ReportJson = json::from_str(&stdout(&o)).unwrap();
    assert!(report.equal && report.sector_route_equal);
    assert_eq!(report.group, "dihedral(3)");
    assert!(report.decomposition.unwrap().integral);
    assert!(report.diff.build().unwrap().is_zero());
}

#[test]
fn oracle_without_compare() {
    let o = run(&["oracle-p1", "--spec", "cyclic(1)", "--degree", "4"]);
    assert_eq!(stdout(&o).trim(), "(5)");
}

#[test]
fn reassemble_check_s3() {
    let o = run(&[
        "reassemble-check",
        "--group",
        &data("s3.json"),
        "--trials",
        "100",
        "--seed",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "100/100 identity");
    let o = run(&[
        "reassemble-check",
        "--group",
        &data("z6.json"),
        "--char",
        "2",
        "--trials",
        "20",
    ]);
    assert_eq!(stdout(&o).trim(), "20/20 identity");
}

#[test]
fn assemble_sectors_file() {
    let o = run(&["assemble", "--sectors", &data("z2_sectors.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(1, 1)\ntrivial character\n");
}

#[test]
fn table_json_round_trip() {
    let o = run(&["table", "--group", &data("s3.json"), "--irreducibles", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let t: TableJson = json::from_str(&stdout(&o)).unwrap();
    assert_eq!(t.order, 6);
    assert_eq!(t.classes.iter().map(|c| c.size).collect::<Vec<_>>(), vec![1, 3, 2]);
    assert_eq!(t.cyclic_subgroups.len(), 3);
    assert_eq!(t.irreducibles.unwrap().len(), 3);
    let again = run(&["table", "--group", &data("s3.json"), "--irreducibles", "--json"]);
    assert_eq!(o.stdout, again.stdout);
}

#[test]
fn table_in_positive_characteristic() {
    let o = run(&["table", "--group", &data("s3.json"), "--char", "3"]);
    let out = stdout(&o);
    assert_eq!(out.matches("  C").count(), 2, "{out}");
    assert_eq!(out.matches("  σ").count(), 2, "{out}");
    let o = run(&["table", "--group", &data("s3.json"), "--char", "3", "--irreducibles"]);
    assert_eq!(o.status.code(), Some(5));
}

#[test]
fn exit_codes() {
    let dir = std::env::temp_dir().join(format!("equichar-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{").unwrap();
    assert_eq!(
        run(&["assemble", "--sectors", bad.to_str().unwrap()]).status.code(),
        Some(2)
    );

    let invalid = dir.join("invalid.json");
    std::fs::write(
        &invalid,
        r#"{"group": {"degree": 2, "generators": [[1, 0]]}, "rank": 1, "mode": "direct", "chi": "1",
            "orbits": [{"stabilizer": [1], "e": 2, "et": 2, "fiber": {"values": ["1", "1"]},
                        "conormal": {"values": ["1", "1"]}}]}"#,
    )
    .unwrap();
    assert_eq!(
        run(&["curve-chi", "--datum", invalid.to_str().unwrap()]).status.code(),
        Some(3)
    );

    let missing = dir.join("missing.json");
    std::fs::write(
        &missing,
        r#"{"group": {"degree": 2, "generators": [[1, 0]]}, "sectors": [{"sigma": 0, "order": 1, "q": {"0": "1"}}]}"#,
    )
    .unwrap();
    assert_eq!(
        run(&["assemble", "--sectors", missing.to_str().unwrap()]).status.code(),
        Some(3)
    );

    let capped = Command::new(env!("CARGO_BIN_EXE_equichar"))
        .args(["table", "--group", &data("s3.json")])
        .env("EQUICHAR_MAX_GROUP", "3")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(5));

    assert_eq!(
        run(&["oracle-p1", "--spec", "dihedral(4)", "--degree", "0"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        run(&["oracle-p1", "--spec", "torus(4)", "--degree", "0"]).status.code(),
        Some(2)
    );
    std::fs::remove_dir_all(&dir).unwrap();
}
