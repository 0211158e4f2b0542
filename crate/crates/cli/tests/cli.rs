use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use lecalc::report::{render_text, Report};
use serde_json::Value;

const WORKED_GERM: &str = "z1^2*z2^2 + z2^5 + z3^4";
const WORKED_FAMILY: &str = "z1^2*z2^2 + z2^5 + z3^4 + t*z1*z2^2 + t^2*z1^2*z2^2";

fn lecalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lecalc")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let o = lecalc(&a);
    (serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o))), o.status.code().unwrap())
}

#[test]
fn invariants_of_the_worked_germ() {
    let (v, code) = json(&["invariants", "-e", WORKED_GERM]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], 1);
    let inv = &v["invariants"];
    assert_eq!(inv["gamma1"], 9);
    assert_eq!(inv["lambda0"], 21);
    assert_eq!(inv["lambda1"], 3);
    assert_eq!(inv["polar_ratio"], "10/3");
    assert_eq!(v["weights"]["weights"], serde_json::json!([6, 4, 5]));
    assert_eq!(v["weights"]["degree"], 20);
}

#[test]
fn exit_codes() {
    let o = lecalc(&["invariants", "-e", "z1^2*z2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("NON_REDUCED"), "{}", stdout(&o));

    let (v, code) = json(&["invariants", "-e", "z1^2 + z2^2 + z3^2"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["code"], "NOT_LINE_SINGULARITY");
    assert_eq!(v["isolated"]["milnor"], 1);

    for args in [
        &["invariants", "-e", "z1^"][..],
        &["invariants"],
        &["nonsense"],
        &["ilm", "-e", WORKED_GERM],
        &["invariants", "-e", "z1 + w", "--vars", "z1,z2"],
        &["ilm", "-e", WORKED_FAMILY, "--param", "t", "--j", "5"],
        &["invariants", "-f", "/nonexistent/input.lec"],
    ] {
        let o = lecalc(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}: {}", stderr(&o));
        assert!(stderr(&o).starts_with("lecalc: ") || stderr(&o).contains("Usage"), "{}", stderr(&o));
    }
    let o = lecalc(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn family_and_ilm_of_the_worked_family() {
    let (v, code) = json(&["family", "-e", WORKED_FAMILY, "--param", "t", "--assert-gamma1-irreducible"]);
    assert_eq!(code, 0);
    assert_eq!(v["invariants"]["zero"]["record"]["lambda0"], 21);
    assert_eq!(v["invariants"]["generic"]["record"]["lambda0"], 6);
    assert_eq!(v["family"]["order_zero"], 4);
    assert_eq!(v["family"]["order_generic"], 3);
    let cmt3 = v["verdicts"].as_array().unwrap().iter().find(|x| x["theorem"] == "cmt3").unwrap();
    assert_eq!(cmt3["conclusion"], "NOT_TOPOLOGICALLY_V_EQUISINGULAR");

    let (v, code) = json(&["ilm", "-e", WORKED_FAMILY, "--param", "t"]);
    assert_eq!(code, 0);
    let tables = v["ilm"]["tables"].as_array().unwrap();
    assert_eq!(tables[0]["inferred"], serde_json::json!([21, 3, 30]));
    assert_eq!(tables[1]["inferred"], serde_json::json!([6, 3, 15]));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["invariants", "-e", WORKED_GERM][..],
        &["family", "-e", WORKED_FAMILY, "--param", "t", "--format", "json"],
        &["ilm", "-e", WORKED_FAMILY, "--param", "t", "--seed", "7"],
    ] {
        assert_eq!(lecalc(args).stdout, lecalc(args).stdout, "{args:?}");
    }
}

#[test]
fn json_and_text_agree() {
    for args in [
        &["invariants", "-e", WORKED_GERM][..],
        &["invariants", "-e", "z1^2 + z2^2 + z3^2"],
        &["family", "-e", WORKED_FAMILY, "--param", "t"],
        &["ilm", "-e", "z2^3 + z3^3 + t*z2^4", "--param", "t"],
    ] {
        let text = stdout(&lecalc(args));
        let mut a = args.to_vec();
        a.extend(["--format", "json"]);
        let report: Report = serde_json::from_slice(&lecalc(&a).stdout).unwrap();
        assert_eq!(render_text(&report), text, "{args:?}");
    }
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn file_input_and_permutation() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "germ.lec", "# worked germ\nvars: z1, z2, z3\nz1^2*z2^2 + z2^5\n  + z3^4\n");
    let (from_file, code) = json(&["invariants", "-f", &f]);
    assert_eq!(code, 0);
    let (from_expr, _) = json(&["invariants", "-e", WORKED_GERM]);
    assert_eq!(from_file["invariants"], from_expr["invariants"]);

    // swapping z2 and z3 moves the weights but not the invariants
    let (permuted, code) = json(&["invariants", "-f", &f, "--permute", "1,3,2"]);
    assert_eq!(code, 0);
    assert_eq!(permuted["invariants"]["gamma1"], 9);
    assert_eq!(permuted["invariants"]["lambda0"], 21);
    assert_eq!(permuted["weights"]["weights"], serde_json::json!([6, 5, 4]));
    // moving z1 off the first axis breaks the line singularity
    let (_, code) = json(&["invariants", "-f", &f, "--permute", "3,2,1"]);
    assert_eq!(code, 2);

    let bad = write(dir.path(), "bad.lec", "vars: z1\nparam: t\nparam: s\nz1^2\n");
    let o = lecalc(&["invariants", "-f", &bad]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("bad.lec"), "{}", stderr(&o));
}

#[test]
fn selftest_reports_budget_and_corrupted_corpus() {
    let o = lecalc(&["selftest", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("corpus case"), "{}", stderr(&o));

    let dir = tempfile::tempdir().unwrap();
    let corpus = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    for entry in fs::read_dir(&corpus).unwrap() {
        let p = entry.unwrap().path();
        fs::copy(&p, dir.path().join(p.file_name().unwrap())).unwrap();
    }
    let d = dir.path().display().to_string();
    let (v, code) = json(&["selftest", "--corpus", &d]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);

    write(dir.path(), "brieskorn_3_4.lec", "vars: z2, z3\nz2^3 + * z3^4\n");
    let o = lecalc(&["selftest", "--corpus", &d]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("brieskorn_3_4.lec"), "{}", stderr(&o));

    fs::remove_file(dir.path().join("worked_germ.lec")).unwrap();
    let o = lecalc(&["selftest", "--corpus", &d]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("worked_germ.lec"), "{}", stderr(&o));
}
