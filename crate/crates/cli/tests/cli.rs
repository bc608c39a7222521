use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn example(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "examples", name]
        .iter()
        .collect();
    path.display().to_string()
}

fn equikoszul(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equikoszul"))
        .args(args)
        .env_remove("EQUIKOSZUL_THREADS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = equikoszul(&all);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn multiplicities(row: &Value) -> Vec<i64> {
    row["multiplicities"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["multiplicity"].as_i64().unwrap())
        .collect()
}

#[test]
fn koszul_on_hyperelliptic_genus_four() {
    let input = example("hyperelliptic_g4.json");
    let report = json(&["koszul", "--input", &input, "--p", "1"]);
    let rows = report["sections"][0]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["dimension"], 1);
    assert_eq!(rows[0]["p"], 1);
    let warnings = report["warnings"].as_array().unwrap();
    assert!(warnings[0].as_str().unwrap().contains("hyperelliptic"));
}

#[test]
fn schur_range_on_hyperelliptic_genus_four() {
    let input = example("hyperelliptic_g4.json");
    let report = json(&["schur", "--input", &input, "--p", "0..4"]);
    let rows = report["sections"][0]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert!(multiplicities(&rows[0]).iter().all(|&m| m == 0));
    let dims: Vec<i64> = rows
        .iter()
        .map(|r| r["dimension"].as_i64().unwrap())
        .collect();
    assert_eq!(dims, vec![0, 10, 20, 15, 4]);
}

#[test]
fn identity_cover_forms_are_invariant() {
    let report = json(&["chevalley-weil", "--input", &example("identity_g5.json")]);
    let row = &report["sections"][0]["rows"][0];
    assert_eq!(row["multiplicities"][0]["irreducible"], "triv");
    assert_eq!(multiplicities(row), vec![5]);
    assert_eq!(report["cover"]["genus"], 5);
}

#[test]
fn validation_failures_exit_with_two() {
    let out = equikoszul(&[
        "validate",
        "--input",
        &example("riemann_hurwitz_failure.json"),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Riemann-Hurwitz"));

    let out = equikoszul(&["validate", "--input", "no/such/file.json"]);
    assert_eq!(out.status.code(), Some(2));

    let out = equikoszul(&["koszul", "--input", &example("hyperelliptic_g4.json")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn domain_errors_exit_with_three_and_name_the_parameter() {
    let input = example("hyperelliptic_g4.json");
    for args in [
        ["koszul", "--input", &input, "--p", "3"],
        ["koszul", "--input", &input, "--p", "0"],
        ["schur", "--input", &input, "--p", "0..9"],
    ] {
        let out = equikoszul(&args);
        assert_eq!(out.status.code(), Some(3), "{args:?}");
        assert!(
            String::from_utf8_lossy(&out.stderr).contains("p = "),
            "{args:?}"
        );
    }
}

#[test]
fn json_output_is_deterministic() {
    let input = example("cyclic3_g4.json");
    let args = ["all", "--input", &input, "--format", "json"];
    let first = equikoszul(&args);
    let second = equikoszul(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn all_embeds_each_command() {
    for name in ["cyclic3_g4.json", "hyperelliptic_g4.json"] {
        let input = example(name);
        let all = json(&["all", "--input", &input]);
        let sections = all["sections"].as_array().unwrap();
        assert_eq!(sections.len(), 5);
        let single = [
            json(&["validate", "--input", &input]),
            json(&["chevalley-weil", "--input", &input]),
            json(&["euler", "--input", &input]),
            json(&["koszul", "--input", &input, "--p", "1..1"]),
            json(&["schur", "--input", &input]),
        ];
        for (section, report) in sections.iter().zip(&single) {
            assert_eq!(section, &report["sections"][0], "{name}");
        }
    }
}

#[test]
fn thread_count_is_read_from_the_environment() {
    let input = example("cyclic3_g4.json");
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_equikoszul"))
            .args(["schur", "--input", &input])
            .env("EQUIKOSZUL_THREADS", threads)
            .output()
            .unwrap()
    };
    assert!(run("1").status.success());
    assert_eq!(run("0").status.code(), Some(2));
    assert_eq!(run("many").status.code(), Some(2));
}

#[test]
fn table_output_lists_irreducibles() {
    let out = equikoszul(&["euler", "--input", &example("cyclic3_g4.json"), "--m", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let header = text
        .lines()
        .find(|l| l.contains("triv"))
        .expect("header line");
    assert_eq!(
        header.split_whitespace().collect::<Vec<_>>(),
        ["triv", "w", "w2", "dim"]
    );
    assert!(text
        .lines()
        .any(|l| l.split_whitespace().collect::<Vec<_>>() == ["m", "=", "2", "3", "3", "3", "9"]));
}
