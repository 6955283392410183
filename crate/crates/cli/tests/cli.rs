use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn octospin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_octospin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn degree_ledger_suite_reports_eight() {
    let out = octospin(&["verify", "--suites", "degree-ledger", "--trials", "10"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let r = json(&out);
    assert_eq!(r["pass"], true);
    let claims = r["suites"][0]["claims"].as_array().unwrap();
    let ledger = claims.iter().find(|c| c["id"] == "degree.ledger").unwrap();
    let l = &ledger["details"]["ledger"];
    assert_eq!(l["conclusion_magnitude"]["value"], 8);
    assert_eq!(l["sign_determined"], false);
    assert_eq!(l["p_degree"]["provenance"], "computed");
    assert_eq!(l["cover_multiplier"]["provenance"], "cited");
    assert_eq!(l["h_multiplier_magnitude"]["provenance"], "cited");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["verify", "--trials", "0"],
        vec!["verify", "--suites", "no-such-suite"],
        vec!["verify", "--backend", "float", "--epsilon", "0"],
        vec!["verify", "--seed", "-3"],
        vec!["eval", "f7", "--plane", "e1,e2"],
        vec!["eval", "f7", "--plane", "e1,e2", "--angle", "1,1"],
        vec!["eval", "f7", "--plane", "e1;e2", "--angle", "1,0"],
        vec!["eval", "f5", "--plane", "e1,e7", "--angle", "1,0"],
        vec![
            "eval", "f5", "--plane", "e1,e2", "--angle", "1,0", "--w", "e4",
        ],
        vec![
            "eval", "spin8", "--plane", "e1,e2", "--angle", "1,0", "--plane5", "e3,e4", "--angle5",
            "1,0", "--s", "e1,e2",
        ],
        vec!["eval", "nope"],
        vec![],
    ] {
        let out = octospin(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn verification_failure_exits_one() {
    // at epsilon 1e-300 float rounding breaks the identities
    let out = octospin(&[
        "verify",
        "--backend",
        "float",
        "--epsilon",
        "1e-300",
        "--suites",
        "octonion-identities",
        "--trials",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    assert_eq!(r["pass"], false);
    let claims = r["suites"][0]["claims"].as_array().unwrap();
    let moufang = claims
        .iter()
        .find(|c| c["id"] == "octonion.moufang-1")
        .unwrap();
    assert_eq!(moufang["pass"], false);
    let first = &moufang["failures"][0];
    assert!(first["x"].as_array().unwrap().len() == 8, "{first}");

    // checks that cannot even set up their instance are failures too
    let out = octospin(&[
        "verify",
        "--backend",
        "float",
        "--epsilon",
        "1e-300",
        "--suites",
        "rotation-laws",
        "--trials",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    let errors = r["suites"][0]["claims"][0]["failures"].as_array().unwrap();
    assert!(errors.iter().all(|f| f["error"].is_string()));
}

#[test]
fn reports_are_byte_identical() {
    let (a, b) = (scratch("det-a.json"), scratch("det-b.json"));
    for path in [&a, &b] {
        let out = octospin(&[
            "verify",
            "--seed",
            "9",
            "--trials",
            "4",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    let other = octospin(&["verify", "--seed", "10", "--trials", "4"]);
    assert_ne!(other.stdout, std::fs::read(&a).unwrap());
}

#[test]
fn report_config_and_serialization() {
    let r = json(&octospin(&[
        "verify",
        "--suites",
        "commutative-square",
        "--trials",
        "3",
    ]));
    assert_eq!(r["config"]["backend"], "exact");
    assert_eq!(r["config"]["seed"], 42);
    assert!(r["config"].get("epsilon").is_none());
    assert_eq!(
        r["suites"][0]["claims"][0]["details"]["max_residual"],
        "0/1"
    );

    let f = json(&octospin(&[
        "verify",
        "--backend",
        "float",
        "--suites",
        "commutative-square",
        "--trials",
        "3",
    ]));
    assert_eq!(f["config"]["epsilon"], "1.0000000000000001e-9");
}

fn entry(m: &Value, i: usize, j: usize) -> &str {
    m[i][j].as_str().unwrap()
}

#[test]
fn eval_f7_quarter_turn() {
    let out = octospin(&[
        "eval", "f7", "--plane", "e1,e2", "--angle", "0,1", "--w", "e4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    let m = &r["matrix"];
    // column i holds the image of ei
    let expected = [
        (3, 0, "1/1"),
        (0, 3, "-1/1"),
        (2, 1, "1/1"),
        (1, 2, "-1/1"),
        (7, 4, "-1/1"),
        (4, 7, "1/1"),
        (6, 5, "-1/1"),
        (5, 6, "1/1"),
    ];
    for i in 0..8 {
        for j in 0..8 {
            let want = expected
                .iter()
                .find(|&&(r, c, _)| (r, c) == (i, j))
                .map_or("0/1", |&(_, _, v)| v);
            assert_eq!(entry(m, i, j), want, "({i}, {j})");
        }
    }
    assert_eq!(r["so_check"]["pass"], true);
    assert_eq!(r["so_check"]["determinant"], "1/1");
    assert_eq!(r["verify_spin7"]["is_member"], true);
    assert_eq!(
        r["verify_spin7"]["relation_failures"]
            .as_array()
            .unwrap()
            .len(),
        0
    );
}

#[test]
fn eval_identities() {
    let id = json(&octospin(&[
        "eval", "f7", "--plane", "e1,e2", "--angle", "1,0",
    ]));
    let both = json(&octospin(&[
        "eval", "f7xf5", "--plane", "e1,e2", "--angle", "1,0", "--plane5", "e3,e4", "--angle5",
        "u=0",
    ]));
    for r in [&id, &both] {
        for i in 0..8 {
            for j in 0..8 {
                assert_eq!(
                    entry(&r["matrix"], i, j),
                    if i == j { "1/1" } else { "0/1" }
                );
            }
        }
    }
}

#[test]
fn eval_writes_file_with_tuple_inputs() {
    let path = scratch("eval.json");
    let out = octospin(&[
        "eval",
        "spin8",
        "--plane",
        "0,3/5,4/5,0,0,0,0,0;0,0,0,1,0,0,0,0",
        "--angle",
        "u=1/2",
        "--plane5",
        "e4,e5",
        "--angle5",
        "-3/5,4/5",
        "--s",
        "0,0,0,0,0,0,0,1",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r["map"], "spin8");
    assert_eq!(r["s"][7], "1/1");
    assert_eq!(r["inputs"]["angle"]["c"], "3/5");
    assert_eq!(r["verify_spin7"]["is_member"], true);
}

#[test]
fn eval_h70_is_not_a_spin7_lift() {
    let r = json(&octospin(&[
        "eval", "h70", "--plane", "e1,e2", "--angle", "0,1", "--plane5", "e3,e4", "--angle5", "1,0",
    ]));
    assert_eq!(r["so_check"]["pass"], true);
    assert_eq!(r["verify_spin7"]["is_member"], false);
    assert!(!r["verify_spin7"]["relation_failures"]
        .as_array()
        .unwrap()
        .is_empty());
}

#[test]
fn table_and_gen_frame() {
    let t = json(&octospin(&["table", "--plane", "e1,e2", "--w", "e4"]));
    assert_eq!(t["labels"][7], "w(xy)");
    assert_eq!(t["products"][1][2], "+xy");
    assert_eq!(t["products"][5][6], "-xy");

    let a = octospin(&["gen-frame", "--seed", "5"]);
    let b = octospin(&["gen-frame", "--seed", "5"]);
    assert_eq!(a.stdout, b.stdout);
    let f = json(&a);
    let norm: f64 = f["plane"][0]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| {
            let (p, q) = x.as_str().unwrap().split_once('/').unwrap();
            let v = p.parse::<f64>().unwrap() / q.parse::<f64>().unwrap();
            v * v
        })
        .sum();
    assert!((norm - 1.0).abs() < 1e-12);
    assert_eq!(f["plane"][0][0], "0/1");
}

#[test]
fn float_eval_prints_seventeen_digits() {
    let r = json(&octospin(&[
        "eval",
        "f7",
        "--backend",
        "float",
        "--plane",
        "e1,e2",
        "--angle",
        "u=1/3",
    ]));
    let x = entry(&r["matrix"], 0, 0);
    let mantissa = x
        .split('e')
        .next()
        .unwrap()
        .trim_start_matches('-')
        .replace('.', "");
    assert_eq!(mantissa.len(), 17, "{x}");
}
