use std::path::PathBuf;
use std::process::Command;

use freealg::Element;
use jsonschema::JSONSchema;
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_freealg"));
    c.env_remove("FREEALG_COLUMN_CAP")
        .env_remove("FREEALG_CANDIDATE_CAP");
    c
}

fn run(args: &[&str]) -> (i32, String, String) {
    let o = bin().args(args).output().unwrap();
    (
        o.status.code().unwrap(),
        String::from_utf8(o.stdout).unwrap(),
        String::from_utf8(o.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let (code, out, err) = run(&full);
    let v: Value = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out} {err}"));
    (code, v)
}

fn docs(name: &str) -> Value {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("docs")
        .join(name);
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

fn report_schema() -> JSONSchema {
    let family = docs("family.schema.json");
    JSONSchema::options()
        .with_document("https://freealg.example/family.schema.json".into(), family)
        .compile(&docs("report.schema.json"))
        .unwrap()
}

fn assert_valid(schema: &JSONSchema, v: &Value) {
    if let Err(errors) = schema.validate(v) {
        let msgs: Vec<String> = errors
            .map(|e| format!("{e} at {}", e.instance_path))
            .collect();
        panic!("schema violations {msgs:?} in {v:#}");
    }
}

fn tmp(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn worked_conjugation_example() {
    let (code, v) = json(&[
        "solve-conjugation",
        "--u",
        "abac+abacab",
        "--v",
        "caba+bacaba",
        "--max-degree",
        "13",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["family"]["generators"][0], "abacaba");
    assert_eq!(v["result"]["kernel_dimension"], 2);
    assert_eq!(v["config"]["alphabet"], 3);
}

#[test]
fn small_examples() {
    let (code, out, _) = run(&["centralizer", "--u", "a", "--max-degree", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("root: a"), "{out}");
    let (code, v) = json(&["oracle", "--eq", "a.x + x.b = 0", "--max-degree", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["kernel_dimension"], 0);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["eval", "a+"]).0, 2);
    assert_eq!(run(&["centralizer"]).0, 2);
    assert_eq!(run(&["centralizer", "--u", "aa+ab"]).0, 2);
    let (code, _, err) = run(&[
        "oracle",
        "--eq",
        "a.x + x.b = 0",
        "--max-degree",
        "10",
        "--column-cap",
        "100",
    ]);
    assert_eq!(code, 3);
    assert!(err.contains("column cap"), "{err}");
    let o = bin()
        .args(["oracle", "--eq", "a.x + x.b = 0", "--max-degree", "10"])
        .env("FREEALG_COLUMN_CAP", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));

    let sys = tmp("contradiction.sys");
    std::fs::write(&sys, "var x 1\ncoef a = a\ncoef b = b\neq x a = b x\n").unwrap();
    assert_eq!(run(&["homsys", sys.to_str().unwrap()]).0, 1);
    let bad = tmp("bad.sys");
    std::fs::write(&bad, "var x\neq x = y\n").unwrap();
    let (code, _, err) = run(&["homsys", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2, column 8"), "{err}");
}

#[test]
fn verify_round_trip_and_rejection() {
    let fam = tmp("two_block_family.json");
    let coeffs = ["--u-coeffs", "cab;c", "--v-coeffs", "c;bac"];
    let mut args = vec![
        "reduce",
        "--max-degree",
        "6",
        "--emit-family",
        fam.to_str().unwrap(),
    ];
    args.extend(coeffs);
    assert_eq!(run(&args).0, 0);
    let family: Value = serde_json::from_str(&std::fs::read_to_string(&fam).unwrap()).unwrap();
    assert!(JSONSchema::compile(&docs("family.schema.json"))
        .unwrap()
        .is_valid(&family));

    let mut args = vec![
        "verify",
        "--family",
        fam.to_str().unwrap(),
        "--max-degree",
        "5",
    ];
    args.extend(coeffs);
    let (code, v) = json(&args);
    assert_eq!(code, 0, "{v:#}");
    assert_eq!(v["result"]["passed"], true);

    let wrong = tmp("wrong_family.json");
    std::fs::write(
        &wrong,
        r#"{"kind":"reduction","s":"ab","t":"ab","threshold":72,"short_solutions":[]}"#,
    )
    .unwrap();
    let mut args = vec![
        "verify",
        "--family",
        wrong.to_str().unwrap(),
        "--max-degree",
        "5",
    ];
    args.extend(coeffs);
    let (code, v) = json(&args);
    assert_eq!(code, 1);
    assert_eq!(v["result"]["first_failure"]["name"], "membership");
}

#[test]
fn reports_match_schema() {
    let schema = report_schema();
    let sys = tmp("commute.sys");
    std::fs::write(&sys, "var x\nvar y\neq x y = y x\n").unwrap();
    let fam = tmp("centralizer_family.json");
    let runs: Vec<Vec<&str>> = vec![
        vec!["eval", "(a+b)^3"],
        vec![
            "centralizer",
            "--u",
            "abab+ab",
            "--max-degree",
            "6",
            "--emit-family",
            fam.to_str().unwrap(),
        ],
        vec![
            "solve-conjugation",
            "--u",
            "ab",
            "--v",
            "aa",
            "--max-degree",
            "6",
        ],
        vec![
            "reduce",
            "--u-coeffs",
            "bab+b;bab+b;bab",
            "--v-coeffs",
            "bab;bab+b;bab+b",
            "--max-degree",
            "3",
        ],
        vec![
            "reduce",
            "--u-coeffs",
            "cab;c",
            "--v-coeffs",
            "c;bac",
            "--max-degree",
            "5",
        ],
        vec!["oracle", "--eq", "ab.x + x.ba = a", "--max-degree", "3"],
        vec![
            "oracle",
            "--u-coeffs",
            "ab;1;1",
            "--v-coeffs",
            "1;1;ba",
            "--max-degree",
            "2",
        ],
        vec!["homsys", sys.to_str().unwrap(), "--max-degree", "2"],
        vec!["homsys", sys.to_str().unwrap(), "--profile", "1,2"],
        vec![
            "verify",
            "--u-coeffs",
            "abab+ab;1",
            "--v-coeffs",
            "1;abab+ab",
            "--family",
            fam.to_str().unwrap(),
            "--max-degree",
            "6",
        ],
        vec!["eval", "a^"],
        vec![
            "oracle",
            "--eq",
            "a.x = 0",
            "--max-degree",
            "9",
            "--column-cap",
            "5",
        ],
    ];
    for args in runs {
        let (code, v) = json(&args);
        assert_valid(&schema, &v);
        assert_eq!(v["exit_code"], code, "{args:?}");
        if args[0] == "verify" {
            assert_eq!(code, 0, "{v:#}");
        }
    }
}

#[test]
fn printed_elements_reparse() {
    let (_, v) = json(&["eval", "(ab+a+1)^3 + (b+1)(a+b)"]);
    let printed = v["result"]["element"].as_str().unwrap();
    let (_, again) = json(&["eval", printed]);
    assert_eq!(again["result"]["element"], printed);
    let e = Element::parse(printed, 2).unwrap();
    assert_eq!(e.to_string(), printed);

    let (_, v) = json(&[
        "solve-conjugation",
        "--u",
        "abab+ab",
        "--v",
        "abab+ab",
        "--max-degree",
        "8",
    ]);
    for g in v["result"]["generators"].as_array().unwrap() {
        let s = g.as_str().unwrap();
        assert_eq!(Element::parse(s, 2).unwrap().to_string(), s);
    }
}
