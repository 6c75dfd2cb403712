use std::path::{Path, PathBuf};
use std::process::Command;

const CORPORA: [&str; 4] = [
    "one_over_zero",
    "sum_of_squares",
    "theorem_hypothesis",
    "zero_numerator",
];
const CONVENTIONS: [&str; 3] = ["division", "liberal-division", "inversive"];

fn crate_dir() -> &'static Path {
    Path::new(env!("CARGO_MANIFEST_DIR"))
}

fn corpus(name: &str) -> PathBuf {
    crate_dir().join("corpora").join(format!("{name}.mcorpus"))
}

fn meadow(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_meadow"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().expect("exit code"),
    )
}

fn stdout_and_code(args: &[&str]) -> (String, i32) {
    let (out, _, code) = meadow(args);
    (out.trim_end().to_string(), code)
}

#[test]
fn eval_examples() {
    assert_eq!(stdout_and_code(&["eval", "1/0"]), ("0".into(), 0));
    assert_eq!(
        stdout_and_code(&["eval", "--mode", "punch-div-all", "1/0"]),
        ("UNDEFINED".into(), 3)
    );
    assert_eq!(
        stdout_and_code(&["eval", "-b", "x=1/2", "x + x"]),
        ("1".into(), 0)
    );
    assert_eq!(
        stdout_and_code(&["eval", "--carrier", "gf7", "3^-1"]),
        ("5".into(), 0)
    );
    assert_eq!(
        stdout_and_code(&["eval", "--mode", "punch-div-nonzero", "0/0"]),
        ("0".into(), 0)
    );
}

#[test]
fn eval_errors() {
    assert_eq!(meadow(&["eval", "1 +"]).2, 1);
    assert_eq!(meadow(&["eval", "x + 1"]).2, 2);
    assert_eq!(meadow(&["eval", "--carrier", "gf4", "1"]).2, 1);
    assert_eq!(meadow(&["eval", "--mode", "partial", "1"]).2, 1);
    assert_eq!(meadow(&["eval", "-b", "x=1/0", "x"]).2, 1);
    assert_eq!(
        meadow(&["eval", "--carrier", "gf7", "-b", "x=1/7", "x"]).2,
        1
    );
    assert_eq!(meadow(&["frobnicate"]).2, 1);
    assert_eq!(meadow(&["--help"]).2, 0);
    assert_eq!(meadow(&["eval", "--help"]).2, 0);
}

#[test]
fn logic_examples() {
    let pda = ["logic", "--mode", "punch-div-all"];
    let run = |extra: &[&str]| stdout_and_code(&[&pda[..], extra].concat());
    assert_eq!(run(&["0 != 0 => 0/0 = 1"]), ("T".into(), 0));
    assert_eq!(run(&["0/0 = 1 | 0 = 0"]), ("U".into(), 3));
    assert_eq!(
        run(&[
            "--carrier",
            "gf7",
            "--logic",
            "weak,kleene,kleene",
            "exists x. x/x = 1"
        ]),
        ("T".into(), 0)
    );
    assert_eq!(
        run(&["--classify", "0 = 0 | 0/0 = 1"]),
        ("USABLE(T)".into(), 0)
    );
    assert_eq!(
        run(&["--classify", "0/0 = 1 | 0 = 0"]),
        ("UNUSABLE".into(), 3)
    );
    assert_eq!(run(&["--classify", "0 = 1"]), ("USABLE(F)".into(), 0));
    assert_eq!(
        run(&["--logic", "strong,kleene,kleene", "1/0 = 1/0 + 1"]),
        ("T".into(), 0)
    );
}

#[test]
fn logic_errors() {
    assert_eq!(meadow(&["logic", "forall x. x = x"]).2, 2);
    assert_eq!(meadow(&["logic", "x = 0"]).2, 2);
    assert_eq!(meadow(&["logic", "-b", "x=0", "x = 0"]).2, 0);
    assert_eq!(meadow(&["logic", "--classify", "-b", "x=0", "x = 0"]).2, 2);
    assert_eq!(meadow(&["logic", "--logic", "weak,kleene", "0 = 0"]).2, 1);
    assert_eq!(meadow(&["logic", "0 = "]).2, 1);
}

#[test]
fn axioms_examples() {
    let (out, code) = stdout_and_code(&["axioms", "--carrier", "gf5"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 16);
    assert!(lines.iter().all(|l| l.starts_with("PASS axiom=")));

    let (out, code) = stdout_and_code(&[
        "axioms",
        "--carrier",
        "rationals",
        "--samples",
        "1000",
        "--seed",
        "7",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 16);
    assert!(out.contains("samples=1000"));

    let (out, code) = stdout_and_code(&["axioms", "--carrier", "gf5", "--extra", "x/x = 1"]);
    assert_eq!(code, 4);
    assert!(
        out.contains("FAIL axiom=x/x = 1 samples=5 witness=x=0"),
        "{out}"
    );
}

#[test]
fn axioms_are_deterministic_per_seed() {
    let a = meadow(&[
        "axioms",
        "--samples",
        "50",
        "--seed",
        "3",
        "--format",
        "json",
    ]);
    let b = meadow(&[
        "axioms",
        "--samples",
        "50",
        "--seed",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(a, b);
}

#[test]
fn tables_examples() {
    let (out, code) = stdout_and_code(&["tables", "mccarthy-left"]);
    assert_eq!(code, 0);
    let or_section = out.split("\nor\n").nth(1).unwrap();
    assert!(or_section.lines().any(|l| l.trim() == "U | T -> U"));
    let (all, _) = stdout_and_code(&["tables"]);
    assert_eq!(all.matches("family ").count(), 4);
    assert_eq!(meadow(&["tables", "lukasiewicz"]).2, 1);
}

#[test]
fn lint_matches_golden_files() {
    for name in CORPORA {
        for convention in CONVENTIONS {
            let golden_path = crate_dir()
                .join("tests/golden")
                .join(format!("{name}.{convention}.txt"));
            let golden = std::fs::read_to_string(&golden_path).unwrap();
            let path = corpus(name);
            let (out, _, code) =
                meadow(&["lint", "--convention", convention, path.to_str().unwrap()]);
            assert_eq!(out, golden, "{name} under {convention}");
            // the exit code is a function of the printed verdicts
            let expected = if golden.contains("verdict=VIOLATION") {
                4
            } else if golden.contains("verdict=UNKNOWN") {
                3
            } else {
                0
            };
            assert_eq!(code, expected, "{name} under {convention}");
        }
    }
}

#[test]
fn lint_exit_codes() {
    let run = |name: &str, convention: &str| {
        meadow(&[
            "lint",
            "--convention",
            convention,
            corpus(name).to_str().unwrap(),
        ])
        .2
    };
    assert_eq!(run("theorem_hypothesis", "division"), 3);
    assert_eq!(run("one_over_zero", "division"), 4);
    assert_eq!(run("sum_of_squares", "division"), 0);
    assert_eq!(run("zero_numerator", "liberal-division"), 0);
    assert_eq!(run("zero_numerator", "division"), 4);
    assert_eq!(meadow(&["lint", "/nonexistent/corpus.mcorpus"]).2, 1);
    assert_eq!(
        meadow(&[
            "lint",
            "--convention",
            "strict",
            corpus("one_over_zero").to_str().unwrap()
        ])
        .2,
        1
    );
}

#[test]
fn lint_rejects_malformed_corpus() {
    let dir = std::env::temp_dir().join(format!("meadow-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.mcorpus");
    std::fs::write(&path, "claim: 1/0 = 0\nlemma: 0 = 0\n").unwrap();
    let (_, err, code) = meadow(&["lint", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("line 2"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_mirrors_text() {
    for name in CORPORA {
        let path = corpus(name);
        let path = path.to_str().unwrap();
        let (text, _, text_code) = meadow(&["lint", path]);
        let (json, _, json_code) = meadow(&["lint", "--format", "json", path]);
        assert_eq!(text_code, json_code);
        let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
        let verdicts = doc["verdicts"].as_array().unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(verdicts.len(), lines.len());
        for (v, line) in verdicts.iter().zip(lines) {
            let rebuilt = format!(
                "statement={} pos={} guarded={} verdict={} detail={}",
                v["statement"],
                v["pos"],
                v["guarded"].as_str().unwrap(),
                v["verdict"].as_str().unwrap(),
                v["detail"].as_str().unwrap()
            );
            assert_eq!(rebuilt, line);
        }
    }

    let (json, _, code) = meadow(&["eval", "--mode", "punch-div-all", "--format", "json", "1/0"]);
    assert_eq!(code, 3);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["value"], "UNDEFINED");
    assert_eq!(doc["defined"], false);

    let (json, _, _) = meadow(&["axioms", "--carrier", "gf3", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["reports"].as_array().unwrap().len(), 16);

    let (json, _, _) = meadow(&["logic", "--format", "json", "--classify", "0 = 0"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["value"], "T");
    assert_eq!(doc["classification"], "USABLE(T)");

    let (json, _, _) = meadow(&["tables", "bochvar", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc[0]["family"], "bochvar");
}

#[test]
fn violation_witness_in_json() {
    let dir = std::env::temp_dir().join(format!("meadow-cli-w-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("w.mcorpus");
    std::fs::write(&path, "claim: 1/(x - 2) = 1\n").unwrap();
    let (json, _, code) = meadow(&["lint", "--format", "json", path.to_str().unwrap()]);
    assert_eq!(code, 4);
    let doc: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(doc["verdicts"][0]["witness"]["x"], "2");
    std::fs::remove_dir_all(&dir).unwrap();
}
