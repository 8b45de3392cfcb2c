//! End-to-end tests of the `polydec` binary.

use std::process::{Command, Output};

fn polydec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polydec"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn meet_over_gf3() {
    let o = polydec(&[
        "meet",
        "--field",
        "GF(3)",
        "x^27+2*x^9+x^3+2*x",
        "x^9+x^3+x",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x^3+2*x\n");
}

#[test]
fn no_decomposition_exits_one() {
    let o = polydec(&[
        "decompose",
        "--field",
        "GF(5)",
        "--strategy",
        "sep",
        "--shape",
        "5,5",
        "x^25+x^5+x",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "no decomposition\n");
}

#[test]
fn usage_and_input_errors_exit_two() {
    for args in [
        &["frobnicate"][..],
        &["meet", "x^3", "x"],
        &["meet", "--field", "GF(4)", "x^2", "x"],
        &["meet", "--field", "GF(3)", "x^2", "x"],
        &["decompose", "--field", "GF(5)", "x^25+x^5+x"],
        &[
            "decompose",
            "--field",
            "GF(5)",
            "--strategy",
            "bogus",
            "--shape",
            "5,5",
            "x^25",
        ],
        &["ratdec", "--field", "GF(5)", "--shape", "2,1", "x^2"],
        &[
            "compose",
            "--field",
            "GF(5)",
            "--assert-additive",
            "x^2",
            "x^5",
        ],
    ] {
        let o = polydec(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn json_follows_decomposition_schema() {
    let o = polydec(&[
        "decompose",
        "--json",
        "--field",
        "GF(2)",
        "--shape",
        "4,3",
        "x^12+x^9+x^6+x^3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["target"], "x^12+x^9+x^6+x^3");
    assert_eq!(lines[0]["field"], "GF(2)");
    assert_eq!(
        lines[0]["factors"],
        serde_json::json!(["x^4+x^3+x^2+x", "x^3"])
    );
    assert_eq!(lines[0]["complete"], false);
}

#[test]
fn complete_decompositions_are_marked_complete() {
    let o = polydec(&["complete", "--json", "--field", "GF(2)", "x^12+x^9+x^6+x^3"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["complete"], true);
    assert_eq!(v["factors"].as_array().unwrap().len(), 3);
    let o = polydec(&["all-complete", "--field", "GF(2)", "x^4+x"]);
    assert_eq!(stdout(&o), "x^2+x o x^2+x\n");
}

#[test]
fn limit_truncates_results() {
    let o = polydec(&[
        "decompose",
        "--limit",
        "1",
        "--field",
        "GF(5)",
        "--shape",
        "25,5",
        "x^125+x^25+x^5+x",
    ]);
    assert_eq!(stdout(&o), "x^25+x o x^5+x\n");
}

#[test]
fn rational_decomposition_round_trip() {
    let o = polydec(&["compose", "--field", "GF(5)", "x^2", "x^2/(x+1)"]);
    assert_eq!(stdout(&o), "x^4/(x^2+2*x+1)\n");
    let o = polydec(&[
        "ratdec",
        "--field",
        "GF(5)",
        "--shape",
        "2,0,2,1",
        "x^4/(x^2+2*x+1)",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "x^2 o x^2/(x+1)"));
}

#[test]
fn absolute_decomposition_names_its_tower() {
    let o = polydec(&["absdec", "--field", "GF(5)", "x^25+x^5+x"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert!(lines.next().unwrap().starts_with("over GF(5)[g1]/("));
    assert_eq!(lines.next().unwrap().matches(" o ").count(), 1);
}

#[test]
fn identical_argv_gives_identical_output() {
    for args in [
        &[
            "complete",
            "--field",
            "GF(3)",
            "--seed",
            "7",
            "x^12+x^9+x^6+x^3+x",
        ][..],
        &["absdec", "--field", "GF(2)", "x^4+x"],
        &[
            "decompose",
            "--json",
            "--field",
            "GF(5)",
            "--shape",
            "25,5",
            "x^125+x^25+x^5+x",
        ],
    ] {
        let a = polydec(args);
        let b = polydec(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn selftest_passes() {
    let o = polydec(&["selftest"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}");
    assert!(!out.contains("FAIL"));
    let n = polydec_cli::selftest_cases().unwrap().len();
    assert!(out.ends_with(&format!("{n}/{n} passed\n")));
}

#[test]
fn selftest_corpus_has_citations() {
    for case in polydec_cli::selftest_cases().unwrap() {
        assert!(!case.citation.trim().is_empty(), "{:?}", case.argv);
        assert!([0, 1, 2].contains(&case.expect_exit));
    }
}
