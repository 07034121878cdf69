use std::process::{Command, Output};

use chaundy::bezout::bezout_residual;
use chaundy::numeric::parse_rational;
use chaundy::DensePoly;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chaundy"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn solve_json_matches_expected_shape() {
    let o = run(&["solve", "--n", "1", "--m", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        r#"{"P":["3","-2"],"Q":["1","2"],"mu":"6","residual":"0"}"#
    );
}

#[test]
fn solve_json_round_trips_through_library() {
    for (n, m) in [(0, 0), (1, 2), (7, 4), (12, 12)] {
        let o = run(&[
            "solve",
            "--n",
            &n.to_string(),
            "--m",
            &m.to_string(),
            "--format",
            "json",
        ]);
        let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
        let coeffs = |key: &str| {
            DensePoly::monomial(
                v[key]
                    .as_array()
                    .unwrap()
                    .iter()
                    .map(|c| parse_rational(c.as_str().unwrap()).unwrap())
                    .collect(),
            )
        };
        let residual = bezout_residual(n, m, &coeffs("P"), &coeffs("Q"));
        assert_eq!(residual.to_string(), "0");
        assert_eq!(v["residual"], "0");
    }
}

#[test]
fn solve_human_lists_coefficients() {
    let o = run(&["solve", "--n", "1", "--m", "2"]);
    let s = stdout(&o);
    assert!(s.contains("P coefficients: [4, -3]"), "{s}");
    assert!(s.contains("Q coefficients: [1, 2, 3]"), "{s}");
    let o = run(&["solve", "--n", "0", "--m", "0", "--method", "euclid"]);
    assert!(stdout(&o).contains("P coefficients: [1]"));
}

#[test]
fn check_summary_and_exit_codes() {
    let o = run(&[
        "check",
        "--identity",
        "chaundy-bullard",
        "--n",
        "0..20",
        "--m",
        "0..20",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim_end().ends_with("passed 441/441"));

    let o = run(&[
        "check",
        "--identity",
        "lemma42",
        "--n",
        "0..0",
        "--m",
        "0..0",
        "--k",
        "0..0",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("passed 1/1"));

    let o = run(&[
        "check",
        "--identity",
        "beta",
        "--n",
        "1..2",
        "--m",
        "1..2",
        "--alpha",
        "0.7",
        "--beta",
        "1.9",
        "--a",
        "0.35",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("passed 4/4"));
}

#[test]
fn tampered_check_exits_one_with_nonzero_residual() {
    let o = run(&[
        "check",
        "--identity",
        "twin",
        "--n",
        "2",
        "--m",
        "3",
        "--format",
        "json",
        "--tamper",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert_eq!(v["passed"], false);
    assert_ne!(v["residual"], "0");
    assert_eq!(v["identity"], "twin");
    assert_eq!(v["params"]["n"], 2);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["check", "--identity", "nope"][..],
        &["check", "--identity", "twin", "--n", "5..2"],
        &["check", "--identity", "remark63", "--m", "0", "--k", "3"],
        &[
            "check",
            "--identity",
            "beta",
            "--alpha",
            "1/2",
            "--beta",
            "1",
        ],
        &["table", "--kind", "zz", "--n", "1", "--m", "1"],
        &["solve", "--n", "x", "--m", "1"],
        &["beta", "--alpha", "-1", "--beta", "1", "--a", "0.5"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn nonconvergence_exits_three() {
    let o = run(&[
        "beta",
        "--alpha",
        "0.3",
        "--beta",
        "0.4",
        "--a",
        "0.9",
        "--max-intervals",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn table_kinds() {
    assert_eq!(
        stdout(&run(&["table", "--kind", "Q", "--n", "1", "--m", "2"])).trim(),
        "1, 2, 3"
    );
    assert_eq!(
        stdout(&run(&["table", "--kind", "mu", "--n", "0", "--m", "0"])).trim(),
        "1"
    );
    assert_eq!(
        stdout(&run(&[
            "table", "--kind", "d_coeffs", "--n", "1", "--m", "1"
        ]))
        .trim(),
        "1, 0, -3, 2"
    );
    let csv = stdout(&run(&[
        "table", "--kind", "a_coeffs", "--n", "1", "--m", "1", "--format", "csv",
    ]));
    assert_eq!(csv.trim(), "k,a_coeffs\n0,3\n1,-2");
    let json = stdout(&run(&[
        "table", "--kind", "P", "--n", "1", "--m", "1", "--format", "json",
    ]));
    assert_eq!(
        json.trim(),
        r#"{"kind":"P","n":1,"m":1,"values":["3","-2"]}"#
    );
}

#[test]
fn json_stream_is_one_object_per_line_and_parallel_is_identical() {
    let args = |jobs: &'static str| {
        vec![
            "check",
            "--identity",
            "remark63",
            "--n",
            "0..5",
            "--m",
            "0..5",
            "--k",
            "0..5",
            "--format",
            "json",
            "--jobs",
            jobs,
        ]
    };
    let serial = stdout(&run(&args("1")));
    let parallel = stdout(&run(&args("3")));
    assert_eq!(serial, parallel);
    for line in serial.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        for key in ["identity", "params", "passed", "residual", "method"] {
            assert!(v.get(key).is_some(), "{key} missing in {line}");
        }
    }
}

#[test]
fn csv_check_has_header() {
    let o = run(&[
        "check",
        "--identity",
        "symmetry",
        "--n",
        "0..1",
        "--m",
        "0",
        "--format",
        "csv",
    ]);
    let s = stdout(&o);
    let mut lines = s.lines();
    assert_eq!(lines.next(), Some("identity,params,passed,residual,method"));
    assert_eq!(lines.count(), 2);
}

#[test]
fn beta_subcommand_reports_exact_value() {
    let o = run(&[
        "beta", "--alpha", "2", "--beta", "3", "--a", "1/2", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["exact"], "11/192");
    assert!((v["numeric"].as_f64().unwrap() - 11.0 / 192.0).abs() < 1e-12);
}
