use std::process::Command;

fn qgt() -> Command {
    Command::new(env!("CARGO_BIN_EXE_qgt"))
}

fn stdout(args: &[&str]) -> (String, i32) {
    let out = qgt().args(args).output().unwrap();
    (
        String::from_utf8(out.stdout).unwrap(),
        out.status.code().unwrap(),
    )
}

#[test]
fn dgen_prints_normal_form() {
    let (out, code) = stdout(&["dgen", "--n", "3", "--r", "2", "--s", "1"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "d_21 = (q^5-2*q^3+q)*F[1]*E[1] + q^4*K[1]*K[2]^-1 + q^2*K[1]^-1*K[2]\n"
    );
}

#[test]
fn verify_lt_covers_all_pairs() {
    let (out, code) = stdout(&["verify-lt", "--n", "4"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 10);
}

#[test]
fn commute_json_is_deterministic() {
    let args = ["commute", "--n", "3", "--json"];
    let (a, code) = stdout(&args);
    let (b, _) = stdout(&args);
    assert_eq!(code, 0);
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["result"]["pairs"].as_array().unwrap().len(), 15);
}

#[test]
fn seeded_suites_are_reproducible() {
    for args in [
        ["gl2-fiber", "--samples", "6", "--seed", "5", "--json"].as_slice(),
        ["bench", "--n", "2", "--bound", "50", "--seed", "9"].as_slice(),
        ["invariance", "--n", "2", "--bound", "20", "--seed", "3"].as_slice(),
    ] {
        let (a, code) = stdout(args);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(a, stdout(args).0);
    }
}

#[test]
fn failed_checks_exit_with_one() {
    // the unbalanced images are not invariant under the level-2 sign changes
    let (out, code) = stdout(&["embed-check", "--n", "3", "--form", "printed"]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL invariance E+[2]"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(stdout(&["dgen", "--n", "2", "--r", "3", "--s", "1"]).1, 2);
    assert_eq!(stdout(&["dgen", "--n", "2"]).1, 2);
    assert_eq!(stdout(&["gl2-fiber"]).1, 2);
    assert_eq!(
        stdout(&[
            "gl2-fiber",
            "--character",
            r#"{"g11": "0", "g21": "1", "g22": "1"}"#
        ])
        .1,
        2
    );
}

#[test]
fn gl2_fiber_reads_a_character() {
    let (out, code) = stdout(&[
        "gl2-fiber",
        "--character",
        r#"{"g11": "q^2", "g21": "1", "g22": "q^6"}"#,
        "--json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["fiber"]["count"], 1);
    assert_eq!(v["result"]["fiber"]["modules"][0]["kind"], "dense");
}

#[test]
fn out_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("qgt-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("maxcomm.json");
    let (out, code) = stdout(&[
        "maxcomm-cert",
        "--bound",
        "1",
        "--json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["result"]["holds"], true);
    std::fs::remove_dir_all(&dir).unwrap();
}
