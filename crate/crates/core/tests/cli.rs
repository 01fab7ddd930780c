//! Drives the command-line front end, both in process and through the
//! built binary.

use std::process::Command;

use shrinkca::cli::run;

fn cli(args: &[&str]) -> shrinkca::cli::Outcome {
    run(std::iter::once("shrinkca").chain(args.iter().copied()))
}

fn binary(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_shrinkca"))
        .args(args)
        .output()
        .unwrap()
}

#[test]
fn shrink_prints_keystream() {
    let out = binary(&[
        "shrink", "--p1", "1011", "--s1", "100", "--p2", "11001", "--s2", "1000", "--count", "13",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1010110110010\n");
}

#[test]
fn shrink_accepts_term_notation() {
    let out = cli(&[
        "shrink",
        "--p1",
        "1+x^2+x^3",
        "--s1",
        "100",
        "--p2",
        "1+x+x^4",
        "--s2",
        "1000",
        "--count",
        "13",
    ]);
    assert_eq!(out.status, 0);
    assert_eq!(out.stdout, "1010110110010\n");
}

#[test]
fn lfsr_prints_sequence() {
    let out = cli(&["lfsr", "--poly", "11001", "--seed", "1000", "--count", "15"]);
    assert_eq!(out.status, 0);
    assert_eq!(out.stdout, "100010011010111\n");
}

#[test]
fn linearize_prints_rule_pair() {
    let out = binary(&["linearize", "--l1", "3", "--p2", "111011"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "01110011111111001110\n11111111100111111111\n"
    );
}

#[test]
fn linearize_json_fields() {
    let out = cli(&[
        "--format",
        "json",
        "linearize",
        "--l1",
        "3",
        "--p2",
        "111011",
    ]);
    assert_eq!(out.status, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["rules_a"], "01110011111111001110");
    assert_eq!(v["rules_b"], "11111111100111111111");
    assert_eq!(v["base_poly"], "101001");
    assert_eq!(v["p"], 4);
    assert_eq!(v["L"], 20);
}

#[test]
fn ca_run_prints_states() {
    let out = cli(&[
        "ca",
        "run",
        "--rules",
        "0111001110",
        "--state",
        "0001110110",
        "--steps",
        "5",
    ]);
    assert_eq!(out.status, 0);
    let rows: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(
        rows,
        [
            "0001110110",
            "0010010001",
            "0111101010",
            "1011101011",
            "0001101001",
            "0010101110"
        ]
    );
}

#[test]
fn ca_charpoly_prints_canonical_form() {
    let out = cli(&["ca", "charpoly", "--rules", "01111"]);
    assert_eq!(out.status, 0);
    assert_eq!(out.stdout, "101001\n");
    let out = cli(&["--format", "json", "ca", "charpoly", "--rules", "01111"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["human"], "1+x^2+x^5");
}

#[test]
fn bm_from_flag_and_file_agree() {
    let seq = "100010011010111100010011010111";
    let inline = cli(&["bm", "--seq", seq]);
    assert_eq!(inline.status, 0);
    assert_eq!(
        inline.stdout,
        "linear_complexity: 4\nconnection_poly: 11001\n"
    );

    let path = std::env::temp_dir().join(format!("shrinkca-bm-{}.txt", std::process::id()));
    std::fs::write(&path, format!("{}\n{}\n", &seq[..15], &seq[15..])).unwrap();
    let from_file = cli(&["bm", "--seq-file", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(from_file, inline);
}

#[test]
fn attack_succeeds_with_json() {
    let out = binary(&[
        "--format", "json", "attack", "--p1", "1011", "--s1", "100", "--p2", "111011", "--s2",
        "10000",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"], true);
    assert_eq!(v["measured_lc"], 20);
    assert_eq!(v["observed_period"], 124);
}

#[test]
fn attack_text_verdict() {
    let out = cli(&[
        "attack", "--p1", "1011", "--s1", "100", "--p2", "11001", "--s2", "1000",
    ]);
    assert_eq!(out.status, 0);
    assert!(out.stdout.contains("LINEARIZED"));
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["lfsr", "--poly", "1x2", "--seed", "1000", "--count", "4"],
        &["lfsr", "--poly", "11001", "--seed", "1000"],
        &[
            "lfsr", "--poly", "11001", "--seed", "1000", "--count", "4", "--bogus",
        ],
        &["lfsr", "--poly", "11001", "--seed", "100", "--count", "4"],
        &["linearize", "--l1", "2", "--p2", "11001"],
        &["bm", "--seq", "0102"],
        &["bm"],
        &["bm", "--seq", "01", "--seq-file", "x.txt"],
        &["bm", "--seq-file", "/nonexistent/shrinkca.txt"],
        &[
            "ca", "run", "--rules", "01", "--state", "011", "--steps", "1",
        ],
        &[
            "shrink", "--p1", "1011", "--s1", "000", "--p2", "11001", "--s2", "1000", "--count",
            "4",
        ],
        &["nonsense"],
    ];
    for args in cases {
        let out = cli(args);
        assert_eq!(out.status, 2, "{args:?} gave {out:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    let out = binary(&["lfsr", "--poly", "1x2", "--seed", "1000", "--count", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    let out = cli(&["--help"]);
    assert_eq!(out.status, 0);
    assert!(out.stdout.contains("linearize"));
}

#[test]
fn polynomial_flag_round_trips_through_canonical_form() {
    let out = cli(&["ca", "charpoly", "--rules", "0111001110"]);
    let canonical = out.stdout.trim().to_string();
    let poly: shrinkca::Gf2Poly = canonical.parse().unwrap();
    assert_eq!(poly.to_string(), canonical);
    assert_eq!(poly.human(), "1+x^4+x^10");
}
