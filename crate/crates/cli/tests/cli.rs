use std::process::Command;

use serde_json::Value;

use skein_cli::{run, Outcome, EXIT_PASS, EXIT_USAGE};

fn skein(args: &[&str]) -> Outcome {
    let mut full = vec!["skein"];
    full.extend_from_slice(args);
    run(full)
}

fn expand(expr: &str, extra: &[&str]) -> String {
    let mut args = vec!["expand", "--expr", expr];
    args.extend_from_slice(extra);
    let out = skein(&args);
    assert_eq!(out.code, EXIT_PASS, "{}", out.stderr);
    out.stdout.trim_end().to_string()
}

#[test]
fn expand_examples() {
    assert_eq!(expand("P[0,1]*P[1,0]", &[]), "P[1,0]*P[0,1] - (s - s^-1)*P[1,1]");
    assert_eq!(expand("1", &[]), "1");
    assert_eq!(expand("Q[1,0]*Q[0,1] - Q[0,1]*Q[1,1]*Q[1,0]", &["--max-degree", "6"]), "0");
    assert_eq!(expand("X[1,0]*X[0,1]", &["--algebra", "quantum-torus"]), "s*X[1,1]");
    assert_eq!(expand("P[1,0]*P[0,1]", &["--algebra", "quantum-torus"]), "s*X[1,1]");
    assert_eq!(expand("Q[1,1]*Qinv[1,1]", &[]), "1");
    assert_eq!(expand("Q[1,1]^-1 - Qinv[1,1]", &[]), "0");
    assert_eq!(expand("(q - s^2) * P[2,1]", &[]), "0");
    assert_eq!(expand("P[3,4]", &["--max-degree", "6"]), "0");
}

#[test]
fn expand_dilogarithm_low_degree() {
    let q = expand("Q[1,0]", &["--max-degree", "2"]);
    let by_hand = expand(
        "1 + P[1,0]/(s - s^-1) + P[1,0]*P[1,0]/(2*(s - s^-1)^2) - P[2,0]/(2*(s^2 - s^-2))",
        &["--max-degree", "2"],
    );
    assert_eq!(q, by_hand);
}

#[test]
fn expand_errors() {
    for (expr, fragment) in [
        ("P[1,0]*(2", "position 9"),
        ("Q[-1,0]", "degree"),
        ("X[1,0]", "not a generator"),
        ("R[1,0]", "unknown name"),
        ("P[1,0]/P[0,1]", "division"),
        ("1/(s - s)", "division by zero"),
    ] {
        let out = skein(&["expand", "--expr", expr]);
        assert_eq!(out.code, EXIT_USAGE, "{}", expr);
        assert!(out.stderr.contains(fragment), "{}: {}", expr, out.stderr);
    }
}

fn check_schema(v: &Value) {
    let obj = v.as_object().expect("object");
    for key in ["check", "algebra", "status"] {
        assert!(obj[key].is_string(), "{}", key);
    }
    for key in ["max_degree", "bidegrees_checked", "elapsed_ms"] {
        assert!(obj[key].is_u64(), "{}", key);
    }
    assert!(["pass", "fail"].contains(&obj["status"].as_str().unwrap()));
    assert!(["torus-skein", "quantum-torus"].contains(&obj["algebra"].as_str().unwrap()));
    for f in obj["failures"].as_array().expect("failures array") {
        let b = f["bidegree"].as_array().unwrap();
        assert_eq!(b.len(), 2);
        assert!(b.iter().all(Value::is_i64));
        assert!(f["difference"].is_string());
    }
}

#[test]
fn every_command_emits_the_report_schema() {
    let commands: [&[&str]; 9] = [
        &["pentagon", "--max-degree", "4"],
        &["pentagon", "--algebra", "quantum-torus", "--max-degree", "4"],
        &["phi-pentagon", "--max-degree", "4"],
        &["identity-2-2"],
        &["ad-check", "--max-degree", "4", "--samples", "3"],
        &["jacobi", "--samples", "5"],
        &["homomorphism", "--samples", "3", "--max-degree", "3"],
        &["dilog-image", "--max-degree", "3"],
        &["expand", "--expr", "P[1,0]"],
    ];
    for args in commands {
        let mut full = args.to_vec();
        full.extend_from_slice(&["--format", "json"]);
        let out = skein(&full);
        assert_eq!(out.code, EXIT_PASS, "{:?}: {}", args, out.stderr);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        check_schema(&v);
        assert_eq!(v["check"], args[0]);
    }
}

#[test]
fn pentagon_counts() {
    let out = skein(&["pentagon", "--algebra", "torus-skein", "--max-degree", "6", "--format", "json"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["bidegrees_checked"], 28);
    let out = skein(&["pentagon", "--max-degree", "0", "--format", "json"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["bidegrees_checked"], 1);
    assert_eq!(out.code, EXIT_PASS);
}

#[test]
fn text_table() {
    let out = skein(&["phi-pentagon", "--max-degree", "3", "--no-timing"]);
    assert_eq!(
        out.stdout,
        "check       phi-pentagon\nalgebra     quantum-torus\nmax_degree  3\nstatus      pass\n\
         checked     10\nfailures    0\nelapsed_ms  0\n"
    );
}

#[test]
fn seeded_runs_are_byte_identical() {
    for cmd in ["ad-check", "jacobi", "homomorphism"] {
        let args = [cmd, "--seed", "41", "--samples", "8", "--max-degree", "4", "--no-timing", "--format", "json"];
        assert_eq!(skein(&args), skein(&args));
    }
}

#[test]
fn usage_errors() {
    for args in [
        &["pentagon", "--max-degree", "17"][..],
        &["pentagon", "--algebra", "lattice"],
        &["jacobi", "--samples", "0"],
        &["phi-pentagon", "--algebra", "torus-skein"],
        &["identity-2-2", "--algebra", "quantum-torus"],
        &["expand"],
        &["nonsense"],
    ] {
        let out = skein(args);
        assert_eq!(out.code, EXIT_USAGE, "{:?}", args);
        assert!(!out.stderr.is_empty());
    }
    let help = skein(&["expand", "--help"]);
    assert_eq!(help.code, EXIT_PASS);
    assert!(help.stdout.contains("Qinv[i,j]"));
}

#[test]
fn binary_exit_codes_and_ceiling_override() {
    let bin = env!("CARGO_BIN_EXE_skein");
    let status = |args: &[&str], ceiling: Option<&str>| {
        let mut cmd = Command::new(bin);
        cmd.args(args);
        match ceiling {
            Some(c) => cmd.env(skein_cli::CEILING_ENV, c),
            None => cmd.env_remove(skein_cli::CEILING_ENV),
        };
        cmd.output().unwrap().status.code().unwrap()
    };
    assert_eq!(status(&["pentagon", "--max-degree", "2"], None), 0);
    assert_eq!(status(&["pentagon", "--max-degree", "3"], Some("2")), 2);
    assert_eq!(status(&["identity-2-2", "--max-degree", "30"], None), 2);
    assert_eq!(status(&["identity-2-2", "--max-degree", "30"], Some("40")), 0);
    assert_eq!(status(&["identity-2-2"], Some("many")), 2);
    assert_eq!(status(&["--bogus"], None), 2);
}

#[test]
fn expand_json_lists_terms() {
    let out = skein(&["expand", "--expr", "2*X[0,1] - X[1,0] + 3", "--algebra", "quantum-torus", "--format", "json"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["result"], "3 - X[1,0] + 2*X[0,1]");
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 3);
    assert_eq!(terms[1]["vector"], serde_json::json!([1, 0]));
    assert_eq!(terms[1]["coefficient"], "-1");
    let out = skein(&["expand", "--expr", "P[0,1]*P[1,0]", "--format", "json"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["terms"][0]["monomial"], "P[1,0]*P[0,1]");
    assert_eq!(v["terms"][1]["monomial"], "P[1,1]");
    assert_eq!(v["terms"][1]["coefficient"], "(-s + s^-1)");
}
