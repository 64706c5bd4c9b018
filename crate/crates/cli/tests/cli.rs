use std::process::{Command, Output};

fn cocomp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cocomp"))
        .args(args)
        .env_remove("COCOMP_MAX_DEGREE")
        .output()
        .expect("cocomp runs")
}

fn stdout(args: &[&str]) -> String {
    let out = cocomp(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    cocomp(args).status.code().expect("exit code")
}

// Displayed computations, one invocation each.
const FIXTURES: &[(&[&str], &str)] = &[
    (&["product", "--algebra", "cc", "--flavor", "right", "[1,3]", "[2]"], "2 [1,1,3] + [1,2,2] + [1,3,1]\n"),
    (
        &["coproduct", "--algebra", "cc", "[1,3]"],
        "[1] ⊗ [1,3] + [1,1] ⊗ [3] + [1,2] ⊗ [2] + [1,3] ⊗ [1]\n",
    ),
    (
        &["coproduct", "--algebra", "cksym", "2,1,2"],
        "1 ⊗ 2,1,2 + 2 ⊗ 1,1,2 + 2,1 ⊗ 1,2 + 2,1,1 ⊗ 2 + 2,1,2 ⊗ 1\n",
    ),
    (
        &["product", "--algebra", "cksym", "2,1", "1,2,1"],
        "1,2,3 + 2 1,3,2 + 3 1,4,1 + 2,2,2 + 2 2,3,1 + 3,2,1\n",
    ),
    (&["product", "--algebra", "csym", "c2", "c3"], "10 c5\n"),
    (&["coproduct", "--algebra", "csym", "c3"], "c0 ⊗ c3 + c1 ⊗ c2 + c2 ⊗ c1 + c3 ⊗ c0\n"),
    (&["product", "--algebra", "ssym", "1,2", "1"], "1,2,3 + 1,3,2 + 3,1,2\n"),
    (&["antipode", "--algebra", "ssym", "1,2"], "2,1\n"),
    (
        &["coproduct", "--algebra", "ysym", "((. .) .)"],
        ". ⊗ ((. .) .) + (. .) ⊗ (. .) + ((. .) .) ⊗ .\n",
    ),
    (&["product", "--algebra", "psym", "{.|.}/(. .)", "{.}/."], "{.|.}/(. .)\n"),
    (&["product", "--algebra", "psym", "{.}/.", "{(. .)}/."], "{.|.}/(. .)\n"),
    (&["dims", "--algebra", "cc", "--max", "4"], "n,dim\n0,1\n1,2\n2,4\n3,8\n4,16\n"),
    (&["dims", "--algebra", "csym.ssym", "--max", "5", "--format", "text"], "1,2,5,15,54,235\n"),
    (&["dims", "--algebra", "csym.ysym", "--max", "4", "--format", "text"], "1,2,5,14,42\n"),
    (&["dims", "--algebra", "ysym.ssym", "--max", "5", "--format", "text"], "1,2,6,22,92,428\n"),
    (&["primitives", "--algebra", "cc", "--max", "3", "--format", "text"], "0,2,0,0\n"),
    (&["enumerate", "--family", "trees", "--degree", "2"], "(. (. .))\n((. .) .)\n"),
];

#[test]
fn fixtures() {
    for (args, want) in FIXTURES {
        assert_eq!(&stdout(args), want, "{args:?}");
    }
}

#[test]
fn flavors_and_variants() {
    assert_eq!(stdout(&["product", "--algebra", "cc", "--flavor", "left", "[2]", "[1,3]"]), stdout(&["product", "--algebra", "cc-left", "[2]", "[1,3]"]));
    let swap = stdout(&["product", "--algebra", "deltasym", "{1}/1", "{}/1"]);
    let noswap = stdout(&["product", "--algebra", "deltasym", "--variant", "noswap", "{1}/1", "{}/1"]);
    assert_ne!(swap, noswap);
    assert_eq!(code(&["product", "--algebra", "psym", "--flavor", "left", "{.}/.", "{.}/."]), 2);
}

#[test]
fn json_terms_carry_degrees() {
    let text = stdout(&["coproduct", "--algebra", "cc", "[1,3]", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["algebra"], "cc-right");
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 4);
    for t in terms {
        assert_eq!(t["degree"], 3);
        let parts: u64 = t["factors"].as_array().unwrap().iter().map(|f| f["degree"].as_u64().unwrap()).sum();
        assert_eq!(parts, 3);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["product", "--algebra", "nope", "a", "b"]), 3);
    assert_eq!(code(&["coproduct", "--algebra", "ssym", "1,1"]), 4);
    assert_eq!(code(&["coproduct", "--algebra", "psym", "{.|.}/."]), 4);
    assert_eq!(code(&["enumerate", "--family", "perms", "--degree", "12"]), 5);
    assert_eq!(code(&["product", "--algebra", "ssym.ssym", "{()}/()", "{()}/()"]), 2);
    assert_eq!(code(&["coaction", "--algebra", "ssym", "1"]), 2);
    assert_eq!(code(&["dims"]), 2);
}

#[test]
fn parse_errors_report_positions() {
    let out = cocomp(&["coproduct", "--algebra", "ysym", "(. x)"]);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("position 3"), "{err}");
}

#[test]
fn environment_sets_default_degree() {
    let out = Command::new(env!("CARGO_BIN_EXE_cocomp"))
        .args(["dims", "--algebra", "cc", "--format", "text"])
        .env("COCOMP_MAX_DEGREE", "6")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1,2,4,8,16,32,64\n");
}

#[test]
fn verify_single_algebra() {
    let text = stdout(&["verify", "--algebra", "cc", "--check", "unit"]);
    assert!(text.contains("cc-left") && text.contains("cc-right"), "{text}");
    assert!(text.ends_with("2 passed, 0 failed, 0 skipped\n"), "{text}");
    let over = stdout(&["verify", "--algebra", "ssym", "--check", "bialgebra", "--max-degree", "9"]);
    assert!(over.contains("skipped"), "{over}");
}
