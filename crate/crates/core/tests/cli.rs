use std::io::Write;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_loopbracket"));
    for var in ["SURFACE", "FORMAT", "SHOW_RAW", "SEED", "BUDGET"] {
        c.env_remove(format!("LOOPBRACKET_{var}"));
    }
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn query_examples() {
    let o = run(&["minint", "--surface", "pants", "a", "b", "--format", "json"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["value"], 0);

    let o = run(&["selfint", "--surface", "torus1", "aaa", "--format", "json"]);
    assert_eq!(json(&o)["value"], 2);

    let o = run(&["torus", "(2,3)", "(1,1)"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("value: 1"));
}

#[test]
fn amr_output_with_raw_terms() {
    let o = run(&[
        "amr",
        "--surface",
        "pants",
        "--show-raw",
        "aBB",
        "aB",
        "--format",
        "json",
    ]);
    let v = json(&o);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["raw_count"], 2);
    assert_eq!(v["terms_count"], 2);
    assert_eq!(v["raw"].as_array().unwrap().len(), 2);
    assert_eq!(v["reduced"].as_array().unwrap().len(), 2);

    let o = run(&["goldman", "--surface", "pants", "aBB", "aB"]);
    let text = stdout(&o);
    assert!(text.contains("terms_count: 0"), "{text}");
}

#[test]
fn env_overrides_flags() {
    let o = bin()
        .args(["selfint", "aB"])
        .env("LOOPBRACKET_SURFACE", "pants")
        .env("LOOPBRACKET_FORMAT", "json")
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(json(&o)["value"], 1);
}

#[test]
fn exit_codes() {
    let o = run(&["selfint", "--surface", "pants", "a%"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 1"));
    assert_eq!(
        run(&["selfint", "--surface", "genus=1,boundary=0", "a"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["selfint", "a"]).status.code(), Some(1));
    assert_eq!(run(&["no-such-mode"]).status.code(), Some(1));
    assert_eq!(
        run(&["theorem2", "--surface", "pants", "a", "-p", "1", "-q", "1"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn batch_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(
        f,
        r#"{{"mode":"minint","surface":"pants","w1":"a","w2":"b"}}"#
    )
    .unwrap();
    writeln!(f, r#"{{"mode":"selfint","surface":"torus1""#).unwrap();
    writeln!(f, r#"{{"mode":"torus","w1":"(2,3)","w2":"(1,1)"}}"#).unwrap();
    let o = run(&["batch", f.path().to_str().unwrap(), "--format", "json"]);
    assert!(o.status.success());
    let lines: Vec<serde_json::Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0]["value"], 0);
    assert_eq!(lines[1]["error"]["kind"], "parse");
    assert_eq!(lines[2]["value"], 1);

    let empty = tempfile::NamedTempFile::new().unwrap();
    let o = run(&["batch", empty.path().to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());

    assert_eq!(run(&["batch", "/no/such/file"]).status.code(), Some(1));
}

#[test]
fn verify_is_byte_identical() {
    let a = run(&["verify", "--seed", "5", "--budget", "20"]);
    let b = run(&["verify", "--seed", "5", "--budget", "20"]);
    assert!(a.status.success(), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.contains("PASS octagon fixture"));
    let o = run(&["verify", "--seed", "5", "--budget", "0", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["properties"][0]["name"], "octagon fixture");
}
