use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn iafrel(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_iafrel"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary should start");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout should be JSON")
}

fn running() -> String {
    fixture("running_example.iaf")
}

#[test]
fn relevance_json_lists_every_element() {
    let out = iafrel(
        &[
            "relevance",
            "--sem",
            "ad",
            "--status",
            "true",
            "--set",
            "a,b",
            &running(),
        ],
        "",
    );
    let v = json(&out);
    assert_eq!(v["semantics"], "ad");
    assert_eq!(v["status"], true);
    assert_eq!(v["stability"], "unstable");
    let elements = v["elements"].as_array().unwrap();
    assert_eq!(elements.len(), 7);
    for e in elements {
        for key in [
            "kind",
            "id_or_pair",
            "add_relevant",
            "rem_relevant",
            "strongly_add",
            "strongly_rem",
            "method",
        ] {
            assert!(e.get(key).is_some(), "missing {key} in {e}");
        }
    }
    let bd = elements
        .iter()
        .find(|e| e["id_or_pair"] == "(b,d)")
        .unwrap();
    assert_eq!(bd["kind"], "attack");
    assert_eq!(bd["add_relevant"], true);
}

#[test]
fn brute_and_auto_reports_agree() {
    let key = |method: &str| {
        let v = json(&iafrel(
            &[
                "relevance",
                "--sem",
                "st",
                "--status",
                "false",
                "--set",
                "a,b,f",
                "--method",
                method,
                &running(),
            ],
            "",
        ));
        v["elements"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| {
                (
                    e["id_or_pair"].clone(),
                    e["add_relevant"].clone(),
                    e["rem_relevant"].clone(),
                )
            })
            .collect::<Vec<_>>()
    };
    assert_eq!(key("auto"), key("brute"));
}

#[test]
fn frame_is_read_from_stdin() {
    let text = std::fs::read_to_string(running()).unwrap();
    let out = iafrel(&["posver", "--sem", "ad", "--set", "a,b"], &text);
    assert_eq!(json(&out)["posver"], true);
    let out = iafrel(&["necver", "--sem", "ad", "--set", "a,b", "-"], &text);
    assert_eq!(json(&out)["necver"], false);
}

#[test]
fn parse_prints_canonical_form() {
    let out = iafrel(&["parse"], "uatt(b,a).\n  arg(b).\narg(a). # first\n");
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "arg(a).\narg(b).\nuatt(b,a).\n"
    );
}

#[test]
fn parse_errors_name_the_line() {
    let out = iafrel(&["parse"], "arg(a).\natt(a,b).\n");
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn reserved_names_need_the_flag() {
    let text = "arg(__aux_w0).\n";
    assert_eq!(iafrel(&["parse"], text).status.code(), Some(1));
    assert!(iafrel(&["--allow-reserved", "parse"], text)
        .status
        .success());
}

#[test]
fn exit_codes() {
    let f = running();
    let cap = iafrel(
        &[
            "--cap", "1", "posver", "--method", "brute", "--sem", "ad", "--set", "a", &f,
        ],
        "",
    );
    assert_eq!(cap.status.code(), Some(3));
    let fast = iafrel(
        &[
            "posver", "--method", "fast", "--sem", "co", "--set", "a", &f,
        ],
        "",
    );
    assert_eq!(fast.status.code(), Some(2));
    let usage = iafrel(&["bogus"], "");
    assert_eq!(usage.status.code(), Some(1));
    let element = iafrel(
        &[
            "strong-relevance",
            "--sem",
            "co",
            "--status",
            "true",
            "--set",
            "a,b",
            "--element",
            "(a,b)",
            &f,
        ],
        "",
    );
    assert_eq!(element.status.code(), Some(2));
}

#[test]
fn stability_and_extensions() {
    let f = running();
    let v = json(&iafrel(
        &["stability", "--sem", "st", "--set", "a,b", &f],
        "",
    ));
    assert_eq!(v["stability"], "stable-false");
    let v = json(&iafrel(&["extensions", "--sem", "gr", &f], ""));
    assert_eq!(v["extensions"], serde_json::json!([["a", "b", "g"]]));
    let v = json(&iafrel(
        &["verify", "--sem", "co", "--set", "a,b,g", &f],
        "",
    ));
    assert_eq!(v["holds"], true);
}

#[test]
fn strong_relevance_single_element() {
    let v = json(&iafrel(
        &[
            "strong-relevance",
            "--sem",
            "co",
            "--status",
            "true",
            "--set",
            "a,b",
            "--element",
            "(f,g)",
            "--action",
            "add",
            &running(),
        ],
        "",
    ));
    assert_eq!(v["strongly_add"], true);
}

#[test]
fn to_atiaf_reports_the_witness() {
    let out = iafrel(&["to-atiaf", &running()], "");
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("# witness: __aux_w0"), "{text}");
    assert!(text.contains("uatt(__aux_w0,d)."));
    assert!(!text.contains("uarg("));
}

#[test]
fn gen_is_reproducible() {
    let a = iafrel(&["gen", "--seed", "9", "--n-args", "5"], "");
    let b = iafrel(&["gen", "--seed", "9", "--n-args", "5"], "");
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.starts_with("# generated: rng=ChaCha8 seed=9"));
    let parsed = iafrel(&["parse"], &text);
    assert!(parsed.status.success());
}

#[test]
fn diff_reports_clean_run() {
    let v = json(&iafrel(
        &["diff", "--trials", "5", "--seed", "4", "--sem", "ad,st,co"],
        "",
    ));
    assert_eq!(v["disagreements"], false);
}

#[test]
fn sat2iaf_check_agrees() {
    let q = std::fs::read_to_string(fixture("two_clause.pi2")).unwrap();
    let v = json(&iafrel(&["sat2iaf", "--check"], &q));
    assert_eq!(v["formula"], true);
    assert_eq!(v["agree"], true);
    let out = iafrel(&["sat2iaf"], &q);
    let frame = String::from_utf8(out.stdout).unwrap();
    assert!(frame.contains("uatt(phi,w)."));
}
