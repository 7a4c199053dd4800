use std::process::Command;

use serde_json::Value;

fn xhopf(args: &str) -> (Value, i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_xhopf")).args(args.split_whitespace()).output().unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (v, out.status.code().unwrap(), String::from_utf8_lossy(&out.stderr).into_owned())
}

#[test]
fn success_is_exit_zero() {
    let (v, code, _) = xhopf("ext qz2 --max-degree 3");
    assert_eq!(code, 0);
    assert_eq!(v["dims"], serde_json::json!([1, 0, 0, 0]));
    assert_eq!(v["resolution"]["window"], 3);
}

#[test]
fn beyond_the_window_is_exit_three() {
    for args in ["ext qs3 --max-degree 4", "cup qs3 --m 1 --n 1", "tor lie-abelian2 --resolution bar --max-degree 4"] {
        let (v, code, stderr) = xhopf(args);
        assert_eq!(code, 3, "{args}");
        assert_eq!(v["exit_code"], 3);
        assert!(stderr.contains("window"), "{args}: {stderr}");
    }
}

#[test]
fn inapplicable_requests_are_exit_two() {
    for args in [
        "ext nosuch --max-degree 1",
        "ext qz2 --module nosuch --max-degree 1",
        "ext lie-nonabelian2 --resolution bar --max-degree 1",
        "ext qz2 --resolution ce --max-degree 1",
        "duality sweedler",
        "cap lie-abelian2 --m 2 --n 1",
    ] {
        let (v, code, _) = xhopf(args);
        assert_eq!(code, 2, "{args}");
        assert!(v["error"].is_string(), "{args}");
    }
    // clap usage errors go to stderr only
    let (_, code, stderr) = xhopf("ext qz2");
    assert_eq!(code, 2);
    assert!(stderr.contains("--max-degree"));
}

#[test]
fn failed_verification_is_exit_one() {
    let (v, code, _) = xhopf("verify-hopf monoid01");
    assert_eq!(code, 1);
    assert_eq!(v["passed"], false);
    let (_, code, stderr) = xhopf("tor monoid01 --max-degree 1");
    assert_eq!(code, 1);
    assert!(stderr.contains("not invertible"));
}

#[test]
fn instances_round_trip_through_show() {
    let (list, code, _) = xhopf("instances list");
    assert_eq!(code, 0);
    let names: Vec<String> =
        list["instances"].as_array().unwrap().iter().map(|i| i["name"].as_str().unwrap().to_string()).collect();
    assert_eq!(names.len(), 12);
    for n in &names {
        let (v, code, _) = xhopf(&format!("instances show {n}"));
        assert_eq!(code, 0, "{n}");
        assert!(v.is_object());
    }
}
