use std::process::Command;

use serde_json::Value;

fn pathlat(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_pathlat")).args(args).output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn documented_examples() {
    assert_eq!(pathlat(&["f", "u3d2u3dudud4"]).1.trim(), "514");
    assert_eq!(pathlat(&["f", "du3du2d3u2d", "--method", "recursive"]).1.trim(), "921");
    assert_eq!(pathlat(&["interval", "u2du2d3u2d", "u11"]).1.trim(), "218");
    assert_eq!(pathlat(&["vcount", "u2d2u3dudud3", "u2d2u5d5"]).1.trim(), "5");
    assert_eq!(pathlat(&["mobius-power", "du", "ud", "1"]).1.trim(), "-1");
    assert_eq!(pathlat(&["zeta-power", "udud", "u4", "2"]).1.trim(), pathlat(&["interval", "udud", "u4"]).1.trim());
    let (code, out, _) = pathlat(&["oeis", "A000213", "--upto", "20"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("PASS"));
    assert_eq!(pathlat(&["enumerate", "2"]).1, "dd\ndu\nud\nuu\n");
}

#[test]
fn json_schema() {
    let (code, out, _) = pathlat(&["--json", "f", "du3du2d3u2d"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["command"], "f");
    assert_eq!(v["inputs"]["path"], "du3du2d3u2d");
    assert_eq!(v["value"], "921");
    assert_eq!(v["method"], "auto");
    assert!(v["elapsed_ms"].as_f64().unwrap() >= 0.0);

    let (_, out, _) = pathlat(&["f", "ddudd", "--trace", "--json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let rules: Vec<&str> = v["value"]["trace"].as_array().unwrap().iter().map(|e| e["rule"].as_str().unwrap()).collect();
    assert!(rules.contains(&"recursion"), "{rules:?}");

    let (_, out, _) = pathlat(&["stats", "dduudududdd", "--json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["value"]["lv"], -3);
    assert_eq!(v["value"]["hv"], -1);
    assert_eq!(v["value"]["filling"], "duduududddu");
}

#[test]
fn exit_codes() {
    assert_eq!(pathlat(&["f", "u0"]).0, 2);
    assert_eq!(pathlat(&["f"]).0, 2);
    assert_eq!(pathlat(&["interval", "uu", "dd"]).0, 3);
    assert_eq!(pathlat(&["vcount", "uud", "uud"]).0, 3);
    assert_eq!(pathlat(&["mobius-power", "d9", "u9", "3", "--cap", "100"]).0, 4);
    assert_eq!(pathlat(&["enumerate", "17"]).0, 4);
    assert_eq!(pathlat(&["oeis", "A000045"]).0, 3);
}

#[test]
fn selftest_single_criterion() {
    let (code, out, _) = pathlat(&["selftest", "--criterion", "6"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("[PASS] 6."));
    assert_eq!(pathlat(&["selftest", "--criterion", "10"]).0, 3);
}
