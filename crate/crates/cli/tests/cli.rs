use std::process::{Command, Output};

use serde_json::Value;

const DATA: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data");

fn ffec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ffec")).args(args).output().expect("spawn ffec")
}

fn data(rel: &str) -> String {
    format!("{DATA}/{rel}")
}

fn records(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).expect("json line")).collect()
}

fn find<'a>(rs: &'a [Value], kind: &str) -> &'a Value {
    rs.iter().find(|r| r["record"] == kind).unwrap_or_else(|| panic!("no {kind} record"))
}

#[test]
fn analyze_e7_over_f2() {
    let out = ffec(&["analyze", "--curve", &data("curves/e7_p2.curve")]);
    assert_eq!(out.status.code(), Some(0));
    let rs = records(&out);
    assert_eq!(rs[0]["record"], "report");
    assert_eq!(rs[0]["command"], "analyze");
    let l = find(&rs, "lreport");
    assert_eq!(l["N"], 0);
    assert_eq!(l["coeffs"], serde_json::json!([1]));
    let types: Vec<&str> = rs.iter().filter(|r| r["record"] == "localdata").map(|r| r["type"].as_str().unwrap()).collect();
    assert!(types.contains(&"IV*"));
    assert_eq!(find(&rs, "checks")["failed"], serde_json::json!([]));
}

#[test]
fn analyze_cubic_twist_has_rank_one() {
    let out = ffec(&["analyze", "--curve", &data("curves/cubic_twist_p5.curve")]);
    assert_eq!(out.status.code(), Some(0));
    let rs = records(&out);
    assert_eq!(find(&rs, "lreport")["epsilon"], -1);
    assert_eq!(find(&rs, "ranks")["surface_rank"], 1);
}

#[test]
fn analyze_constant_curve() {
    let out = ffec(&["analyze", "--curve", &data("curves/e0_p5.curve")]);
    assert_eq!(out.status.code(), Some(0));
    let l = records(&out).into_iter().find(|r| r["record"] == "lreport").unwrap();
    assert_eq!(l["constant"], true);
}

#[test]
fn singular_curve_is_an_error() {
    let out = ffec(&["analyze", "--curve", &data("curves/singular_p5.curve")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    assert!(out.stdout.is_empty());
}

#[test]
fn missing_file_is_an_error() {
    let out = ffec(&["analyze", "--curve", &data("curves/nope.curve")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tower_scan_and_single_level() {
    let out = ffec(&["tower", "--curve", &data("curves/e7_p2.curve"), "--scan", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let rs = records(&out);
    assert_eq!(find(&rs, "towerscan")["c_obs"], 1.5);

    let out = ffec(&["tower", "--curve", &data("curves/e7_p2.curve"), "--d", "5", "--mu"]);
    assert_eq!(out.status.code(), Some(0));
    let rs = records(&out);
    assert_eq!(find(&rs, "lreport")["q"], 16);
    assert_eq!(find(&rs, "tower")["rank"], 4);

    let out = ffec(&["tower", "--curve", &data("curves/e7_p2.curve"), "--d", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tower_at_one_matches_analyze() {
    let f = data("curves/e8_p3.curve");
    let a = records(&ffec(&["analyze", "--curve", &f]));
    let t = records(&ffec(&["tower", "--curve", &f, "--d", "1"]));
    assert_eq!(find(&a, "lreport")["coeffs"], find(&t, "lreport")["coeffs"]);
}

#[test]
fn points_for_legendre_over_f3() {
    let out = ffec(&["points", "--p", "3", "--iters", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let rs = records(&out);
    let pts = find(&rs, "points");
    assert_eq!(pts["d"], 4);
    assert_eq!(pts["rank"], 2);
    assert_eq!(pts["points"].as_array().unwrap().len(), 4);
}

#[test]
fn points_argument_errors() {
    assert_eq!(ffec(&["points", "--p", "2"]).status.code(), Some(2));
    assert_eq!(ffec(&["points", "--p", "3", "--iters", "0"]).status.code(), Some(2));
    assert_eq!(ffec(&["points", "--p", "3", "--family", "other"]).status.code(), Some(2));
}

#[test]
fn berger_catalog_and_data_files() {
    let out = ffec(&["berger", "--catalog", "first-example", "--p", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let b = records(&out).into_iter().find(|r| r["record"] == "berger").unwrap();
    assert_eq!(b["c1"], 0);
    assert_eq!(b["data"]["c2"], 0);
    assert_eq!(b["data"]["genus"], 1);

    let out = ffec(&["berger", "--catalog", "berger-L4", "--p", "7", "--a", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let b = records(&out).into_iter().find(|r| r["record"] == "berger").unwrap();
    assert_eq!(b["discriminant_matches"], true);
    assert_eq!(b["nprime_deg"], 3);

    let out = ffec(&["berger", "--data", &data("berger/quadratic.txt"), "--p", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let b = records(&out).into_iter().find(|r| r["record"] == "berger").unwrap();
    assert_eq!(b["data"]["genus"], 1);
}

#[test]
fn berger_malformed_data() {
    let dir = std::env::temp_dir().join(format!("ffec-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.txt");
    std::fs::write(&path, "f: 1@0 x\n").unwrap();
    let out = ffec(&["berger", "--data", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn output_is_deterministic() {
    let body = |args: &[&str]| {
        let rs = records(&ffec(args));
        rs[1..rs.len() - 1].to_vec()
    };
    let f = data("curves/e9_p3.curve");
    assert_eq!(body(&["analyze", "--curve", &f]), body(&["analyze", "--curve", &f]));
    assert_eq!(
        body(&["points", "--p", "3", "--iters", "4"]),
        body(&["--threads", "1", "points", "--p", "3", "--iters", "4"])
    );
}
