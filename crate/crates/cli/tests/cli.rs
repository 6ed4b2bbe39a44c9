use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

use knotsig::alexmod::{FiniteLambdaModule, LinkingForm};
use knotsig::mbreps::MetabelianRep;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotsig")).args(args).env_remove("KNOTSIG_CAP").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

fn knot(name: &str) -> String {
    fixture(&format!("{name}.json")).to_string_lossy().into_owned()
}

#[test]
fn invariants() {
    let v = json(&["invariants", "--knot", &knot("unknot")]);
    assert_eq!((v["alexander"].as_str(), v["arf"].as_u64()), (Some("1"), Some(0)));
    let v = json(&["invariants", "--knot", &knot("trefoil")]);
    assert_eq!((v["alexander"].as_str(), v["arf"].as_u64()), (Some("t^2-t+1"), Some(1)));
    assert!(v.get("metabolizer").is_none());
    let v = json(&["invariants", "--knot", &knot("slice-a4")]);
    assert_eq!(v["arf"], 0);
    assert_eq!(v["metabolizer"], serde_json::json!([[1, 0, 0, 0], [0, 1, 0, 0]]));
}

#[test]
fn eta_values() {
    let v = json(&["eta-cyclic", "--knot", &knot("trefoil"), "--k", "6"]);
    assert_eq!((v["sum"].as_i64(), v["average"].as_str()), (Some(-8), Some("-4/3")));
    let v = json(&["eta-cyclic", "--knot", &knot("unknot"), "--k", "5"]);
    assert_eq!((v["sum"].as_i64(), v["average"].as_str()), (Some(0), Some("0")));
    let v = json(&["l2", "--knot", &knot("trefoil"), "--eps", "1e-9"]);
    let lo: f64 = eval(v["integral_lo"].as_str().unwrap());
    let hi: f64 = eval(v["integral_hi"].as_str().unwrap());
    assert!(lo <= -4.0 / 3.0 && -4.0 / 3.0 <= hi && hi - lo <= 1e-9);
    let v = json(&["l2", "--knot", &knot("unknot"), "--eps", "1/1000"]);
    assert_eq!((v["integral_lo"].as_str(), v["integral_hi"].as_str()), (Some("0"), Some("0")));
}

fn eval(r: &str) -> f64 {
    match r.split_once('/') {
        Some((n, d)) => n.parse::<f64>().unwrap() / d.parse::<f64>().unwrap(),
        None => r.parse().unwrap(),
    }
}

#[test]
fn approximation_csv() {
    let out = stdout(&["approx", "--knot", &knot("trefoil"), "--schedule", "factorial:5", "--eps", "1e-9"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "k,average,gap_lo,gap_hi");
    assert_eq!(lines.len(), 5);
    let gaps: Vec<f64> = lines[1..].iter().map(|l| eval(l.split(',').nth(3).unwrap())).collect();
    assert!(gaps.windows(2).all(|w| w[1] <= w[0]));
    let sig = stdout(&["sigfn", "--knot", &knot("trefoil")]);
    assert!(sig.starts_with("kind,index,x_lo,x_hi,hemisphere,value\n"));
    assert_eq!(sig.lines().filter(|l| l.starts_with("point")).count(), 2);
}

#[test]
fn covers_round_trip_into_reps() {
    let v = json(&["covers", "--knot", &knot("trefoil"), "--k", "2"]);
    assert_eq!(v["torsion"], serde_json::json!(["3"]));
    assert_eq!(v["torsion_order"], v["resultant_order"]);
    let lf = LinkingForm::from_json(&v["linking_form"]).unwrap();
    assert_eq!(lf.to_json(), v["linking_form"]);
    let module = FiniteLambdaModule::from_json(&v["module"]).unwrap();
    assert_eq!(module.to_json(), v["module"]);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("module.json");
    std::fs::write(&path, serde_json::to_string(&v["module"]).unwrap()).unwrap();
    let reps = json(&["reps", "--module", path.to_str().unwrap(), "--m", "2"]);
    assert_eq!(reps["group_order"], 6);
    assert_eq!(reps["classes"].as_array().unwrap().len(), 3);
    for class in reps["classes"].as_array().unwrap() {
        let r = MetabelianRep::from_json(class, &module).unwrap();
        assert_eq!(&r.to_json(2), class);
    }
}

#[test]
fn reps_of_six_element_group() {
    let v = json(&["reps", "--module", fixture("z3-inverse.json").to_str().unwrap(), "--m", "2"]);
    let dims: Vec<u64> = v["classes"].as_array().unwrap().iter().map(|c| c["dim"].as_u64().unwrap()).collect();
    assert_eq!(dims, vec![1, 1, 2]);
    assert_eq!(v["orthogonality"], true);
    assert_eq!(v["sum_of_squares"], 6);
}

#[test]
fn resolve_report() {
    let v = json(&["resolve", "--delta", "1,-1,1", "--p", "5", "--depth", "3", "--s", "default"]);
    assert_eq!(v["p"], 5);
    assert_eq!(v["steps"][0]["k"], 6);
    assert_eq!(v["steps"].as_array().unwrap().len(), 3);
    let v = json(&["resolve", "--delta", "1,-1,1", "--p", "2", "--depth", "2", "--witness-bound", "1"]);
    assert_eq!(v["witnesses"].as_array().unwrap().len(), 26);
}

#[test]
fn output_is_deterministic() {
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("a.csv");
    for threads in ["1", "4"] {
        let args = ["--threads", threads, "approx", "--knot", &knot("slice-a4"), "--schedule", "factorial:7"];
        assert_eq!(stdout(&args), stdout(&args));
    }
    let a = stdout(&["--threads", "1", "sigfn", "--knot", &knot("slice-a4")]);
    let b = stdout(&["--threads", "3", "sigfn", "--knot", &knot("slice-a4")]);
    assert_eq!(a, b);
    assert!(run(&["sigfn", "--knot", &knot("slice-a4"), "--out", out.to_str().unwrap()]).status.success());
    assert_eq!(std::fs::read_to_string(&out).unwrap(), a);
}

#[test]
fn exit_codes() {
    let tmp = tempfile::tempdir().unwrap();
    let bad = tmp.path().join("bad.json");
    std::fs::write(&bad, r#"{"name": "x", "seifert": [[0, 2], [0, 0]]}"#).unwrap();
    let code = |args: &[&str]| run(args).status.code();
    assert_eq!(code(&["invariants", "--knot", bad.to_str().unwrap()]), Some(2));
    assert_eq!(code(&["invariants", "--knot", "/nonexistent.json"]), Some(2));
    assert_eq!(code(&["l2", "--knot", &knot("trefoil"), "--eps", "-1"]), Some(2));
    assert_eq!(code(&["approx", "--knot", &knot("trefoil"), "--schedule", "factorial:12"]), Some(4));
    assert_eq!(code(&["resolve", "--delta", "2,-3,2", "--p", "2"]), Some(2));
    assert_eq!(code(&["reps", "--module", fixture("z3-inverse.json").to_str().unwrap(), "--m", "3"]), Some(2));
    let capped = Command::new(env!("CARGO_BIN_EXE_knotsig"))
        .args(["reps", "--module", fixture("z3-inverse.json").to_str().unwrap(), "--m", "2"])
        .env("KNOTSIG_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(4));
}
