use std::path::PathBuf;
use std::process::{Command, Output};
use std::sync::Arc;

use serde_json::Value;
use tate_core::algebra::dual_numbers;
use tate_core::complexes::{cone, ChainComplex, ChainMap};
use tate_core::io::{algebra_to_json, complex_to_json, module_to_json};
use tate_core::{Algebra, Module, F2};

fn tate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tate")).args(args).output().expect("run tate")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

fn tmp(name: &str, v: &Value) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&p, serde_json::to_string_pretty(v).unwrap()).unwrap();
    p
}

fn dims(v: &Value, col: &str) -> Vec<u64> {
    v["table"].as_array().unwrap().iter().map(|r| r[col].as_u64().unwrap()).collect()
}

#[test]
fn periodic_tate_cohomology_over_dual_numbers() {
    let o = tate(&["tate", "--preset", "k[t]/t^2@F2", "--source", "k", "--target", "k", "--window", "-5", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["window"], serde_json::json!([-5, 5]));
    assert_eq!(v["regime"], "SelfInjective");
    assert_eq!(dims(&v, "dim"), vec![1; 11]);
    for route in v["routes"].as_array().unwrap() {
        assert_eq!(dims(&v, route.as_str().unwrap()), vec![1; 11]);
    }
}

#[test]
fn regime_of_upper_triangular_algebra() {
    let o = tate(&["regime", "--preset", "T2@F2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["regime"], "FiniteGlobalDimension");
    assert_eq!(v["global_dimension"], 1);
}

#[test]
fn minimize_cone_of_identity() {
    let a: Arc<Algebra<F2>> = Arc::new(dual_numbers());
    let lam = Module::regular(a.clone());
    let c = cone(&ChainMap::identity(&ChainComplex::concentrated(&lam, 0)));
    let mut v = complex_to_json(&c, -1, 0, false).unwrap();
    v["algebra"] = algebra_to_json(&*a);
    let path = tmp("cone_id.json", &v);
    let o = tate(&["minimize", "--preset", "k[t]/t^2@F2", "--complex", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let out = json(&o);
    assert_eq!(out["window"], serde_json::json!([-1, 0]));
    assert_eq!(dims(&out, "minimal"), vec![0, 0]);
    assert_eq!(dims(&out, "contractible"), dims(&out, "input"));
    assert_eq!(dims(&out, "input"), vec![2, 2]);
    assert_eq!(out["contractible"]["diffs"], v["diffs"]);
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let cases: [&[&str]; 4] = [
        &["tate", "--preset", "kV4@F2", "--window", "-3", "3"],
        &["ring", "--preset", "kV4@F2"],
        &["approximate", "--preset", "k[t]/t^2@F2", "--module", "omega(top)"],
        &["tate", "--preset", "kC3@F3", "--format", "csv"],
    ];
    for args in cases {
        let (a, b) = (tate(args), tate(args));
        assert_eq!(a.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&a.stderr));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn csv_tables_carry_window_and_regime() {
    let o = tate(&["ext", "--preset", "kV4@F2", "--window", "0", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("# schema=1 command=ext"));
    assert!(lines[0].contains("window=0..3"));
    assert_eq!(&lines[1..], ["n,dim", "0,1", "1,2", "2,3", "3,4"]);
    let o = tate(&["tate", "--preset", "T2@F2", "--source", "top", "--target", "top", "--window", "-1", "1", "--format", "csv"]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.lines().next().unwrap().contains("regime=FiniteGlobalDimension"));
    assert!(text.lines().skip(2).all(|l| l.split(',').nth(1) == Some("0")));
}

#[test]
fn preset_output_loads_as_algebra_file() {
    let o = tate(&["preset", "--preset", "kV4@F2"]);
    assert_eq!(o.status.code(), Some(0));
    let path = tmp("kv4.json", &json(&o));
    let o = tate(&["tate", "--algebra", path.to_str().unwrap(), "--window", "0", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().skip(2).map(|l| l.split(',').nth(1).unwrap()).collect::<Vec<_>>(), ["1", "2", "3"]);
}

#[test]
fn module_files_and_expressions() {
    let a: Arc<Algebra<F2>> = Arc::new(dual_numbers());
    let path = tmp("dual_regular.json", &module_to_json(&Module::regular(a.clone()), true));
    let o = tate(&["stable-hom", "--preset", "k[t]/t^2", "--source", path.to_str().unwrap(), "--target", "k"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(json(&o)["dim"], 0);
    let o = tate(&["stable-hom", "--preset", "kV4", "--source", "omega^2(k)", "--target", "sum(k, sigma(k))"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn les_over_dual_numbers() {
    // 0 -> k -> Λ -> k -> 0 against k
    let o = tate(&["les", "--preset", "k[t]/t^2@F2", "--middle", "regular", "--generators", "[[0,1]]", "--window", "-2", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v = json(&o);
    assert_eq!(v["dims"], serde_json::json!({"left": 1, "middle": 2, "right": 1}));
    assert!(v["covariant"]["connecting_ranks"].as_array().unwrap().iter().all(|r| r == 1));
    assert!(v["report"]["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn verify_passes_on_presets() {
    for p in ["k[t]/t^2@F2", "kV4@F2", "kC3@F3", "T2@F2"] {
        let module = if p.starts_with('T') { "top" } else { "k" };
        let o = tate(&["verify", "--preset", p, "--module", module, "--window", "-2", "2"]);
        assert_eq!(o.status.code(), Some(0), "{p}: {}", String::from_utf8_lossy(&o.stdout));
    }
}

#[test]
fn domain_and_usage_errors_exit_one() {
    let err = |o: &Output| -> Value { serde_json::from_slice(&o.stderr).expect("error JSON on stderr") };
    let o = tate(&["ring", "--preset", "T2@F2"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(err(&o)["error"]["kind"], "non_self_injective");
    let o = tate(&["tate", "--preset", "nonsense@F2"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(err(&o)["error"]["kind"], "parse");
    let o = tate(&["tate", "--preset", "kV4@F11"]);
    assert_eq!(o.status.code(), Some(1));
    let o = tate(&["tate", "--preset", "kV4", "--window", "3", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(err(&o)["error"]["kind"], "usage");
    let o = tate(&["frobnicate"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(err(&o)["schema"], 1);
    let o = tate(&["approximate", "--preset", "kV4", "--format", "csv", "--module", "nope(k)"]);
    assert_eq!(o.status.code(), Some(1));
    let o = tate(&["regime", "--algebra", "/nonexistent/algebra.json"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(err(&o)["error"]["kind"], "io");
}

#[test]
fn field_mismatch_between_algebra_file_and_module_is_an_error() {
    let a: Arc<Algebra<F2>> = Arc::new(dual_numbers());
    let m = tmp("dual_k.json", &module_to_json(&Module::trivial(a).unwrap(), true));
    let o = tate(&["tate", "--preset", "kC2@F2", "--source", m.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    assert_eq!(tate(&["--help"]).status.code(), Some(0));
    assert_eq!(tate(&["tate", "--help"]).status.code(), Some(0));
}
