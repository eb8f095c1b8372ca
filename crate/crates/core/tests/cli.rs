mod common;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use common::e;
use ddgl2::io::{mat_from_json_str, mat_to_json};
use ddgl2::{Field, Mat, MatSpace, Scalar};
use serde_json::Value;

fn ddgl2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ddgl2"))
        .args(args)
        .output()
        .unwrap()
}

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("ddgl2-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Self(dir)
    }

    fn write(&self, name: &str, text: &str) -> String {
        let p = self.0.join(name);
        std::fs::write(&p, text).unwrap();
        p.to_str().unwrap().to_string()
    }

    fn mat(&self, name: &str, m: &Mat) -> String {
        self.write(name, &mat_to_json(m).to_string())
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn basis_space(v: &Value) -> MatSpace {
    let mats: Vec<Mat> = v["basis"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| mat_from_json_str(&m.to_string()).unwrap())
        .collect();
    assert_eq!(mats.len(), v["dim"].as_u64().unwrap() as usize);
    MatSpace::span(4, &mats)
}

fn diag(entries: &[Scalar]) -> Mat {
    Mat::diag(entries.to_vec())
}

#[test]
fn verify_catalog_is_byte_stable() {
    let a = ddgl2(&["verify-catalog"]);
    let b = ddgl2(&["verify-catalog"]);
    assert_eq!(a.stdout, b.stdout);
    let report = stdout_json(&a);
    let count = report["discrepancy_count"].as_u64().unwrap();
    assert_eq!(a.status.code(), Some(i32::from(count > 0)));
}

#[test]
fn table_and_single_entry() {
    let out = ddgl2(&[
        "verify-catalog",
        "--format",
        "table",
        "--entry",
        "sec5-item-d",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().nth(1).unwrap().starts_with("sec5-item-d"));
    let out = ddgl2(&["verify-catalog", "--entry", "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn export_matrices_reparse() {
    let out = ddgl2(&["export-catalog"]);
    assert!(out.status.success());
    let bundle = stdout_json(&out);
    let mut seen = 0;
    for entry in bundle["entries"].as_array().unwrap() {
        if let Some(ms) = entry.get("matrices").and_then(Value::as_object) {
            for m in ms.values() {
                let parsed = mat_from_json_str(&m.to_string()).unwrap();
                assert_eq!(mat_to_json(&parsed), *m);
                seen += 1;
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn commutant_of_a_diagonal() {
    let s = Scratch::new("commutant");
    let q = Scalar::q();
    let a = diag(&[Scalar::q_pow(2), q.clone(), q, Scalar::from_i64(1)]);
    let path = s.mat("a.json", &a);
    let got = basis_space(&stdout_json(&ddgl2(&["commutant", &path])));
    assert_eq!(
        got,
        MatSpace::span(4, &[e(1, 2), e(1, 3), e(2, 4), e(3, 4)])
    );
    let got = basis_space(&stdout_json(&ddgl2(&["commutant", &path, "--prime"])));
    assert_eq!(
        got,
        MatSpace::span(4, &[e(2, 1), e(3, 1), e(4, 2), e(4, 3)])
    );
}

#[test]
fn admissibility_of_the_two_summand_case() {
    let s = Scratch::new("admissible");
    let Ok(ddgl2::catalog::Instance::QSpinor { rep, .. }) =
        ddgl2::catalog::instantiate("thm1-case3", &[])
    else {
        panic!("thm1-case3 is a q-spinor entry");
    };
    let a = s.mat("a.json", &rep.a);
    let both = s.mat("both.json", &(&e(1, 4) + &e(3, 2)));
    let one = s.mat("one.json", &e(1, 4));
    let out = stdout_json(&ddgl2(&["admissible", &a, &both]));
    assert_eq!(out["admissible"], true);
    assert!(out["witness_c"].is_object());
    let out = stdout_json(&ddgl2(&["admissible", &a, &one]));
    assert_eq!(out["admissible"], false);
    assert!(out["witness_c"].is_null());
}

#[test]
fn closure_and_centralizer() {
    let s = Scratch::new("closure");
    let id = s.mat("id.json", &Mat::identity(4));
    let out = stdout_json(&ddgl2(&["closure", &id]));
    assert_eq!(out["dim"], 1);
    let out = stdout_json(&ddgl2(&["centralizer", &id]));
    assert_eq!(out["dim"], 16);
    let out = stdout_json(&ddgl2(&[
        "closure",
        "--entry",
        "sec5-item-c",
        "--mode",
        "single",
    ]));
    assert_eq!(out["dim"], 6);
    let out = stdout_json(&ddgl2(&["closure", "--entry", "sec5-item-c"]));
    assert_eq!(out["dim"], 8);
    let out = ddgl2(&["closure", "--entry", "thm1-case1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn equivalence_of_a_conjugated_copy() {
    let s = Scratch::new("equiv");
    let Ok(ddgl2::catalog::Instance::Gl2(rep)) = ddgl2::catalog::instantiate("sec5-case1", &[])
    else {
        panic!("sec5-case1 is a GL2 entry");
    };
    let u = &Mat::identity(4) + &e(1, 2);
    let conj = rep
        .conjugate(&u, &Scalar::from_i64(1), &Scalar::q())
        .unwrap();
    let file = |name: &str, r: &ddgl2::gl2::GL2Rep<Scalar>| {
        let v = serde_json::json!({
            "c11": mat_to_json(&r.c11),
            "c12": mat_to_json(&r.c12),
            "c21": mat_to_json(&r.c21),
            "c22": mat_to_json(&r.c22),
        });
        s.write(name, &v.to_string())
    };
    let (l, r) = (file("l.json", &rep), file("r.json", &conj));
    let out = stdout_json(&ddgl2(&["equiv", &l, &r]));
    assert_eq!(out["equivalent"], true);
}

#[test]
fn errors_exit_with_two() {
    let s = Scratch::new("errors");
    let bad = s.write("bad.json", r#"{"n":2,"entries":[["q^^","0"],["0","1"]]}"#);
    let out = ddgl2(&["commutant", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error at"));
    let out = ddgl2(&[
        "commutant",
        Path::new("/nonexistent/a.json").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let a = s.mat("a.json", &Mat::identity(4));
    let b = s.mat("b.json", &e(1, 2));
    let out = ddgl2(&["admissible", &a, &b]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a q-spinor"));
}
