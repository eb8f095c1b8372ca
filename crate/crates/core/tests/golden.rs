//! Regression snapshot of the CASE 1 inner action on the generators
//! γ0..γ3, in Clifford coordinates. Set `UPDATE_GOLDEN=1` to rewrite it.

use std::path::PathBuf;

use ddgl2::catalog::{instantiate, Instance};
use ddgl2::clifford::{build_action, CliffordBasis, BASIS_NAMES};
use ddgl2::Scalar;
use serde::{Deserialize, Serialize};

#[derive(Debug, PartialEq, Serialize, Deserialize)]
struct Row {
    i: usize,
    j: usize,
    generator: String,
    coords: Vec<String>,
}

fn snapshot() -> Vec<Row> {
    let Ok(Instance::Gl2(rep)) = instantiate("sec5-case1", &[]) else {
        panic!("sec5-case1 is a GL2 entry");
    };
    let action = build_action(&rep).unwrap();
    let cb = CliffordBasis::<Scalar>::new();
    let mut rows = Vec::new();
    for i in 1..=2 {
        for j in 1..=2 {
            for (mu, g) in cb.gamma.iter().enumerate() {
                let v = action.act(i, j, g).unwrap();
                rows.push(Row {
                    i,
                    j,
                    generator: BASIS_NAMES[mu + 1].to_string(),
                    coords: cb.to_coords(&v).iter().map(ToString::to_string).collect(),
                });
            }
        }
    }
    rows
}

#[test]
fn case1_action_on_generators() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/case1_act.json");
    let got = snapshot();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, serde_json::to_string_pretty(&got).unwrap() + "\n").unwrap();
    }
    let want: Vec<Row> = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(got, want);
}
