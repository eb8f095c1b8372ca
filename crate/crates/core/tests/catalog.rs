use std::sync::OnceLock;

use ddgl2::catalog::{self, catalog, Instance, Kind};
use ddgl2::io::MatrixJson;
use ddgl2::report::{verify_catalog, Report, VerifyOptions};
use ddgl2::{Error, GaussRational};

fn report() -> &'static Report {
    static REPORT: OnceLock<Report> = OnceLock::new();
    REPORT.get_or_init(|| verify_catalog(&VerifyOptions::default()).unwrap())
}

#[test]
fn every_entry_is_reported_in_catalog_order() {
    let names: Vec<_> = catalog().iter().map(|e| e.name.to_string()).collect();
    let reported: Vec<_> = report().entries.iter().map(|e| e.name.clone()).collect();
    assert_eq!(names, reported);
}

#[test]
fn gl2_entries_are_representations() {
    for (e, entry) in report().entries.iter().zip(catalog()) {
        if entry.kind != Kind::Gl2 {
            continue;
        }
        assert_eq!(e.relations_ok, Some(true), "{}", e.name);
        if let Some(claim) = entry.claims.perturbation_nonzero {
            assert_eq!(e.perturbation_nonzero, Some(claim), "{}", e.name);
        }
        assert_eq!(e.action_unital, Some(true), "{}", e.name);
        assert_eq!(e.numeric_crosscheck, Some(true), "{}", e.name);
        assert_ne!(e.detq_matches_claim, Some(false), "{}", e.name);
        assert_ne!(e.invariants_shape_matches, Some(false), "{}", e.name);
    }
}

#[test]
fn dimension_claims_are_reproduced() {
    for e in &report().entries {
        if e.status != "checked" {
            continue;
        }
        if let Some(c) = e.dim_r_claim {
            assert_eq!(e.dim_r_family, Some(c), "{}", e.name);
        }
        if let Some(c) = e.dim_i_claim {
            assert_eq!(e.dim_i, Some(c), "{}", e.name);
        }
    }
}

#[test]
fn admissibility_claims_are_reproduced() {
    let mut rejected = 0;
    for e in report().entries.iter().filter(|e| e.kind == "qspinor") {
        assert!(e.admissible_claim.is_some(), "{}", e.name);
        assert_eq!(e.admissible, e.admissible_claim, "{}", e.name);
        rejected += usize::from(e.admissible == Some(false));
    }
    assert!(rejected >= 6);
}

#[test]
fn metadata_entries_stay_unchecked() {
    for e in catalog().iter().filter(|e| e.kind == Kind::MetadataOnly) {
        let r = report().entries.iter().find(|r| r.name == e.name).unwrap();
        assert_eq!(r.status, "unchecked (external reference)");
        assert!(r.dim_r_family.is_none());
        assert!(r.discrepancies.is_empty());
        assert_eq!(
            e.instantiate(&[]),
            Err(Error::MetadataOnly(e.name.to_string()))
        );
    }
}

#[test]
fn discrepancies_are_counted() {
    let r = report();
    let total: usize = r.entries.iter().map(|e| e.discrepancies.len()).sum();
    assert_eq!(total, r.discrepancy_count);
    assert_eq!(r.exit_code(), i32::from(total > 0));
}

#[test]
fn runs_are_deterministic() {
    let again = verify_catalog(&VerifyOptions::default()).unwrap();
    assert_eq!(&again, report());
    assert_eq!(
        serde_json::to_string(&again).unwrap(),
        serde_json::to_string(report()).unwrap()
    );
    assert_eq!(again.to_table(), report().to_table());
}

#[test]
fn single_entry_run_matches_full_run() {
    let opts = VerifyOptions {
        entry: Some("sec5-item-d".into()),
        ..VerifyOptions::default()
    };
    let single = verify_catalog(&opts).unwrap();
    let full = report()
        .entries
        .iter()
        .find(|e| e.name == "sec5-item-d")
        .unwrap();
    let mut got = single.entries[0].clone();
    got.equivalence_class_id = full.equivalence_class_id;
    assert_eq!(&got, full);
}

#[test]
fn unknown_names_are_rejected() {
    let opts = VerifyOptions {
        entry: Some("no-such-entry".into()),
        ..VerifyOptions::default()
    };
    assert_eq!(
        verify_catalog(&opts),
        Err(Error::UnknownEntry("no-such-entry".into()))
    );
    assert!(matches!(
        catalog::instantiate("sec5-case1", &[("nu", GaussRational::int(1))]),
        Err(Error::UnknownParameter { .. })
    ));
}

#[test]
fn forbidden_parameters_are_rejected() {
    for e in catalog() {
        for p in e.params.iter().filter(|p| p.nonzero.is_some()) {
            let res = e.instantiate(&[(p.name, GaussRational::int(0))]);
            assert!(
                matches!(res, Err(Error::ForbiddenParameter { .. })),
                "{} {}",
                e.name,
                p.name
            );
        }
    }
}

#[test]
fn families_consist_of_valid_instances() {
    for e in catalog().iter().filter(|e| e.is_instantiable()) {
        let fam = e.family().unwrap();
        assert_eq!(fam.len(), e.params.len().max(1), "{}", e.name);
        if e.kind == Kind::Gl2 {
            assert!(fam.iter().all(Instance::is_valid), "{}", e.name);
        }
    }
}

#[test]
fn bundle_matrices_round_trip() {
    let bundle = catalog::export_bundle().unwrap();
    let entries = bundle["entries"].as_array().unwrap();
    assert_eq!(entries.len(), catalog().len());
    for (json, e) in entries.iter().zip(catalog()) {
        assert_eq!(json["name"], e.name);
        let Ok(Instance::Gl2(rep)) = e.instantiate(&[]) else {
            continue;
        };
        for (key, m) in [
            ("c11", &rep.c11),
            ("c12", &rep.c12),
            ("c21", &rep.c21),
            ("c22", &rep.c22),
        ] {
            let parsed: MatrixJson = serde_json::from_value(json["matrices"][key].clone()).unwrap();
            assert_eq!(&parsed.to_mat().unwrap(), m, "{} {key}", e.name);
        }
    }
}
