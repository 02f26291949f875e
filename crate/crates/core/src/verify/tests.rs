use super::*;
use crate::closed_forms::registry;

fn run(id: IdentityId, bounds: GridBounds) -> VerificationReport {
    verify_identity(id, &default_grid(id, &bounds), 0).unwrap()
}

#[test]
fn names_round_trip() {
    assert_eq!(IdentityId::all().count(), 35);
    for id in IdentityId::all() {
        assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
    }
    assert!(matches!("thm-nope".parse::<IdentityId>(), Err(Error::UnknownIdentity(_))));
    let conj: Vec<_> = IdentityId::all().filter(|i| i.is_conjecture()).map(|i| i.name()).collect();
    assert_eq!(conj, ["conj-fam-c", "conj-fam-d", "conj-reci"]);
}

#[test]
fn every_default_grid_is_in_domain() {
    for id in IdentityId::all() {
        let grid = default_grid(id, &GridBounds::default());
        assert!(!grid.is_empty(), "{id}");
        for p in &grid {
            grids::check_domain(id, p).unwrap();
        }
    }
}

#[test]
fn small_grids_pass() {
    let small = GridBounds { n_max: Some(2), r_max: Some(1) };
    for id in IdentityId::all() {
        let report = run(id, small);
        assert_eq!(report.outcomes.len(), report.grid.len());
        assert!(report.all_pass(), "{report}");
    }
}

#[test]
fn spec_examples() {
    let report = run(IdentityId::ThmKt, GridBounds { n_max: Some(5), r_max: None });
    assert_eq!((report.passed(), report.outcomes.len()), (5, 5));
    let report = run(IdentityId::LemE10, GridBounds::default());
    assert_eq!((report.passed(), report.outcomes.len()), (6, 6));
    let grid: Vec<_> = (1..=2)
        .flat_map(|r| (r..=5).map(move |n| Params::new().r(r).n(n)))
        .collect();
    let report = verify_identity(IdentityId::ConjFamC, &grid, 2).unwrap();
    assert!(report.conjecture && report.all_pass());
}

#[test]
fn out_of_domain_grid_rejected() {
    let bad = [Params::new().r(2).n(1)];
    assert!(matches!(verify_identity(IdentityId::CorFamE, &bad, 1), Err(Error::Grid(_))));
    let missing = [Params::new().n(2)];
    assert!(matches!(verify_identity(IdentityId::ThmDst2Dts, &missing, 1), Err(Error::Grid(_))));
}

#[test]
fn outcomes_keep_grid_order() {
    let grid = default_grid(IdentityId::Djd, &GridBounds { n_max: Some(3), r_max: None });
    let report = verify_identity(IdentityId::Djd, &grid, 4).unwrap();
    let order: Vec<Params> = report.outcomes.iter().map(|o| o.parameters).collect();
    assert_eq!(order, grid);
}

#[test]
fn even_zero_clause_noted() {
    let report = run(IdentityId::PropD10, GridBounds { n_max: Some(4), r_max: None });
    assert!(report.all_pass());
    let noted = report.outcomes.iter().filter(|o| o.detail.is_some()).count();
    assert_eq!(noted, 2);
}

#[test]
fn failure_carries_residual() {
    let mut c = checks::Checks::default();
    c.eq("first", &RationalFunction::int(3), &RationalFunction::int(1));
    c.eq("second", &RationalFunction::int(5), &RationalFunction::int(1));
    let m = c.mismatch.unwrap();
    assert_eq!(m.what, "first");
    assert_eq!(m.residual, Some(RationalFunction::int(2)));
}

#[test]
fn json_point_schema() {
    let json = serde_json::to_value(run(IdentityId::ThmKt, GridBounds { n_max: Some(1), r_max: None })).unwrap();
    assert_eq!(json["identity"], "thm-kt");
    assert_eq!(json["conjecture"], false);
    let point = &json["outcomes"][0];
    assert_eq!(point["identity"], "thm-kt");
    assert_eq!(point["status"], "pass");
    assert_eq!(point["parameters"], serde_json::json!([{ "name": "n", "value": 1 }]));
    assert!(point.get("residual").is_none());
    assert!(point["millis"].is_number());
}

#[test]
fn every_registry_formula_is_checked() {
    let source = include_str!("checks.rs");
    for e in registry() {
        let needle = format!("Formula::{:?}", e.formula);
        assert!(source.contains(&needle), "{} is never compared", e.name);
    }
}
