mod common;

use std::collections::HashMap;

use common::load_module;
use qgrade_core::modules::{
    grading_table, relative_q_grading, tensor_generators, GradedModulePresentation, Side,
};
use qgrade_core::rational::{int, q};
use qgrade_core::{Error, RelativeGrading};

fn tensor_names(a: &str, d: &str) -> Vec<String> {
    let mut names: Vec<String> = tensor_generators(&load_module(a), &load_module(d))
        .unwrap()
        .iter()
        .map(|t| t.name())
        .collect();
    names.sort();
    names
}

fn rel(
    a: &GradedModulePresentation,
    d: &GradedModulePresentation,
    from: &str,
    to: &str,
) -> RelativeGrading {
    let ts = tensor_generators(a, d).unwrap();
    let find = |n: &str| ts.iter().find(|t| t.name() == n).unwrap();
    relative_q_grading(find(from), find(to)).unwrap()
}

#[test]
fn trefoil_arrows_are_graded() {
    let report = load_module("trefoil_m2.cfd.json").check().unwrap();
    assert_eq!(report.side, Side::D);
    assert_eq!(report.checks.len(), 5);
    assert!(report.all_pass(), "{report}");
}

#[test]
fn solid_torus_relation_is_graded() {
    let report = load_module("solid_torus_inf.cfa.json").check().unwrap();
    assert!(report.all_pass(), "{report}");
}

#[test]
fn unknot_rho3_arrow_is_graded() {
    let report = load_module("unknot_m2.cfd.json").check().unwrap();
    let rho3 = report
        .checks
        .iter()
        .find(|c| c.operation.algebra == ["rho3"])
        .unwrap();
    assert!(rho3.passed());
}

#[test]
fn empty_subgroup_breaks_the_relation() {
    let mut m = load_module("solid_torus_inf.cfa.json");
    m.subgroup = qgrade_core::SubgroupSpan::trivial(&m.circle);
    assert!(!m.check().unwrap().all_pass());
}

#[test]
fn differential_drops_grading_by_lambda() {
    let text = r#"{
      "side": "A",
      "pmc": {"n_points": 4, "matching": [[1, 3], [2, 4]]},
      "algebra": "torus",
      "generators": [
        {"name": "x", "idempotent": [0], "grading": {"maslov": "0", "h1": ["0", "0", "0"]}},
        {"name": "y", "idempotent": [0], "grading": {"maslov": "-1", "h1": ["0", "0", "0"]}}
      ],
      "operations": [{"from": "x", "algebra": [], "to": "y"}]
    }"#;
    let m = GradedModulePresentation::from_json(text).unwrap();
    assert!(m.check().unwrap().all_pass());
    let shifted = text.replace("\"-1\"", "\"-2\"");
    assert!(!GradedModulePresentation::from_json(&shifted)
        .unwrap()
        .check()
        .unwrap()
        .all_pass());
}

#[test]
fn explicit_algebra_table() {
    let text = r#"{
      "side": "D",
      "pmc": {"n_points": 4, "matching": [[1, 3], [2, 4]]},
      "algebra": [{"name": "a", "grading": {"maslov": "-1/2", "h1": ["1", "0", "0"]}}],
      "generators": [
        {"name": "x", "idempotent": [1], "grading": {"maslov": "0", "h1": ["0", "0", "0"]}},
        {"name": "y", "idempotent": [0], "grading": {"maslov": "-1/2", "h1": ["-1", "0", "0"]}}
      ],
      "operations": [{"from": "x", "algebra": ["a"], "to": "y"}]
    }"#;
    let report = GradedModulePresentation::from_json(text)
        .unwrap()
        .check()
        .unwrap();
    assert!(report.all_pass(), "{report}");
    assert_eq!(report.checks[0].idempotent_ok, None);
}

#[test]
fn unknown_algebra_elements_are_errors() {
    let text = std::fs::read_to_string(common::fixture_path("trefoil_m2.cfd.json")).unwrap();
    let bad = text.replace("\"rho12\"", "\"rho13\"");
    assert!(matches!(
        GradedModulePresentation::from_json(&bad),
        Err(Error::UnknownAlgebraElement(_))
    ));
    let two = text.replace("[\"rho12\"]", "[\"rho1\", \"rho2\"]");
    assert!(matches!(
        GradedModulePresentation::from_json(&two),
        Err(Error::InvalidModule(_))
    ));
}

#[test]
fn json_round_trip() {
    for name in [
        "trefoil_m2.cfd.json",
        "unknot_m2.cfd.json",
        "solid_torus_inf.cfa.json",
    ] {
        let m = load_module(name);
        let again = GradedModulePresentation::from_json(&m.to_json()).unwrap();
        assert_eq!(again.to_json(), m.to_json());
    }
}

#[test]
fn tensor_generator_sets() {
    assert_eq!(
        tensor_names("solid_torus_inf.cfa.json", "trefoil_m2.cfd.json"),
        ["n*y1", "n*y2"]
    );
    assert_eq!(
        tensor_names("solid_torus_inf.cfa.json", "unknot_m2.cfd.json"),
        ["n*b1", "n*b2"]
    );
    let mut empty = load_module("solid_torus_inf.cfa.json");
    empty.generators.clear();
    empty.operations.clear();
    assert!(
        tensor_generators(&empty, &load_module("trefoil_m2.cfd.json"))
            .unwrap()
            .is_empty()
    );
}

#[test]
fn tensor_requires_one_module_of_each_side() {
    let d = load_module("trefoil_m2.cfd.json");
    assert!(tensor_generators(&d, &d).is_err());
}

#[test]
fn trefoil_relative_grading() {
    let a = load_module("solid_torus_inf.cfa.json");
    let d = load_module("trefoil_m2.cfd.json");
    assert_eq!(
        rel(&a, &d, "n*y2", "n*y1"),
        RelativeGrading::Same { q: q(3, 2) }
    );
    assert_eq!(
        rel(&a, &d, "n*y1", "n*y2"),
        RelativeGrading::Same { q: q(-3, 2) }
    );
    assert_eq!(
        rel(&a, &d, "n*y1", "n*y1"),
        RelativeGrading::Same { q: int(0) }
    );
}

#[test]
fn unknot_relative_grading_magnitude() {
    let a = load_module("solid_torus_inf.cfa.json");
    let d = load_module("unknot_m2.cfd.json");
    let RelativeGrading::Same { q: value } = rel(&a, &d, "n*b1", "n*b2") else {
        panic!("expected a value")
    };
    assert!(value == q(1, 2) || value == q(-1, 2));
}

#[test]
fn representative_shifts_do_not_change_answers() {
    let a = load_module("solid_torus_inf.cfa.json");
    let d = load_module("trefoil_m2.cfd.json");
    let shifts_d: HashMap<String, Vec<_>> = [
        ("y1".to_string(), vec![int(2)]),
        ("y2".to_string(), vec![q(-1, 3)]),
    ]
    .into_iter()
    .collect();
    let shifts_a: HashMap<String, Vec<_>> =
        [("n".to_string(), vec![int(-5)])].into_iter().collect();
    let d2 = d.with_shifted_representatives(&shifts_d).unwrap();
    let a2 = a.with_shifted_representatives(&shifts_a).unwrap();
    assert_eq!(rel(&a2, &d2, "n*y2", "n*y1"), rel(&a, &d, "n*y2", "n*y1"));
    assert!(d2.check().unwrap().all_pass());
    assert!(a2.check().unwrap().all_pass());
}

#[test]
fn grading_tables() {
    let a = load_module("solid_torus_inf.cfa.json");
    let d = load_module("trefoil_m2.cfd.json");
    let table = grading_table(&a, &d, None).unwrap();
    assert_eq!(table.generator_count(), 2);
    assert_eq!(table.classes.len(), 1);
    assert_eq!(table.classes[0].base, "n*y1");
    let by_y2 = grading_table(&a, &d, Some("n*y2")).unwrap();
    assert_eq!(
        by_y2.offset("n*y1"),
        Some(&RelativeGrading::Same { q: q(3, 2) })
    );
    assert_eq!(
        by_y2.offset("n*y2"),
        Some(&RelativeGrading::Same { q: int(0) })
    );
    assert!(grading_table(&a, &d, Some("n*x1")).is_err());

    let mut empty = a.clone();
    empty.generators.clear();
    empty.operations.clear();
    assert_eq!(
        grading_table(&empty, &d, None).unwrap().generator_count(),
        0
    );
}
