use abelcover_core::document::{parse_input, to_problem};
use abelcover_core::fixtures::EX1;
use abelcover_core::gluing::{glue_check, local_config_at, ViolationKind};
use abelcover_core::invariants::{global_cartier_index, invariant_report, CartierIndex};
use abelcover_core::local::{classify, iota_index};
use num_rational::Rational64;

#[test]
fn moving_a_line_off_its_point_breaks_the_congruence() {
    let text = EX1.replacen(
        r#"{"id": "y1", "on": ["C", "D1_2_f", "D1_2_s", "D2_3_a", "D2_3_b"]}"#,
        r#"{"id": "y1", "on": ["C", "D1_2_f", "D1_2_s", "D2_3_b"]}"#,
        1,
    );
    assert_ne!(text, EX1, "fixture layout changed");
    let p = to_problem(&parse_input(&text).unwrap()).unwrap();
    let report = glue_check(&p).unwrap();
    assert!(report.violations.iter().any(|v| v.kind == ViolationKind::Congruence && v.point.as_deref() == Some("y1")));
    assert!(invariant_report(&p).is_err());
}

#[test]
fn trivial_double_cover_of_the_plane() {
    let doc = r#"{"version": "1", "group": [2], "components": [{"id": "Y", "kind": "P2"}], "curves": []}"#;
    let p = to_problem(&parse_input(doc).unwrap()).unwrap();
    let report = invariant_report(&p).unwrap();
    // Two disjoint planes.
    assert_eq!(report.k_square, Rational64::from_integer(18));
    assert_eq!(report.chi_ox, 2);
}

/// Two planes glued along a line with inertia `g0 = e1`. At `y` the
/// branch data are `e1, e2` on one side and `e3, e1+e2+e3` on the other,
/// so the point is of type R4.2. Two further lines meet the double
/// line at `z` and make every `L_chi` integral.
const INDEX_TWO: &str = r#"{
    "version": "1",
    "group": [2, 2, 2],
    "components": [{"id": "Y1", "kind": "P2"}, {"id": "Y2", "kind": "P2"}],
    "curves": [
        {"id": "C", "role": "DOUBLE", "sides": [{"component": "Y1", "class": [[1, 1]]}, {"component": "Y2", "class": [[1, 1]]}]},
        {"id": "A1", "role": "BRANCH", "sides": [{"component": "Y1", "class": [[1, 1]]}]},
        {"id": "A2", "role": "BRANCH", "sides": [{"component": "Y1", "class": [[1, 1]]}]},
        {"id": "A3", "role": "BRANCH", "sides": [{"component": "Y1", "class": [[1, 1]]}]},
        {"id": "B1", "role": "BRANCH", "sides": [{"component": "Y2", "class": [[1, 1]]}]},
        {"id": "B2", "role": "BRANCH", "sides": [{"component": "Y2", "class": [[1, 1]]}]},
        {"id": "B3", "role": "BRANCH", "sides": [{"component": "Y2", "class": [[1, 1]]}]}
    ],
    "points": [
        {"id": "y", "on": ["C", "A1", "A2", "B1", "B2"]},
        {"id": "z", "on": ["C", "A3", "B3"]}
    ],
    "branch_data": {
        "Y1": [{"curve": "A1", "element": [1, 0, 0]}, {"curve": "A2", "element": [0, 1, 0]}, {"curve": "A3", "element": [0, 1, 0]}],
        "Y2": [{"curve": "B1", "element": [0, 0, 1]}, {"curve": "B2", "element": [1, 1, 1]}, {"curve": "B3", "element": [0, 1, 0]}]
    },
    "double_inertia": {"C": [1, 0, 0]}
}"#;

#[test]
fn chibar_not_a_pullback_gives_index_two() {
    let p = to_problem(&parse_input(INDEX_TWO).unwrap()).unwrap();
    assert!(glue_check(&p).unwrap().passed());
    assert_eq!(global_cartier_index(&p, "y").unwrap(), CartierIndex::Two);
    let cfg = local_config_at(&p, "y").unwrap();
    assert_eq!(classify(&cfg).unwrap().label, "R4.2");
    assert_eq!(iota_index(&cfg).unwrap(), 2);
    assert_eq!(global_cartier_index(&p, "z").unwrap(), CartierIndex::One);
    invariant_report(&p).unwrap();
}

#[test]
fn gluing_needs_an_elementary_two_group() {
    let doc = r#"{"version": "1", "group": [3], "components": [{"id": "Y", "kind": "P2"}], "curves": [],
                  "points": []}"#;
    let p = to_problem(&parse_input(doc).unwrap()).unwrap();
    assert!(glue_check(&p).unwrap_err().is_input_error());
}
