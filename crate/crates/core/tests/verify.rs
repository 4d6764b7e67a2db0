use straightknot::families::TemplateSpec;
use straightknot::solver::SolveOptions;
use straightknot::verify::{conjecture_experiment, verify_template, verify_weaving, VerifyError};
use straightknot::Table;

#[test]
fn weaving_reports_on_the_stated_examples() {
    let r = verify_weaving(3, 4).unwrap();
    assert_eq!((r.crossings, r.max_simple_arc, r.closed_form), (8, 6, 7));
    assert!(r.not_perfectly_straight);
    assert_eq!(r.flype_candidates, 0);
    let r = verify_weaving(4, 5).unwrap();
    assert_eq!((r.crossings, r.closed_form), (15, 10));
    assert!(r.max_simple_arc < 15);
}

#[test]
fn weaving_outside_the_hypotheses_is_a_domain_error() {
    for (n, m) in [(3, 3), (3, 6), (2, 5), (4, 4)] {
        assert!(
            matches!(verify_weaving(n, m), Err(VerifyError::Family(_))),
            "({n},{m})"
        );
    }
}

#[test]
fn template_base_case_certifies_ten() {
    let r = verify_template(&TemplateSpec::base(), &SolveOptions::up_to(0)).unwrap();
    assert!(r.level_below_exhausted);
    assert!(r.witness_matches);
    assert_eq!(r.straight_number, Some(10));
    assert_eq!(r.name.as_deref(), Some("9_32"));
    assert!(r.assumptions[0].contains("assumption"));
}

#[test]
fn invalid_template_specs_are_rejected() {
    assert!("1,1,2,2,1,2".parse::<TemplateSpec>().is_err());
    assert!("0,1,2,2,1,1".parse::<TemplateSpec>().is_err());
    assert!("1,1,2,2,1".parse::<TemplateSpec>().is_err());
}

#[test]
fn conjecture_rows_cover_every_region() {
    let d = &Table::bundled().get("9_32").unwrap().diagram;
    let rows = conjecture_experiment(d, 1, &SolveOptions::up_to(0)).unwrap();
    assert_eq!(rows.len(), 12);
    assert!(rows
        .iter()
        .all(|r| r.crossings == 11 && r.holds && r.found_at.is_none()));
}
