use straightknot::invariants::fingerprint;
use straightknot::solver::{
    is_perfectly_straight, straight_number, straight_number_from, SolveOptions, SolveResult,
    Status, Target,
};
use straightknot::straight::PruneFlags;
use straightknot::Table;

fn target(name: &str) -> Target {
    Target::from_name(Table::bundled(), name).unwrap()
}

fn solve(name: &str, max: usize) -> SolveResult {
    straight_number(&target(name), &SolveOptions::up_to(max)).unwrap()
}

fn assert_witness_checks(t: &Target, r: &SolveResult) {
    let w = r.witness.as_ref().expect("found results carry a witness");
    assert_eq!(w.n(), r.value);
    let reparsed: straightknot::StraightCode = w.to_string().parse().unwrap();
    assert_eq!(&reparsed, w);
    assert_eq!(fingerprint(&w.to_diagram()), t.fingerprint);
}

#[test]
fn trefoil_is_found_at_three() {
    let r = solve("3_1", 5);
    assert_eq!((r.status, r.value), (Status::Found, 3));
    assert_witness_checks(&target("3_1"), &r);
}

#[test]
fn eight_18_needs_ten() {
    let t = target("8_18");
    let r = straight_number(&t, &SolveOptions::up_to(10)).unwrap();
    assert_eq!((r.status, r.value), (Status::Found, 10));
    let levels: Vec<usize> = r.stats.exhausted.iter().map(|c| c.level).collect();
    assert_eq!(levels, [8, 9]);
    assert_witness_checks(&t, &r);
}

#[test]
fn budget_stops_at_max_with_a_lower_bound() {
    let r = solve("8_18", 9);
    assert_eq!((r.status, r.value), (Status::LowerBoundOnly, 9));
    assert!(r.witness.is_none());
}

#[test]
fn result_is_identical_across_worker_counts() {
    let t = target("9_32");
    let runs: Vec<SolveResult> = [1, 4, 8]
        .iter()
        .map(|&k| {
            let mut o = SolveOptions::up_to(10);
            o.threads = Some(k);
            straight_number(&t, &o).unwrap()
        })
        .collect();
    for r in &runs[1..] {
        assert_eq!(r.status, runs[0].status);
        assert_eq!(r.value, runs[0].value);
        assert_eq!(r.witness, runs[0].witness);
        assert_eq!(r.canonical_witness(), runs[0].canonical_witness());
    }
}

#[test]
fn small_table_knots_are_not_below_their_crossing_number() {
    for rec in Table::bundled()
        .records()
        .iter()
        .filter(|r| r.crossing_number() <= 7)
    {
        let t = target(&rec.name);
        let c = rec.crossing_number();
        if c == 0 {
            assert_eq!(solve(&rec.name, 2).value, 0);
            continue;
        }
        let below = straight_number_from(&t, 0, &SolveOptions::up_to(c - 1)).unwrap();
        assert_eq!(below.status, Status::LowerBoundOnly, "{}", rec.name);
        let r = straight_number(&t, &SolveOptions::up_to(c + 2)).unwrap();
        assert_eq!(r.status, Status::Found, "{}", rec.name);
        assert!(r.value >= c, "{}", rec.name);
        assert_witness_checks(&t, &r);
    }
}

#[test]
fn pruned_and_unpruned_searches_agree() {
    for rec in Table::bundled()
        .records()
        .iter()
        .filter(|r| r.crossing_number() <= 6)
    {
        let t = target(&rec.name);
        let c = rec.crossing_number();
        let mut none = SolveOptions::up_to(c + 2);
        none.prune = PruneFlags::NONE;
        let a = straight_number(&t, &SolveOptions::up_to(c + 2)).unwrap();
        let b = straight_number(&t, &none).unwrap();
        assert_eq!((a.status, a.value), (b.status, b.value), "{}", rec.name);
        assert!(b.stats.codes_examined >= a.stats.codes_examined);
    }
}

#[test]
fn seven_7_is_perfectly_straight_though_its_table_diagram_is_not() {
    let rec = Table::bundled().get("7_7").unwrap();
    assert!(rec.diagram.straight_decomposable().is_none());
    assert!(rec.diagram.max_simple_arc() < 7);
    let p = is_perfectly_straight(&target("7_7"), &SolveOptions::up_to(7)).unwrap();
    assert!(p.perfectly_straight);
    assert_witness_checks(&target("7_7"), &p.result);
}

#[test]
fn eight_18_and_10_123_are_not_perfectly_straight() {
    for name in ["8_18", "10_123"] {
        let p = is_perfectly_straight(&target(name), &SolveOptions::up_to(0)).unwrap();
        assert!(!p.perfectly_straight, "{name}");
        assert_eq!(p.result.status, Status::LowerBoundOnly);
        assert_eq!(p.result.stats.exhausted.len(), 1);
    }
}

#[test]
fn unknown_names_are_rejected() {
    assert!(Target::from_name(Table::bundled(), "12_1").is_err());
}

#[test]
fn result_serializes_with_text_witness() {
    let r = solve("3_1", 3);
    let v: serde_json::Value = serde_json::to_value(&r).unwrap();
    assert_eq!(v["value"], 3);
    assert!(v["witness"].as_str().unwrap().starts_with("3; "));
}

#[test]
fn unknot_diagrams_solve_to_zero() {
    let kink = straightknot::Diagram::from_pd(&[[1, 1, 2, 2]]).unwrap();
    let t = Target::from_diagram(Table::bundled(), &kink);
    assert_eq!(t.lower_bound, 0);
    let r = straight_number(&t, &SolveOptions::up_to(3)).unwrap();
    assert_eq!((r.status, r.value), (Status::Found, 0));
}

#[test]
fn off_strand_twist_of_9_32_needs_two_extra_crossings() {
    use straightknot::diagram::{twist_regions, TwistAxis};
    use straightknot::families::{
        insert_full_twists, template_knot, template_layout, TemplateSpec,
    };
    let spec = TemplateSpec::base();
    let base = template_knot(&spec);
    let x = template_layout(&spec).off_strand;
    let region = twist_regions(&base)
        .into_iter()
        .find(|r| r.crossings == [x])
        .unwrap();
    let k = insert_full_twists(&base, &region.with_axis(TwistAxis::B), 1).unwrap();
    let t = Target::from_diagram(Table::bundled(), &k);
    assert_eq!(t.table_matches, ["11_97"]);
    let r = straight_number(&t, &SolveOptions::up_to(13)).unwrap();
    assert_eq!((r.status, r.value), (Status::Found, 13));
    assert_eq!(
        r.stats
            .exhausted
            .iter()
            .map(|c| c.level)
            .collect::<Vec<_>>(),
        [11, 12]
    );
    assert_witness_checks(&t, &r);
}

#[test]
fn table_11_91_is_perfectly_straight() {
    let p = is_perfectly_straight(&target("11_91"), &SolveOptions::up_to(11)).unwrap();
    assert!(p.perfectly_straight);
    assert_witness_checks(&target("11_91"), &p.result);
}

#[test]
fn crossing_number_settles_fingerprint_collisions() {
    // 8_8 shares its fingerprint with 10_129, which needs 10 crossings.
    let p = is_perfectly_straight(&target("8_8"), &SolveOptions::up_to(0)).unwrap();
    assert!(p.perfectly_straight && p.determined);
    assert_eq!(p.result.candidates, ["8_8"]);
    // 10_25 and 10_56 both have 10 crossings.
    let p = is_perfectly_straight(&target("10_25"), &SolveOptions::up_to(0)).unwrap();
    assert!(!p.determined);
    assert_eq!(p.result.status, Status::Ambiguous);
    assert_eq!(p.result.candidates, ["10_25", "10_56"]);
}
