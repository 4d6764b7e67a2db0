use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use straightknot::diagram::{twist_regions, TwistAxis};
use straightknot::families::{
    braid_closure, generalized_spiral, insert_full_twists, template_knot, template_layout,
    template_straight_witness, weaving, weaving_bound, weaving_traversal, FamilyError,
    TemplateSpec,
};
use straightknot::invariants::fingerprint;
use straightknot::{Diagram, Table};

fn name(d: &Diagram) -> String {
    Table::bundled()
        .identify(d)
        .map(|i| i.name)
        .unwrap_or_else(|| "?".into())
}

#[test]
fn braid_closures_identify() {
    assert_eq!(
        name(&braid_closure(&"2: 1 1 1".parse().unwrap()).unwrap()),
        "3_1"
    );
    let w = braid_closure(&"3: 1 -2 1 -2 1 -2 1 -2".parse().unwrap()).unwrap();
    assert_eq!(w.crossing_count(), 8);
    assert_eq!(name(&weaving(3, 4).unwrap()), "8_18");
    assert_eq!(name(&weaving(3, 5).unwrap()), "10_123");
}

#[test]
fn weaving_grid_arc_matches_closed_form() {
    for n in 3..=5 {
        for m in n + 1..=9 {
            let d = match weaving(n, m) {
                Ok(d) => d,
                Err(FamilyError::NotAKnot { .. }) => continue,
                Err(e) => panic!("{e}"),
            };
            let arc = d.max_simple_arc();
            assert_eq!(arc, weaving_traversal(n, m).unwrap(), "W({n},{m})");
            // The simplified closed form is one more than the count it
            // simplifies; both stay below the crossing number.
            assert_eq!(weaving_bound(n, m).unwrap(), arc + 1, "W({n},{m})");
            assert!(weaving_bound(n, m).unwrap() < m * (n - 1));
            assert!(d.straight_decomposable().is_none());
        }
    }
}

#[test]
fn template_base_is_9_32() {
    let k = template_knot(&TemplateSpec::base());
    assert_eq!(name(&k), "9_32");
    let w = template_straight_witness(&TemplateSpec::base());
    assert_eq!(w.n(), 10);
    assert_eq!(fingerprint(&w.to_diagram()), fingerprint(&k));
}

#[test]
fn template_increment_is_alternating_with_matching_witness() {
    let spec = TemplateSpec::new([3, 1, 2, 2, 1, 1]).unwrap();
    let k = template_knot(&spec);
    assert_eq!(k.crossing_count(), 11);
    assert!(k.is_alternating() && k.is_reduced());
    let w = template_straight_witness(&spec);
    assert_eq!(w.n(), 12);
    assert_eq!(fingerprint(&w.to_diagram()), fingerprint(&k));
}

#[test]
fn random_templates() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e3);
    for _ in 0..50 {
        let mut t = [0u32; 6];
        for (i, x) in t.iter_mut().enumerate() {
            let even = i == 2 || i == 3;
            *x = 2 * rng.gen_range(0..3) + if even { 2 } else { 1 };
        }
        let spec = TemplateSpec::new(t).unwrap();
        let k = template_knot(&spec);
        assert_eq!(k.crossing_count(), spec.sum() + 1, "{t:?}");
        assert!(k.is_alternating() && k.is_reduced(), "{t:?}");
        let w = template_straight_witness(&spec);
        assert_eq!(w.n(), spec.sum() + 2);
        assert_eq!(fingerprint(&w.to_diagram()), fingerprint(&k), "{t:?}");
    }
}

#[test]
fn off_strand_twist_gives_11_97_or_11_178() {
    // Not 11_91 under KnotInfo names; see the README and the results chapter.
    let lay = template_layout(&TemplateSpec::base());
    let x = twist_regions(&lay.diagram)
        .into_iter()
        .find(|r| r.crossings == vec![lay.off_strand])
        .expect("off-strand crossing is its own region");
    let b = insert_full_twists(&lay.diagram, &x.clone().with_axis(TwistAxis::B), 1).unwrap();
    let a = insert_full_twists(&lay.diagram, &x.with_axis(TwistAxis::A), 1).unwrap();
    assert_eq!(name(&b), "11_97");
    assert_eq!(name(&a), "11_178");
}

#[test]
fn trefoil_twists_to_5_1() {
    let d = braid_closure(&"2: 1 1 1".parse().unwrap()).unwrap();
    let r = twist_regions(&d).remove(0);
    assert_eq!(name(&insert_full_twists(&d, &r, 1).unwrap()), "5_1");
}

#[test]
fn twist_insertion_properties_on_table_knots() {
    let table = Table::bundled();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let alternating: Vec<_> = table
        .records()
        .iter()
        .filter(|r| (3..=8).contains(&r.diagram.crossing_count()))
        .filter(|r| r.diagram.is_alternating() && r.diagram.is_reduced())
        .collect();
    for rec in alternating.iter().take(40) {
        let d = &rec.diagram;
        let regions = twist_regions(d);
        let r = &regions[rng.gen_range(0..regions.len())];
        let k = rng.gen_range(1..=2);
        let t = insert_full_twists(d, r, k).unwrap();
        assert_eq!(
            t.crossing_count(),
            d.crossing_count() + 2 * k,
            "{}",
            rec.name
        );
        assert!(t.is_alternating() && t.is_reduced(), "{}", rec.name);
        assert_ne!(fingerprint(&t), fingerprint(d), "{}", rec.name);
    }
}

#[test]
fn generalized_spiral_cases() {
    let w = weaving(3, 4).unwrap();
    let g = generalized_spiral(3, &[vec![1, -1], vec![1, -1], vec![1, -1], vec![1, -1]]).unwrap();
    assert!(g.isomorphic(&w, true));
    assert!(matches!(
        generalized_spiral(3, &[vec![1, 1], vec![1, -1], vec![1, -1], vec![1, -1]]),
        Err(FamilyError::NotAlternating)
    ));
    assert!(generalized_spiral(3, &vec![vec![2, -1]; 4]).is_err());

    let mut rows = vec![vec![1, -1]; 4];
    rows[0][0] = 3;
    let g3 = generalized_spiral(3, &rows).unwrap();
    assert_eq!(g3.crossing_count(), 10);
    assert!(g3.is_alternating());
    // The same knot from twisting the corresponding singleton of W(3, 4).
    let twisted: Vec<Diagram> = twist_regions(&w)
        .into_iter()
        .flat_map(|r| [r.clone().with_axis(TwistAxis::A), r.with_axis(TwistAxis::B)])
        .map(|r| insert_full_twists(&w, &r, 1).unwrap())
        .collect();
    assert!(twisted.iter().any(|t| t.isomorphic(&g3, true)));
}
