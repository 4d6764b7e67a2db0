use std::collections::BTreeSet;

use straightknot::families::{braid_closure, template_knot, weaving, TemplateSpec};
use straightknot::flype::{flype_candidates, flype_report, four_cuts, CutKind, FlypeError};
use straightknot::{Diagram, Table};

/// Crossing sets reachable from each crossing without using `cut` edges,
/// by breadth-first search over shared labels.
fn components(d: &Diagram, cut: &[u32]) -> BTreeSet<Vec<usize>> {
    let n = d.crossing_count();
    let mut seen = vec![false; n];
    let mut out = BTreeSet::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < comp.len() {
            let c = comp[i];
            for &l in &d.pd()[c] {
                if cut.contains(&l) {
                    continue;
                }
                for (c2, y) in d.pd().iter().enumerate() {
                    if !seen[c2] && y.contains(&l) {
                        seen[c2] = true;
                        comp.push(c2);
                    }
                }
            }
            i += 1;
        }
        comp.sort_unstable();
        out.insert(comp);
    }
    out
}

#[test]
fn cuts_disconnect_into_the_stored_sides() {
    let table = Table::bundled();
    for rec in table
        .records()
        .iter()
        .filter(|r| (3..=9).contains(&r.diagram.crossing_count()))
    {
        let d = &rec.diagram;
        if !d.is_reduced() {
            continue;
        }
        let cuts = match four_cuts(d) {
            Ok(c) => c,
            Err(FlypeError::NonPrime(..)) => continue,
            Err(e) => panic!("{}: {e}", rec.name),
        };
        for c in &cuts {
            let comps = components(d, &c.edges);
            let expect: BTreeSet<Vec<usize>> = [c.inside.clone(), c.outside.clone()].into();
            assert_eq!(comps, expect, "{} {:?}", rec.name, c.edges);
            assert_eq!(c.inside.len() + c.outside.len(), d.crossing_count());
        }
    }
}

#[test]
fn weaving_grid_has_no_flypes() {
    for (n, m) in [(3, 4), (3, 5), (4, 5), (3, 7), (4, 7), (5, 6)] {
        let d = weaving(n, m).unwrap();
        let cuts = four_cuts(&d).unwrap();
        assert!(
            cuts.iter().all(|c| c.kind == CutKind::SingleCrossing),
            "W({n},{m})"
        );
        assert!(flype_candidates(&d).unwrap().is_empty(), "W({n},{m})");
    }
}

#[test]
fn trefoil_flypes_slide_along_its_twist() {
    let d = braid_closure(&"2: 1 1 1".parse().unwrap()).unwrap();
    let c = flype_candidates(&d).unwrap();
    assert!(!c.is_empty());
    assert!(c.iter().all(|f| f.trivial && f.tangle.len() == 1));
}

#[test]
fn composite_is_rejected() {
    let d = braid_closure(&"3: 1 1 1 2 2 2".parse().unwrap()).unwrap();
    assert!(matches!(four_cuts(&d), Err(FlypeError::NonPrime(..))));
}

#[test]
fn template_report_is_deterministic() {
    let d = template_knot(&TemplateSpec::base());
    let a = serde_json::to_string(&flype_report(&d).unwrap()).unwrap();
    let b = serde_json::to_string(&flype_report(&d).unwrap()).unwrap();
    assert_eq!(a, b);
    assert!(flype_report(&d).unwrap().nontrivial > 0);
}
