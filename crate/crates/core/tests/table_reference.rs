//! Every bundled record against independently published invariants.

use serde::Deserialize;
use straightknot::diagram::Diagram;
use straightknot::invariants::{
    alexander, canonical_alexander, determinant_via_alexander, determinant_via_goeritz, goeritz,
    jones, matrix_signature, signature,
};
use straightknot::{LaurentPolynomial, Table};

#[derive(Deserialize)]
struct Reference {
    name: String,
    jones: String,
    alexander: String,
    signature: i32,
    determinant: u64,
    alternating: bool,
}

fn reference() -> Vec<Reference> {
    include_str!("data/knotinfo_reference.jsonl")
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn table_invariants_match_published_values() {
    let table = Table::bundled();
    let refs = reference();
    assert_eq!(table.len(), refs.len());
    let mut bad = Vec::new();
    for (rec, r) in table.records().iter().zip(&refs) {
        assert_eq!(rec.name, r.name);
        let d = &rec.diagram;
        let v: LaurentPolynomial = r.jones.parse().unwrap();
        let a: LaurentPolynomial = r.alexander.parse().unwrap();
        if jones(d) != v {
            bad.push(format!("{} jones", r.name));
        }
        if alexander(d) != canonical_alexander(&a) && alexander(d) != -canonical_alexander(&a) {
            bad.push(format!("{} alexander", r.name));
        }
        if signature(d) != r.signature {
            bad.push(format!(
                "{} signature {} vs {}",
                r.name,
                signature(d),
                r.signature
            ));
        }
        if determinant_via_alexander(d) != r.determinant
            || determinant_via_goeritz(d) != r.determinant
        {
            bad.push(format!("{} determinant", r.name));
        }
        if d.is_alternating() && !r.alternating {
            bad.push(format!("{} alternating", r.name));
        }
    }
    assert!(
        bad.is_empty(),
        "{} mismatches: {:?}",
        bad.len(),
        &bad[..bad.len().min(20)]
    );
}

#[test]
fn alexander_normalization_and_signature_shading_independence() {
    for rec in Table::bundled().records() {
        let d: &Diagram = &rec.diagram;
        let a = alexander(d);
        assert_eq!(a, a.mirror(), "{} not palindromic", rec.name);
        assert_eq!(a.eval_unit_or_poly(1), 1, "{}", rec.name);
        if d.crossing_count() == 0 {
            continue;
        }
        let g0 = goeritz(d, 0);
        let g1 = goeritz(d, 1);
        assert_eq!(
            matrix_signature(&g0.matrix) - g0.correction,
            matrix_signature(&g1.matrix) - g1.correction,
            "{}",
            rec.name
        );
        assert_eq!(signature(&d.mirror()), -signature(d));
        assert_eq!(jones(&d.mirror()), jones(d).mirror());
    }
}
