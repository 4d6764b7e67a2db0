use std::collections::HashSet;

use straightknot::invariants::jones;
use straightknot::straight::{
    canonicalize, canonicalize_shadow, count_shadows, enumerate_shadows, enumerate_straight,
    PruneFlags, Symmetry,
};
use straightknot::{ShadowCode, Side, StraightCode};

fn permutations(n: u32) -> Vec<Vec<u32>> {
    fn rec(rest: &mut Vec<u32>, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            rec(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut (1..=n).collect(), &mut Vec::new(), &mut out);
    out
}

/// Every valid shadow, by brute force over permutations and side words.
fn all_valid_shadows(n: u32) -> Vec<ShadowCode> {
    let mut out = Vec::new();
    for v in permutations(n) {
        for mask in 0..1u32 << n {
            let a: Vec<Side> = (0..n)
                .map(|k| if mask >> k & 1 == 1 { Side::D } else { Side::U })
                .collect();
            if let Ok(s) = ShadowCode::new(v.clone(), a) {
                out.push(s);
            }
        }
    }
    out
}

/// Orbits by closing under the three generators one at a time.
fn orbit_count(shadows: &[ShadowCode]) -> usize {
    let gens = [
        Symmetry {
            v: true,
            h: false,
            r: false,
        },
        Symmetry {
            v: false,
            h: true,
            r: false,
        },
        Symmetry {
            v: false,
            h: false,
            r: true,
        },
    ];
    let mut seen: HashSet<ShadowCode> = HashSet::new();
    let mut orbits = 0;
    for s in shadows {
        if seen.contains(s) {
            continue;
        }
        orbits += 1;
        let mut stack = vec![s.clone()];
        while let Some(x) = stack.pop() {
            if !seen.insert(x.clone()) {
                continue;
            }
            for g in gens {
                stack.push(g.apply_shadow(&x));
            }
        }
    }
    orbits
}

#[test]
fn canonical_shadow_counts_match_brute_force() {
    for n in 1..=6 {
        let all = all_valid_shadows(n);
        let expect = orbit_count(&all);
        let got = enumerate_shadows(n as usize);
        assert_eq!(got.len(), expect, "n = {n}");
        let keys: HashSet<Vec<u32>> = got.iter().map(|s| s.key()).collect();
        assert_eq!(keys.len(), got.len());
        let mut sorted = got.clone();
        sorted.sort_by_key(|s| s.key());
        assert_eq!(sorted, got, "deterministic key order at n = {n}");
        let canon: HashSet<Vec<u32>> = all.iter().map(|s| canonicalize_shadow(s).key()).collect();
        assert_eq!(canon.len(), expect);
    }
}

#[test]
fn regression_shadow_counts() {
    let counts: Vec<usize> = (1..=8).map(count_shadows).collect();
    assert_eq!(counts, vec![1, 2, 4, 9, 21, 51, 137, 361]);
}

#[test]
fn group_is_abelian_of_order_eight() {
    for s in enumerate_shadows(6) {
        let h = Symmetry {
            v: false,
            h: true,
            r: false,
        };
        let r = Symmetry {
            v: false,
            h: false,
            r: true,
        };
        let hr = h.apply_shadow(&r.apply_shadow(&s));
        let rh = r.apply_shadow(&h.apply_shadow(&s));
        assert_eq!(hr, rh);
        for g in Symmetry::all() {
            assert_eq!(g.apply_shadow(&g.apply_shadow(&s)), s);
            let img = g.apply_shadow(&s);
            ShadowCode::new(img.visits().to_vec(), img.arrivals().to_vec())
                .expect("image is valid");
        }
    }
}

#[test]
fn symmetries_act_on_knots_as_documented() {
    for c in enumerate_straight(5, PruneFlags::NONE)
        .into_iter()
        .step_by(7)
    {
        let d = c.to_diagram();
        let v = jones(&d);
        for g in Symmetry::all() {
            let img = g.apply(&c).to_diagram();
            let w = jones(&img);
            if g.mirrors() {
                assert_eq!(w, v.mirror(), "{c} under {g:?}");
            } else {
                assert_eq!(w, v, "{c} under {g:?}");
            }
        }
        let r = Symmetry {
            v: false,
            h: false,
            r: true,
        }
        .apply(&c)
        .to_diagram();
        assert!(
            r.isomorphic(&d, true),
            "role swap should give the same diagram: {c}"
        );
    }
}

#[test]
fn every_code_is_a_valid_straight_diagram() {
    for n in 1..=6 {
        for c in enumerate_straight(n, PruneFlags::NONE) {
            let d = c.to_diagram();
            assert_eq!(d.crossing_count(), n);
            let cut = d.straight_decomposable().expect("decomposable");
            assert_eq!(d.max_simple_arc(), n);
            let back = StraightCode::from_diagram(&d, &cut).unwrap();
            assert_eq!(back.to_diagram().crossing_count(), n);
            assert!(d.to_gauss().to_diagram().unwrap().isomorphic(&d, false));
            let re: StraightCode = c.to_string().parse().unwrap();
            assert_eq!(re, c);
        }
    }
}

#[test]
fn canonicalize_is_idempotent_and_orbit_invariant() {
    for c in enumerate_straight(4, PruneFlags::NONE) {
        let k = canonicalize(&c);
        assert_eq!(canonicalize(&k), k);
        for g in Symmetry::all() {
            assert_eq!(canonicalize(&g.apply(&c)), k);
        }
    }
}

#[test]
fn r1_prune_leaves_no_nugatory_crossings_at_three() {
    let p = PruneFlags {
        r1: true,
        r2: false,
        nugatory: false,
    };
    for c in enumerate_straight(3, p) {
        assert!(c.to_diagram().is_reduced(), "{c}");
    }
}
