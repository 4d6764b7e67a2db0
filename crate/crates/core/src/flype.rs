//! Conway circles (4-edge cuts of the shadow) and flype configurations.
//!
//! A cut is found as a simple 4-cycle of the dual graph: faces joined by
//! the edges they share, with parallel edges kept apart. In a connected
//! plane graph these cycles are exactly the minimal edge cuts.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::diagram::{twist_regions, Diagram};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FlypeError {
    #[error("edges {0} and {1} form a 2-edge cut: the diagram is composite")]
    NonPrime(u32, u32),
    #[error("diagram has a nugatory crossing")]
    NotReduced,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CutKind {
    /// One side has no crossings.
    Trivial,
    /// One side is a single crossing.
    SingleCrossing,
    /// Both sides have at least two crossings.
    TangleTangle,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FourCut {
    /// Cut edge labels, increasing.
    pub edges: [u32; 4],
    /// The side not containing crossing 0, increasing.
    pub inside: Vec<usize>,
    /// The side containing crossing 0, increasing.
    pub outside: Vec<usize>,
    pub kind: CutKind,
}

/// One flype configuration: the flyper `x` sits next to the tangle `tangle`,
/// sharing two edges with it, and `rest` holds the remaining crossings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlypeCandidate {
    pub flyper: usize,
    pub tangle: Vec<usize>,
    pub rest: Vec<usize>,
    /// The cut around `tangle`.
    pub cut: FourCut,
    /// The flyper and the tangle lie in one twist region, so the flype only
    /// slides a crossing along its own twist and returns the same diagram.
    pub trivial: bool,
}

/// Flype cycle of one flyper: the tangles met going around from the flyper.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlypeCycle {
    pub flyper: usize,
    pub tangles: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FlypeReport {
    pub crossings: usize,
    pub cuts: Vec<FourCut>,
    pub candidates: Vec<FlypeCandidate>,
    pub nontrivial: usize,
    pub cycles: Vec<FlypeCycle>,
}

/// `(label, face, face)` for every edge: the faces on its two sides.
fn dual_edges(d: &Diagram) -> Vec<(u32, usize, usize)> {
    let faces = d.faces();
    let mut out = Vec::new();
    for (c, x) in d.pd().iter().enumerate() {
        for (i, &l) in x.iter().enumerate() {
            // Each label appears twice; take the first occurrence.
            let first = d
                .pd()
                .iter()
                .enumerate()
                .flat_map(|(c2, y)| y.iter().enumerate().map(move |(j, &m)| (c2, j, m)))
                .find(|&(_, _, m)| m == l)
                .unwrap();
            if (first.0, first.1) != (c, i) {
                continue;
            }
            let f = faces.corner_face(c, i as u8);
            let g = faces.corner_face(c, ((i + 3) % 4) as u8);
            out.push((l, f, g));
        }
    }
    out.sort_unstable();
    out
}

/// Components of the shadow after deleting `cut`, as crossing sets.
pub fn sides_after_cut(d: &Diagram, cut: &[u32]) -> Vec<Vec<usize>> {
    let n = d.crossing_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut ends: Vec<Vec<usize>> = vec![Vec::new(); 2 * n + 1];
    for (c, x) in d.pd().iter().enumerate() {
        for &l in x {
            ends[l as usize].push(c);
        }
    }
    for (l, e) in ends.iter().enumerate().skip(1) {
        if cut.contains(&(l as u32)) {
            continue;
        }
        let (a, b) = (find(&mut parent, e[0]), find(&mut parent, e[1]));
        parent[a] = b;
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for c in 0..n {
        let r = find(&mut parent, c);
        groups.entry(r).or_default().push(c);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort();
    out
}

fn check_prime(d: &Diagram, dual: &[(u32, usize, usize)]) -> Result<(), FlypeError> {
    if !d.is_reduced() {
        return Err(FlypeError::NotReduced);
    }
    for (i, a) in dual.iter().enumerate() {
        for b in &dual[i + 1..] {
            let same = (a.1 == b.1 && a.2 == b.2) || (a.1 == b.2 && a.2 == b.1);
            if same && a.1 != a.2 {
                return Err(FlypeError::NonPrime(a.0, b.0));
            }
        }
    }
    Ok(())
}

/// Every 4-edge cut, sorted by edge labels.
pub fn four_cuts(d: &Diagram) -> Result<Vec<FourCut>, FlypeError> {
    if d.crossing_count() == 0 {
        return Ok(Vec::new());
    }
    let dual = dual_edges(d);
    check_prime(d, &dual)?;
    let nf = d.faces().count();
    let mut adj: Vec<Vec<(usize, u32)>> = vec![Vec::new(); nf];
    for &(l, f, g) in &dual {
        if f != g {
            adj[f].push((g, l));
            adj[g].push((f, l));
        }
    }
    let mut found: BTreeSet<[u32; 4]> = BTreeSet::new();
    // Cycles f0 f1 f2 f3 with f0 the smallest face.
    for f0 in 0..nf {
        for &(f1, e1) in &adj[f0] {
            if f1 <= f0 {
                continue;
            }
            for &(f2, e2) in &adj[f1] {
                if f2 <= f0 || f2 == f1 || e2 == e1 {
                    continue;
                }
                for &(f3, e3) in &adj[f2] {
                    if f3 <= f0 || f3 == f1 || f3 == f2 {
                        continue;
                    }
                    for &(back, e4) in &adj[f3] {
                        if back != f0 {
                            continue;
                        }
                        let mut es = [e1, e2, e3, e4];
                        es.sort_unstable();
                        if es.windows(2).all(|w| w[0] != w[1]) {
                            found.insert(es);
                        }
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    for edges in found {
        let sides = sides_after_cut(d, &edges);
        assert_eq!(sides.len(), 2, "a simple dual cycle is a minimal cut");
        let (outside, inside) = if sides[0].contains(&0) {
            (sides[0].clone(), sides[1].clone())
        } else {
            (sides[1].clone(), sides[0].clone())
        };
        let small = inside.len().min(outside.len());
        let kind = match small {
            0 => CutKind::Trivial,
            1 => CutKind::SingleCrossing,
            _ => CutKind::TangleTangle,
        };
        out.push(FourCut {
            edges,
            inside,
            outside,
            kind,
        });
    }
    Ok(out)
}

/// Number of edges joining crossing `x` to the set `s`.
fn edges_between(d: &Diagram, x: usize, s: &[usize]) -> usize {
    let pd = d.pd();
    pd[x]
        .iter()
        .filter(|l| s.iter().any(|&c| c != x && pd[c].contains(l)))
        .count()
}

/// All flype configurations: a side `F` of a 4-cut, a crossing `x` outside
/// it joined to `F` by exactly two edges, and at least one crossing left
/// over.
pub fn flype_candidates(d: &Diagram) -> Result<Vec<FlypeCandidate>, FlypeError> {
    let cuts = four_cuts(d)?;
    let n = d.crossing_count();
    let region_of = {
        let mut r = vec![0; n];
        for (i, reg) in twist_regions(d).iter().enumerate() {
            for &c in &reg.crossings {
                r[c] = i;
            }
        }
        r
    };
    let mut out = Vec::new();
    for cut in &cuts {
        for tangle in [&cut.inside, &cut.outside] {
            if tangle.is_empty() {
                continue;
            }
            for x in 0..n {
                if tangle.contains(&x) || edges_between(d, x, tangle) != 2 {
                    continue;
                }
                let rest: Vec<usize> = (0..n).filter(|c| *c != x && !tangle.contains(c)).collect();
                if rest.is_empty() {
                    continue;
                }
                let trivial = tangle.iter().all(|&c| region_of[c] == region_of[x]);
                out.push(FlypeCandidate {
                    flyper: x,
                    tangle: tangle.clone(),
                    rest,
                    cut: cut.clone(),
                    trivial,
                });
            }
        }
    }
    out.sort_by(|a, b| (a.flyper, &a.tangle).cmp(&(b.flyper, &b.tangle)));
    out.dedup_by(|a, b| a.flyper == b.flyper && a.tangle == b.tangle);
    Ok(out)
}

/// For each flyper, the nested tangles next to it, split into the minimal
/// pieces met in order.
pub fn flype_cycles(candidates: &[FlypeCandidate]) -> Vec<FlypeCycle> {
    let mut flypers: Vec<usize> = candidates.iter().map(|c| c.flyper).collect();
    flypers.dedup();
    flypers
        .into_iter()
        .map(|x| {
            let mut sets: Vec<&Vec<usize>> = candidates
                .iter()
                .filter(|c| c.flyper == x)
                .map(|c| &c.tangle)
                .collect();
            sets.sort_by_key(|s| (s.len(), (*s).clone()));
            let mut chain: Vec<&Vec<usize>> = Vec::new();
            for s in sets {
                if chain
                    .last()
                    .is_none_or(|last| last.iter().all(|c| s.contains(c)) && last.len() < s.len())
                {
                    chain.push(s);
                }
            }
            let mut tangles = Vec::new();
            let mut prev: Vec<usize> = Vec::new();
            for s in chain {
                tangles.push(s.iter().copied().filter(|c| !prev.contains(c)).collect());
                prev = s.clone();
            }
            FlypeCycle { flyper: x, tangles }
        })
        .collect()
}

pub fn flype_report(d: &Diagram) -> Result<FlypeReport, FlypeError> {
    let cuts = four_cuts(d)?;
    let candidates = flype_candidates(d)?;
    let nontrivial = candidates.iter().filter(|c| !c.trivial).count();
    let cycles = flype_cycles(&candidates);
    Ok(FlypeReport {
        crossings: d.crossing_count(),
        cuts,
        candidates,
        nontrivial,
        cycles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> Diagram {
        Diagram::from_pd(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap()
    }

    #[test]
    fn trefoil_cuts_split_one_and_two() {
        let cuts = four_cuts(&trefoil()).unwrap();
        assert_eq!(cuts.len(), 3);
        for c in &cuts {
            assert_eq!(c.kind, CutKind::SingleCrossing);
            assert_eq!(c.inside.len() + c.outside.len(), 3);
        }
    }

    #[test]
    fn trefoil_flypes_are_all_trivial() {
        let cands = flype_candidates(&trefoil()).unwrap();
        assert!(!cands.is_empty());
        assert!(cands.iter().all(|c| c.trivial));
    }

    #[test]
    fn nugatory_is_rejected() {
        let kink = Diagram::from_pd(&[[1, 1, 2, 2]]).unwrap();
        assert_eq!(four_cuts(&kink), Err(FlypeError::NotReduced));
    }
}
