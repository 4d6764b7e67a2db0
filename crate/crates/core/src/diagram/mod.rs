//! Knot diagrams as planar-diagram (PD) codes.
//!
//! A crossing is a 4-tuple of edge labels listed counterclockwise, starting
//! at the incoming under-edge. [`Diagram::from_pd`] validates a raw code and
//! normalizes its labels so that they increase by one along the orientation;
//! every other operation in the crate works on that normalized form.
//!
//! Planarity is checked twice, once by tracing faces of the rotation system
//! (`V − E + F = 2`) and once by the interlacement criterion on the Gauss
//! word. A diagram that reaches the rest of the crate has passed both.

mod embed;
mod faces;
mod gauss;
mod twist;

pub use embed::Embedding;
pub use faces::{Corner, Faces};
pub use gauss::{gauss_word_realizable, GaussCode, GaussToken};
pub use twist::{twist_regions, TwistAxis, TwistRegion};

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("edge label {0} does not appear exactly twice")]
    EdgeDegree(u32),
    #[error("edge labels must be positive integers")]
    BadLabel,
    #[error("diagram closes up into more than one component")]
    MultiComponent,
    #[error("under-strand orientations are inconsistent with a single traversal")]
    Orientation,
    #[error("crossing data is not realizable in the plane")]
    NonPlanar,
    #[error("parse error: {0}")]
    Parse(String),
}

/// One passage of the knot through a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pass {
    pub crossing: usize,
    pub over: bool,
    /// PD slot (0..4) through which the knot enters the crossing.
    pub slot_in: u8,
}

/// A validated knot diagram.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    pd: Vec<[u32; 4]>,
    passes: Vec<Pass>,
    over_slot: Vec<u8>,
}

/// Two cut points on the knot circle splitting it into a straight strand
/// and a wandering arc, each meeting every crossing once.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CutPair {
    /// Index of the first pass of the strand; the strand covers passes
    /// `strand_start .. strand_start + n` cyclically.
    pub strand_start: usize,
    /// Edge label on which the strand begins (the first cut point).
    pub first_edge: u32,
    /// Edge label on which the wandering arc begins (the second cut point).
    pub second_edge: u32,
}

impl Diagram {
    /// The 0-crossing unknot.
    pub fn unknot() -> Self {
        Diagram {
            pd: Vec::new(),
            passes: Vec::new(),
            over_slot: Vec::new(),
        }
    }

    /// Validates a raw PD code and normalizes its labels along the
    /// orientation, starting from the edge with the smallest input label.
    pub fn from_pd(raw: &[[u32; 4]]) -> Result<Self, DiagramError> {
        let n = raw.len();
        if n == 0 {
            return Ok(Self::unknot());
        }
        let mut slots: HashMap<u32, Vec<(usize, u8)>> = HashMap::new();
        for (c, x) in raw.iter().enumerate() {
            for (i, &l) in x.iter().enumerate() {
                if l == 0 {
                    return Err(DiagramError::BadLabel);
                }
                slots.entry(l).or_default().push((c, i as u8));
            }
        }
        let mut labels: Vec<u32> = slots.keys().copied().collect();
        labels.sort_unstable();
        for &l in &labels {
            if slots[&l].len() != 2 {
                return Err(DiagramError::EdgeDegree(l));
            }
        }
        let other_end = |c: usize, i: u8| -> (usize, u8) {
            let v = &slots[&raw[c][i as usize]];
            if v[0] == (c, i) {
                v[1]
            } else {
                v[0]
            }
        };

        // Walk the knot starting from the under-exit of crossing 0.
        let start = (0usize, 2u8);
        let mut out = start;
        let mut walk: Vec<(Pass, u32)> = Vec::with_capacity(2 * n);
        loop {
            let label = raw[out.0][out.1 as usize];
            let (c, j) = other_end(out.0, out.1);
            if j == 2 {
                return Err(DiagramError::Orientation);
            }
            let pass = Pass {
                crossing: c,
                over: j % 2 == 1,
                slot_in: j,
            };
            walk.push((pass, label));
            out = (c, (j + 2) % 4);
            if out == start {
                break;
            }
            if walk.len() > 2 * n {
                return Err(DiagramError::Orientation);
            }
        }
        if walk.len() != 2 * n {
            return Err(DiagramError::MultiComponent);
        }
        let mut seen = vec![[false; 2]; n];
        for (p, _) in &walk {
            let k = p.over as usize;
            if seen[p.crossing][k] {
                return Err(DiagramError::Orientation);
            }
            seen[p.crossing][k] = true;
        }

        // Rotate so the smallest input label enters pass 0.
        let k0 = (0..walk.len()).min_by_key(|&k| walk[k].1).unwrap();
        let passes: Vec<Pass> = (0..2 * n).map(|k| walk[(k + k0) % (2 * n)].0).collect();
        let d = Self::from_passes(n, passes);

        let faces = Faces::new(&d);
        if faces.count() != n + 2 {
            return Err(DiagramError::NonPlanar);
        }
        if !gauss_word_realizable(&d.gauss_word()) {
            return Err(DiagramError::NonPlanar);
        }
        Ok(d)
    }

    /// Rebuilds the normalized PD from a pass sequence.
    fn from_passes(n: usize, passes: Vec<Pass>) -> Self {
        let m = 2 * n as u32;
        let mut pd = vec![[0u32; 4]; n];
        let mut over_slot = vec![0u8; n];
        for (k, p) in passes.iter().enumerate() {
            if p.over {
                over_slot[p.crossing] = p.slot_in;
            }
            let lin = k as u32 + 1;
            let lout = if lin == m { 1 } else { lin + 1 };
            let s = p.slot_in as usize;
            pd[p.crossing][s] = lin;
            pd[p.crossing][(s + 2) % 4] = lout;
        }
        Diagram {
            pd,
            passes,
            over_slot,
        }
    }

    /// Parses the PD text format `[[a,b,c,d],...]` and validates.
    pub fn parse_pd(text: &str) -> Result<Self, DiagramError> {
        Self::from_pd(&parse_pd_tuples(text)?)
    }

    pub fn pd(&self) -> &[[u32; 4]] {
        &self.pd
    }

    /// PD text, `[[a,b,c,d],...]`.
    pub fn pd_string(&self) -> String {
        let xs: Vec<String> = self
            .pd
            .iter()
            .map(|x| format!("[{},{},{},{}]", x[0], x[1], x[2], x[3]))
            .collect();
        format!("[{}]", xs.join(","))
    }

    pub fn crossing_count(&self) -> usize {
        self.pd.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.pd.len()
    }

    /// Passes in traversal order. Pass `k` enters through edge `k + 1`.
    pub fn passes(&self) -> &[Pass] {
        &self.passes
    }

    /// `(under pass index, over pass index)` for each crossing.
    pub fn pass_indices(&self) -> Vec<(usize, usize)> {
        let mut out = vec![(usize::MAX, usize::MAX); self.crossing_count()];
        for (k, p) in self.passes.iter().enumerate() {
            if p.over {
                out[p.crossing].1 = k;
            } else {
                out[p.crossing].0 = k;
            }
        }
        out
    }

    /// Slot through which the over strand enters crossing `c` (1 or 3).
    pub fn over_in_slot(&self, c: usize) -> u8 {
        self.over_slot[c]
    }

    /// +1 when the over strand runs from slot 3 to slot 1.
    pub fn sign(&self, c: usize) -> i8 {
        if self.over_in_slot(c) == 3 {
            1
        } else {
            -1
        }
    }

    pub fn signs(&self) -> Vec<i8> {
        (0..self.crossing_count()).map(|c| self.sign(c)).collect()
    }

    pub fn writhe(&self) -> i32 {
        self.signs().iter().map(|&s| s as i32).sum()
    }

    /// Unsigned Gauss word: crossing ids in traversal order.
    pub fn gauss_word(&self) -> Vec<usize> {
        self.passes.iter().map(|p| p.crossing).collect()
    }

    pub fn to_gauss(&self) -> GaussCode {
        GaussCode::from_diagram(self)
    }

    pub fn from_gauss(g: &GaussCode) -> Result<Self, DiagramError> {
        g.to_diagram()
    }

    /// Swaps over and under at every crossing.
    pub fn mirror(&self) -> Self {
        let raw: Vec<[u32; 4]> = self
            .pd
            .iter()
            .enumerate()
            .map(|(c, x)| {
                let j = self.over_in_slot(c) as usize;
                [x[j], x[(j + 1) % 4], x[(j + 2) % 4], x[(j + 3) % 4]]
            })
            .collect();
        Self::from_pd(&raw).expect("mirror of a valid diagram is valid")
    }

    /// Reverses the orientation.
    pub fn reverse(&self) -> Self {
        let m = self.edge_count() as u32;
        let raw: Vec<[u32; 4]> = self
            .pd
            .iter()
            .map(|x| {
                let r = |l: u32| m + 1 - l;
                // The old under-exit (slot 2) becomes the new under-entry.
                [r(x[2]), r(x[3]), r(x[0]), r(x[1])]
            })
            .collect();
        Self::from_pd(&raw).expect("reverse of a valid diagram is valid")
    }

    /// The same diagram with labels rotated so that traversal starts at pass
    /// `start`.
    pub fn rotate_start(&self, start: usize) -> Self {
        let n = self.crossing_count();
        if n == 0 {
            return self.clone();
        }
        let passes = (0..2 * n)
            .map(|k| self.passes[(k + start) % (2 * n)])
            .collect();
        Self::from_passes(n, passes)
    }

    /// A relabeling-invariant key: equal keys mean the diagrams are the same
    /// oriented diagram on the oriented sphere.
    pub fn canonical_key(&self) -> Vec<[u32; 4]> {
        let n = self.crossing_count();
        (0..2 * n.max(1))
            .map(|s| {
                let mut pd = self.rotate_start(s).pd;
                pd.sort_unstable();
                pd
            })
            .min()
            .unwrap_or_default()
    }

    /// Isomorphic as oriented diagrams on the sphere, optionally allowing
    /// orientation reversal.
    pub fn isomorphic(&self, other: &Self, allow_reverse: bool) -> bool {
        if self.crossing_count() != other.crossing_count() {
            return false;
        }
        let k = self.canonical_key();
        k == other.canonical_key() || (allow_reverse && k == other.reverse().canonical_key())
    }

    /// The rotation system of this diagram.
    pub fn embedding(&self) -> Embedding {
        Embedding::from_diagram(self)
    }

    pub fn faces(&self) -> Faces {
        Faces::new(self)
    }

    /// Over/under strictly alternates along the traversal.
    pub fn is_alternating(&self) -> bool {
        let m = self.passes.len();
        (0..m).all(|k| self.passes[k].over != self.passes[(k + 1) % m].over)
    }

    /// True iff no crossing is nugatory, i.e. no face meets a crossing in two
    /// opposite corners.
    pub fn is_reduced(&self) -> bool {
        self.nugatory_crossings().is_empty()
    }

    pub fn nugatory_crossings(&self) -> Vec<usize> {
        let f = self.faces();
        (0..self.crossing_count())
            .filter(|&c| {
                f.corner_face(c, 0) == f.corner_face(c, 2)
                    || f.corner_face(c, 1) == f.corner_face(c, 3)
            })
            .collect()
    }

    /// Exhaustive search over cut pairs for a decomposition of the knot
    /// circle into two arcs that each meet every crossing exactly once.
    pub fn straight_decomposable(&self) -> Option<CutPair> {
        let n = self.crossing_count();
        if n == 0 {
            return Some(CutPair {
                strand_start: 0,
                first_edge: 0,
                second_edge: 0,
            });
        }
        let m = 2 * n;
        for a in 0..m {
            {
                let mut seen = vec![false; n];
                let ok = (0..n).all(|i| {
                    let c = self.passes[(a + i) % m].crossing;
                    !std::mem::replace(&mut seen[c], true)
                });
                if ok {
                    return Some(CutPair {
                        strand_start: a,
                        first_edge: a as u32 + 1,
                        second_edge: ((a + n) % m) as u32 + 1,
                    });
                }
            }
        }
        None
    }

    /// Longest arc of the knot circle meeting no crossing twice, counted in
    /// crossings.
    pub fn max_simple_arc(&self) -> usize {
        let n = self.crossing_count();
        let m = 2 * n;
        let mut best = 0;
        for start in 0..m {
            for dir in [1isize, -1] {
                let mut seen = vec![false; n];
                let mut len = 0;
                let mut k = start as isize;
                while len < n {
                    let c = self.passes[k.rem_euclid(m as isize) as usize].crossing;
                    if seen[c] {
                        break;
                    }
                    seen[c] = true;
                    len += 1;
                    k += dir;
                }
                best = best.max(len);
            }
        }
        best
    }
}

/// Parses `[[a,b,c,d],...]` into tuples without validating the diagram.
pub fn parse_pd_tuples(text: &str) -> Result<Vec<[u32; 4]>, DiagramError> {
    let t = text.trim();
    let t = t.strip_prefix("PD").unwrap_or(t);
    let rows: Vec<Vec<i64>> =
        serde_json::from_str(t).map_err(|e| DiagramError::Parse(e.to_string()))?;
    rows.into_iter()
        .enumerate()
        .map(|(i, r)| {
            if r.len() != 4 {
                return Err(DiagramError::Parse(format!(
                    "crossing {} has {} labels, expected 4",
                    i + 1,
                    r.len()
                )));
            }
            let mut x = [0u32; 4];
            for (k, &v) in r.iter().enumerate() {
                if v <= 0 || v > u32::MAX as i64 {
                    return Err(DiagramError::BadLabel);
                }
                x[k] = v as u32;
            }
            Ok(x)
        })
        .collect()
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram({})", self.pd_string())
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pd_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const TREFOIL: [[u32; 4]; 3] = [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]];

    #[test]
    fn trefoil_validates() {
        let d = Diagram::from_pd(&TREFOIL).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.pd(), &TREFOIL);
        assert!(d.is_alternating());
        assert!(d.is_reduced());
        assert_eq!(d.writhe().abs(), 3);
        assert_eq!(d.max_simple_arc(), 3);
        assert!(d.straight_decomposable().is_some());
    }

    #[test]
    fn trefoil_euler_characteristic_by_hand() {
        // Independent of Faces: count faces by walking corners with an
        // explicit edge-incidence table.
        let pd = TREFOIL;
        let mut ends: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
        for (c, x) in pd.iter().enumerate() {
            for (i, &l) in x.iter().enumerate() {
                ends.entry(l).or_default().push((c, i));
            }
        }
        let mut visited = HashMap::new();
        let mut faces = 0;
        for c in 0..3 {
            for i in 0..4 {
                if visited.contains_key(&(c, i)) {
                    continue;
                }
                faces += 1;
                let mut cur = (c, i);
                while visited.insert(cur, faces).is_none() {
                    let l = pd[cur.0][cur.1];
                    let e = &ends[&l];
                    let o = if e[0] == cur { e[1] } else { e[0] };
                    cur = (o.0, (o.1 + 1) % 4);
                }
            }
        }
        let (v, e) = (3i32, 6i32);
        assert_eq!(v - e + faces, 2);
    }

    #[test]
    fn empty_is_unknot() {
        let d = Diagram::from_pd(&[]).unwrap();
        assert_eq!(d.crossing_count(), 0);
        assert!(d.straight_decomposable().is_some());
        assert_eq!(d.max_simple_arc(), 0);
        assert!(d.is_reduced());
    }

    #[test]
    fn edge_degree_errors() {
        let e = Diagram::from_pd(&[[1, 2, 3, 4], [1, 2, 3, 5]]).unwrap_err();
        assert_eq!(e, DiagramError::EdgeDegree(4));
    }

    #[test]
    fn two_component_closure_rejected() {
        // Hopf link.
        let e = Diagram::from_pd(&[[4, 1, 3, 2], [2, 3, 1, 4]]).unwrap_err();
        assert!(matches!(
            e,
            DiagramError::MultiComponent | DiagramError::Orientation
        ));
    }

    #[test]
    fn kinks_are_not_reduced() {
        for pd in [[[1, 1, 2, 2]], [[1, 2, 2, 1]]] {
            let d = Diagram::from_pd(&pd).unwrap();
            assert!(!d.is_reduced());
            assert_eq!(d.faces().count(), 3);
            assert_eq!(d.max_simple_arc(), 1);
        }
        assert_eq!(Diagram::from_pd(&[[1, 1, 2, 2]]).unwrap().writhe(), 1);
        assert_eq!(Diagram::from_pd(&[[1, 2, 2, 1]]).unwrap().writhe(), -1);
    }

    #[test]
    fn nonplanar_rotation_rejected() {
        // Trefoil with one crossing's cyclic order reversed.
        let bad = [[1, 5, 2, 4], [3, 6, 4, 1], [5, 2, 6, 3]];
        assert_eq!(Diagram::from_pd(&bad).unwrap_err(), DiagramError::NonPlanar);
    }

    #[test]
    fn relabeling_normalizes() {
        let shifted: Vec<[u32; 4]> = TREFOIL.iter().map(|x| x.map(|l| l + 10)).collect();
        let d = Diagram::from_pd(&shifted).unwrap();
        assert_eq!(d.pd(), &TREFOIL);
    }

    #[test]
    fn mirror_flips_signs_and_reverse_keeps_them() {
        let d = Diagram::from_pd(&TREFOIL).unwrap();
        assert_eq!(d.mirror().writhe(), -d.writhe());
        assert_eq!(d.reverse().writhe(), d.writhe());
        assert!(d.mirror().mirror().isomorphic(&d, false));
        assert!(d.reverse().isomorphic(&d, true));
    }

    #[test]
    fn parse_text_format() {
        let d = Diagram::parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]").unwrap();
        assert_eq!(d.pd_string(), "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]");
        assert!(matches!(
            Diagram::parse_pd("[[1,2,3]]"),
            Err(DiagramError::Parse(_))
        ));
    }
}
