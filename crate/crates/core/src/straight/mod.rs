//! Straight codes: a diagram drawn as a horizontal strand carrying every
//! crossing, plus a wandering arc that crosses the strand once at each
//! position.
//!
//! Cutting the sphere along the strand leaves a disk whose boundary meets
//! the strand twice, once from above and once from below. Reading around
//! it gives the points
//!
//! ```text
//! 0, 1⁺, 2⁺, …, n⁺, n+1, n⁻, …, 2⁻, 1⁻
//! ```
//!
//! where `p⁺`/`p⁻` are position `p` seen from above/below and `0`, `n+1`
//! are the strand's ends. The wandering arc leaves the right end, crosses
//! the strand at `v₁, …, vₙ` and returns to the left end. Between crossings
//! it is a chord of the disk, so a code is valid exactly when its `n + 1`
//! chords do not cross.
//!
//! A visit that arrives from above at `p` enters at `p⁺` and leaves from
//! `p⁻`. The text format records, for each connector, the side at which it
//! meets the strand at its crossing end: the arrival side for connectors
//! `0..n`, and the departure side for the last connector (which is
//! therefore determined by the one before it).

mod enumerate;
mod fast;
mod symmetry;

pub use enumerate::{
    count_shadows, enumerate_shadows, enumerate_shadows_pruned, enumerate_straight,
    for_each_straight, hugging_pairs, PruneFlags,
};
pub use fast::{bracket_transfer, code_determinant, MaskScanner};
pub use symmetry::{canonicalize, canonicalize_shadow, orbit, Symmetry};

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::diagram::{CutPair, Diagram, Embedding};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// Above the strand.
    U,
    /// Below the strand.
    D,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::U => Side::D,
            Side::D => Side::U,
        }
    }

    fn letter(self) -> char {
        match self {
            Side::U => 'U',
            Side::D => 'D',
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StraightError {
    #[error("visits are not a permutation of 1..n")]
    NotPermutation,
    #[error("connectors {0} and {1} cross")]
    CrossingArches(usize, usize),
    #[error("side word: {0}")]
    BadSides(String),
    #[error("expected {expected} {what}, found {found}")]
    Length {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("parse error: {0}")]
    Parse(String),
}

/// Visits and arrival sides, without crossing information.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShadowCode {
    visits: Vec<u32>,
    arrivals: Vec<Side>,
}

/// A straight diagram: a shadow plus, for each strand position, whether the
/// strand passes over.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StraightCode {
    shadow: ShadowCode,
    overs: Vec<bool>,
}

/// Index of a boundary point on the disk circle of `2n + 2` points.
pub(crate) fn circle_index(n: u32, pos: u32, side: Side) -> u32 {
    match side {
        Side::U => pos,
        Side::D => 2 * n + 2 - pos,
    }
}

/// The `n + 1` chords of a shadow as circle-index pairs.
pub fn chords(visits: &[u32], arrivals: &[Side]) -> Vec<(u32, u32)> {
    let n = visits.len() as u32;
    let mut out = Vec::with_capacity(visits.len() + 1);
    let mut from = n + 1;
    for (&v, &a) in visits.iter().zip(arrivals) {
        out.push((from, circle_index(n, v, a)));
        from = circle_index(n, v, a.flip());
    }
    out.push((from, 0));
    out
}

fn chords_cross(a: (u32, u32), b: (u32, u32)) -> bool {
    let (lo, hi) = (a.0.min(a.1), a.0.max(a.1));
    let inside = |x: u32| lo < x && x < hi;
    inside(b.0) != inside(b.1)
}

impl ShadowCode {
    pub fn new(visits: Vec<u32>, arrivals: Vec<Side>) -> Result<Self, StraightError> {
        let n = visits.len();
        if arrivals.len() != n {
            return Err(StraightError::Length {
                what: "arrival sides",
                expected: n,
                found: arrivals.len(),
            });
        }
        let mut seen = vec![false; n + 1];
        for &v in &visits {
            if v == 0 || v as usize > n || std::mem::replace(&mut seen[v as usize], true) {
                return Err(StraightError::NotPermutation);
            }
        }
        let ch = chords(&visits, &arrivals);
        for i in 0..ch.len() {
            for j in i + 1..ch.len() {
                if chords_cross(ch[i], ch[j]) {
                    return Err(StraightError::CrossingArches(i, j));
                }
            }
        }
        Ok(ShadowCode { visits, arrivals })
    }

    pub(crate) fn new_unchecked(visits: Vec<u32>, arrivals: Vec<Side>) -> Self {
        ShadowCode { visits, arrivals }
    }

    /// Builds a shadow from the text-format side word (`n + 1` letters).
    pub fn from_side_word(visits: Vec<u32>, sides: &[Side]) -> Result<Self, StraightError> {
        let n = visits.len();
        if sides.len() != n + 1 {
            return Err(StraightError::Length {
                what: "sides",
                expected: n + 1,
                found: sides.len(),
            });
        }
        if n == 0 {
            return Ok(ShadowCode {
                visits,
                arrivals: Vec::new(),
            });
        }
        if sides[n] != sides[n - 1].flip() {
            return Err(StraightError::BadSides(format!(
                "last connector leaves visit {} from side {} but the visit arrives from {}",
                n,
                sides[n].letter(),
                sides[n - 1].letter()
            )));
        }
        ShadowCode::new(visits, sides[..n].to_vec())
    }

    pub fn n(&self) -> usize {
        self.visits.len()
    }

    pub fn visits(&self) -> &[u32] {
        &self.visits
    }

    pub fn arrivals(&self) -> &[Side] {
        &self.arrivals
    }

    /// The `n + 1`-letter side word of the text format.
    pub fn side_word(&self) -> Vec<Side> {
        let mut s = self.arrivals.clone();
        match self.arrivals.last() {
            Some(&a) => s.push(a.flip()),
            None => s.push(Side::U),
        }
        s
    }

    /// Interleaved `v₁, a₁, v₂, a₂, …` with `U < D`; the canonical order.
    pub fn key(&self) -> Vec<u32> {
        self.visits
            .iter()
            .zip(&self.arrivals)
            .flat_map(|(&v, &a)| [v, (a == Side::D) as u32])
            .collect()
    }

    pub fn with_overs(&self, overs: Vec<bool>) -> StraightCode {
        assert_eq!(overs.len(), self.n());
        StraightCode {
            shadow: self.clone(),
            overs,
        }
    }

    /// Position `p` is crossed by the arc at visit `visit_of()[p - 1]`.
    pub fn visit_of(&self) -> Vec<usize> {
        let mut inv = vec![0; self.n()];
        for (k, &v) in self.visits.iter().enumerate() {
            inv[v as usize - 1] = k;
        }
        inv
    }
}

impl StraightCode {
    /// The crossingless code: the arc runs from the right end straight back
    /// to the left end. Text form `0; ; U; `.
    pub fn unknot() -> StraightCode {
        StraightCode {
            shadow: ShadowCode::new_unchecked(Vec::new(), Vec::new()),
            overs: Vec::new(),
        }
    }

    pub fn new(
        visits: Vec<u32>,
        sides: Vec<Side>,
        overs: Vec<bool>,
    ) -> Result<Self, StraightError> {
        let shadow = ShadowCode::from_side_word(visits, &sides)?;
        if overs.len() != shadow.n() {
            return Err(StraightError::Length {
                what: "over bits",
                expected: shadow.n(),
                found: overs.len(),
            });
        }
        Ok(StraightCode { shadow, overs })
    }

    pub fn shadow(&self) -> &ShadowCode {
        &self.shadow
    }

    pub fn n(&self) -> usize {
        self.shadow.n()
    }

    pub fn visits(&self) -> &[u32] {
        self.shadow.visits()
    }

    pub fn arrivals(&self) -> &[Side] {
        self.shadow.arrivals()
    }

    pub fn overs(&self) -> &[bool] {
        &self.overs
    }

    /// Sign of the crossing at strand position `p` (1-based).
    pub fn sign_at(&self, p: usize) -> i8 {
        let k = self.shadow.visit_of()[p - 1];
        let arc_north = self.arrivals()[k] == Side::D;
        if self.overs[p - 1] == arc_north {
            1
        } else {
            -1
        }
    }

    /// Swaps over and under everywhere.
    pub fn mirror(&self) -> StraightCode {
        StraightCode {
            shadow: self.shadow.clone(),
            overs: self.overs.iter().map(|b| !b).collect(),
        }
    }

    /// The rotation system, one crossing per strand position with arms
    /// E, N, W, S counterclockwise (0..4). Also returns the arm through
    /// which the arc leaves its last visit, so that traversal starting there
    /// labels the strand first.
    pub fn embedding(&self) -> (Embedding, (usize, u8)) {
        let n = self.n();
        let mut e = Embedding::new(n);
        const E: u8 = 0;
        const W: u8 = 2;
        let arm =
            |p: u32, s: Side| -> (usize, u8) { (p as usize - 1, if s == Side::U { 1 } else { 3 }) };
        for p in 1..n {
            e.join((p - 1, E), (p, W));
        }
        let v = self.visits();
        let a = self.arrivals();
        e.join((n - 1, E), arm(v[0], a[0]));
        for k in 0..n - 1 {
            e.join(arm(v[k], a[k].flip()), arm(v[k + 1], a[k + 1]));
        }
        let last = arm(v[n - 1], a[n - 1].flip());
        e.join((0, W), last);
        for p in 0..n {
            e.over_axis[p] = if self.overs[p] { 0 } else { 1 };
        }
        (e, last)
    }

    /// The diagram, with edge 1 entering the strand's first crossing and
    /// the strand edges numbered first.
    pub fn to_diagram(&self) -> Diagram {
        if self.n() == 0 {
            return Diagram::unknot();
        }
        let (e, start) = self.embedding();
        e.to_diagram(start)
            .expect("valid straight codes give valid diagrams")
    }

    /// Reads the code off a diagram split at `cut`.
    pub fn from_diagram(d: &Diagram, cut: &CutPair) -> Result<Self, StraightError> {
        let n = d.crossing_count();
        let passes = d.passes();
        let m = 2 * n;
        let mut pos = vec![0u32; n];
        let mut strand_slot = vec![0u8; n];
        let mut overs = vec![false; n];
        for i in 0..n {
            let p = passes[(cut.strand_start + i) % m];
            pos[p.crossing] = i as u32 + 1;
            strand_slot[p.crossing] = p.slot_in;
            overs[i] = p.over;
        }
        let mut visits = Vec::with_capacity(n);
        let mut arrivals = Vec::with_capacity(n);
        for i in 0..n {
            let p = passes[(cut.strand_start + n + i) % m];
            if pos[p.crossing] == 0 {
                return Err(StraightError::NotPermutation);
            }
            visits.push(pos[p.crossing]);
            let north = (strand_slot[p.crossing] + 3) % 4;
            arrivals.push(if p.slot_in == north { Side::U } else { Side::D });
        }
        let shadow = ShadowCode::new(visits, arrivals)?;
        Ok(StraightCode { shadow, overs })
    }
}

impl fmt::Display for StraightCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.visits().iter().map(|v| v.to_string()).collect();
        let s: String = self.shadow.side_word().iter().map(|s| s.letter()).collect();
        let b: String = self
            .overs
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect();
        write!(f, "{}; {}; {}; {}", self.n(), v.join(" "), s, b)
    }
}

impl FromStr for StraightCode {
    type Err = StraightError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = text.trim().split(';').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(StraightError::Parse(format!(
                "expected 4 ';'-separated fields, found {}",
                parts.len()
            )));
        }
        let n: usize = parts[0]
            .parse()
            .map_err(|_| StraightError::Parse(format!("bad crossing count {:?}", parts[0])))?;
        let visits = parts[1]
            .split_whitespace()
            .map(|t| {
                t.parse::<u32>()
                    .map_err(|_| StraightError::Parse(format!("bad visit {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let sides = parts[2]
            .chars()
            .map(|c| match c {
                'U' => Ok(Side::U),
                'D' => Ok(Side::D),
                _ => Err(StraightError::Parse(format!("bad side letter {c:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let overs = parts[3]
            .chars()
            .map(|c| match c {
                '1' => Ok(true),
                '0' => Ok(false),
                _ => Err(StraightError::Parse(format!("bad over bit {c:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        if visits.len() != n {
            return Err(StraightError::Length {
                what: "visits",
                expected: n,
                found: visits.len(),
            });
        }
        StraightCode::new(visits, sides, overs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossingless_code_round_trips() {
        let u = StraightCode::unknot();
        assert_eq!(u.to_string().parse::<StraightCode>().unwrap(), u);
        assert_eq!(u.to_diagram().crossing_count(), 0);
    }

    #[test]
    fn kink_text_round_trip() {
        let c: StraightCode = "1; 1; UD; 1".parse().unwrap();
        assert_eq!(c.to_string(), "1; 1; UD; 1");
        let d = c.to_diagram();
        assert_eq!(d.crossing_count(), 1);
        assert!(!d.is_reduced());
        assert!(d.straight_decomposable().is_some());
    }

    #[test]
    fn forced_last_side_is_checked() {
        assert!(matches!(
            "1; 1; UU; 1".parse::<StraightCode>(),
            Err(StraightError::BadSides(_))
        ));
    }

    #[test]
    fn not_a_permutation() {
        assert_eq!(
            StraightCode::new(
                vec![1, 1],
                vec![Side::U, Side::D, Side::U],
                vec![true, true]
            ),
            Err(StraightError::NotPermutation)
        );
    }

    #[test]
    fn interleaving_upper_connectors_rejected() {
        let r = StraightCode::new(
            vec![1, 2],
            vec![Side::U, Side::U, Side::D],
            vec![true, true],
        );
        assert!(matches!(r, Err(StraightError::CrossingArches(_, _))));
    }

    #[test]
    fn diagram_labels_the_strand_first() {
        let c = enumerate_shadows(3)[0].with_overs(vec![true, false, true]);
        let d = c.to_diagram();
        for k in 0..3 {
            assert_eq!(d.passes()[k].crossing, k);
            assert_eq!(d.passes()[k].over, c.overs()[k]);
        }
    }

    #[test]
    fn code_survives_diagram_round_trip() {
        let c: StraightCode = "1; 1; DU; 0".parse().unwrap();
        let d = c.to_diagram();
        let cut = CutPair {
            strand_start: 0,
            first_edge: 1,
            second_edge: 2,
        };
        assert_eq!(StraightCode::from_diagram(&d, &cut).unwrap(), c);
    }

    #[test]
    fn signs_match_the_diagram() {
        for text in ["1; 1; UD; 1", "1; 1; UD; 0", "1; 1; DU; 1", "1; 1; DU; 0"] {
            let c: StraightCode = text.parse().unwrap();
            assert_eq!(c.sign_at(1), c.to_diagram().sign(0), "{text}");
        }
    }
}
