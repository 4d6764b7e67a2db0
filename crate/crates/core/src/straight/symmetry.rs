//! The order-8 group acting on straight codes.
//!
//! * `V` reflects the picture in the strand's line: every side flips.
//! * `H` reflects it in a vertical line and reverses orientation, so the
//!   strand still runs left to right and the arc is read backwards.
//! * `R` swaps roles: the wandering arc is straightened into the new strand
//!   and the old strand becomes the new wandering arc.
//!
//! `V` and `H` present the mirror image; `R` presents the same knot. The
//! three generators commute and are involutions.

use super::{ShadowCode, Side, StraightCode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Symmetry {
    pub v: bool,
    pub h: bool,
    pub r: bool,
}

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry {
        v: false,
        h: false,
        r: false,
    };

    pub fn all() -> [Symmetry; 8] {
        let mut out = [Self::IDENTITY; 8];
        for (i, s) in out.iter_mut().enumerate() {
            *s = Symmetry {
                v: i & 1 != 0,
                h: i & 2 != 0,
                r: i & 4 != 0,
            };
        }
        out
    }

    /// Whether the image presents the mirror knot.
    pub fn mirrors(self) -> bool {
        self.v ^ self.h
    }

    pub fn apply_shadow(self, s: &ShadowCode) -> ShadowCode {
        let (v, a, _) = self.apply_parts(s.visits(), s.arrivals(), None);
        ShadowCode::new_unchecked(v, a)
    }

    pub fn apply(self, c: &StraightCode) -> StraightCode {
        let (v, a, o) = self.apply_parts(c.visits(), c.arrivals(), Some(c.overs()));
        ShadowCode::new_unchecked(v, a).with_overs(o.unwrap())
    }

    fn apply_parts(
        self,
        visits: &[u32],
        arrivals: &[Side],
        overs: Option<&[bool]>,
    ) -> (Vec<u32>, Vec<Side>, Option<Vec<bool>>) {
        let n = visits.len();
        let mut v = visits.to_vec();
        let mut a = arrivals.to_vec();
        let mut o = overs.map(<[bool]>::to_vec);
        if self.r {
            let mut inv = vec![0u32; n];
            for (k, &p) in v.iter().enumerate() {
                inv[p as usize - 1] = k as u32 + 1;
            }
            let na: Vec<Side> = (0..n).map(|j| a[inv[j] as usize - 1].flip()).collect();
            if let Some(o) = o.as_mut() {
                *o = (0..n).map(|p| !o[v[p] as usize - 1]).collect();
            }
            v = inv;
            a = na;
        }
        if self.h {
            let nn = n as u32 + 1;
            v = (0..n).map(|k| nn - v[n - 1 - k]).collect();
            a = (0..n).map(|k| a[n - 1 - k].flip()).collect();
            if let Some(o) = o.as_mut() {
                o.reverse();
            }
        }
        if self.v {
            for s in a.iter_mut() {
                *s = s.flip();
            }
        }
        (v, a, o)
    }
}

/// Distinct images of a shadow under the group.
pub fn orbit(s: &ShadowCode) -> Vec<ShadowCode> {
    let mut out: Vec<ShadowCode> = Symmetry::all().iter().map(|g| g.apply_shadow(s)).collect();
    out.sort();
    out.dedup();
    out
}

/// The orbit member with the smallest key.
pub fn canonicalize_shadow(s: &ShadowCode) -> ShadowCode {
    Symmetry::all()
        .iter()
        .map(|g| g.apply_shadow(s))
        .min_by(|x, y| x.key().cmp(&y.key()))
        .unwrap()
}

/// The orbit member with the smallest (key, over bits).
pub fn canonicalize(c: &StraightCode) -> StraightCode {
    Symmetry::all()
        .iter()
        .map(|g| g.apply(c))
        .min_by(|x, y| (x.shadow().key(), x.overs()).cmp(&(y.shadow().key(), y.overs())))
        .unwrap()
}
