//! Exhaustive enumeration of straight shadows and codes.

use rayon::prelude::*;

use super::symmetry::Symmetry;
use super::{circle_index, ShadowCode, Side, StraightCode};

/// Reductions that discard codes whose diagram simplifies to a straight
/// diagram with fewer crossings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PruneFlags {
    /// A connector from a strand end straight back to the adjacent crossing
    /// (a kink at the end of the strand).
    pub r1: bool,
    /// Consecutive visits at neighbouring positions joined by a connector
    /// hugging the strand, with both crossings over (or both under) for the
    /// arc: a bigon removable by a second Reidemeister move.
    pub r2: bool,
    /// Any nugatory crossing. Untwisting it keeps the strand straight.
    pub nugatory: bool,
}

impl PruneFlags {
    pub const NONE: PruneFlags = PruneFlags {
        r1: false,
        r2: false,
        nugatory: false,
    };
    pub const ALL: PruneFlags = PruneFlags {
        r1: true,
        r2: true,
        nugatory: true,
    };
}

/// Points strictly between `a` and `b` going up the circle of `m` points.
fn between(a: u32, b: u32, m: u32) -> u64 {
    let range = |lo: u32, hi: u32| -> u64 {
        if hi <= lo {
            0
        } else {
            let top = if hi >= 64 { u64::MAX } else { (1u64 << hi) - 1 };
            top & !((1u64 << lo) - 1)
        }
    };
    if a < b {
        range(a + 1, b)
    } else {
        range(a + 1, m) | range(0, b)
    }
}

struct Search {
    n: u32,
    m: u32,
    prune: PruneFlags,
}

/// Partial walk: visits and sides so far, and the connectors drawn.
#[derive(Default)]
struct Walk {
    visits: Vec<u32>,
    arrivals: Vec<Side>,
    chords: Vec<(u32, u32)>,
}

impl Search {
    fn dfs(&self, from: u32, unused: u64, w: &mut Walk, out: &mut Vec<ShadowCode>) {
        let n = self.n;
        let depth = w.visits.len() as u32;
        if depth == n {
            if self.prune.r1 && w.visits[n as usize - 1] == 1 {
                return;
            }
            if !self.clear(from, 0, &w.chords) {
                return;
            }
            let s = ShadowCode::new_unchecked(w.visits.clone(), w.arrivals.clone());
            if is_canonical(&s) && (!self.prune.nugatory || shadow_is_reduced(&s)) {
                out.push(s);
            }
            return;
        }
        for p in 1..=n {
            if unused >> p & 1 == 0 {
                continue;
            }
            if depth == 0 && self.prune.r1 && p == n {
                continue;
            }
            for a in [Side::U, Side::D] {
                if depth == 0 && a == Side::D {
                    // The vertical flip makes a₁ = U canonical.
                    continue;
                }
                if let Some((next, rest)) = self.step(from, unused, p, a, &w.chords) {
                    w.push(p, a, (from, circle_index(n, p, a)));
                    self.dfs(next, rest, w, out);
                    w.pop();
                }
            }
        }
    }
}

fn is_canonical(s: &ShadowCode) -> bool {
    let k = s.key();
    Symmetry::all()[1..]
        .iter()
        .all(|g| g.apply_shadow(s).key() >= k)
}

fn shadow_is_reduced(s: &ShadowCode) -> bool {
    s.with_overs(vec![true; s.n()]).to_diagram().is_reduced()
}

fn shadows(n: usize, prune: PruneFlags) -> Vec<ShadowCode> {
    assert!(
        (1..=31).contains(&n),
        "straight enumeration supports 1 ≤ n ≤ 31"
    );
    let n32 = n as u32;
    let m = 2 * n32 + 2;
    let search = Search { n: n32, m, prune };
    let all: u64 = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    let start = all & !(1u64 << (n32 + 1));
    // Split on the first two visits; rayon keeps the collected order.
    let mut prefixes = Vec::new();
    for p in 1..=n32 {
        if n == 1 {
            prefixes.push(vec![p]);
        }
        for p2 in 1..=n32 {
            if p2 != p {
                prefixes.push(vec![p, p2]);
            }
        }
    }
    let parts: Vec<Vec<ShadowCode>> = prefixes
        .par_iter()
        .map(|pre| {
            let mut out = Vec::new();
            search.prefix(pre, n32 + 1, start, &mut Walk::default(), &mut out);
            out
        })
        .collect();
    parts.into_iter().flatten().collect()
}

impl Search {
    /// Runs the search restricted to visit prefix `pre`.
    fn prefix(&self, pre: &[u32], from: u32, unused: u64, w: &mut Walk, out: &mut Vec<ShadowCode>) {
        let depth = w.visits.len();
        if depth == pre.len() {
            self.dfs(from, unused, w, out);
            return;
        }
        let p = pre[depth];
        if depth == 0 && self.prune.r1 && p == self.n {
            return;
        }
        for a in [Side::U, Side::D] {
            if depth == 0 && a == Side::D {
                continue;
            }
            if unused >> circle_index(self.n, p, a) & 1 == 0 {
                continue;
            }
            if let Some((next, rest)) = self.step(from, unused, p, a, &w.chords) {
                w.push(p, a, (from, circle_index(self.n, p, a)));
                self.prefix(pre, next, rest, w, out);
                w.pop();
            }
        }
    }

    /// Draws the connector from `from` to position `p` on side `a` if it
    /// crosses no earlier connector. Returns the new departure point and
    /// unused set.
    fn step(
        &self,
        from: u32,
        unused: u64,
        p: u32,
        a: Side,
        chords: &[(u32, u32)],
    ) -> Option<(u32, u64)> {
        let q = circle_index(self.n, p, a);
        let q2 = circle_index(self.n, p, a.flip());
        self.clear(from, q, chords)
            .then(|| (q2, unused & !(1u64 << q) & !(1u64 << q2)))
    }

    /// The chord `x`–`y` crosses none of `chords`.
    fn clear(&self, x: u32, y: u32, chords: &[(u32, u32)]) -> bool {
        let inside = between(x, y, self.m);
        chords
            .iter()
            .all(|&(c, d)| (inside >> c & 1) == (inside >> d & 1))
    }
}

impl Walk {
    fn push(&mut self, p: u32, a: Side, chord: (u32, u32)) {
        self.visits.push(p);
        self.arrivals.push(a);
        self.chords.push(chord);
    }

    fn pop(&mut self) {
        self.visits.pop();
        self.arrivals.pop();
        self.chords.pop();
    }
}

/// One representative per symmetry orbit, in increasing key order.
pub fn enumerate_shadows(n: usize) -> Vec<ShadowCode> {
    shadows(n, PruneFlags::NONE)
}

pub fn count_shadows(n: usize) -> usize {
    shadows(n, PruneFlags::NONE).len()
}

/// Pairs of strand positions (0-based) joined by a connector that hugs the
/// strand. Equal over bits on such a pair make a removable bigon.
pub fn hugging_pairs(s: &ShadowCode) -> Vec<(usize, usize)> {
    let v = s.visits();
    let a = s.arrivals();
    (0..v.len().saturating_sub(1))
        .filter(|&k| v[k].abs_diff(v[k + 1]) == 1 && a[k].flip() == a[k + 1])
        .map(|k| (v[k] as usize - 1, v[k + 1] as usize - 1))
        .collect()
}

/// Calls `f` for every code of the canonical shadow `s` that survives the
/// over/under prunes, over bits in increasing order (position 1 most
/// significant).
pub fn for_each_straight(s: &ShadowCode, prune: PruneFlags, mut f: impl FnMut(StraightCode)) {
    let n = s.n();
    let pairs = if prune.r2 {
        hugging_pairs(s)
    } else {
        Vec::new()
    };
    for mask in 0u64..1 << n {
        let overs: Vec<bool> = (0..n).map(|p| mask >> (n - 1 - p) & 1 == 1).collect();
        if pairs.iter().any(|&(i, j)| overs[i] == overs[j]) {
            continue;
        }
        f(s.with_overs(overs));
    }
}

/// All codes over all canonical shadows, in canonical order.
pub fn enumerate_straight(n: usize, prune: PruneFlags) -> Vec<StraightCode> {
    let mut out = Vec::new();
    for s in shadows(n, prune) {
        for_each_straight(&s, prune, |c| out.push(c));
    }
    out
}

/// Canonical shadows after shadow-level prunes.
pub fn enumerate_shadows_pruned(n: usize, prune: PruneFlags) -> Vec<ShadowCode> {
    shadows(n, prune)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn between_masks() {
        assert_eq!(between(1, 4, 8), 0b1100);
        assert_eq!(between(6, 1, 8), 0b1000_0001);
        assert_eq!(between(3, 4, 8), 0);
    }

    #[test]
    fn n1_has_one_shadow_and_two_codes() {
        assert_eq!(count_shadows(1), 1);
        assert_eq!(enumerate_straight(1, PruneFlags::NONE).len(), 2);
    }
}
