//! Signed Gauss codes and planarity of Gauss words.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::{Diagram, DiagramError, Pass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GaussToken {
    /// 1-based crossing id.
    pub crossing: usize,
    pub over: bool,
    pub sign: i8,
}

/// A signed Gauss code, e.g. `O1-,U2-,O3-,U1-,O2-,U3-`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussCode(pub Vec<GaussToken>);

impl GaussCode {
    pub fn from_diagram(d: &Diagram) -> Self {
        GaussCode(
            d.passes()
                .iter()
                .map(|p| GaussToken {
                    crossing: p.crossing + 1,
                    over: p.over,
                    sign: d.sign(p.crossing),
                })
                .collect(),
        )
    }

    pub fn to_diagram(&self) -> Result<Diagram, DiagramError> {
        let toks = &self.0;
        let mut ids: HashMap<usize, usize> = HashMap::new();
        for t in toks {
            let k = ids.len();
            ids.entry(t.crossing).or_insert(k);
        }
        let n = ids.len();
        if toks.len() != 2 * n {
            return Err(DiagramError::Parse(
                "every crossing must appear exactly twice".into(),
            ));
        }
        let mut seen = vec![(0u8, 0u8, 0i8); n];
        for t in toks {
            let c = ids[&t.crossing];
            let e = &mut seen[c];
            if t.over {
                e.0 += 1;
            } else {
                e.1 += 1;
            }
            if e.2 != 0 && e.2 != t.sign {
                return Err(DiagramError::Parse(format!(
                    "crossing {} has inconsistent signs",
                    t.crossing
                )));
            }
            e.2 = t.sign;
        }
        if seen.iter().any(|&(o, u, _)| o != 1 || u != 1) {
            return Err(DiagramError::Parse(
                "every crossing needs one over and one under pass".into(),
            ));
        }
        let passes: Vec<Pass> = toks
            .iter()
            .map(|t| {
                let c = ids[&t.crossing];
                let slot_in = match (t.over, t.sign > 0) {
                    (false, _) => 0,
                    (true, true) => 3,
                    (true, false) => 1,
                };
                Pass {
                    crossing: c,
                    over: t.over,
                    slot_in,
                }
            })
            .collect();
        let m = 2 * n as u32;
        let mut pd = vec![[0u32; 4]; n];
        for (k, p) in passes.iter().enumerate() {
            let lin = k as u32 + 1;
            let lout = if lin == m { 1 } else { lin + 1 };
            let s = p.slot_in as usize;
            pd[p.crossing][s] = lin;
            pd[p.crossing][(s + 2) % 4] = lout;
        }
        Diagram::from_pd(&pd)
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .0
            .iter()
            .map(|t| {
                format!(
                    "{}{}{}",
                    if t.over { 'O' } else { 'U' },
                    t.crossing,
                    if t.sign > 0 { '+' } else { '-' }
                )
            })
            .collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for GaussCode {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |t: &str| DiagramError::Parse(format!("bad Gauss token {t:?}"));
        let toks = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                let over = match t.chars().next() {
                    Some('O') | Some('o') => true,
                    Some('U') | Some('u') => false,
                    _ => return Err(bad(t)),
                };
                let sign = match t.chars().last() {
                    Some('+') => 1,
                    Some('-') => -1,
                    _ => return Err(bad(t)),
                };
                let crossing = t[1..t.len() - 1].parse().map_err(|_| bad(t))?;
                Ok(GaussToken {
                    crossing,
                    over,
                    sign,
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GaussCode(toks))
    }
}

/// Whether a Gauss word (each symbol exactly twice) is the crossing sequence
/// of a closed curve on the sphere, by the interlacement-graph criterion:
/// every vertex has even degree, non-adjacent vertices share an even number
/// of neighbours, and the adjacent pairs sharing an even number form a cut.
#[allow(clippy::needless_range_loop)]
pub fn gauss_word_realizable(word: &[usize]) -> bool {
    let mut pos: HashMap<usize, Vec<usize>> = HashMap::new();
    for (k, &s) in word.iter().enumerate() {
        pos.entry(s).or_default().push(k);
    }
    if pos.values().any(|v| v.len() != 2) {
        return false;
    }
    let mut syms: Vec<usize> = pos.keys().copied().collect();
    syms.sort_unstable();
    let n = syms.len();
    let span: Vec<(usize, usize)> = syms.iter().map(|s| (pos[s][0], pos[s][1])).collect();
    let mut adj = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let (a, b) = span[i];
            let inside = |p: usize| a < p && p < b;
            adj[i][j] = inside(span[j].0) != inside(span[j].1);
        }
    }
    let deg_even = (0..n).all(|i| adj[i].iter().filter(|&&x| x).count() % 2 == 0);
    if !deg_even {
        return false;
    }
    let common = |i: usize, j: usize| (0..n).filter(|&k| adj[i][k] && adj[j][k]).count();
    for i in 0..n {
        for j in i + 1..n {
            if !adj[i][j] && common(i, j) % 2 == 1 {
                return false;
            }
        }
    }
    let mut side = vec![u8::MAX; n];
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if !adj[u][v] {
                    continue;
                }
                let want = side[u] ^ (common(u, v) % 2 == 0) as u8;
                if side[v] == u8::MAX {
                    side[v] = want;
                    stack.push(v);
                } else if side[v] != want {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Face count of the shadow where pass `k` enters through edge `k + 1`,
    /// the first pass of each symbol runs slot 0 to 2 and the second pass
    /// enters at slot 1 or 3 per `flip`.
    fn shadow_faces(word: &[usize], n: usize, flip: u32) -> usize {
        let m = word.len();
        let mut pd = vec![[0usize; 4]; n];
        let mut first = vec![true; n];
        for (k, &c) in word.iter().enumerate() {
            let (a, b) = if first[c] {
                first[c] = false;
                (0, 2)
            } else if flip >> c & 1 == 1 {
                (3, 1)
            } else {
                (1, 3)
            };
            pd[c][a] = k;
            pd[c][b] = (k + 1) % m;
        }
        let mut ends = vec![Vec::new(); m];
        for (c, x) in pd.iter().enumerate() {
            for (i, &l) in x.iter().enumerate() {
                ends[l].push((c, i));
            }
        }
        let mut seen = vec![[false; 4]; n];
        let mut faces = 0;
        for c in 0..n {
            for i in 0..4 {
                if seen[c][i] {
                    continue;
                }
                faces += 1;
                let mut cur = (c, i);
                while !seen[cur.0][cur.1] {
                    seen[cur.0][cur.1] = true;
                    let e = &ends[pd[cur.0][cur.1]];
                    let o = if e[0] == cur { e[1] } else { e[0] };
                    cur = (o.0, (o.1 + 1) % 4);
                }
            }
        }
        faces
    }

    fn brute_force(word: &[usize], n: usize) -> bool {
        (0..1u32 << n).any(|f| shadow_faces(word, n, f) == n + 2)
    }

    fn all_words(n: usize) -> Vec<Vec<usize>> {
        // Words in canonical first-occurrence order.
        fn rec(
            w: &mut Vec<usize>,
            cnt: &mut Vec<u8>,
            next: usize,
            n: usize,
            out: &mut Vec<Vec<usize>>,
        ) {
            if w.len() == 2 * n {
                out.push(w.clone());
                return;
            }
            for s in 0..n.min(next + 1) {
                if cnt[s] == 2 {
                    continue;
                }
                cnt[s] += 1;
                w.push(s);
                rec(w, cnt, next.max(s + 1), n, out);
                w.pop();
                cnt[s] -= 1;
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![0; n], 0, n, &mut out);
        out
    }

    #[test]
    fn interlacement_agrees_with_brute_force() {
        let mut realizable = 0;
        for n in 1..=5 {
            for w in all_words(n) {
                let a = gauss_word_realizable(&w);
                let b = brute_force(&w, n);
                assert_eq!(a, b, "word {w:?}");
                realizable += a as usize;
            }
        }
        assert!(realizable > 10);
    }

    #[test]
    fn gauss_roundtrip() {
        let g: GaussCode = "O1-,U2-,O3-,U1-,O2-,U3-".parse().unwrap();
        let d = g.to_diagram().unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.writhe(), -3);
        let back = d.to_gauss();
        assert_eq!(back.to_diagram().unwrap(), d);
        assert_eq!(back.to_string().parse::<GaussCode>().unwrap(), back);
    }

    #[test]
    fn virtual_trefoil_rejected() {
        let g: GaussCode = "O1-,U2-,U1-,O2-".parse().unwrap();
        assert_eq!(g.to_diagram().unwrap_err(), DiagramError::NonPlanar);
        assert!(!gauss_word_realizable(&[1, 2, 1, 2]));
    }
}
