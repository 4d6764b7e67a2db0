//! Braid words and their closures.
//!
//! Strands run upward at positions `1..=n`. A letter `σᵢ` crosses the
//! strands at positions `i` and `i + 1`, with the one moving right on top.
//! Each crossing has arms NE, NW, SW, SE counterclockwise; the closure runs
//! every strand back from the top of its position to the bottom around the
//! right side.

use std::fmt;
use std::str::FromStr;

use super::FamilyError;
use crate::diagram::{Diagram, Embedding};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<(usize, i32)>,
}

impl BraidWord {
    /// Letters are `(generator, exponent)` with generators `1..strands`.
    pub fn new(strands: usize, letters: Vec<(usize, i32)>) -> Result<Self, FamilyError> {
        if strands < 2 {
            return Err(FamilyError::BadWord(format!(
                "{strands} strands; need at least 2"
            )));
        }
        for &(g, e) in &letters {
            if g == 0 || g >= strands {
                return Err(FamilyError::BadWord(format!(
                    "generator {g} out of range 1..{}",
                    strands - 1
                )));
            }
            if e == 0 {
                return Err(FamilyError::BadWord(format!("zero exponent on σ{g}")));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[(usize, i32)] {
        &self.letters
    }

    pub fn crossing_count(&self) -> usize {
        self.letters
            .iter()
            .map(|&(_, e)| e.unsigned_abs() as usize)
            .sum()
    }

    /// Where the strand starting at each position ends up.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &(g, e) in &self.letters {
            if e % 2 != 0 {
                at.swap(g - 1, g);
            }
        }
        // at[p] is the strand now at position p; invert.
        let mut perm = vec![0; self.strands];
        for (p, &s) in at.iter().enumerate() {
            perm[s] = p;
        }
        perm
    }

    pub fn cycle_count(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for s in 0..perm.len() {
            if !seen[s] {
                cycles += 1;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = perm[x];
                }
            }
        }
        cycles
    }
}

impl fmt::Display for BraidWord {
    /// Strand count, then signed generators with repetition: `3: 1 -2 1 -2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for &(g, e) in &self.letters {
            for _ in 0..e.unsigned_abs() {
                write!(f, " {}", if e > 0 { g as i64 } else { -(g as i64) })?;
            }
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (n, rest) = s
            .split_once(':')
            .ok_or_else(|| FamilyError::BadWord("expected `strands: letters`".into()))?;
        let strands = n
            .trim()
            .parse()
            .map_err(|_| FamilyError::BadWord(format!("bad strand count {n:?}")))?;
        let letters = rest
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| {
                let v: i64 = t
                    .parse()
                    .map_err(|_| FamilyError::BadWord(format!("bad letter {t:?}")))?;
                Ok((v.unsigned_abs() as usize, v.signum() as i32))
            })
            .collect::<Result<Vec<_>, FamilyError>>()?;
        BraidWord::new(strands, letters)
    }
}

const NE: u8 = 0;
const NW: u8 = 1;
const SW: u8 = 2;
const SE: u8 = 3;

pub fn braid_closure(w: &BraidWord) -> Result<Diagram, FamilyError> {
    let cycles = w.cycle_count();
    if cycles != 1 {
        return Err(FamilyError::NotAKnot { cycles });
    }
    let n = w.strands;
    let mut e = Embedding::new(0);
    let mut top: Vec<Option<(usize, u8)>> = vec![None; n];
    let mut bottom: Vec<Option<(usize, u8)>> = vec![None; n];
    for &(g, exp) in &w.letters {
        for _ in 0..exp.unsigned_abs() {
            let c = e.add_crossing(if exp > 0 { 0 } else { 1 });
            for (p, arm) in [(g - 1, SW), (g, SE)] {
                match top[p] {
                    Some(t) => e.join(t, (c, arm)),
                    None => bottom[p] = Some((c, arm)),
                }
            }
            top[g - 1] = Some((c, NW));
            top[g] = Some((c, NE));
        }
    }
    for p in 0..n {
        match (top[p], bottom[p]) {
            (Some(t), Some(b)) => e.join(t, b),
            // A position no letter touches closes into its own component.
            _ => {
                return Err(FamilyError::NotAKnot {
                    cycles: cycles.max(2),
                })
            }
        }
    }
    Ok(e.to_diagram((0, NE))?)
}

/// `(σ₁^ε₁ ⋯ σₙ₋₁^εₙ₋₁)^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpiralSpec {
    pub n: usize,
    pub m: usize,
    pub eps: Vec<i32>,
}

impl SpiralSpec {
    pub fn word(&self) -> Result<BraidWord, FamilyError> {
        if self.n < 2 || self.m < 1 {
            return Err(FamilyError::Domain(format!(
                "spiral needs n ≥ 2 and m ≥ 1, got n = {}, m = {}",
                self.n, self.m
            )));
        }
        if self.eps.len() != self.n - 1 {
            return Err(FamilyError::Domain(format!(
                "expected {} exponents, got {}",
                self.n - 1,
                self.eps.len()
            )));
        }
        let w0: Vec<(usize, i32)> = self
            .eps
            .iter()
            .enumerate()
            .map(|(i, &e)| (i + 1, e))
            .collect();
        BraidWord::new(self.n, w0.repeat(self.m))
    }
}

/// Closure of a spiral word with exponents ±1.
pub fn spiral(spec: &SpiralSpec) -> Result<Diagram, FamilyError> {
    if spec.eps.iter().any(|e| e.abs() != 1) {
        return Err(FamilyError::Domain("spiral exponents must be ±1".into()));
    }
    braid_closure(&spec.word()?)
}

/// `W(n, m)`: the spiral with exponents `+1, −1, +1, …`.
pub fn weaving(n: usize, m: usize) -> Result<Diagram, FamilyError> {
    let eps = (0..n.saturating_sub(1))
        .map(|i| if i % 2 == 0 { 1 } else { -1 })
        .collect();
    spiral(&SpiralSpec { n, m, eps })
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `(b, r)` with `m = bn + r`, `1 ≤ r ≤ n − 1`, under the weaving theorem's
/// hypotheses.
fn weaving_split(n: usize, m: usize) -> Result<(usize, usize), FamilyError> {
    if n < 3 || m < n + 1 || gcd(n, m) != 1 {
        return Err(FamilyError::Domain(format!(
            "weaving bound needs n ≥ 3, m ≥ n + 1 and gcd(n, m) = 1; got n = {n}, m = {m}"
        )));
    }
    let (b, r) = (m / n, m % n);
    debug_assert!(b >= 1 && (1..n).contains(&r));
    Ok((b, r))
}

/// The closed form `2m + n − 2(b + 1)`, an upper bound on the longest
/// simple arc of `W(n, m)`. It exceeds the brute-force value by one on
/// every tested case; see [`weaving_traversal`].
pub fn weaving_bound(n: usize, m: usize) -> Result<usize, FamilyError> {
    let (b, _) = weaving_split(n, m)?;
    Ok(2 * m + n - 2 * (b + 1))
}

/// The term-by-term count `2b(n − 1) + (n − 1) + 2(r − 1)` of the longest
/// traversal, which equals `2m + n − 2b − 3`. This is the value brute force
/// finds.
pub fn weaving_traversal(n: usize, m: usize) -> Result<usize, FamilyError> {
    let (b, r) = weaving_split(n, m)?;
    Ok(2 * b * (n - 1) + (n - 1) + 2 * (r - 1))
}

/// Closure of `w₁ w₂ ⋯ w_m` where row `j` of `exps` gives the exponents of
/// `σ₁ … σₙ₋₁` in `w_j`. Every exponent must be odd and the result
/// alternating.
pub fn generalized_spiral(n: usize, exps: &[Vec<i32>]) -> Result<Diagram, FamilyError> {
    if n < 2 || exps.is_empty() {
        return Err(FamilyError::Domain(
            "need n ≥ 2 and at least one factor".into(),
        ));
    }
    let mut letters = Vec::new();
    for row in exps {
        if row.len() != n - 1 {
            return Err(FamilyError::Domain(format!(
                "each factor needs {} exponents, got {}",
                n - 1,
                row.len()
            )));
        }
        if let Some(e) = row.iter().find(|e| *e % 2 == 0) {
            return Err(FamilyError::Domain(format!("exponent {e} is even")));
        }
        letters.extend(row.iter().enumerate().map(|(i, &e)| (i + 1, e)));
    }
    let d = braid_closure(&BraidWord::new(n, letters)?)?;
    if !d.is_alternating() {
        return Err(FamilyError::NotAlternating);
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_counts_and_link_rejection() {
        let t = braid_closure(&"2: 1 1 1".parse().unwrap()).unwrap();
        assert_eq!(t.crossing_count(), 3);
        assert!(matches!(
            braid_closure(&"2: 1 1".parse().unwrap()),
            Err(FamilyError::NotAKnot { cycles: 2 })
        ));
        assert!(matches!(weaving(3, 3), Err(FamilyError::NotAKnot { .. })));
    }

    #[test]
    fn positive_generators_give_positive_crossings() {
        let t = braid_closure(&"2: 1 1 1".parse().unwrap()).unwrap();
        assert_eq!(t.writhe(), 3);
        let t = braid_closure(&"2: -1 -1 -1".parse().unwrap()).unwrap();
        assert_eq!(t.writhe(), -3);
    }

    #[test]
    fn weaving_is_alternating_and_reduced() {
        let d = weaving(3, 4).unwrap();
        assert_eq!(d.crossing_count(), 8);
        assert!(d.is_alternating() && d.is_reduced());
    }

    #[test]
    fn bound_values_and_domain() {
        assert_eq!(weaving_bound(3, 4), Ok(7));
        assert_eq!(weaving_bound(3, 5), Ok(9));
        assert_eq!(weaving_bound(4, 5), Ok(10));
        assert!(weaving_bound(3, 3).is_err());
        assert!(weaving_bound(3, 6).is_err());
        assert!(weaving_bound(2, 5).is_err());
        assert_eq!(weaving_traversal(3, 4), Ok(6));
        assert_eq!(weaving_traversal(4, 5), Ok(9));
    }

    #[test]
    fn word_text_roundtrip() {
        let w: BraidWord = "3: 1 -2 1 -2".parse().unwrap();
        assert_eq!(w.to_string(), "3: 1 -2 1 -2");
        assert_eq!(w.to_string().parse::<BraidWord>().unwrap(), w);
        assert!("1: 1".parse::<BraidWord>().is_err());
        assert!("3: 3".parse::<BraidWord>().is_err());
    }
}
