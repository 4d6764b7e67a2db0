//! The six-region template and its straight witness.
//!
//! Both drawings put every twist region on a horizontal strand, in the order
//! `t₁ … t₆`. Inside a region the wandering arc zigzags through the strand,
//! so consecutive crossings bound a bigon. The connectors between regions
//! (see `book/src/template.md`) are:
//!
//! ```text
//! left(t1) - around the left end - right(t6)
//! strand right end - left(t2)          strand left end - right(t5)
//! left(t3) - left(t6)                  right(t3) - left(t5)
//! right(t1) - X - left(t4)             right(t2) - X - right(t4)
//! ```
//!
//! `X` is the one crossing off the strand, below it; the connector from `t₁`
//! passes over. In the witness the connector from `t₂` is pushed up through
//! the strand instead: it dives under the strand at a new position `a` just
//! before `t₄`, passes above `t₄`, and comes back under at a new position `b`
//! just after it.

use super::FamilyError;
use crate::diagram::{Diagram, Embedding};
use crate::straight::{ShadowCode, Side, StraightCode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TemplateSpec {
    pub t: [u32; 6],
}

impl TemplateSpec {
    /// `t₁, t₂, t₅, t₆` odd, `t₃, t₄` even, all positive.
    pub fn new(t: [u32; 6]) -> Result<Self, FamilyError> {
        for (i, &ti) in t.iter().enumerate() {
            let want_even = i == 2 || i == 3;
            if ti == 0 {
                return Err(FamilyError::SpecInvalid(format!(
                    "t{} must be positive",
                    i + 1
                )));
            }
            if (ti % 2 == 0) != want_even {
                let parity = if want_even { "even" } else { "odd" };
                return Err(FamilyError::SpecInvalid(format!(
                    "t{} = {ti} must be {parity}",
                    i + 1
                )));
            }
        }
        Ok(TemplateSpec { t })
    }

    /// The 9₃₂ base case.
    pub fn base() -> Self {
        TemplateSpec {
            t: [1, 1, 2, 2, 1, 1],
        }
    }

    pub fn sum(&self) -> usize {
        self.t.iter().map(|&x| x as usize).sum()
    }
}

impl std::str::FromStr for TemplateSpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let v = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| FamilyError::SpecInvalid(format!("bad entry {x:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let t: [u32; 6] = v.try_into().map_err(|v: Vec<u32>| {
            FamilyError::SpecInvalid(format!("expected 6 entries, got {}", v.len()))
        })?;
        TemplateSpec::new(t)
    }
}

const E: u8 = 0;
const N: u8 = 1;
const W: u8 = 2;
const S: u8 = 3;

/// Side a region's arc enters its first crossing from.
const ENTRY: [u8; 6] = [N, N, N, S, N, N];

fn flip(side: u8) -> u8 {
    if side == N {
        S
    } else {
        N
    }
}

/// Strand positions of each region and its two outer connector arms.
struct Regions {
    first: [usize; 6],
    left: [(usize, u8); 6],
    right: [(usize, u8); 6],
}

/// Joins the strand and region interiors. `first[i]` is the strand index of
/// region `i`'s first crossing.
fn lay_regions(e: &mut Embedding, t: &[u32; 6], first: [usize; 6], len: usize) -> Regions {
    for p in 1..len {
        e.join((p - 1, E), (p, W));
    }
    let mut left = [(0, 0); 6];
    let mut right = [(0, 0); 6];
    for i in 0..6 {
        let f = first[i];
        let ti = t[i] as usize;
        let mut exit = flip(ENTRY[i]);
        for k in 0..ti - 1 {
            e.join((f + k, exit), (f + k + 1, exit));
            exit = flip(exit);
        }
        left[i] = (f, ENTRY[i]);
        right[i] = (f + ti - 1, exit);
    }
    Regions { first, left, right }
}

fn join_common(e: &mut Embedding, r: &Regions, len: usize) {
    e.join(r.left[0], r.right[5]);
    e.join((len - 1, E), r.left[1]);
    e.join((0, W), r.right[4]);
    e.join(r.left[2], r.left[5]);
    e.join(r.right[2], r.left[4]);
}

/// The template drawing with region membership, for callers that twist
/// regions or read the layout.
#[derive(Debug, Clone)]
pub struct TemplateLayout {
    pub diagram: Diagram,
    /// Crossing ids of each region, in strand order.
    pub regions: [Vec<usize>; 6],
    /// The crossing off the strand.
    pub off_strand: usize,
    /// Over strand at each strand position.
    pub strand_over: Vec<bool>,
}

pub fn template_layout(spec: &TemplateSpec) -> TemplateLayout {
    let t = &spec.t;
    let s = spec.sum();
    let mut first = [0; 6];
    for i in 1..6 {
        first[i] = first[i - 1] + t[i - 1] as usize;
    }
    let mut e = Embedding::new(s + 1);
    let r = lay_regions(&mut e, t, first, s);
    join_common(&mut e, &r, s);
    let x = s;
    // X: arms 0 and 2 carry the connector from t1 (NE toward t4, SW back
    // toward t1), arms 1 and 3 the one from t2 (NW toward t2, SE toward t4).
    e.join(r.right[0], (x, 2));
    e.join((x, 0), r.left[3]);
    e.join(r.right[1], (x, 1));
    e.join((x, 3), r.right[3]);
    e.make_alternating(x, 0);
    let strand_over = (0..s).map(|p| e.over_axis[p] == 0).collect();
    let diagram = e
        .to_diagram((s - 1, E))
        .expect("template connections form a knot");
    let regions = std::array::from_fn(|i| (r.first[i]..r.first[i] + t[i] as usize).collect());
    TemplateLayout {
        diagram,
        regions,
        off_strand: x,
        strand_over,
    }
}

/// `K_t`: the alternating template diagram with `s + 1` crossings.
pub fn template_knot(spec: &TemplateSpec) -> Diagram {
    template_layout(spec).diagram
}

/// A straight code with `s + 2` crossings for `K_t`.
pub fn template_straight_witness(spec: &TemplateSpec) -> StraightCode {
    let t = &spec.t;
    let s = spec.sum();
    let len = s + 2;
    let base = template_layout(spec);
    // Strand order: t1 t2 t3 a t4 b t5 t6.
    let before4 = (t[0] + t[1] + t[2]) as usize;
    let a = before4;
    let b = a + 1 + t[3] as usize;
    let mut first = [0; 6];
    first[1] = t[0] as usize;
    first[2] = first[1] + t[1] as usize;
    first[3] = a + 1;
    first[4] = b + 1;
    first[5] = first[4] + t[4] as usize;
    let mut e = Embedding::new(len);
    let r = lay_regions(&mut e, t, first, len);
    join_common(&mut e, &r, len);
    e.join(r.right[0], r.left[3]);
    e.join(r.right[1], (a, S));
    e.join((a, N), (b, N));
    e.join((b, S), r.right[3]);

    let mut overs = Vec::with_capacity(len);
    let mut old = base.strand_over.iter();
    for p in 0..len {
        overs.push(if p == a || p == b {
            true
        } else {
            *old.next().unwrap()
        });
    }
    // The arc leaves the strand's right end; read its visits in order.
    let walk = e.traverse((len - 1, E));
    let (visits, arrivals): (Vec<u32>, Vec<Side>) = walk[..len]
        .iter()
        .map(|&(c, arm)| (c as u32 + 1, if arm == N { Side::U } else { Side::D }))
        .unzip();
    ShadowCode::new(visits, arrivals)
        .expect("witness connectors do not cross")
        .with_overs(overs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parity_rules() {
        assert!(TemplateSpec::new([2, 1, 2, 2, 1, 1]).is_err());
        assert!(TemplateSpec::new([1, 1, 3, 2, 1, 1]).is_err());
        assert!(TemplateSpec::new([1, 1, 2, 2, 1, 0]).is_err());
        assert_eq!(
            "1,1,2,2,1,1".parse::<TemplateSpec>().unwrap(),
            TemplateSpec::base()
        );
    }

    #[test]
    fn base_case_matches_drawn_witness() {
        let w = template_straight_witness(&TemplateSpec::base());
        assert_eq!(
            w.to_string(),
            "10; 2 5 8 7 6 1 10 3 4 9; UDUDUDDUDUD; 1010110110"
        );
        let k = template_knot(&TemplateSpec::base());
        assert_eq!(k.crossing_count(), 9);
        assert!(k.is_alternating() && k.is_reduced());
    }
}
