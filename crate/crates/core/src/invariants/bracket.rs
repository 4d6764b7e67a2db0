//! The Kauffman bracket and Jones polynomial.
//!
//! Two routes: the literal sum over all `2ⁿ` smoothing states, and a
//! contraction that absorbs crossings one at a time while tracking the
//! noncrossing pairings of the open edges. They must agree; the contraction
//! is what the rest of the crate calls.

use std::collections::HashMap;

use super::InvariantError;
use crate::diagram::Diagram;
use crate::poly::LaurentPolynomial;

/// Crossing cap for the state sum.
pub const STATE_SUM_CAP: usize = 20;

/// `d = −A² − A⁻²`.
pub fn loop_value() -> LaurentPolynomial {
    LaurentPolynomial::from_terms([(2, -1), (-2, -1)])
}

/// Loop count of one smoothing state. Bit `c` of `state` set means the
/// B-smoothing at crossing `c`.
fn state_loops(pd: &[[u32; 4]], state: u64, parent: &mut Vec<usize>) -> usize {
    let m = 2 * pd.len();
    parent.clear();
    parent.extend(0..m);
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut comps = m;
    let mut join = |p: &mut Vec<usize>, a: u32, b: u32| {
        let (ra, rb) = (find(p, a as usize - 1), find(p, b as usize - 1));
        if ra != rb {
            p[ra] = rb;
            comps -= 1;
        }
    };
    for (c, x) in pd.iter().enumerate() {
        if state >> c & 1 == 0 {
            join(parent, x[0], x[1]);
            join(parent, x[2], x[3]);
        } else {
            join(parent, x[0], x[3]);
            join(parent, x[1], x[2]);
        }
    }
    comps
}

/// The bracket by full state sum, normalized so the crossingless circle is 1.
pub fn kauffman_bracket(d: &Diagram) -> Result<LaurentPolynomial, InvariantError> {
    let n = d.crossing_count();
    if n > STATE_SUM_CAP {
        return Err(InvariantError::BudgetExceeded {
            crossings: n,
            cap: STATE_SUM_CAP,
        });
    }
    if n == 0 {
        return Ok(LaurentPolynomial::one());
    }
    // counts[b][loops] = number of states with b B-smoothings and that many loops.
    let mut counts = vec![vec![0i128; 2 * n + 1]; n + 1];
    let mut scratch = Vec::new();
    for state in 0..1u64 << n {
        let loops = state_loops(d.pd(), state, &mut scratch);
        counts[state.count_ones() as usize][loops] += 1;
    }
    let dl = loop_value();
    let mut powers = vec![LaurentPolynomial::one()];
    for k in 1..=2 * n {
        powers.push(&powers[k - 1] * &dl);
    }
    let mut total = LaurentPolynomial::zero();
    for (b, row) in counts.iter().enumerate() {
        for (loops, &cnt) in row.iter().enumerate() {
            if cnt != 0 {
                let a_exp = (n - b) as i32 - b as i32;
                total += &powers[loops - 1].shift(a_exp).scale(cnt);
            }
        }
    }
    Ok(total)
}

/// Arcs of a partial state: each open edge label paired with its partner.
type Pairing = Vec<(u32, u32)>;

/// Joins `old` and `new` arc sets along shared labels. Returns the pairing
/// of the labels that remain open and the number of closed loops.
fn glue(old: &Pairing, new: &[(u32, u32)]) -> (Pairing, usize) {
    let mut inc: HashMap<u32, Vec<usize>> = HashMap::new();
    let arcs: Vec<(u32, u32)> = old.iter().chain(new.iter()).copied().collect();
    for (i, &(a, b)) in arcs.iter().enumerate() {
        inc.entry(a).or_default().push(i);
        inc.entry(b).or_default().push(i);
    }
    let mut used = vec![false; arcs.len()];
    let mut out = Vec::new();
    let mut ends: Vec<u32> = inc
        .iter()
        .filter(|(_, v)| v.len() == 1)
        .map(|(&l, _)| l)
        .collect();
    ends.sort_unstable();
    for &start in &ends {
        let mut arc = inc[&start][0];
        if used[arc] {
            continue;
        }
        let mut at = start;
        loop {
            used[arc] = true;
            let (a, b) = arcs[arc];
            let other = if a == at { b } else { a };
            let v = &inc[&other];
            if v.len() == 1 {
                out.push((start.min(other), start.max(other)));
                break;
            }
            // A label joined to itself is a kink-type arc occupying both slots.
            arc = if v[0] == arc { v[1] } else { v[0] };
            at = other;
        }
    }
    let mut loops = 0;
    for s in 0..arcs.len() {
        if used[s] {
            continue;
        }
        loops += 1;
        let mut arc = s;
        let mut at = arcs[s].0;
        while !used[arc] {
            used[arc] = true;
            let (a, b) = arcs[arc];
            let other = if a == at { b } else { a };
            let v = &inc[&other];
            arc = if v[0] == arc { v[1] } else { v[0] };
            at = other;
        }
    }
    out.sort_unstable();
    (out, loops)
}

/// Order in which to absorb crossings: greedily the one sharing the most
/// labels with what has been absorbed.
fn contraction_order(pd: &[[u32; 4]]) -> Vec<usize> {
    let n = pd.len();
    let mut done = vec![false; n];
    let mut open: HashMap<u32, u8> = HashMap::new();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let pick = (0..n)
            .filter(|&c| !done[c])
            .max_by_key(|&c| {
                let shared = pd[c].iter().filter(|l| open.contains_key(l)).count();
                (shared, std::cmp::Reverse(c))
            })
            .unwrap();
        done[pick] = true;
        order.push(pick);
        for &l in &pd[pick] {
            let e = open.entry(l).or_insert(0);
            *e += 1;
            if *e == 2 {
                open.remove(&l);
            }
        }
    }
    order
}

/// The bracket by crossing-at-a-time contraction. No crossing cap.
pub fn bracket(d: &Diagram) -> LaurentPolynomial {
    bracket_in_order(d.pd(), &contraction_order(d.pd()))
}

/// Contraction absorbing crossings in the given order. The states are the
/// noncrossing pairings of the edges cut so far, so an order that sweeps
/// across the diagram keeps them few.
pub(crate) fn bracket_in_order(pd: &[[u32; 4]], order: &[usize]) -> LaurentPolynomial {
    if pd.is_empty() {
        return LaurentPolynomial::one();
    }
    let dl = loop_value();
    let mut states: HashMap<Pairing, LaurentPolynomial> = HashMap::new();
    states.insert(Vec::new(), LaurentPolynomial::one());
    for &c in order {
        let x = pd[c];
        let smoothings = [
            ([(x[0], x[1]), (x[2], x[3])], 1),
            ([(x[0], x[3]), (x[1], x[2])], -1),
        ];
        let mut next: HashMap<Pairing, LaurentPolynomial> = HashMap::new();
        let mut entries: Vec<_> = states.into_iter().collect();
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        for (pairing, coeff) in entries {
            for (arcs, a_exp) in &smoothings {
                let (p, loops) = glue(&pairing, arcs);
                let mut term = coeff.shift(*a_exp);
                for _ in 0..loops {
                    term = &term * &dl;
                }
                next.entry(p).or_default().add_assign_ref(&term);
            }
        }
        next.retain(|_, v| !v.is_zero());
        states = next;
    }
    let total = states.remove(&Vec::new()).unwrap_or_default();
    total.div_exact(&dl).expect("at least one loop closes")
}

/// Writhe-normalized Jones polynomial in `t`, with `A = t^{-1/4}`.
pub fn jones_from_bracket(bracket: &LaurentPolynomial, writhe: i32) -> LaurentPolynomial {
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let f = bracket.shift(-3 * writhe).scale(sign);
    f.compress_exponents(4)
        .expect("knot brackets times the writhe factor live in ℤ[A⁴, A⁻⁴]")
        .mirror()
}

pub fn jones(d: &Diagram) -> LaurentPolynomial {
    jones_from_bracket(&bracket(d), d.writhe())
}

trait AddAssignRef {
    fn add_assign_ref(&mut self, other: &LaurentPolynomial);
}

impl AddAssignRef for LaurentPolynomial {
    fn add_assign_ref(&mut self, other: &LaurentPolynomial) {
        *self += other;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> Diagram {
        Diagram::from_pd(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap()
    }

    #[test]
    fn kink_brackets_by_two_state_expansion() {
        // A-state: 2 loops, B-state: 1 loop.
        let pos = Diagram::from_pd(&[[1, 1, 2, 2]]).unwrap();
        let neg = Diagram::from_pd(&[[1, 2, 2, 1]]).unwrap();
        let a3 = LaurentPolynomial::monomial(-1, 3);
        let am3 = LaurentPolynomial::monomial(-1, -3);
        assert_eq!(kauffman_bracket(&pos).unwrap(), a3);
        assert_eq!(kauffman_bracket(&neg).unwrap(), am3);
        assert_eq!(bracket(&pos), a3);
        assert_eq!(bracket(&neg), am3);
        assert_eq!(jones(&pos), LaurentPolynomial::one());
        assert_eq!(jones(&neg), LaurentPolynomial::one());
    }

    #[test]
    fn trefoil_jones_and_mirror() {
        let d = trefoil();
        assert_eq!(kauffman_bracket(&d).unwrap(), bracket(&d));
        let v = jones(&d);
        // All crossings negative here: the left-handed trefoil.
        let left = LaurentPolynomial::from_terms([(-1, 1), (-3, 1), (-4, -1)]);
        assert_eq!(v, left);
        assert_eq!(jones(&d.mirror()), left.mirror());
    }

    #[test]
    fn unknot_is_one() {
        assert_eq!(
            kauffman_bracket(&Diagram::unknot()).unwrap(),
            LaurentPolynomial::one()
        );
        assert_eq!(jones(&Diagram::unknot()), LaurentPolynomial::one());
    }

    #[test]
    fn budget_is_enforced() {
        // A 21-crossing chain of kinks.
        let n = 21u32;
        let pd: Vec<[u32; 4]> = (0..n)
            .map(|k| {
                let a = 2 * k + 1;
                let b = 2 * k + 2;
                let c = if k + 1 == n { 1 } else { 2 * k + 3 };
                [a, b, b, c]
            })
            .collect();
        let d = Diagram::from_pd(&pd).unwrap();
        assert!(matches!(
            kauffman_bracket(&d),
            Err(InvariantError::BudgetExceeded { .. })
        ));
        assert_eq!(jones(&d), LaurentPolynomial::one());
    }
}
