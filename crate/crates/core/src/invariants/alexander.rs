//! Alexander polynomial from the Wirtinger presentation.

use crate::diagram::Diagram;
use crate::poly::LaurentPolynomial;

/// Arc index of each edge label (1-based labels, index `label - 1`).
/// Arcs run from one under-crossing to the next.
pub(crate) fn edge_arcs(d: &Diagram) -> Vec<usize> {
    let n = d.crossing_count();
    let passes = d.passes();
    let mut arc = vec![0; 2 * n];
    let mut unders = 0;
    for e in 0..2 * n {
        // Edge e + 1 enters pass e, after passes 0..e.
        arc[e] = unders % n;
        if !passes[e].over {
            unders += 1;
        }
    }
    arc
}

/// Rows of the Alexander matrix, one per crossing, one column per arc.
/// `entry` maps (sign, role) to the matrix entry, role 0 = over arc,
/// 1 = incoming under arc, 2 = outgoing under arc.
pub(crate) fn wirtinger_rows<T: Clone>(
    d: &Diagram,
    zero: T,
    add: impl Fn(&T, &T) -> T,
    entry: impl Fn(i8, usize) -> T,
) -> Vec<Vec<T>> {
    let n = d.crossing_count();
    let arc = edge_arcs(d);
    let mut rows = vec![vec![zero; n]; n];
    for (c, row) in rows.iter_mut().enumerate() {
        let x = d.pd()[c];
        let s = d.sign(c);
        let i = arc[x[0] as usize - 1];
        let j = arc[x[2] as usize - 1];
        let k = arc[x[1] as usize - 1];
        for (col, role) in [(k, 0), (i, 1), (j, 2)] {
            row[col] = add(&row[col], &entry(s, role));
        }
    }
    rows
}

/// Determinant by fraction-free (Bareiss) elimination over `ℤ[t, t⁻¹]`.
pub fn poly_det(mut m: Vec<Vec<LaurentPolynomial>>) -> LaurentPolynomial {
    let n = m.len();
    if n == 0 {
        return LaurentPolynomial::one();
    }
    let mut sign = 1;
    let mut prev = LaurentPolynomial::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return LaurentPolynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].scale(sign)
}

/// Integer determinant by Bareiss elimination.
pub fn int_det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k]
                    .checked_mul(m[i][j])
                    .and_then(|a| m[i][k].checked_mul(m[k][j]).and_then(|b| a.checked_sub(b)))
                    .expect("determinant overflow");
                m[i][j] = num / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

fn minor<T: Clone>(rows: &[Vec<T>]) -> Vec<Vec<T>> {
    rows[1..].iter().map(|r| r[1..].to_vec()).collect()
}

/// Shifts to a symmetric exponent range and fixes the sign so `Δ(1) = 1`.
pub fn normalize_alexander(p: &LaurentPolynomial) -> LaurentPolynomial {
    if p.is_zero() {
        return p.clone();
    }
    let span = p.max_exp() - p.min_exp();
    let q = p.shift(-p.min_exp() - span / 2);
    if q.eval_unit_or_poly(1) < 0 {
        -q
    } else {
        q
    }
}

pub fn alexander(d: &Diagram) -> LaurentPolynomial {
    if d.crossing_count() == 0 {
        return LaurentPolynomial::one();
    }
    let t = LaurentPolynomial::monomial(1, 1);
    let one = LaurentPolynomial::one();
    let rows = wirtinger_rows(
        d,
        LaurentPolynomial::zero(),
        |a, b| a + b,
        |s, role| match (s > 0, role) {
            (true, 0) => &one - &t,
            (true, 1) => t.clone(),
            (true, _) => -&one,
            (false, 0) => &t - &one,
            (false, 1) => one.clone(),
            (false, _) => -&t,
        },
    );
    normalize_alexander(&poly_det(minor(&rows)))
}

/// `|Δ(−1)|` computed directly from the matrix at `t = −1`.
pub fn determinant_via_alexander(d: &Diagram) -> u64 {
    if d.crossing_count() == 0 {
        return 1;
    }
    let rows = wirtinger_rows(
        d,
        0i128,
        |a, b| a + b,
        |s, role| match (s > 0, role) {
            (true, 0) => 2,
            (true, 1) => -1,
            (true, _) => -1,
            (false, 0) => -2,
            (false, 1) => 1,
            (false, _) => 1,
        },
    );
    int_det(minor(&rows)).unsigned_abs() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil() {
        let d = Diagram::from_pd(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap();
        assert_eq!(
            alexander(&d),
            LaurentPolynomial::from_terms([(-1, 1), (0, -1), (1, 1)])
        );
        assert_eq!(determinant_via_alexander(&d), 3);
    }

    #[test]
    fn figure_eight() {
        let d =
            Diagram::from_pd(&[[4, 2, 5, 1], [8, 6, 1, 5], [6, 3, 7, 4], [2, 7, 3, 8]]).unwrap();
        assert_eq!(
            alexander(&d),
            LaurentPolynomial::from_terms([(-1, -1), (0, 3), (1, -1)])
        );
        assert_eq!(determinant_via_alexander(&d), 5);
    }

    #[test]
    fn unknot_and_kinks() {
        assert_eq!(alexander(&Diagram::unknot()), LaurentPolynomial::one());
        let k = Diagram::from_pd(&[[1, 1, 2, 2]]).unwrap();
        assert_eq!(alexander(&k), LaurentPolynomial::one());
        assert_eq!(determinant_via_alexander(&k), 1);
    }

    #[test]
    fn small_determinants() {
        let m = vec![vec![2, 1], vec![1, 2]];
        assert_eq!(int_det(m), 3);
        let m = vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 5]];
        assert_eq!(int_det(m), -5);
    }
}
