//! Goeritz matrix, determinant and signature.

use num_rational::Ratio;

use super::alexander::int_det;
use crate::diagram::Diagram;

/// Goeritz data for one shading of the checkerboard colouring.
#[derive(Debug, Clone)]
pub struct Goeritz {
    /// Reduced matrix (first shaded face deleted).
    pub matrix: Vec<Vec<i128>>,
    /// Gordon–Litherland correction: sum of `η` over crossings whose
    /// shaded corners sit between one incoming and one outgoing edge.
    pub correction: i32,
}

/// `η = +1` when the shaded corners at a crossing are corners 0 and 2.
fn eta(shaded_parity: u8) -> i32 {
    if shaded_parity == 0 {
        1
    } else {
        -1
    }
}

#[allow(clippy::needless_range_loop)]
pub fn goeritz(d: &Diagram, shade: u8) -> Goeritz {
    let n = d.crossing_count();
    let faces = d.faces();
    let mut index = vec![usize::MAX; faces.count()];
    let mut k = 0;
    for (f, slot) in index.iter_mut().enumerate() {
        if faces.colour(f) == shade {
            *slot = k;
            k += 1;
        }
    }
    let mut g = vec![vec![0i128; k]; k];
    let mut correction = 0;
    for c in 0..n {
        let p = if faces.colour(faces.corner_face(c, 0)) == shade {
            0
        } else {
            1
        };
        let e = eta(p);
        let f1 = index[faces.corner_face(c, p)];
        let f2 = index[faces.corner_face(c, p + 2)];
        if f1 != f2 {
            g[f1][f2] -= e as i128;
            g[f2][f1] -= e as i128;
        }
        // Corner p lies between slots p and p + 1; under-in is slot 0 and
        // the over strand enters at slot 1 or 3.
        let over_in = d.over_in_slot(c);
        let incoming = |s: u8| s == 0 || s == over_in;
        if incoming(p) != incoming(p + 1) {
            correction += e;
        }
    }
    for i in 0..k {
        let s: i128 = (0..k).filter(|&j| j != i).map(|j| g[i][j]).sum();
        g[i][i] = -s;
    }
    let matrix = if k == 0 {
        Vec::new()
    } else {
        g[1..].iter().map(|r| r[1..].to_vec()).collect()
    };
    Goeritz { matrix, correction }
}

/// Determinant through the Goeritz matrix.
pub fn determinant_via_goeritz(d: &Diagram) -> u64 {
    if d.crossing_count() == 0 {
        return 1;
    }
    int_det(goeritz(d, 0).matrix).unsigned_abs() as u64
}

/// Signature (positive minus negative eigenvalues) of a symmetric integer
/// matrix, by exact congruence diagonalization.
#[allow(clippy::needless_range_loop)]
pub fn matrix_signature(m: &[Vec<i128>]) -> i32 {
    let mut a: Vec<Vec<Ratio<i128>>> = m
        .iter()
        .map(|r| r.iter().map(|&x| Ratio::from_integer(x)).collect())
        .collect();
    let zero = Ratio::from_integer(0);
    let mut sig = 0;
    while !a.is_empty() {
        let size = a.len();
        let piv = (0..size).find(|&i| a[i][i] != zero);
        let p = match piv {
            Some(p) => p,
            None => {
                let off = (0..size)
                    .flat_map(|i| (0..size).map(move |j| (i, j)))
                    .find(|&(i, j)| a[i][j] != zero);
                let Some((i, j)) = off else { break };
                // e_i ← e_i + e_j makes the diagonal entry 2·a_ij.
                for r in 0..size {
                    let v = a[r][j];
                    a[r][i] += v;
                }
                for col in 0..size {
                    let v = a[j][col];
                    a[i][col] += v;
                }
                i
            }
        };
        let pv = a[p][p];
        sig += if pv > zero { 1 } else { -1 };
        let row = a[p].clone();
        let mut next = Vec::with_capacity(size - 1);
        for (r, ar) in a.iter().enumerate() {
            if r == p {
                continue;
            }
            let f = ar[p] / pv;
            next.push(
                (0..size)
                    .filter(|&c| c != p)
                    .map(|c| ar[c] - f * row[c])
                    .collect(),
            );
        }
        a = next;
    }
    sig
}

/// Knot signature, with the right-handed trefoil at −2.
pub fn signature(d: &Diagram) -> i32 {
    if d.crossing_count() == 0 {
        return 0;
    }
    let g = goeritz(d, 0);
    matrix_signature(&g.matrix) - g.correction
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrix_signature_small_cases() {
        assert_eq!(matrix_signature(&[vec![2, 1], vec![1, 2]]), 2);
        assert_eq!(matrix_signature(&[vec![0, 1], vec![1, 0]]), 0);
        assert_eq!(matrix_signature(&[vec![-3]]), -1);
        assert_eq!(matrix_signature(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(
            matrix_signature(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, -1]]),
            -1
        );
    }

    fn trefoil() -> Diagram {
        Diagram::from_pd(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap()
    }

    #[test]
    fn both_shadings_agree() {
        for d in [trefoil(), trefoil().mirror()] {
            let a = goeritz(&d, 0);
            let b = goeritz(&d, 1);
            assert_eq!(
                matrix_signature(&a.matrix) - a.correction,
                matrix_signature(&b.matrix) - b.correction
            );
            assert_eq!(int_det(a.matrix).abs(), int_det(b.matrix).abs());
        }
    }

    #[test]
    fn trefoil_signature_and_determinant() {
        // This PD has three negative crossings: the left-handed trefoil.
        assert_eq!(signature(&trefoil()), 2);
        assert_eq!(signature(&trefoil().mirror()), -2);
        assert_eq!(determinant_via_goeritz(&trefoil()), 3);
    }

    #[test]
    fn kinks_have_zero_signature() {
        for pd in [[[1, 1, 2, 2]], [[1, 2, 2, 1]]] {
            let d = Diagram::from_pd(&pd).unwrap();
            assert_eq!(signature(&d), 0);
            assert_eq!(determinant_via_goeritz(&d), 1);
        }
    }
}
