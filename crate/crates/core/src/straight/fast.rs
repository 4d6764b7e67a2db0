//! Invariants computed straight from a code.

use super::{ShadowCode, StraightCode};
use crate::invariants::bracket_in_order;
use crate::poly::LaurentPolynomial;

/// The Kauffman bracket by a left-to-right sweep along the strand. The
/// diagram's crossings are indexed by strand position, so absorbing them in
/// index order cuts only the edges crossing a vertical line.
pub fn bracket_transfer(code: &StraightCode) -> LaurentPolynomial {
    let d = code.to_diagram();
    let order: Vec<usize> = (0..code.n()).collect();
    bracket_in_order(d.pd(), &order)
}

/// `|Δ(−1)|` from the Fox colouring matrix, without building a diagram.
pub fn code_determinant(code: &StraightCode) -> u64 {
    let mask = code.overs().iter().fold(0u64, |m, &b| (m << 1) | b as u64);
    MaskScanner::new(code.shadow()).determinant(mask)
}

/// Determinants of every code on one shadow. Over bits come as a mask with
/// strand position 1 in the most significant of the `n` bits.
#[derive(Debug, Clone)]
pub struct MaskScanner {
    n: usize,
    /// Strand position (0-based) crossed by pass `k`, for `k` in `0..2n`.
    pos: Vec<usize>,
}

impl MaskScanner {
    pub fn new(s: &ShadowCode) -> Self {
        let n = s.n();
        let mut pos: Vec<usize> = (0..n).collect();
        pos.extend(s.visits().iter().map(|&v| v as usize - 1));
        MaskScanner { n, pos }
    }

    fn over(&self, mask: u64, k: usize) -> bool {
        let bit = mask >> (self.n - 1 - self.pos[k]) & 1 == 1;
        if k < self.n {
            bit
        } else {
            !bit
        }
    }

    /// Row `p` of the colouring matrix has 2 at the over arc and −1 at each
    /// under arc; one row and column are deleted.
    pub fn determinant(&self, mask: u64) -> u64 {
        let n = self.n;
        if n <= 1 {
            return 1;
        }
        let m = 2 * n;
        let mut arc_in = [0usize; 64];
        let mut unders = 0;
        for (k, slot) in arc_in.iter_mut().enumerate().take(m) {
            *slot = unders % n;
            if !self.over(mask, k) {
                unders += 1;
            }
        }
        let mut mat = [[0i64; 32]; 32];
        for k in 0..m {
            let c = self.pos[k];
            if c == 0 {
                continue;
            }
            let row = &mut mat[c - 1];
            let a = arc_in[k];
            if self.over(mask, k) {
                if a != 0 {
                    row[a - 1] += 2;
                }
            } else {
                let b = arc_in[(k + 1) % m];
                if a != 0 {
                    row[a - 1] -= 1;
                }
                if b != 0 {
                    row[b - 1] -= 1;
                }
            }
        }
        bareiss(&mut mat, n - 1).unsigned_abs()
    }
}

fn bareiss(m: &mut [[i64; 32]; 32], size: usize) -> i64 {
    let mut sign = 1;
    let mut prev = 1i64;
    for k in 0..size {
        if m[k][k] == 0 {
            match (k + 1..size).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    if size == 0 {
        1
    } else {
        sign * m[size - 1][size - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{determinant, kauffman_bracket};
    use crate::straight::{enumerate_straight, PruneFlags};

    #[test]
    fn transfer_and_determinant_agree_with_diagram_routes() {
        for n in 1..=6 {
            for c in enumerate_straight(n, PruneFlags::NONE) {
                let d = c.to_diagram();
                assert_eq!(bracket_transfer(&c), kauffman_bracket(&d).unwrap(), "{c}");
                assert_eq!(code_determinant(&c), determinant(&d), "{c}");
            }
        }
    }
}
