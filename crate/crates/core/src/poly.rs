//! Exact Laurent polynomials with integer coefficients.
//!
//! Every invariant in this crate is carried by [`LaurentPolynomial`]: the
//! Kauffman bracket in `A`, the Jones polynomial in `t`, and the Alexander
//! polynomial in `t`. Coefficients are `i128` and every operation is checked;
//! an overflow panics instead of wrapping, so a value that is returned is
//! always exact.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use thiserror::Error;

/// A Laurent polynomial `Σ cᵢ xⁱ` stored densely from its lowest exponent.
///
/// The representation is normalized: no leading or trailing zero
/// coefficients, and the zero polynomial has no coefficients at all (its
/// offset is 0). Two equal polynomials therefore compare equal field by field.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolynomial {
    offset: i32,
    coeffs: Vec<i128>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyParseError {
    #[error("expected `offset=<int>; coeffs=[...]`, got {0:?}")]
    Syntax(String),
    #[error("bad integer {0:?}")]
    Integer(String),
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `coeff · x^exp`.
    pub fn monomial(coeff: i128, exp: i32) -> Self {
        Self::from_coeffs(exp, vec![coeff])
    }

    /// Builds `Σ coeffs[i] x^(offset+i)`, trimming zeros.
    pub fn from_coeffs(offset: i32, coeffs: Vec<i128>) -> Self {
        let mut p = Self { offset, coeffs };
        p.normalize();
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i32, i128)>>(terms: I) -> Self {
        let mut acc = Self::zero();
        for (e, c) in terms {
            acc += &Self::monomial(c, e);
        }
        acc
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().position(|&c| c != 0);
        match lead {
            None => {
                self.coeffs.clear();
                self.offset = 0;
            }
            Some(first) => {
                let last = self.coeffs.iter().rposition(|&c| c != 0).unwrap();
                self.coeffs.truncate(last + 1);
                self.coeffs.drain(..first);
                self.offset += first as i32;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn min_exp(&self) -> i32 {
        self.offset
    }

    /// Highest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn max_exp(&self) -> i32 {
        if self.is_zero() {
            0
        } else {
            self.offset + self.coeffs.len() as i32 - 1
        }
    }

    /// Dense coefficients from [`min_exp`](Self::min_exp) to
    /// [`max_exp`](Self::max_exp).
    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: i32) -> i128 {
        let i = exp - self.offset;
        if i < 0 {
            return 0;
        }
        self.coeffs.get(i as usize).copied().unwrap_or(0)
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i128)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.offset + i as i32, c))
    }

    /// Leading coefficient (0 for the zero polynomial).
    pub fn leading(&self) -> i128 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            offset: self.offset + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Substitutes `x ↦ x⁻¹`.
    pub fn mirror(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self {
            offset: -self.max_exp(),
            coeffs,
        }
    }

    /// Substitutes `x ↦ x^k` for `k ≠ 0`.
    pub fn substitute_power(&self, k: i32) -> Self {
        assert!(k != 0, "substitution exponent must be nonzero");
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c)))
    }

    /// Keeps only exponents divisible by `k` and divides them by `k`.
    /// Returns `None` if some nonzero term has an exponent not divisible by `k`.
    pub fn compress_exponents(&self, k: i32) -> Option<Self> {
        let mut out = Vec::new();
        for (e, c) in self.terms() {
            if e % k != 0 {
                return None;
            }
            out.push((e / k, c));
        }
        Some(Self::from_terms(out))
    }

    pub fn scale(&self, s: i128) -> Self {
        Self::from_coeffs(
            self.offset,
            self.coeffs.iter().map(|&c| checked_mul(c, s)).collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates at an integer point. Negative exponents require `x = ±1`.
    pub fn eval_unit_or_poly(&self, x: i128) -> i128 {
        let mut acc: i128 = 0;
        for (e, c) in self.terms() {
            let v = if e >= 0 {
                checked_pow(x, e as u32)
            } else {
                assert!(x == 1 || x == -1, "negative exponent at non-unit point");
                checked_pow(x, (-e) as u32)
            };
            acc = acc.checked_add(checked_mul(c, v)).expect("overflow");
        }
        acc
    }

    /// Exact division. Returns `None` when `divisor` does not divide `self`
    /// in `ℤ[x, x⁻¹]`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d = &divisor.coeffs;
        let dl = *d.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < d.len() {
            return None;
        }
        let qlen = rem.len() - d.len() + 1;
        let mut q = vec![0i128; qlen];
        for i in (0..qlen).rev() {
            let top = rem[i + d.len() - 1];
            if top == 0 {
                continue;
            }
            if top % dl != 0 {
                return None;
            }
            let qc = top / dl;
            q[i] = qc;
            for (j, &dc) in d.iter().enumerate() {
                rem[i + j] = rem[i + j]
                    .checked_sub(checked_mul(qc, dc))
                    .expect("overflow");
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return None;
        }
        Some(Self::from_coeffs(self.offset - divisor.offset, q))
    }

    /// Text form `offset=<min exponent>; coeffs=[c_min,...,c_max]`.
    pub fn serialize(&self) -> String {
        let body: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("offset={}; coeffs=[{}]", self.offset, body.join(","))
    }

    /// Ordering used for mirror canonicalization: by offset, then by the
    /// coefficient vector lexicographically.
    pub fn serial_cmp(&self, other: &Self) -> Ordering {
        (self.offset, &self.coeffs).cmp(&(other.offset, &other.coeffs))
    }
}

fn checked_mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("coefficient overflow")
}

fn checked_pow(a: i128, e: u32) -> i128 {
    a.checked_pow(e).expect("coefficient overflow")
}

impl FromStr for LaurentPolynomial {
    type Err = PolyParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = || PolyParseError::Syntax(s.to_string());
        let (off, rest) = s.trim().split_once(';').ok_or_else(syntax)?;
        let off = off.trim().strip_prefix("offset=").ok_or_else(syntax)?;
        let offset: i32 = off
            .trim()
            .parse()
            .map_err(|_| PolyParseError::Integer(off.to_string()))?;
        let list = rest
            .trim()
            .strip_prefix("coeffs=[")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(syntax)?;
        let mut coeffs = Vec::new();
        for tok in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            coeffs.push(
                tok.parse()
                    .map_err(|_| PolyParseError::Integer(tok.to_string()))?,
            );
        }
        Ok(Self::from_coeffs(offset, coeffs))
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            first = false;
            let a = c.unsigned_abs();
            match e {
                0 => write!(f, "{}", a)?,
                _ => {
                    if a != 1 {
                        write!(f, "{}", a)?;
                    }
                    if e == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{}", e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.offset.min(rhs.offset);
        let hi = self.max_exp().max(rhs.max_exp());
        let mut coeffs = vec![0i128; (hi - lo + 1) as usize];
        for p in [self, rhs] {
            let base = (p.offset - lo) as usize;
            for (i, &c) in p.coeffs.iter().enumerate() {
                coeffs[base + i] = coeffs[base + i].checked_add(c).expect("overflow");
            }
        }
        LaurentPolynomial::from_coeffs(lo, coeffs)
    }
}

impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self + &rhs
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        *self = &*self + rhs;
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        self.scale(-1)
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        self.scale(-1)
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Sub for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self - &rhs
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPolynomial::zero();
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j]
                    .checked_add(checked_mul(a, b))
                    .expect("overflow");
            }
        }
        LaurentPolynomial::from_coeffs(self.offset + rhs.offset, coeffs)
    }
}

impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(offset: i32, c: &[i128]) -> LaurentPolynomial {
        LaurentPolynomial::from_coeffs(offset, c.to_vec())
    }

    #[test]
    fn normalization_trims_zeros() {
        let a = p(-3, &[0, 0, 1, 0, -2, 0]);
        assert_eq!(a.min_exp(), -1);
        assert_eq!(a.max_exp(), 1);
        assert_eq!(a.coeffs(), &[1, 0, -2]);
        assert!(p(5, &[0, 0]).is_zero());
        assert_eq!(p(5, &[0, 0]), LaurentPolynomial::zero());
    }

    #[test]
    fn loop_value_squared() {
        // (-A^2 - A^-2)^2 = A^4 + 2 + A^-4
        let d = p(-2, &[-1, 0, 0, 0, -1]);
        assert_eq!(&d * &d, p(-4, &[1, 0, 0, 0, 2, 0, 0, 0, 1]));
    }

    #[test]
    fn serialization_round_trip_example() {
        let s = "offset=-4; coeffs=[1,0,-1,1,0,0,0,0,1]";
        let a: LaurentPolynomial = s.parse().unwrap();
        assert_eq!(a.serialize(), s);
        assert_eq!(a.coeff(-4), 1);
        assert_eq!(a.coeff(-2), -1);
        assert_eq!(a.coeff(4), 1);
        assert!("offset=1 coeffs=[1]".parse::<LaurentPolynomial>().is_err());
    }

    #[test]
    fn exact_division() {
        let a = p(0, &[-1, 1]); // t - 1
        let b = p(0, &[1, 1]); // t + 1
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(p(0, &[1, 0, 1]).div_exact(&b), None);
        assert_eq!(p(0, &[2, 2]).div_exact(&p(0, &[3])), None);
    }

    #[test]
    fn evaluation_and_mirror() {
        let alex = p(-1, &[1, -1, 1]);
        assert_eq!(alex.eval_unit_or_poly(1), 1);
        assert_eq!(alex.eval_unit_or_poly(-1), -3);
        let j = p(1, &[1, 0, 1, -1]);
        assert_eq!(j.mirror(), p(-4, &[-1, 1, 0, 1]));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPolynomial> {
        (-6i32..6, proptest::collection::vec(-20i128..20, 0..7))
            .prop_map(|(o, c)| LaurentPolynomial::from_coeffs(o, c))
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            prop_assert_eq!(a.mirror().mirror(), a.clone());
            if !b.is_zero() {
                prop_assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
            }
            let parsed: LaurentPolynomial = a.serialize().parse().unwrap();
            prop_assert_eq!(parsed, a);
        }
    }
}
