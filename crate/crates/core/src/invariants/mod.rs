//! Polynomial invariants and the mirror-canonical fingerprint used to name
//! knots.

mod alexander;
mod bracket;
mod goeritz;

pub use alexander::{alexander, determinant_via_alexander, int_det, normalize_alexander, poly_det};
pub(crate) use bracket::bracket_in_order;
pub use bracket::{
    bracket, jones, jones_from_bracket, kauffman_bracket, loop_value, STATE_SUM_CAP,
};
pub use goeritz::{determinant_via_goeritz, goeritz, matrix_signature, signature, Goeritz};

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::Diagram;
use crate::poly::LaurentPolynomial;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("{crossings} crossings exceeds the state-sum cap of {cap}")]
    BudgetExceeded { crossings: usize, cap: usize },
}

/// Determinant, cross-checked between the Alexander and Goeritz routes.
pub fn determinant(d: &Diagram) -> u64 {
    let a = determinant_via_alexander(d);
    debug_assert_eq!(a, determinant_via_goeritz(d), "determinant routes disagree");
    a
}

/// Invariants that agree on a knot and its mirror image.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub determinant: u64,
    #[serde(with = "poly_serde")]
    pub alexander: LaurentPolynomial,
    #[serde(with = "poly_serde")]
    pub jones_canonical: LaurentPolynomial,
    pub signature_abs: u32,
}

impl Fingerprint {
    /// Assembles a fingerprint from a Jones polynomial, Alexander polynomial
    /// and signature already computed.
    pub fn from_parts(
        jones: &LaurentPolynomial,
        alexander: &LaurentPolynomial,
        signature: i32,
    ) -> Self {
        let alexander = canonical_alexander(alexander);
        let determinant = alexander.eval_unit_or_poly(-1).unsigned_abs() as u64;
        Fingerprint {
            determinant,
            alexander,
            jones_canonical: canonical_jones(jones),
            signature_abs: signature.unsigned_abs(),
        }
    }

    pub fn key(&self) -> String {
        format!(
            "det={} | alex={} | jones={} | sig={}",
            self.determinant,
            self.alexander.serialize(),
            self.jones_canonical.serialize(),
            self.signature_abs
        )
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "det {}, Δ = {}, V = {}, |σ| = {}",
            self.determinant, self.alexander, self.jones_canonical, self.signature_abs
        )
    }
}

/// Symmetric exponent range, positive leading coefficient.
pub fn canonical_alexander(p: &LaurentPolynomial) -> LaurentPolynomial {
    let q = normalize_alexander(p);
    if q.leading() < 0 {
        -q
    } else {
        q
    }
}

/// The smaller of `V(t)` and `V(t⁻¹)` under the serialization order.
pub fn canonical_jones(v: &LaurentPolynomial) -> LaurentPolynomial {
    let m = v.mirror();
    if m.serial_cmp(v) == Ordering::Less {
        m
    } else {
        v.clone()
    }
}

pub fn fingerprint(d: &Diagram) -> Fingerprint {
    Fingerprint::from_parts(&jones(d), &alexander(d), signature(d))
}

mod poly_serde {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::poly::LaurentPolynomial;

    pub fn serialize<S: Serializer>(p: &LaurentPolynomial, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&p.serialize())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<LaurentPolynomial, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fingerprint_is_mirror_invariant_on_trefoil() {
        let d = Diagram::from_pd(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap();
        let f = fingerprint(&d);
        assert_eq!(f, fingerprint(&d.mirror()));
        assert_eq!(f.determinant, 3);
        assert_eq!(f.signature_abs, 2);
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(serde_json::from_str::<Fingerprint>(&json).unwrap(), f);
    }
}
