//! Dense univariate polynomials over a finite field.
//!
//! Coefficients are stored low degree first with trailing zeros trimmed, so
//! the zero polynomial is the empty vector and `degree()` returns `None` for
//! it.

use serde::{Deserialize, Deserializer, Serialize};

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElem};

/// Serializes as its coefficient list, low degree first.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct Poly {
    coeffs: Vec<FieldElem>,
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        // re-trim so the degree invariant survives round-trips
        Ok(Poly::from_coeffs(Vec::deserialize(d)?))
    }
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: FieldElem) -> Poly {
        Poly::from_coeffs(vec![c])
    }

    /// Build from coefficients, low degree first; trailing zeros are trimmed.
    pub fn from_coeffs(mut coeffs: Vec<FieldElem>) -> Poly {
        while coeffs.last().is_some_and(|c| c.0 == 0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// The monomial X.
    pub fn x(field: &Field) -> Poly {
        Poly::from_coeffs(vec![field.zero(), field.one()])
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    /// Coefficient of X^j (zero beyond the stored degree).
    pub fn coeff(&self, j: usize) -> FieldElem {
        self.coeffs.get(j).copied().unwrap_or(FieldElem(0))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation at a point.
    pub fn eval(&self, field: &Field, a: FieldElem) -> FieldElem {
        let mut acc = field.zero();
        for &c in self.coeffs.iter().rev() {
            acc = field.add(field.mul(acc, a), c);
        }
        acc
    }

    pub fn add(&self, field: &Field, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| field.add(self.coeff(i), other.coeff(i)))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn sub(&self, field: &Field, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| field.sub(self.coeff(i), other.coeff(i)))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, field: &Field, c: FieldElem) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|&a| field.mul(a, c)).collect())
    }

    pub fn mul(&self, field: &Field, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.0 == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = field.add(coeffs[i + j], field.mul(a, b));
            }
        }
        Poly::from_coeffs(coeffs)
    }

    /// Quotient and remainder; the divisor must be nonzero.
    pub fn div_rem(&self, field: &Field, divisor: &Poly) -> Result<(Poly, Poly)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero { q: field.q() });
        }
        let dd = divisor.degree().unwrap();
        let lead_inv = field.inv(divisor.coeffs[dd])?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![field.zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = field.mul(rem[i], lead_inv);
            if c.0 != 0 {
                quot[i - dd] = c;
                for j in 0..=dd {
                    let s = field.mul(c, divisor.coeffs[j]);
                    rem[i - dd + j] = field.sub(rem[i - dd + j], s);
                }
            }
        }
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Unique polynomial of degree < |points| through the given points;
    /// Lagrange interpolation, O(n^2).
    pub fn interpolate(field: &Field, points: &[(FieldElem, FieldElem)]) -> Result<Poly> {
        if points.is_empty() {
            return Err(Error::EmptyInterpolation);
        }
        for (i, (xi, _)) in points.iter().enumerate() {
            for (xj, _) in &points[i + 1..] {
                if xi == xj {
                    return Err(Error::DuplicatePoint);
                }
            }
        }
        let mut acc = Poly::zero();
        for (i, &(xi, yi)) in points.iter().enumerate() {
            if yi.0 == 0 {
                continue;
            }
            // basis polynomial prod_{j != i} (X - x_j) / (x_i - x_j)
            let mut basis = Poly::constant(field.one());
            let mut denom = field.one();
            for (j, &(xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = basis.mul(field, &Poly::from_coeffs(vec![field.neg(xj), field.one()]));
                denom = field.mul(denom, field.sub(xi, xj));
            }
            let scale = field.mul(yi, field.inv(denom)?);
            acc = acc.add(field, &basis.scale(field, scale));
        }
        Ok(acc)
    }

    /// Canonical message index: sum of coeff(X^j) * q^j. Total order used for
    /// deterministic enumeration and tie-breaking.
    pub fn message_index(&self, field: &Field) -> u128 {
        let q = field.q() as u128;
        let mut acc = 0u128;
        for &c in self.coeffs.iter().rev() {
            acc = acc * q + c.0 as u128;
        }
        acc
    }

    /// Inverse of [`message_index`] for messages of dimension k.
    pub fn from_message_index(field: &Field, mut index: u128, k: usize) -> Poly {
        let q = field.q() as u128;
        let mut coeffs = Vec::with_capacity(k);
        for _ in 0..k {
            coeffs.push(FieldElem((index % q) as u64));
            index /= q;
        }
        Poly::from_coeffs(coeffs)
    }

    /// Lexicographic comparison of coefficient vectors (constant term first).
    pub fn lex_cmp(&self, other: &Poly) -> std::cmp::Ordering {
        let n = self.coeffs.len().max(other.coeffs.len());
        for i in 0..n {
            match self.coeff(i).0.cmp(&other.coeff(i).0) {
                std::cmp::Ordering::Equal => continue,
                ord => return ord,
            }
        }
        std::cmp::Ordering::Equal
    }
}
