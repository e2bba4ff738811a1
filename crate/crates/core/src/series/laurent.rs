use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Laurent polynomial in `x` and `y` with integer coefficients.
///
/// Keyed by `(x exponent, y exponent)`; zero coefficients are never stored,
/// so structural equality is polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly2 {
    terms: BTreeMap<(i32, i32), BigInt>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c.into(), 0, 0)
    }

    pub fn monomial(c: BigInt, xexp: i32, yexp: i32) -> Self {
        let mut p = Self::zero();
        p.add_term(xexp, yexp, c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    /// Builds from `(xexp, yexp, coeff)` triples, summing duplicates.
    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i32, i64)>) -> Self {
        let mut p = Self::zero();
        for (a, b, c) in terms {
            p.add_term(a, b, BigInt::from(c));
        }
        p
    }

    pub fn add_term(&mut self, xexp: i32, yexp: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((xexp, yexp)).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(xexp, yexp));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(One::is_one)
    }

    pub fn coeff(&self, xexp: i32, yexp: i32) -> BigInt {
        self.terms.get(&(xexp, yexp)).cloned().unwrap_or_default()
    }

    /// Terms in ascending `(xexp, yexp)` order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i32, &BigInt)> {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponents(&self) -> Option<(i32, i32)> {
        let mx = self.terms.keys().map(|k| k.0).min()?;
        let my = self.terms.keys().map(|k| k.1).min()?;
        Some((mx, my))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly2 {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiplies by `x^dx y^dy`.
    pub fn shift(&self, dx: i32, dy: i32) -> Self {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(&(a, b), v)| ((a + dx, b + dy), v.clone())).collect(),
        }
    }

    /// Applies an exponent substitution term by term; the map must be injective.
    pub fn remap(&self, f: impl Fn(i32, i32) -> (i32, i32)) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            let (na, nb) = f(a, b);
            out.add_term(na, nb, c.clone());
        }
        out
    }

    /// Exact division by an integer; `None` if any coefficient leaves a remainder.
    pub fn div_exact(&self, d: &BigInt) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (k, v) in &self.terms {
            let (q, r) = v.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            terms.insert(*k, q);
        }
        Some(LaurentPoly2 { terms })
    }

    /// Drops every term with a y exponent other than `yexp`, then sets y to 1.
    pub fn y_slice(&self, yexp: i32) -> Self {
        LaurentPoly2 {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.1 == yexp)
                .map(|(&(a, _), v)| ((a, 0), v.clone()))
                .collect(),
        }
    }
}

impl Add for &LaurentPoly2 {
    type Output = LaurentPoly2;

    fn add(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly2 {
    type Output = LaurentPoly2;

    fn sub(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, -c);
        }
        out
    }
}

impl Neg for &LaurentPoly2 {
    type Output = LaurentPoly2;

    fn neg(self) -> LaurentPoly2 {
        LaurentPoly2 {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
}

impl Mul for &LaurentPoly2 {
    type Output = LaurentPoly2;

    fn mul(self, rhs: &LaurentPoly2) -> LaurentPoly2 {
        let mut acc: BTreeMap<(i32, i32), BigInt> = BTreeMap::new();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                *acc.entry((a1 + a2, b1 + b2)).or_default() += c1 * c2;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        LaurentPoly2 { terms: acc }
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // descending x exponent, then descending y exponent
        for (i, (&(a, b), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if neg {
                write!(f, "-")?;
            } else if i > 0 {
                write!(f, "+")?;
            }
            let mag = c.abs();
            let mut factors = Vec::new();
            for (var, e) in [("x", a), ("y", b)] {
                match e {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{e}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}
