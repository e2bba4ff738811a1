use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::laurent::LaurentPoly2;
use crate::Error;

/// Power series in `z` kept exactly through `z^order`, with Laurent
/// polynomial coefficients in `x` and `y`.
///
/// Binary operations on series of different orders truncate to the smaller.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<LaurentPoly2>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![LaurentPoly2::zero(); order + 1],
        }
    }

    pub fn constant(order: usize, c: LaurentPoly2) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, LaurentPoly2::one())
    }

    /// The series `z` (zero when `order` is 0).
    pub fn z(order: usize) -> Self {
        Self::one(order).shift_z(1)
    }

    /// Pads or truncates `coeffs` to `order + 1` entries.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<LaurentPoly2>) -> Self {
        coeffs.resize(order + 1, LaurentPoly2::zero());
        TruncSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `z^n`; zero beyond the order.
    pub fn coeff(&self, n: usize) -> LaurentPoly2 {
        self.coeffs.get(n).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, n: usize) -> &LaurentPoly2 {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[LaurentPoly2] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, c: LaurentPoly2) {
        self.coeffs[n] = c;
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.iter().take(order + 1).cloned().collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Multiplies every coefficient by the Laurent polynomial `p`.
    pub fn mul_poly(&self, p: &LaurentPoly2) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    /// Multiplies by `z^j`, dropping whatever moves past the order.
    pub fn shift_z(&self, j: usize) -> Self {
        let order = self.order();
        let mut coeffs = vec![LaurentPoly2::zero(); j.min(order + 1)];
        coeffs.extend(self.coeffs.iter().take((order + 1).saturating_sub(j)).cloned());
        TruncSeries { coeffs }
    }

    /// `z -> y z`: multiplies the coefficient of `z^n` by `y^n`.
    pub fn subst_yz(&self) -> Self {
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c.shift(0, n as i32))
                .collect(),
        }
    }

    /// Exponent substitution that may depend on the z-degree: the term
    /// `x^a y^b z^n` goes to `x^a' y^b' z^n` with `(a', b') = f(n, a, b)`.
    pub fn remap(&self, f: impl Fn(i32, i32, i32) -> (i32, i32)) -> Self {
        TruncSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| c.remap(|a, b| f(n as i32, a, b)))
                .collect(),
        }
    }

    /// The `y^m` part as a series in `x` and `z`.
    pub fn y_slice(&self, m: i32) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| c.y_slice(m)).collect(),
        }
    }

    /// Multiplicative inverse; needs constant term exactly 1.
    pub fn invert(&self) -> Result<Self, Error> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstant(self.coeffs[0].to_string()));
        }
        let order = self.order();
        let mut inv = vec![LaurentPoly2::one()];
        for n in 1..=order {
            let mut acc = LaurentPoly2::zero();
            for i in 1..=n {
                acc = &acc + &(&self.coeffs[i] * &inv[n - i]);
            }
            inv.push(-&acc);
        }
        Ok(TruncSeries { coeffs: inv })
    }

    /// Square root with constant term 1, one coefficient at a time:
    /// `r_n = (a_n - sum_{i=1..n-1} r_i r_{n-i}) / 2`.
    pub fn sqrt(&self) -> Result<Self, Error> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NonUnitConstant(self.coeffs[0].to_string()));
        }
        let order = self.order();
        let two = BigInt::from(2);
        let mut root = vec![LaurentPoly2::one()];
        for n in 1..=order {
            let mut acc = self.coeffs[n].clone();
            for i in 1..n {
                acc = &acc - &(&root[i] * &root[n - i]);
            }
            let next = acc
                .div_exact(&two)
                .ok_or_else(|| Error::NonIntegralRoot(format!("z^{n}: {acc}")))?;
            root.push(next);
        }
        Ok(TruncSeries { coeffs: root })
    }

    /// Smallest x and y exponents over all coefficients.
    pub fn min_exponents(&self) -> Option<(i32, i32)> {
        self.coeffs
            .iter()
            .filter_map(LaurentPoly2::min_exponents)
            .reduce(|a, b| (a.0.min(b.0), a.1.min(b.1)))
    }

    /// First coefficient, in `(n, xexp, yexp)` order, where `self` and
    /// `other` differ, as `(n, xexp, yexp, self_coeff, other_coeff)`.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, i32, i32, BigInt, BigInt)> {
        let order = self.order().min(other.order());
        for n in 0..=order {
            let (a, b) = (&self.coeffs[n], &other.coeffs[n]);
            if a == b {
                continue;
            }
            let diff = a - b;
            let (x, y, _) = diff.terms().next().expect("nonzero difference");
            return Some((n, x, y, a.coeff(x, y), b.coeff(x, y)));
        }
        None
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;

    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;

    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;

    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Cauchy product truncated at the smaller order.
impl Mul for &TruncSeries {
    type Output = TruncSeries;

    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| {
                let mut acc = LaurentPoly2::zero();
                for i in 0..=n {
                    let (a, b) = (&self.coeffs[i], &rhs.coeffs[n - i]);
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * b);
                }
                acc
            })
            .collect();
        TruncSeries { coeffs }
    }
}

/// One line per nonzero `z^n` coefficient.
impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                writeln!(f, "z^{n}: {c}")?;
            }
        }
        write!(f, "O(z^{})", self.order() + 1)
    }
}
