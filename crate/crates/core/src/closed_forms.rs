//! Closed formulas and the peak-polynomial recurrence, evaluated exactly.
//!
//! Every rational prefactor is applied as an exact integer division. A
//! nonzero remainder means a formula was transcribed wrongly, so it panics
//! instead of truncating.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::IntPolynomial;
use crate::Error;

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc = C(n, i) * (n - i) / (i + 1) stays integral at every step
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `C(n, k)` over signed arguments, zero outside `0 <= k <= n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    binomial(n as u64, k as u64)
}

fn exact_div(num: BigInt, den: BigInt, what: &str) -> BigInt {
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "{what}: {num} is not divisible by {den}");
    q
}

fn domain(what: &'static str, detail: String) -> Error {
    Error::Domain { what, detail }
}

pub fn catalan(n: u64) -> BigInt {
    exact_div(binomial(2 * n, n), BigInt::from(n + 1), "catalan")
}

/// Catalan paths of semilength `n` with `k` peaks: `(1/k) C(n-1,k-1) C(n,k-1)`.
pub fn narayana_peak(n: u64, k: i64) -> Result<BigInt, Error> {
    if n == 0 {
        return Err(domain("narayana_peak", "n must be at least 1".into()));
    }
    let n = n as i64;
    if k < 1 || k > n {
        return Ok(BigInt::zero());
    }
    Ok(exact_div(binom(n - 1, k - 1) * binom(n, k - 1), BigInt::from(k), "narayana_peak"))
}

/// Catalan paths of semilength `n` with `k` double ascents:
/// `(1/(k+1)) C(n-1,k) C(n,k)`.
pub fn narayana_ascent(n: u64, k: i64) -> Result<BigInt, Error> {
    if n == 0 {
        return Err(domain("narayana_ascent", "n must be at least 1".into()));
    }
    let n = n as i64;
    if k < 0 || k > n - 1 {
        return Ok(BigInt::zero());
    }
    Ok(exact_div(binom(n - 1, k) * binom(n, k), BigInt::from(k + 1), "narayana_ascent"))
}

/// Paths with exactly one flaw and `k` peaks:
/// `2(n-k) / (n(n-1)) * C(n,k-1) C(n,k)`.
pub fn one_flaw_peak(n: u64, k: i64) -> Result<BigInt, Error> {
    if n < 2 {
        return Err(domain("one_flaw_peak", format!("n={n} must be at least 2")));
    }
    let n = n as i64;
    if k < 1 || k > n - 1 {
        return Ok(BigInt::zero());
    }
    let num = BigInt::from(2 * (n - k)) * binom(n, k - 1) * binom(n, k);
    Ok(exact_div(num, BigInt::from(n * (n - 1)), "one_flaw_peak"))
}

/// The flaw-independent value of `p_{n,m,k} + p_{n,m,n-k}` for
/// `1 <= m <= n-1`: `2(n+2) / (n(n-1)) * C(n,k-1) C(n,k+1)`.
///
/// Defined for `1 <= k <= floor(n/2)`; at `k = n/2` the left side is
/// `2 p_{n,m,n/2}`.
pub fn peak_pair_sum(n: u64, k: i64) -> Result<BigInt, Error> {
    if n < 2 || k < 1 || k > (n / 2) as i64 {
        return Err(domain(
            "peak_pair_sum",
            format!("need n >= 2 and 1 <= k <= n/2, got n={n} k={k}"),
        ));
    }
    let n = n as i64;
    let num = BigInt::from(2 * (n + 2)) * binom(n, k - 1) * binom(n, k + 1);
    Ok(exact_div(num, BigInt::from(n * (n - 1)), "peak_pair_sum"))
}

/// `p_{2n,m,n}` for any `1 <= m <= 2n-1`: `(1/(2n-1)) C(2n,n-1) C(2n,n)`.
pub fn central_peak(n: u64) -> Result<BigInt, Error> {
    if n == 0 {
        return Err(domain("central_peak", "n must be at least 1".into()));
    }
    let num = binomial(2 * n, n - 1) * binomial(2 * n, n);
    Ok(exact_div(num, BigInt::from(2 * n - 1), "central_peak"))
}

/// `b_r(x)`, the valley polynomial of Catalan paths of semilength `r`, which
/// is also the peak polynomial of paths lying weakly below the axis:
/// `b_0 = 1`, `b_r = sum_{k=1..r} (1/k) C(r-1,k-1) C(r,k-1) x^{k-1}`.
pub fn below_axis_poly(r: usize) -> IntPolynomial {
    if r == 0 {
        return IntPolynomial::one();
    }
    let coeffs = (1..=r as i64)
        .map(|k| narayana_peak(r as u64, k).expect("r >= 1"))
        .collect();
    IntPolynomial::from_coeffs(coeffs)
}

/// Memoized evaluation of the peak-polynomial recurrence.
///
/// Uses only `b_r(x)` and previously computed `P_{j,i}(x)`; it never touches
/// the enumerator. The memo is owned, so confine an instance to one thread or
/// build one per thread.
#[derive(Debug, Default, Clone)]
pub struct PeakRecurrence {
    below: Vec<IntPolynomial>,
    memo: HashMap<(usize, usize), IntPolynomial>,
    excess_memo: HashMap<(usize, usize), IntPolynomial>,
}

impl PeakRecurrence {
    pub fn new() -> Self {
        Self::default()
    }

    fn b(&mut self, r: usize) -> IntPolynomial {
        while self.below.len() <= r {
            let next = below_axis_poly(self.below.len());
            self.below.push(next);
        }
        self.below[r].clone()
    }

    /// `P_{n,m}(x) = x * sum_{i=0..m} sum_{j=i..n-m+i-1} b_{m-i} b_{n-m+i-j-1} P_{j,i}`
    /// for `n > m`, with `P_{m,m} = b_m`.
    pub fn poly(&mut self, n: usize, m: usize) -> Result<IntPolynomial, Error> {
        if m > n {
            return Err(Error::FlawsExceedSemilength { m, n });
        }
        if let Some(p) = self.memo.get(&(n, m)) {
            return Ok(p.clone());
        }
        let result = if n == m {
            self.b(m)
        } else {
            let mut acc = IntPolynomial::zero();
            for i in 0..=m {
                let outer = self.b(m - i);
                for j in i..n - m + i {
                    let inner = self.b(n - m + i - j - 1);
                    let sub = self.poly(j, i)?;
                    acc = &acc + &(&(&outer * &inner) * &sub);
                }
            }
            acc.shift(1)
        };
        self.memo.insert((n, m), result.clone());
        Ok(result)
    }

    /// The same recurrence in its `(m, r)` indexing with `n = m + r`:
    /// `P_{m+r,m} = x * sum_{i=0..m} sum_{j=0..r-1} P_{m-i,m-i} P_{r-j-1,r-j-1} P_{j+i,i}`.
    /// Kept separate so the two index forms can be checked against each other.
    pub fn poly_by_excess(&mut self, m: usize, r: usize) -> Result<IntPolynomial, Error> {
        if r == 0 {
            return Ok(self.b(m));
        }
        if let Some(p) = self.excess_memo.get(&(m, r)) {
            return Ok(p.clone());
        }
        let mut acc = IntPolynomial::zero();
        for i in 0..=m {
            for j in 0..r {
                let a = self.poly_by_excess(m - i, 0)?;
                let b = self.poly_by_excess(r - j - 1, 0)?;
                let c = self.poly_by_excess(i, j)?;
                acc = &acc + &(&(&a * &b) * &c);
            }
        }
        let result = acc.shift(1);
        self.excess_memo.insert((m, r), result.clone());
        Ok(result)
    }
}

/// `P_{n,m}(x)` from the recurrence alone.
pub fn recurrence_peak_poly(n: usize, m: usize) -> Result<IntPolynomial, Error> {
    PeakRecurrence::new().poly(n, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), big(120));
        assert_eq!(binomial(3, 5), big(0));
        assert_eq!(binom(-1, 0), big(0));
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0), big(1));
        assert_eq!(catalan(3), big(5));
        assert_eq!(catalan(6), big(132));
    }

    #[test]
    fn narayana_values() {
        assert_eq!(narayana_peak(4, 2).unwrap(), big(6));
        assert_eq!(narayana_peak(5, 3).unwrap(), big(20));
        assert_eq!(narayana_peak(4, 0).unwrap(), big(0));
        assert_eq!(narayana_ascent(3, 1).unwrap(), big(3));
        assert_eq!(narayana_ascent(3, 0).unwrap(), big(1));
        assert_eq!(narayana_ascent(6, 2).unwrap(), big(50));
        assert!(narayana_peak(0, 0).is_err());
    }

    #[test]
    fn narayana_rows_sum_to_catalan() {
        for n in 1..=15u64 {
            let p: BigInt = (0..=n as i64 + 1).map(|k| narayana_peak(n, k).unwrap()).sum();
            let a: BigInt = (0..=n as i64 + 1).map(|k| narayana_ascent(n, k).unwrap()).sum();
            assert_eq!(p, catalan(n));
            assert_eq!(a, catalan(n));
        }
    }

    #[test]
    fn one_flaw_values() {
        assert_eq!(one_flaw_peak(5, 2).unwrap(), big(15));
        assert_eq!(one_flaw_peak(6, 1).unwrap(), big(2));
        // row (4,1) is 4x^3+8x^2+2x
        assert_eq!(one_flaw_peak(4, 3).unwrap(), big(4));
        assert_eq!(one_flaw_peak(4, 1).unwrap(), big(2));
        assert_eq!(one_flaw_peak(4, 4).unwrap(), big(0));
        assert!(one_flaw_peak(1, 1).is_err());
    }

    #[test]
    fn pair_sum_values() {
        assert_eq!(peak_pair_sum(5, 1).unwrap(), big(7));
        assert_eq!(peak_pair_sum(5, 2).unwrap(), big(35));
        // Table rows (6,1): 24+40 and (6,3): 32+32
        assert_eq!(peak_pair_sum(6, 2).unwrap(), big(64));
        // k = n/2 counts the middle coefficient twice: 2 * 60
        assert_eq!(peak_pair_sum(6, 3).unwrap(), big(120));
        assert!(peak_pair_sum(6, 4).is_err());
        assert!(peak_pair_sum(6, 0).is_err());
    }

    #[test]
    fn central_values() {
        assert_eq!(central_peak(1).unwrap(), big(2));
        assert_eq!(central_peak(2).unwrap(), big(8));
        assert_eq!(central_peak(3).unwrap(), big(60));
    }

    #[test]
    fn central_is_half_the_middle_pair_sum() {
        for n in 1..=10u64 {
            assert_eq!(central_peak(n).unwrap() * 2, peak_pair_sum(2 * n, n as i64).unwrap());
        }
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(recurrence_peak_poly(2, 2).unwrap().to_string(), "x+1");
        assert_eq!(recurrence_peak_poly(4, 1).unwrap().to_string(), "4x^3+8x^2+2x");
        assert_eq!(
            recurrence_peak_poly(6, 4).unwrap().to_string(),
            "3x^5+29x^4+60x^3+35x^2+5x"
        );
        assert_eq!(recurrence_peak_poly(0, 0).unwrap(), IntPolynomial::one());
        assert!(recurrence_peak_poly(2, 3).is_err());
    }

    #[test]
    fn recurrence_index_forms_agree() {
        let mut rec = PeakRecurrence::new();
        for n in 0..=8 {
            for m in 0..=n {
                assert_eq!(rec.poly(n, m).unwrap(), rec.poly_by_excess(m, n - m).unwrap(), "({n},{m})");
            }
        }
    }

    #[test]
    #[should_panic(expected = "not divisible")]
    fn exact_div_rejects_remainders() {
        exact_div(big(7), big(2), "test");
    }
}
