//! The generating functions, built from their functional equations.
//!
//! Variables: `x` marks the statistic, `y` marks flaws, `z` marks
//! semilength. The univariate-in-`z` series are solved by fixed-point
//! iteration from the constant series 1; every right-hand side is a
//! multiple of `z`, so each pass fixes one more coefficient and `order + 1`
//! passes are exact.

use num_bigint::BigInt;

use super::laurent::LaurentPoly2;
use super::trunc::TruncSeries;

fn lp(terms: &[(i32, i32, i64)]) -> LaurentPoly2 {
    LaurentPoly2::from_terms(terms.iter().copied())
}

fn fixed_point(order: usize, step: impl Fn(&TruncSeries) -> TruncSeries) -> TruncSeries {
    let mut s = TruncSeries::one(order);
    for _ in 0..=order {
        s = step(&s);
    }
    s
}

/// Catalan paths by peaks: `P0 = 1 + z P0 (x + P0 - 1)`.
pub fn solve_p0(order: usize) -> TruncSeries {
    let x_minus_one = lp(&[(1, 0, 1), (0, 0, -1)]);
    fixed_point(order, |p0| {
        let bracket = &p0.clone() + &TruncSeries::constant(order, x_minus_one.clone());
        &TruncSeries::one(order) + &(p0 * &bracket).shift_z(1)
    })
}

/// Catalan paths by valleys: `V0 = 1 + z + z (V0 - 1)(1 + x V0)`.
pub fn solve_v0(order: usize) -> TruncSeries {
    let one = TruncSeries::one(order);
    fixed_point(order, |v0| {
        let left = v0 - &one;
        let right = &one + &v0.mul_poly(&LaurentPoly2::x());
        &(&one + &TruncSeries::z(order)) + &(&left * &right).shift_z(1)
    })
}

/// Catalan paths by double ascents: `A0 = 1 + z A0 / (1 - x z A0)`.
pub fn solve_a0(order: usize) -> TruncSeries {
    let one = TruncSeries::one(order);
    fixed_point(order, |a0| {
        let denom = &one - &a0.mul_poly(&LaurentPoly2::x()).shift_z(1);
        let inv = denom.invert().expect("constant term is 1");
        &one + &(a0 * &inv).shift_z(1)
    })
}

/// `f(x, z) = 1 - 2(1 + x) z + (1 - x)^2 z^2`, the common radicand.
pub fn radicand(order: usize) -> TruncSeries {
    TruncSeries::from_coeffs(
        order,
        vec![
            lp(&[(0, 0, 1)]),
            lp(&[(0, 0, -2), (1, 0, -2)]),
            lp(&[(0, 0, 1), (1, 0, -2), (2, 0, 1)]),
        ],
    )
}

/// All paths by flaws and peaks:
/// `P = V0(x, yz) / (1 - z (x + P0 - 1) V0(x, yz))`.
pub fn build_p(order: usize) -> TruncSeries {
    let p0 = solve_p0(order);
    let v0_yz = solve_v0(order).subst_yz();
    build_p_from(&p0, &v0_yz)
}

pub(crate) fn build_p_from(p0: &TruncSeries, v0_yz: &TruncSeries) -> TruncSeries {
    let order = p0.order();
    let one = TruncSeries::one(order);
    let bracket = &(p0 - &one) + &TruncSeries::constant(order, LaurentPoly2::x());
    let denom = &one - &(&bracket * v0_yz).shift_z(1);
    v0_yz * &denom.invert().expect("constant term is 1")
}

/// All paths by flaws and double ascents:
/// `A = A0(x,z) A0(x,yz) / (1 - x (A0(x,z) - 1)(A0(x,yz) - 1))`.
pub fn build_a(order: usize) -> TruncSeries {
    build_a_from(&solve_a0(order))
}

pub(crate) fn build_a_from(a0: &TruncSeries) -> TruncSeries {
    let order = a0.order();
    let one = TruncSeries::one(order);
    let a0_yz = a0.subst_yz();
    let cross = (&(a0 - &one) * &(&a0_yz - &one)).mul_poly(&LaurentPoly2::x());
    let denom = &one - &cross;
    &(a0 * &a0_yz) * &denom.invert().expect("constant term is 1")
}

/// `alpha = ((1 + x - (1 - x) z) / x) P0 - P0 / V0 - 1/x`.
///
/// Carries `x^-1` terms in intermediate steps. They cancel from `z^2` on; the
/// `z^1` coefficient is `3 - 1/x`, which drops out of everything built on
/// `y alpha(x,z) - alpha(x,yz)`.
pub fn alpha_from(p0: &TruncSeries, v0: &TruncSeries) -> TruncSeries {
    let order = p0.order();
    let inv_x = LaurentPoly2::monomial(BigInt::from(1), -1, 0);
    let prefactor = TruncSeries::from_coeffs(
        order,
        vec![lp(&[(-1, 0, 1), (0, 0, 1)]), lp(&[(-1, 0, -1), (0, 0, 1)])],
    );
    let v0_inv = v0.invert().expect("constant term is 1");
    &(&(&prefactor * p0) - &(p0 * &v0_inv)) - &TruncSeries::constant(order, inv_x)
}

pub fn alpha(order: usize) -> TruncSeries {
    alpha_from(&solve_p0(order), &solve_v0(order))
}

/// `R = P(x,y,z) + P(x,1/y,yz) + 2 - [V0(x,z) + V0(x,yz)] - [P0(x,z) + P0(x,yz)]`,
/// which sums `p_{n,m,k} + p_{n,n-m,k}` over `1 <= m <= n-1`.
pub fn r_from(p: &TruncSeries, p0: &TruncSeries, v0: &TruncSeries) -> TruncSeries {
    let order = p.order();
    let mirrored = p.remap(|n, a, b| (a, n - b));
    let two = TruncSeries::constant(order, LaurentPoly2::constant(2));
    let v_sum = v0 + &v0.subst_yz();
    let p_sum = p0 + &p0.subst_yz();
    &(&(&(p + &mirrored) + &two) - &v_sum) - &p_sum
}

pub fn r_series(order: usize) -> TruncSeries {
    let p0 = solve_p0(order);
    let v0 = solve_v0(order);
    let p = build_p_from(&p0, &v0.subst_yz());
    r_from(&p, &p0, &v0)
}
