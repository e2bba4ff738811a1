use num_bigint::BigInt;
use proptest::prelude::*;

use dyckflaw::series::{LaurentPoly2, TruncSeries};
use dyckflaw::{cf_step, cf_step_inverse, complement, reverse_complement, Path, Step};

/// A random balanced word of semilength `1..=max_n`.
fn balanced(max_n: usize) -> impl Strategy<Value = Path> {
    (1..=max_n)
        .prop_flat_map(|n| Just(vec![Step::Up; n].into_iter().chain(vec![Step::Down; n]).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|steps| Path::from_steps(steps).unwrap())
}

fn series(order: usize) -> impl Strategy<Value = TruncSeries> {
    let term = (0..3i32, 0..3i32, -4i64..5);
    prop::collection::vec(prop::collection::vec(term, 0..4), order).prop_map(move |cs| {
        let mut coeffs = vec![LaurentPoly2::one()];
        coeffs.extend(cs.into_iter().map(LaurentPoly2::from_terms));
        TruncSeries::from_coeffs(order, coeffs)
    })
}

proptest! {
    #[test]
    fn parse_render_round_trip(p in balanced(20)) {
        let word = p.to_string();
        prop_assert_eq!(Path::parse(&word.to_lowercase()).unwrap(), p.clone());
        prop_assert_eq!(word.parse::<Path>().unwrap(), p);
    }

    #[test]
    fn joint_nodes_partition(p in balanced(20)) {
        let s = p.stats();
        prop_assert_eq!(s.joint_nodes(), 2 * s.semilength - 1);
        prop_assert_eq!(s.peaks + s.valleys + s.double_ascents + s.double_descents, 2 * s.semilength - 1);
        prop_assert!(s.flaws <= s.semilength);
    }

    #[test]
    fn involutions(p in balanced(20)) {
        let n = p.semilength();
        let s = p.stats();
        let c = complement(&p);
        prop_assert_eq!(complement(&c), p.clone());
        prop_assert_eq!(reverse_complement(&reverse_complement(&p)), p.clone());
        let cs = c.stats();
        prop_assert_eq!(cs.flaws, n - s.flaws);
        prop_assert_eq!((cs.peaks, cs.valleys), (s.valleys, s.peaks));
        let r = reverse_complement(&p).stats();
        prop_assert_eq!((r.double_ascents, r.double_descents), (s.double_descents, s.double_ascents));
    }

    #[test]
    fn cf_step_round_trip(p in balanced(30)) {
        let s = p.stats();
        if s.flaws < s.semilength {
            let q = cf_step(&p).unwrap();
            prop_assert_eq!(q.stats().flaws, s.flaws + 1);
            prop_assert_eq!(q.stats().double_ascents, s.double_ascents);
            prop_assert_eq!(cf_step_inverse(&q).unwrap(), p.clone());
        } else {
            prop_assert!(cf_step(&p).is_err());
        }
        if s.flaws > 0 {
            let q = cf_step_inverse(&p).unwrap();
            prop_assert_eq!(q.stats().flaws, s.flaws - 1);
            prop_assert_eq!(cf_step(&q).unwrap(), p);
        } else {
            prop_assert!(cf_step_inverse(&p).is_err());
        }
    }

    #[test]
    fn invert_multiplies_back(s in series(5)) {
        let inv = s.invert().unwrap();
        prop_assert_eq!(&s * &inv, TruncSeries::one(5));
    }

    #[test]
    fn sqrt_of_square(s in series(5)) {
        let sq = &s * &s;
        let root = sq.sqrt().unwrap();
        prop_assert_eq!(&root * &root, sq);
        prop_assert_eq!(root, s);
    }

    #[test]
    fn subst_yz_is_a_ring_map(a in series(4), b in series(4)) {
        prop_assert_eq!((&a * &b).subst_yz(), &a.subst_yz() * &b.subst_yz());
    }
}

#[test]
fn sqrt_rejects_odd_coefficient() {
    let s = TruncSeries::from_coeffs(3, vec![LaurentPoly2::one(), LaurentPoly2::constant(BigInt::from(1))]);
    assert!(s.sqrt().is_err());
}
