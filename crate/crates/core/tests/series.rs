mod common;

use algdiag::poly::Poly;
use algdiag::ring::{rat, Rational, Ring};
use algdiag::series::{newton_series, TruncatedSeries};
use common::*;
use proptest::prelude::*;
use rand::Rng as _;

fn small() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

#[test]
fn exp_log_inverse_pair() {
    let mut rng = rng(10);
    for _ in 0..50 {
        let f = TruncatedSeries::from_fn(50, |k| {
            if k == 0 {
                rat(0)
            } else {
                small_rational(&mut rng, 5, 4)
            }
        });
        assert_eq!(f.exp().unwrap().log().unwrap(), f);
        let g = TruncatedSeries::from_fn(50, |k| {
            if k == 0 {
                rat(1)
            } else {
                small_rational(&mut rng, 5, 4)
            }
        });
        assert_eq!(g.log().unwrap().exp().unwrap(), g);
    }
}

#[test]
fn newton_additive_under_products() {
    let mut rng = rng(11);
    for _ in 0..30 {
        let (dp, dq) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let p = random_poly(&mut rng, dp, 5, 3);
        let q = random_poly(&mut rng, dq, 5, 3);
        if p.deg0() == 0 || q.deg0() == 0 {
            continue;
        }
        let order = 15;
        let lhs = newton_series(&p.mul(&q), order).unwrap().inner;
        let rhs = newton_series(&p, order)
            .unwrap()
            .inner
            .add(&newton_series(&q, order).unwrap().inner);
        assert_eq!(lhs, rhs);
    }
}

proptest! {
    #[test]
    fn inverse_times_self_is_one(c0 in small().prop_filter("unit", |c| !Ring::is_zero(c)),
                                 rest in prop::collection::vec(small(), 0..20)) {
        let mut coeffs = vec![c0];
        coeffs.extend(rest);
        let order = coeffs.len() + 3;
        let f = TruncatedSeries::new(coeffs, order);
        prop_assert_eq!(f.inverse().unwrap().mul(&f), TruncatedSeries::one(order));
    }

    #[test]
    fn derivative_undoes_integral(coeffs in prop::collection::vec(small(), 1..25)) {
        let n = coeffs.len();
        let f = TruncatedSeries::new(coeffs, n);
        prop_assert_eq!(f.integrate().derivative(), f);
    }

    #[test]
    fn newton_power_sums_of_integer_roots(roots in prop::collection::vec(-5i64..=5, 1..6)) {
        let p = roots.iter().fold(Poly::one(), |acc, &r| {
            acc.mul(&Poly::from_coeffs(vec![rat(-r), rat(1)]))
        });
        let n = newton_series(&p, 6).unwrap().inner;
        for k in 0..6u32 {
            let want: i64 = roots.iter().map(|r| r.pow(k)).sum();
            prop_assert_eq!(n.coeff(k as usize), rat(want));
        }
    }
}
