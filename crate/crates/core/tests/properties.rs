//! Property tests for the algebra layer: ring laws, series round
//! trips, and agreement between the three coefficient rings.

use proptest::prelude::*;

use riordan_gamma::rat::Rat;
use riordan_gamma::ring::Ring;
use riordan_gamma::series::Series;
use riordan_gamma::ypoly::YPoly;
use riordan_gamma::yrat::YRat;

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rat::ratio(n, d))
}

fn ypoly_strategy() -> impl Strategy<Value = YPoly> {
    prop::collection::vec(rat_strategy(), 0..4).prop_map(YPoly::from_coeffs)
}

fn yrat_strategy() -> impl Strategy<Value = YRat> {
    (ypoly_strategy(), ypoly_strategy())
        .prop_map(|(n, d)| if d.is_zero() { YRat::from(n) } else { YRat::new(n, d) })
}

fn series_strategy(order: usize) -> impl Strategy<Value = Series<Rat>> {
    prop::collection::vec(rat_strategy(), order + 1..=order + 1).prop_map(Series::from_coeffs)
}

fn ypoly_series_strategy(order: usize) -> impl Strategy<Value = Series<YPoly>> {
    prop::collection::vec(ypoly_strategy(), order + 1..=order + 1).prop_map(Series::from_coeffs)
}

macro_rules! ring_laws {
    ($name:ident, $strategy:expr) => {
        mod $name {
            use super::*;

            proptest! {
                #![proptest_config(ProptestConfig::with_cases(64))]

                #[test]
                fn laws((a, b, c) in ($strategy, $strategy, $strategy)) {
                    prop_assert_eq!(a.add(&b), b.add(&a));
                    prop_assert_eq!(a.mul(&b), b.mul(&a));
                    prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
                    prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                    prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
                    prop_assert_eq!(a.add(&a.neg()), Ring::zero());
                    prop_assert!(a.sub(&a).is_zero());
                    if let Some(inv) = a.try_invert() {
                        prop_assert!(a.mul(&inv).is_one());
                    }
                }
            }
        }
    };
}

ring_laws!(rat_ring, rat_strategy());
ring_laws!(ypoly_ring, ypoly_strategy());
ring_laws!(yrat_ring, yrat_strategy());

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn series_ring_laws((a, b, c) in (series_strategy(8), series_strategy(8), series_strategy(8))) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn series_div_then_mul_round_trips(a in series_strategy(8), b in series_strategy(8)) {
        prop_assume!(!b.coeff(0).is_zero());
        let q = a.div(&b).unwrap();
        prop_assert_eq!(q.mul(&b), a.clone());
        // and the same over Q[y] via lifting
        let al = a.map(|c| YPoly::constant(c.clone()));
        let bl = b.map(|c| YPoly::constant(c.clone()));
        prop_assert_eq!(al.div(&bl).unwrap().mul(&bl), al);
    }

    #[test]
    fn revert_round_trips(tail in prop::collection::vec(rat_strategy(), 7)) {
        // f = x + a2 x^2 + ...: unit linear coefficient
        let mut coeffs = vec![Rat::zero(), Rat::one()];
        coeffs.extend(tail);
        let f = Series::from_coeffs(coeffs);
        let g = f.revert().unwrap();
        prop_assert_eq!(f.compose(&g).unwrap(), Series::x(f.order()));
        prop_assert_eq!(g.compose(&f).unwrap(), Series::x(f.order()));
        prop_assert_eq!(g.revert().unwrap(), f);
    }

    #[test]
    fn revert_round_trips_over_ypoly(tail in prop::collection::vec(ypoly_strategy(), 5)) {
        let mut coeffs = vec![YPoly::zero(), YPoly::one()];
        coeffs.extend(tail);
        let f = Series::from_coeffs(coeffs);
        let g = f.revert().unwrap();
        prop_assert_eq!(f.compose(&g).unwrap(), Series::x(f.order()));
        prop_assert_eq!(g.revert().unwrap(), f);
    }

    #[test]
    fn ypoly_and_yrat_agree_under_embedding_and_evaluation(
        (p, q) in (ypoly_strategy(), ypoly_strategy()),
        ys in prop::collection::vec((-30i64..=30, 1i64..=7), 20),
    ) {
        let pr = YRat::from(p.clone());
        let qr = YRat::from(q.clone());
        let sum = &pr + &qr;
        let prod = &pr * &qr;
        prop_assert_eq!(sum.as_polynomial(), Some(&(&p + &q)));
        prop_assert_eq!(prod.as_polynomial(), Some(&(&p * &q)));
        for (n, d) in ys {
            let y = Rat::ratio(n, d);
            prop_assert_eq!(sum.eval(&y).unwrap(), &p.eval(&y) + &q.eval(&y));
            prop_assert_eq!(prod.eval(&y).unwrap(), &p.eval(&y) * &q.eval(&y));
        }
    }

    #[test]
    fn bivariate_series_mul_commutes_with_evaluation(
        (a, b) in (ypoly_series_strategy(6), ypoly_series_strategy(6)),
        y in (-9i64..=9),
    ) {
        let y = Rat::from_int(y);
        let prod = a.mul(&b);
        let eval = |s: &Series<YPoly>| s.map(|p| p.eval(&y));
        prop_assert_eq!(eval(&prod), eval(&a).mul(&eval(&b)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn invert_transform_round_trips(gf in ypoly_series_strategy(8), alpha in ypoly_strategy()) {
        use riordan_gamma::transforms::invert_transform;
        let there = invert_transform(&gf, &alpha);
        let back = invert_transform(&there, &alpha.neg());
        prop_assert_eq!(back, gf);
    }

    #[test]
    fn binomial_transform_round_trips(gf in ypoly_series_strategy(8), t in ypoly_strategy()) {
        use riordan_gamma::transforms::binomial_transform;
        let there = binomial_transform(&gf, &t);
        let back = binomial_transform(&there, &t.neg());
        prop_assert_eq!(back, gf);
    }
}
