use num_bigint::BigUint;
use proptest::prelude::*;

use cantor::random::{self, Bounds};
use cantor::syntax::{format_ordinal, format_space, parse_ordinal, parse_space};
use cantor::{CanonicalSpace, Ordinal, SpaceExpr};

fn ordinal() -> impl Strategy<Value = Ordinal> {
    any::<u64>().prop_map(|seed| random::ordinal(&mut random::seeded(seed), &Bounds::default()))
}

fn space() -> impl Strategy<Value = CanonicalSpace> {
    any::<u64>().prop_map(|seed| random::space_or_empty(&mut random::seeded(seed), &Bounds::default()))
}

fn expr() -> impl Strategy<Value = SpaceExpr> {
    any::<u64>().prop_map(|seed| random::expr(&mut random::seeded(seed), &Bounds::default()))
}

proptest! {
    #[test]
    fn ordinal_text_round_trips(a in ordinal()) {
        prop_assert_eq!(parse_ordinal(&format_ordinal(&a)), Ok(a));
    }

    #[test]
    fn expression_text_round_trips(e in expr()) {
        prop_assert_eq!(parse_space(&format_space(&e)), Ok(e));
    }

    #[test]
    fn ordinal_sum_is_monotone_on_the_right(a in ordinal(), b in ordinal(), c in ordinal()) {
        let (lo, hi) = if b <= c { (b, c) } else { (c, b) };
        prop_assert!(&a + &lo <= &a + &hi);
        prop_assert!(&lo + &a <= &hi + &a);
    }

    #[test]
    fn left_subtraction_inverts_addition(a in ordinal(), b in ordinal()) {
        let sum = &a + &b;
        prop_assert_eq!(a.left_subtract(&sum), Ok(b));
    }

    #[test]
    fn multiplication_distributes_on_the_left(a in ordinal(), b in ordinal(), c in ordinal()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn equivalence_ignores_degree(x in space(), y in space()) {
        let same = x.cb_star() == y.cb_star();
        prop_assert_eq!(x.equivalent(&y), same);
        prop_assert_eq!(x.stratum_difference(&y).is_none(), same);
    }

    #[test]
    fn canonical_form_is_idempotent(e in expr()) {
        let c = e.canonicalize();
        prop_assert_eq!(SpaceExpr::Canonical(c.clone()).canonicalize(), c);
    }

    #[test]
    fn point_indices_round_trip(seed in any::<u64>()) {
        let mut rng = random::seeded(seed);
        let e = random::expr(&mut rng, &Bounds::default());
        if let Some(p) = random::point(&mut rng, &e) {
            let beta = e.point_rank(&p).unwrap();
            let i = e.index_of_point(&beta, &p).unwrap();
            prop_assert_eq!(e.enumerate_points_of_rank(&beta, &i), Ok(p));
        }
    }

    #[test]
    fn finite_strata_are_exhausted(seed in any::<u64>()) {
        let mut rng = random::seeded(seed);
        let bounds = Bounds { max_nesting: 1, max_coeff: 3, ..Bounds::default() };
        let e = random::expr(&mut rng, &bounds);
        if let Some(beta) = random::rank_of(&mut rng, &e) {
            if let Some(n) = e.count_points_of_rank(&beta).finite() {
                for i in 0..n.min(50) {
                    let p = e.enumerate_points_of_rank(&beta, &BigUint::from(i)).unwrap();
                    prop_assert_eq!(e.point_rank(&p), Ok(beta.clone()));
                }
                prop_assert!(e.enumerate_points_of_rank(&beta, &BigUint::from(n)).is_err());
            }
        }
    }
}

#[test]
fn fuzzed_text_never_panics() {
    let mut runner = proptest::test_runner::TestRunner::default();
    runner
        .run(&proptest::collection::vec(any::<u8>(), 0..32), |bytes| {
            let text = String::from_utf8_lossy(&bytes);
            for err in [parse_ordinal(&text).err(), parse_space(&text).err()]
                .into_iter()
                .flatten()
            {
                prop_assert!(err.span.start <= err.span.end && err.span.end <= text.len());
            }
            Ok(())
        })
        .unwrap();
}
