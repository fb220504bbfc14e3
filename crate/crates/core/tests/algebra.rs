use proptest::prelude::*;
use udbound::search::{self, SearchOptions};
use udbound::{parse_diagram, OperatorContext, Polynomial};

const NVARS: usize = 3;

fn polynomial() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u16..=3, NVARS), -20i64..=20), 0..5).prop_map(
        |terms| {
            let mut p = Polynomial::zero(NVARS);
            for (exps, c) in terms {
                p.add_term(udbound::Monomial::from_exponents(&exps), c.into());
            }
            p
        },
    )
}

proptest! {
    #[test]
    fn ring_axioms(a in polynomial(), b in polynomial(), c in polynomial()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(NVARS), a.clone());
    }

    #[test]
    fn display_parses_back(a in polynomial()) {
        prop_assert_eq!(Polynomial::parse(&a.to_string(), NVARS).unwrap(), a);
    }

    #[test]
    fn operators_are_linear(a in polynomial(), b in polynomial(), i in 1usize..=NVARS) {
        let ctx = OperatorContext::new(parse_diagram("B3").unwrap().cartan());
        let lhs = ctx.ddiff(i, &(&a + &b)).unwrap();
        let rhs = &ctx.ddiff(i, &a).unwrap() + &ctx.ddiff(i, &b).unwrap();
        prop_assert_eq!(lhs, rhs);
        let twice = ctx.reflect(i, &ctx.reflect(i, &a).unwrap()).unwrap();
        prop_assert_eq!(twice, a);
    }
}

#[test]
fn bounds_stay_below_the_number_of_positive_roots() {
    for t in ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2", "D4", "F4", "A1+G2"] {
        let d = parse_diagram(t).unwrap();
        let ctx = OperatorContext::new(d.cartan());
        let lb = search::ud_lower_bound(&ctx, &d, SearchOptions::default()).unwrap();
        assert!(lb.bound <= d.positive_root_count(), "{t}");
    }
}

#[test]
fn small_rank_bounds_never_exceed_the_exact_value() {
    for (t, exact) in [("A1", true), ("A2", true), ("A3", true), ("B2", false), ("B3", false),
                       ("C2", true), ("C3", true), ("G2", false)] {
        let d = parse_diagram(t).unwrap();
        let ctx = OperatorContext::new(d.cartan());
        let lb = search::ud_lower_bound(&ctx, &d, SearchOptions::default()).unwrap().bound;
        let ud = search::brute_force_ud(&ctx, &d, Default::default()).unwrap().ud;
        assert!(lb <= ud, "{t}");
        if exact {
            assert_eq!(lb, ud, "{t}");
        }
    }
}
