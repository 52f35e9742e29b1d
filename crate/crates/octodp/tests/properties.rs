//! Randomized algebraic properties of the core arithmetic layers.

use num::traits::Zero;
use proptest::prelude::*;

use octodp::poly::SparsePoly;
use octodp::rational::{canonicalize_vector, parse_rat, proportional, rat, rat_string, Rat};
use octodp::valuation::{newton_root_valuations, valuation, ExtVal, Prime, RootVal};

fn p5() -> Prime {
    Prime::new(5).unwrap()
}

fn ratq(n: i64, d: i64) -> Rat {
    rat(n) / rat(d)
}

proptest! {
    #[test]
    fn rat_string_roundtrip(n in -10_000i64..10_000, d in 1i64..1000) {
        let q = ratq(n, d);
        prop_assert_eq!(parse_rat(&rat_string(&q)).unwrap(), q);
    }

    #[test]
    fn valuation_is_multiplicative(
        n1 in 1i64..50_000, d1 in 1i64..50_000,
        n2 in 1i64..50_000, d2 in 1i64..50_000,
    ) {
        let (a, b) = (ratq(n1, d1), ratq(n2, d2));
        let va = valuation(&a, p5());
        let vb = valuation(&b, p5());
        prop_assert_eq!(valuation(&(a * b), p5()), va.add(vb));
    }

    #[test]
    fn valuation_ultrametric(
        n1 in -50_000i64..50_000, d1 in 1i64..5_000,
        n2 in -50_000i64..50_000, d2 in 1i64..5_000,
    ) {
        let (a, b) = (ratq(n1, d1), ratq(n2, d2));
        let bound = valuation(&a, p5()).min(valuation(&b, p5()));
        prop_assert!(valuation(&(a + b), p5()) >= bound);
    }

    #[test]
    fn canonicalize_is_projective_and_idempotent(v in prop::collection::vec(-100i64..100, 4)) {
        let q: Vec<Rat> = v.iter().map(|&x| ratq(x, 7)).collect();
        let c = canonicalize_vector(&q);
        if q.iter().any(|x| !x.is_zero()) {
            prop_assert!(proportional(&q, &c));
        }
        prop_assert_eq!(canonicalize_vector(&c), c.clone());
    }

    #[test]
    fn newton_roots_count_and_sum(vals in prop::collection::vec(-20i64..20, 4)) {
        // Sum of root valuations = val(c0) - val(c_n), the polygon's total
        // drop; the count equals the degree.
        let coeffs: Vec<ExtVal> = vals.iter().map(|&v| ExtVal::Finite(v)).collect();
        let roots = newton_root_valuations(&coeffs).unwrap();
        prop_assert_eq!(roots.len(), 3);
        let total: num::rational::Ratio<i64> = roots
            .iter()
            .map(|r| match r {
                RootVal::Finite(v) => *v,
                RootVal::Infinity => panic!("finite coefficients"),
            })
            .sum();
        // The negated slopes telescope across the hull from (0, v0) to
        // (3, v3), so the root valuations sum to v0 - v3 exactly.
        prop_assert_eq!(total, num::rational::Ratio::from_integer(vals[0] - vals[3]));
    }

    #[test]
    fn poly_ring_distributes(
        a in -9i64..9, b in -9i64..9, c in -9i64..9,
        e1 in 0u32..3, e2 in 0u32..3,
    ) {
        const VARS: [&str; 2] = ["s", "t"];
        let f = SparsePoly::monomial(&VARS, vec![e1, 1], rat(a));
        let g = SparsePoly::monomial(&VARS, vec![1, e2], rat(b));
        let h = SparsePoly::monomial(&VARS, vec![e2, e1], rat(c))
            .add(&SparsePoly::constant(&VARS, rat(1)));
        let lhs = f.add(&g).mul(&h);
        let rhs = f.mul(&h).add(&g.mul(&h));
        prop_assert!(lhs.sub(&rhs).is_zero());
    }

    #[test]
    fn poly_eval_is_a_homomorphism(
        a in -9i64..9, b in -9i64..9,
        x in -5i64..5, y in -5i64..5,
    ) {
        const VARS: [&str; 2] = ["s", "t"];
        let f = SparsePoly::monomial(&VARS, vec![2, 0], rat(a))
            .add(&SparsePoly::monomial(&VARS, vec![0, 1], rat(3)));
        let g = SparsePoly::monomial(&VARS, vec![1, 1], rat(b))
            .add(&SparsePoly::constant(&VARS, rat(-2)));
        let at = vec![rat(x), rat(y)];
        prop_assert_eq!(f.mul(&g).eval(&at), f.eval(&at) * g.eval(&at));
        prop_assert_eq!(f.add(&g).eval(&at), f.eval(&at) + g.eval(&at));
    }
}
