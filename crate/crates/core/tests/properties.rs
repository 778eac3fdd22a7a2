use std::collections::HashSet;

use dyckd::linkflip::{all_flips, pair_arcs};
use dyckd::pathword::{all_words, PathWord, Step};
use dyckd::qpoly::{q2_binomial, q_binomial, q_int, PolyQ};
use dyckd::tiling::{build_region, enumerate_tilings, Class, PathType};
use num_bigint::BigInt;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = PolyQ> {
    prop::collection::vec(-20i64..20, 0..7).prop_map(PolyQ::from_coeffs)
}

fn word_of(n: usize) -> impl Strategy<Value = PathWord> {
    prop::collection::vec(prop::bool::ANY, n)
        .prop_map(|bs| PathWord::new(bs.into_iter().map(|b| if b { Step::U } else { Step::D }).collect()))
}

fn word(max: usize) -> impl Strategy<Value = PathWord> {
    (1..=max).prop_flat_map(word_of)
}

fn three_words(max: usize) -> impl Strategy<Value = (PathWord, PathWord, PathWord)> {
    (1..=max).prop_flat_map(|n| (word_of(n), word_of(n), word_of(n)))
}

/// A word and a same-sign word weakly above it.
fn type_d_pair(max: usize) -> impl Strategy<Value = (PathWord, PathWord)> {
    word(max).prop_flat_map(|lam| {
        let above: Vec<PathWord> = all_words(lam.len())
            .into_iter()
            .filter(|mu| mu.epsilon() == lam.epsilon() && mu.is_above(&lam).unwrap())
            .collect();
        (Just(lam), prop::sample::select(above))
    })
}

/// Horner evaluation, independent of the multiplication code.
fn eval(p: &PolyQ, x: i64) -> BigInt {
    p.coeffs()
        .iter()
        .rev()
        .fold(BigInt::from(0), |acc, c| acc * x + c)
}

proptest! {
    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &PolyQ::zero(), a.clone());
        prop_assert_eq!(&a * &PolyQ::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn product_matches_pointwise(a in poly(), b in poly(), x in -3i64..4) {
        prop_assert_eq!(eval(&(&a * &b), x), eval(&a, x) * eval(&b, x));
    }

    #[test]
    fn canonical_form(a in poly(), b in poly()) {
        let s = &a - &b;
        prop_assert!(s.coeffs().last().is_none_or(|c| *c != BigInt::from(0)));
    }

    #[test]
    fn exact_division_inverts_product(a in poly(), b in poly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn q_integer_division_leaves_remainder(n in 2usize..9, k in 1usize..9) {
        // [n] divides [kn] but [kn + 1] leaves a remainder.
        prop_assert!(q_int(k * n).exact_div(&q_int(n)).is_ok());
        prop_assert!(q_int(k * n + 1).exact_div(&q_int(n)).is_err());
    }

    #[test]
    fn binomial_symmetry_and_pascal(n in 1i64..10, m in 0i64..10) {
        prop_assume!(m <= n);
        prop_assert_eq!(q_binomial(n, m).unwrap(), q_binomial(n, n - m).unwrap());
        prop_assert_eq!(q_binomial(n, m).unwrap().eval_at_one(), binom(n, m));
        if m >= 1 && m < n {
            // [n, m] = [n-1, m-1] + q^m [n-1, m]
            let rhs = &q_binomial(n - 1, m - 1).unwrap()
                + &q_binomial(n - 1, m).unwrap().scale_by_monomial(m as usize);
            prop_assert_eq!(q_binomial(n, m).unwrap(), rhs);
        }
        prop_assert_eq!(q2_binomial(n, m).unwrap(), q_binomial(n, m).unwrap().substitute_power(2));
    }

    #[test]
    fn dominance_is_a_partial_order((a, b, c) in three_words(8)) {
        prop_assert!(a.is_above(&a).unwrap());
        if a.is_above(&b).unwrap() && b.is_above(&a).unwrap() {
            prop_assert_eq!(&a, &b);
        }
        if a.is_above(&b).unwrap() && b.is_above(&c).unwrap() {
            prop_assert!(a.is_above(&c).unwrap());
        }
    }

    #[test]
    fn heights_and_parity(w in word(12)) {
        let h = w.heights();
        prop_assert_eq!(h[0], 0);
        prop_assert!(h.windows(2).all(|p| (p[1] - p[0]).abs() == 1));
        prop_assert_eq!((w.end_height() - w.len() as i32).rem_euclid(2), 0);
    }

    #[test]
    fn flips_are_injective_and_keep_the_sign(w in word(10)) {
        let flips = all_flips(&w);
        let arcs = pair_arcs(&w).arcs().len();
        prop_assert_eq!(flips.len(), 1 << arcs);
        let images: HashSet<_> = flips.iter().map(|f| f.word.clone()).collect();
        prop_assert_eq!(images.len(), flips.len());
        for f in &flips {
            prop_assert_eq!(f.word.epsilon(), w.epsilon());
            prop_assert!(w.is_above(&f.word).unwrap());
        }
    }

    #[test]
    fn tilings_are_exact_covers((lam, mu) in type_d_pair(7)) {
        let r = build_region(&lam, &mu, PathType::D).unwrap();
        let inc = enumerate_tilings(&r, Class::CoverInclusive);
        let exc = enumerate_tilings(&r, Class::CoverExclusive);
        prop_assert!(!inc.is_empty());
        prop_assert!(exc.len() <= 1);
        for t in inc.iter().chain(&exc) {
            prop_assert!(t.is_exact_cover(&r));
            prop_assert_eq!(t.art * 2, t.area + t.tiles_count);
        }
    }
}

fn binom(n: i64, m: i64) -> BigInt {
    (0..m).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}
