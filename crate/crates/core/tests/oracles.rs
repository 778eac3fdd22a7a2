//! Closed forms and rewriting rules checked against brute-force enumeration.

use std::collections::BTreeSet;

use dyckd::pathword::{all_words, dyck_words, enumerate_type_d};
use dyckd::qpoly::{one_plus_q_product, q_int};
use dyckd::tiling::{
    build_region, enumerate_tilings, genfun_lower, genfun_upper, lift_from_type_b, project_to_type_b, Class,
    PathType, Statistic,
};
use dyckd::treeform::{
    build_tree, factorize_p_b, factorize_p_d, kw_type_a, omega, omega_all_orders, p_mn, q_b,
};
use dyckd::{PathWord, PolyQ};
use rayon::prelude::*;

fn w(s: &str) -> PathWord {
    s.parse().unwrap()
}

fn lower(x: &PathWord, t: PathType) -> PolyQ {
    genfun_lower(x, t, Statistic::Art).unwrap()
}

fn words_up_to(n: usize) -> Vec<PathWord> {
    (1..=n).flat_map(all_words).collect()
}

#[test]
fn omega_matches_enumeration_and_is_confluent() {
    let bad: Vec<String> = words_up_to(6)
        .par_iter()
        .filter_map(|x| {
            let t = build_tree(x);
            let want = lower(x, PathType::D);
            let all = omega_all_orders(&t).unwrap();
            (omega(&t).unwrap() != want || all != vec![want.clone()]).then(|| x.to_string())
        })
        .collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn tree_edges_follow_arcs() {
    for x in words_up_to(6) {
        let t = build_tree(&x);
        let lp = dyckd::linkflip::link_pattern(&x);
        assert_eq!(t.edge_count(), lp.arcs.len(), "{x}");
        assert_eq!(t.dotted_count(), lp.arcs.iter().filter(|a| a.dashed).count(), "{x}");
    }
}

#[test]
fn kenyon_wilson_against_type_a() {
    for n in 1..=5 {
        for x in dyck_words(n) {
            assert_eq!(kw_type_a(&x).unwrap(), lower(&x, PathType::A), "{x}");
        }
    }
}

#[test]
fn q_b_against_type_b() {
    for total in 0..=6 {
        for m in 0..=total {
            let x = PathWord::downs_then_ups(total - m, m);
            if x.is_empty() {
                continue;
            }
            assert_eq!(q_b(m, total - m).unwrap(), lower(&x, PathType::B), "M={m}");
        }
    }
}

#[test]
fn p_mn_against_type_d() {
    for total in 1..=7 {
        for m in 1..=total {
            let x = PathWord::downs_then_ups(total - m, m);
            assert_eq!(p_mn(m, total - m).unwrap(), lower(&x, PathType::D), "{x}");
        }
    }
}

#[test]
fn ballot_words_factor_completely() {
    for x in words_up_to(7).into_iter().filter(|x| x.classify().is_ballot) {
        let f = factorize_p_b(&x).unwrap();
        assert!(f.enumerated.is_empty(), "{x}");
        assert_eq!(f.value, lower(&x, PathType::B), "{x}");
    }
}

#[test]
fn factorization_matches_enumeration() {
    let rows: Vec<(PathWord, bool)> = words_up_to(7)
        .par_iter()
        .map(|x| {
            let f = factorize_p_d(x).unwrap();
            (x.clone(), f.value == lower(x, PathType::D))
        })
        .collect();
    for (x, ok) in rows {
        assert!(ok, "{x}");
    }
}

/// The product form really needs a ballot remainder: for UD·DU it is off.
#[test]
fn product_form_fails_without_ballot_tail() {
    let naive = &(&kw_type_a(&w("UD")).unwrap() * &q_b(2, 1).unwrap()) * &lower(&w("DU"), PathType::B);
    assert_ne!(naive, lower(&w("UDDU"), PathType::B));
    assert_eq!(factorize_p_b(&w("UDDU")).unwrap().enumerated, vec![w("UDDU")]);
}

#[test]
fn leading_unmatched_up_step_is_free() {
    for x in words_up_to(6) {
        let ux = w("U").concat(&x);
        assert_eq!(lower(&ux, PathType::B), lower(&x, PathType::B), "{x}");
    }
}

#[test]
fn projection_is_a_bijection() {
    for n in 1..=6 {
        for eps in 0..2 {
            for lam in enumerate_type_d(n, eps) {
                for mu in enumerate_type_d(n, eps).into_iter().filter(|m| m.is_above(&lam).unwrap()) {
                    let r = build_region(&lam, &mu, PathType::D).unwrap();
                    let ts = enumerate_tilings(&r, Class::CoverInclusive);
                    let mut images = BTreeSet::new();
                    for t in &ts {
                        let (rb, tb) = project_to_type_b(&r, t).unwrap();
                        assert_eq!((tb.art, tb.tiles_count), (t.art, t.tiles_count));
                        let (rd, back) = lift_from_type_b(&rb, &tb, eps).unwrap();
                        assert_eq!((&rd, &back), (&r, t));
                        images.insert(tb);
                    }
                    let rb = build_region(
                        &lam.truncate_last().unwrap(),
                        &mu.truncate_last().unwrap(),
                        PathType::B,
                    )
                    .unwrap();
                    let target: BTreeSet<_> = enumerate_tilings(&rb, Class::CoverInclusive).into_iter().collect();
                    assert_eq!(images, target, "{lam}/{mu}");
                }
            }
        }
    }
}

#[test]
fn upper_sums_agree_with_type_b() {
    for mu in words_up_to(6) {
        let t = mu.truncate_last().unwrap();
        assert_eq!(
            genfun_upper(&mu, PathType::D, Statistic::Tiles).unwrap(),
            genfun_upper(&t, PathType::B, Statistic::Tiles).unwrap(),
            "{mu}"
        );
    }
}

#[test]
fn lowest_paths() {
    // D^n: the lower sum is the full product, matching Q^B(0, n-1).
    for n in 1..=7 {
        let x = PathWord::downs_then_ups(n, 0);
        assert_eq!(lower(&x, PathType::D), one_plus_q_product(n - 1));
    }
    assert_eq!(omega(&build_tree(&w("DUUDUU"))).unwrap(), &q_int(3) * &q_int(6));
    assert_eq!(omega(&build_tree(&w("DUUDU"))).unwrap(), &q_int(2) * &q_int(5));
}
