mod common;

use common::{colourings_brute, contains_ab_brute, fixture, p, p_tableaux_brute, partitions, ssyt_count_bounded};
use proptest::prelude::*;
use rimhook::posets::generate::{canonical_code, posets_up_to_isomorphism};
use rimhook::posets::{count_p_tableaux, csf, csf_with, evaluate_polynomial, stanley_stembridge_involution};
use rimhook::symfunc::{evaluate_at_ones, inverse_kostka_matrix};
use rimhook::{Error, Poset, SmallExpansion};

fn example() -> Poset {
    Poset::parse(&fixture("example.poset")).unwrap()
}

#[test]
fn three_plus_one_free_counts() {
    let levels = posets_up_to_isomorphism(7, Poset::is_three_plus_one_free);
    let counts: Vec<usize> = levels.iter().skip(1).map(Vec::len).collect();
    assert_eq!(counts, vec![1, 2, 5, 15, 49, 173, 639]);
    assert_eq!(counts.iter().sum::<usize>(), 884);
}

#[test]
fn generated_classes_are_distinct() {
    for level in posets_up_to_isomorphism(5, |_| true) {
        let codes: std::collections::HashSet<u64> = level.iter().map(canonical_code).collect();
        assert_eq!(codes.len(), level.len());
    }
}

#[test]
fn ab_freeness_matches_subset_search() {
    for level in posets_up_to_isomorphism(5, |_| true) {
        for poset in &level {
            for (a, b) in [(1, 1), (2, 1), (3, 1), (2, 2), (1, 3)] {
                assert_eq!(
                    poset.is_ab_free(a, b),
                    !contains_ab_brute(poset, a, b),
                    "({a}+{b}) on\n{}",
                    poset.to_text()
                );
            }
        }
    }
}

#[test]
fn p_tableaux_match_bijection_search() {
    for level in posets_up_to_isomorphism(6, |_| true).iter().take(6) {
        for poset in level {
            for shape in partitions(poset.len()) {
                assert_eq!(count_p_tableaux(poset, &p(&shape)), p_tableaux_brute(poset, &shape));
            }
        }
    }
}

#[test]
fn colouring_counts_agree() {
    for level in posets_up_to_isomorphism(6, |_| true) {
        for poset in &level {
            let g = poset.incomparability_graph();
            let poly = g.chromatic_polynomial();
            for k in 0..=4 {
                let ours = g.chromatic_polynomial_value(k);
                assert_eq!(ours, colourings_brute(&g.edges(), g.len(), k));
                assert_eq!(evaluate_polynomial(&poly, k as i64), ours as i64);
            }
        }
    }
}

#[test]
fn schur_expansion_counts_colourings() {
    for level in posets_up_to_isomorphism(6, Poset::is_three_plus_one_free).iter().skip(1) {
        let inverse = inverse_kostka_matrix::<i64>(level[0].len());
        for poset in level {
            let r = csf_with(poset, &inverse).unwrap();
            let g = poset.incomparability_graph();
            for k in 1..=5 {
                let via_schur: u64 = r
                    .s_expansion
                    .terms()
                    .map(|(nu, c)| *c as u64 * ssyt_count_bounded(nu.parts(), k))
                    .sum();
                assert_eq!(via_schur, g.chromatic_polynomial_value(k));
                assert_eq!(evaluate_at_ones(&r.s_expansion, k), via_schur as i64);
            }
        }
    }
}

#[test]
fn example_poset_data() {
    let poset = example();
    assert_eq!(poset.height().unwrap(), 2);
    assert!(poset.is_ab_free(3, 1));
    let r = csf::<i64>(&poset).unwrap();
    assert_eq!(r.e_expansion.to_string(), "4 e[4] + 2 e[3,1] + 2 e[2,2]");
    let total: usize = partitions(4)
        .iter()
        .filter(|s| s.len() <= 2)
        .map(|s| count_p_tableaux(&poset, &p(s)) * rimhook::tableaux::enumerate_srht_any_type(&p(s)).len())
        .sum();
    assert_eq!(total, 20);
    let g = poset.incomparability_graph();
    assert_eq!(evaluate_at_ones(&r.e_expansion, 3), g.chromatic_polynomial_value(3) as i64);
}

#[test]
fn small_expansions() {
    let antichain = csf::<i64>(&Poset::antichain(2)).unwrap();
    assert_eq!(antichain.e_expansion.to_string(), "2 e[2]");
    for n in 1..=6 {
        let chain = csf::<i64>(&Poset::chain(n)).unwrap();
        let expected = SmallExpansion::basis_element(rimhook::Basis::E, rimhook::Partition::column(n));
        assert_eq!(chain.e_expansion, expected);
    }
}

#[test]
fn adjoining_a_maximum_multiplies_by_e1() {
    for level in posets_up_to_isomorphism(5, |q| q.is_empty() || q.height().unwrap() <= 2).iter().skip(1) {
        let inverse = inverse_kostka_matrix::<i64>(level[0].len());
        let inverse_up = inverse_kostka_matrix::<i64>(level[0].len() + 1);
        for poset in level {
            let base = csf_with(poset, &inverse).unwrap().e_expansion;
            let topped = csf_with(&poset.with_maximum(), &inverse_up).unwrap().e_expansion;
            assert_eq!(topped, base.times_elementary(1).unwrap());
        }
    }
}

#[test]
fn involution_rejects_tall_posets() {
    assert_eq!(
        stanley_stembridge_involution(&Poset::chain(3)).unwrap_err(),
        Error::HeightTooLarge(3)
    );
    assert!(matches!(
        csf::<i64>(&Poset::chain(3).disjoint_union(&Poset::antichain(1))),
        Err(Error::NotThreePlusOneFree)
    ));
}

fn arb_poset() -> impl Strategy<Value = Poset> {
    (1usize..=6, proptest::collection::vec(any::<bool>(), 15)).prop_map(|(n, bits)| {
        let mut covers = Vec::new();
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if bits[k % bits.len()] {
                    covers.push((i, j));
                }
                k += 1;
            }
        }
        let labels = (0..n).map(|i| format!("v{i}")).collect();
        Poset::from_covers(labels, &covers).unwrap()
    })
}

proptest! {
    #[test]
    fn text_round_trip(poset in arb_poset()) {
        let back = Poset::parse(&poset.to_text()).unwrap();
        prop_assert_eq!(canonical_code(&back), canonical_code(&poset));
        prop_assert_eq!(back.len(), poset.len());
    }

    #[test]
    fn incomparability_is_symmetric(poset in arb_poset()) {
        let g = poset.incomparability_graph();
        for u in 0..poset.len() {
            for v in 0..poset.len() {
                prop_assert_eq!(g.has_edge(u, v), u != v && !poset.comparable(u, v));
                prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
    }

    #[test]
    fn lengths_beyond_height_vanish(poset in arb_poset()) {
        prop_assume!(poset.is_three_plus_one_free());
        let h = poset.height().unwrap();
        let r = csf::<i64>(&poset).unwrap();
        for (mu, c) in r.e_expansion.terms() {
            prop_assert!(mu.len() <= h || *c == 0);
        }
    }
}
