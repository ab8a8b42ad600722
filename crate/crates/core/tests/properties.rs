//! Property tests for the combinatorial and algebraic invariants.

use proptest::prelude::*;

use klr_specht::config::{AlgebraConfig, FieldKind};
use klr_specht::partition::{GradedDimension, Multipartition};
use klr_specht::scalar::Scalar;
use klr_specht::symgroup::{all_permutations, Permutation, WordConvention};
use klr_specht::tableau::{enumerate_std, std_graded_count, Tableau};
use klr_specht::verify::Verifier;

/// A multipartition of level 1..=3 and size `0..=n_max`, chosen by index.
fn multipartition(n_max: usize) -> impl Strategy<Value = Multipartition> {
    (1usize..=3, 0..=n_max, any::<prop::sample::Index>()).prop_map(|(level, n, idx)| {
        let all = Multipartition::all(level, n);
        all[idx.index(all.len())].clone()
    })
}

fn config(level: usize) -> impl Strategy<Value = AlgebraConfig> {
    (2u32..=4).prop_flat_map(move |e| {
        prop::collection::vec(0..e as i64, level).prop_map(move |kappa| AlgebraConfig::finite(e, &kappa))
    })
}

fn shape_and_config(n_max: usize) -> impl Strategy<Value = (Multipartition, AlgebraConfig)> {
    multipartition(n_max).prop_flat_map(|lambda| {
        let level = lambda.level();
        (Just(lambda), config(level))
    })
}

fn standard_tableau(n_max: usize) -> impl Strategy<Value = Tableau> {
    (multipartition(n_max), any::<prop::sample::Index>()).prop_map(|(lambda, idx)| {
        let all = enumerate_std(&lambda);
        all[idx.index(all.len())].clone()
    })
}

fn permutation(n_max: usize) -> impl Strategy<Value = Permutation> {
    (1..=n_max)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|line| Permutation::from_one_line(&line).unwrap())
}

proptest! {
    #[test]
    fn multipartition_text_round_trips(lambda in multipartition(8)) {
        let back: Multipartition = lambda.to_string().parse().unwrap();
        prop_assert_eq!(back, lambda);
    }

    #[test]
    fn conjugation_is_an_involution(lambda in multipartition(8)) {
        let conj = lambda.conjugate();
        prop_assert_eq!(conj.size(), lambda.size());
        prop_assert_eq!(conj.conjugate(), lambda);
    }

    #[test]
    fn tableau_text_round_trips(t in standard_tableau(6)) {
        let back: Tableau = t.to_string().parse().unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn tableau_conjugation(t in standard_tableau(6)) {
        prop_assert!(t.conjugate().is_standard());
        prop_assert_eq!(t.conjugate().conjugate(), t.clone());
        let lambda = t.shape().clone();
        prop_assert_eq!(Tableau::t_row(&lambda), Tableau::t_col(&lambda.conjugate()).conjugate());
    }

    #[test]
    fn permutations_of_tableaux(t in standard_tableau(6)) {
        let lambda = t.shape().clone();
        prop_assert_eq!(Tableau::t_col(&lambda).act(&t.perm_col()), t.clone());
        prop_assert_eq!(Tableau::t_row(&lambda).act(&t.perm_row()), t.clone());
        // t_lambda is the least dominant standard tableau.
        prop_assert!(t.dominates(&Tableau::t_col(&lambda)).unwrap());
    }

    #[test]
    fn reduced_words_round_trip(w in permutation(7)) {
        for conv in [WordConvention::LexMin, WordConvention::LexMax] {
            let word = w.reduced_word(conv);
            prop_assert_eq!(word.len(), w.length());
            prop_assert_eq!(Permutation::from_word(w.n(), &word), w.clone());
        }
        prop_assert_eq!(w.inverse().length(), w.length());
    }

    #[test]
    fn bruhat_order_bounds(w in permutation(6)) {
        let n = w.n();
        let w0 = Permutation::from_one_line(&(1..=n).rev().collect::<Vec<_>>()).unwrap();
        prop_assert!(Permutation::identity(n).bruhat_leq(&w));
        prop_assert!(w.bruhat_leq(&w0));
        prop_assert!(w.bruhat_leq(&w));
        prop_assert_eq!(w.inverse().bruhat_leq(&w0), true);
    }

    #[test]
    fn degree_plus_codegree_is_defect((lambda, cfg) in shape_and_config(6), idx in any::<prop::sample::Index>()) {
        let all = enumerate_std(&lambda);
        let t = &all[idx.index(all.len())];
        prop_assert_eq!(t.degree(&cfg).unwrap() + t.codegree(&cfg).unwrap(), lambda.defect(&cfg));
    }

    #[test]
    fn graded_dimension_text_round_trips((lambda, cfg) in shape_and_config(6)) {
        let dim = std_graded_count(&lambda, &cfg).1;
        let back = GradedDimension::parse(&dim.to_string()).unwrap();
        prop_assert!(back.same_as(&dim));
    }

    #[test]
    fn prime_field_inverses(p in prop::sample::select(vec![2u64, 3, 5, 7, 101]), x in 1i64..1000) {
        let field = FieldKind::Prime(p);
        let a = Scalar::from_i64(x, field);
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inv()).is_one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn model_matches_tableau_combinatorics((lambda, cfg) in shape_and_config(4)) {
        let v = Verifier::new();
        let model = v.cache.column(&lambda, &cfg).unwrap();
        let (count, graded) = std_graded_count(&lambda, &cfg);
        prop_assert_eq!(model.dim() as u128, count);
        prop_assert!(model.graded_dimension().same_as(&graded));
    }

    #[test]
    fn dominated_homs_lie_in_all_homs(l in multipartition(4), idx in any::<prop::sample::Index>()) {
        let cfg = AlgebraConfig::finite(3, &(0..l.level() as i64).collect::<Vec<_>>());
        let same_content: Vec<Multipartition> = Multipartition::all(l.level(), l.size())
            .into_iter()
            .filter(|m| m.content(&cfg) == l.content(&cfg))
            .collect();
        let mu = &same_content[idx.index(same_content.len())];
        let v = Verifier::new();
        let dom = v.hom(&l, mu, &cfg, true).unwrap();
        let all = v.hom(&l, mu, &cfg, false).unwrap();
        prop_assert!(dom.span_within(&all));
    }

    #[test]
    fn reports_are_deterministic(l in multipartition(4), m in 1usize..=3) {
        let cfg = AlgebraConfig::finite(3, &vec![0; l.level()]);
        prop_assume!(m <= l.level());
        let a = Verifier::new().verify_cr(&l, &l, m, &cfg).to_json();
        let b = Verifier::new().verify_cr(&l, &l, m, &cfg).to_json();
        prop_assert_eq!(a, b);
    }
}

#[test]
fn bruhat_is_a_partial_order_on_s4() {
    let perms = all_permutations(4);
    for u in &perms {
        for w in &perms {
            if u.bruhat_leq(w) && w.bruhat_leq(u) {
                assert_eq!(u, w);
            }
            if u.bruhat_leq(w) {
                assert!(u.length() <= w.length());
            }
        }
    }
}
