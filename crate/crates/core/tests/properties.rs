use maxbetti_core::hilbert::{decompose, polynomial_of_universal};
use maxbetti_core::oracle::borel_closure;
use maxbetti_core::{Monomial, MonomialIdeal, UniversalLexIdeal};
use proptest::prelude::*;

fn borel_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0u32..=3, n), 1..=3).prop_map(move |exps| {
            let gens: Vec<Monomial> = exps
                .into_iter()
                .map(|e| Monomial::new(1, n, e).unwrap())
                .filter(|m| !m.is_one())
                .collect();
            borel_closure(1, n, &gens).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn lexify_preserves_hilbert_function(i in borel_ideal()) {
        let lex = i.lexify().unwrap();
        prop_assert!(lex.is_lex());
        for d in 0..=i.max_generator_degree() + 3 {
            prop_assert_eq!(lex.graded_dim(d), i.graded_dim(d));
        }
    }

    #[test]
    fn lex_totals_dominate(i in borel_ideal()) {
        let a = i.betti_total_ek().unwrap();
        let b = i.lexify().unwrap().betti_total_ek().unwrap();
        prop_assert!(b.len() >= a.len());
        for (x, y) in a.iter().zip(&b) {
            prop_assert!(x <= y);
        }
    }

    #[test]
    fn saturation_is_idempotent(i in borel_ideal()) {
        let s = i.saturate_strongly_stable().unwrap();
        prop_assert!(s.contains_ideal(&i));
        prop_assert_eq!(s.saturate_strongly_stable().unwrap(), s.clone());
        prop_assert!(s.is_saturated_strongly_stable());
    }

    #[test]
    fn universal_round_trip(n in 2usize..=6, a in prop::collection::vec(0u32..=6, 1..=5)) {
        prop_assume!(a.len() < n);
        let u = UniversalLexIdeal::new(1, n, a).unwrap();
        let p = polynomial_of_universal(&u);
        prop_assert_eq!(decompose(p.poly(), n).unwrap(), u.b_list());
        prop_assert_eq!(UniversalLexIdeal::recognize(&u.to_ideal()), Some(u));
    }
}
