//! Property-based checks: operator algebra on random polynomials and
//! involution/round-trip laws on random tableaux.

use proptest::prelude::*;
use svtcrystal::crystal::{k_bender_knuth, k_evacuation};
use svtcrystal::poly::{
    apply_word, demazure_lascoux, divided_difference, BetaPolynomial, OperatorKind, ReducedWord,
};
use svtcrystal::shape::Partition;
use svtcrystal::tableaux::{enumerate_svt, SetValuedTableau};

const N: usize = 4;

fn arb_poly() -> impl Strategy<Value = BetaPolynomial> {
    // Up to five monomials with small exponents and coefficients.
    prop::collection::vec(
        (0u32..2, prop::collection::vec(0u32..4, N), -4i64..5),
        1..5,
    )
    .prop_map(|terms| {
        let mut f = BetaPolynomial::zero(N);
        for (beta, exps, coeff) in terms {
            f = &f + &BetaPolynomial::monomial(N, beta, &exps, coeff.into());
        }
        f
    })
}

fn arb_tableau() -> impl Strategy<Value = SetValuedTableau> {
    (0usize..6).prop_flat_map(|which| {
        let shapes = [vec![1], vec![2], vec![2, 1], vec![2, 2], vec![3, 1], vec![1, 1]];
        let shape = Partition::new(shapes[which].clone()).unwrap();
        let all = enumerate_svt(&shape, 3, None);
        (0..all.len()).prop_map(move |k| all[k].clone())
    })
}

proptest! {
    #[test]
    fn braid_relations_hold(f in arb_poly()) {
        for kind in [OperatorKind::Newton, OperatorKind::Demazure, OperatorKind::DemazureLascoux] {
            for i in 1..N - 1 {
                let a = apply_word(&f, &ReducedWord(vec![i, i + 1, i]), kind).unwrap();
                let b = apply_word(&f, &ReducedWord(vec![i + 1, i, i + 1]), kind).unwrap();
                prop_assert_eq!(&a, &b);
            }
            let a = apply_word(&f, &ReducedWord(vec![1, 3]), kind).unwrap();
            let b = apply_word(&f, &ReducedWord(vec![3, 1]), kind).unwrap();
            prop_assert_eq!(&a, &b);
        }
    }

    #[test]
    fn newton_squares_to_zero_and_lascoux_is_idempotent(f in arb_poly()) {
        for i in 1..N {
            let d = divided_difference(&f, i).unwrap();
            prop_assert!(divided_difference(&d, i).unwrap().is_zero());
            let l = demazure_lascoux(&f, i, true).unwrap();
            prop_assert_eq!(&demazure_lascoux(&l, i, true).unwrap(), &l);
        }
    }

    #[test]
    fn divided_difference_kills_symmetric_products(f in arb_poly()) {
        // ∂_i(f · s_i f) = 0 since the product is s_i-symmetric.
        for i in 1..N {
            let sym = &f * &f.swap_vars(i).unwrap();
            prop_assert!(divided_difference(&sym, i).unwrap().is_zero());
        }
    }

    #[test]
    fn k_bender_knuth_involution(t in arb_tableau()) {
        for i in 1..3u8 {
            let s = k_bender_knuth(&t, i);
            prop_assert!(s.validate().is_ok());
            prop_assert_eq!(k_bender_knuth(&s, i), t.clone());
        }
        let e = k_evacuation(&t);
        prop_assert!(e.validate().is_ok());
        prop_assert_eq!(k_evacuation(&e), t);
    }

    #[test]
    fn tableau_json_round_trip(t in arb_tableau()) {
        let js = serde_json::to_string(&t).unwrap();
        let back: SetValuedTableau = serde_json::from_str(&js).unwrap();
        prop_assert_eq!(back, t);
    }
}
