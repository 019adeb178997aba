use proptest::prelude::*;

use nakayama_qhs::gluing::{admissible_from_order, admissible_from_tilting, assemble, validate};
use nakayama_qhs::homological::is_tilting;
use nakayama_qhs::io::{from_json, parse_algebra, parse_modules, parse_order, to_json};
use nakayama_qhs::qhs::{
    char_tilting, is_quasi_hereditary, minimal_adapted_order, order_from_tilting,
};
use nakayama_qhs::tilting::{
    enumerate_tilting, left_mutation, mutation_by_approximation, tilt_geq, Strategy as Enumeration,
};
use nakayama_qhs::tree::BinaryTree;
use nakayama_qhs::{AlgebraSpec, Error, PartialOrder};

fn algebra(max_n: usize) -> impl Strategy<Value = AlgebraSpec> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n.saturating_sub(2)).prop_map(move |bits| {
            AlgebraSpec::new(
                n,
                bits.iter()
                    .enumerate()
                    .filter(|(_, &b)| b)
                    .map(|(i, _)| i + 2),
            )
            .unwrap()
        })
    })
}

fn algebra_and_index(max_n: usize) -> impl Strategy<Value = (AlgebraSpec, usize)> {
    (algebra(max_n), any::<prop::sample::Index>()).prop_map(|(alg, i)| {
        let n = enumerate_tilting(&alg, Enumeration::Mutation)
            .unwrap()
            .len();
        let k = i.index(n);
        (alg, k)
    })
}

fn total_order(n: usize) -> impl Strategy<Value = PartialOrder> {
    Just((1..=n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|seq| PartialOrder::chain(&seq).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn tilting_round_trips((alg, k) in algebra_and_index(9)) {
        let t = enumerate_tilting(&alg, Enumeration::Mutation).unwrap().swap_remove(k);
        let ex = order_from_tilting(&alg, &t).unwrap();
        prop_assert!(ex.branches >= 1);
        prop_assert!(ex.order.is_tree());
        prop_assert_eq!(char_tilting(&alg, &ex.order).unwrap(), ex.labeled.clone());
        let seq = admissible_from_tilting(&alg, &t).unwrap();
        prop_assert!(validate(&alg, &seq).is_ok());
        let a = assemble(&alg, &seq).unwrap();
        prop_assert_eq!(&a.order, &ex.order);
        prop_assert_eq!(&a.tilting, &ex.labeled);
        prop_assert_eq!(admissible_from_order(&alg, &ex.order).unwrap(), seq);
    }

    #[test]
    fn mutations_go_down((alg, k) in algebra_and_index(8)) {
        let t = enumerate_tilting(&alg, Enumeration::Mutation).unwrap().swap_remove(k);
        for x in t.iter() {
            match left_mutation(&alg, &t, x) {
                Ok(mu) => {
                    prop_assert!(is_tilting(&alg, &mu));
                    prop_assert!(tilt_geq(&alg, &t, &mu) && !tilt_geq(&alg, &mu, &t));
                    prop_assert_eq!(mutation_by_approximation(&alg, &t, x).unwrap(), mu);
                }
                Err(e) => prop_assert!(matches!(e, Error::NotMutable(_))),
            }
        }
    }

    #[test]
    fn qh_total_orders_refine_their_minimal_order(alg in algebra(7), seed in 0usize..5040) {
        let n = alg.n();
        let mut seq: Vec<usize> = (1..=n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            seq.swap(i, s % (i + 1));
            s /= i + 1;
        }
        let o = PartialOrder::chain(&seq).unwrap();
        if is_quasi_hereditary(&alg, &o).unwrap() {
            let mao = minimal_adapted_order(&alg, &o).unwrap();
            prop_assert!(mao.is_subrelation_of(&o));
            prop_assert_eq!(minimal_adapted_order(&alg, &mao).unwrap(), mao.clone());
            prop_assert_eq!(char_tilting(&alg, &mao).unwrap(), char_tilting(&alg, &o).unwrap());
        } else {
            prop_assert!(char_tilting(&alg, &o).is_err());
        }
    }

    #[test]
    fn path_orders_are_trees(o in (1usize..=8).prop_flat_map(total_order)) {
        let alg = AlgebraSpec::path(o.len());
        let mao = minimal_adapted_order(&alg, &o).unwrap();
        let tree = BinaryTree::from_order(&mao).unwrap();
        prop_assert_eq!(tree.to_order(), mao.clone());
        prop_assert_eq!(tree.in_order(), (1..=o.len()).collect::<Vec<_>>());
        prop_assert_eq!(BinaryTree::from_tilting(1, o.len(), &tree.to_tilting()).unwrap(), tree);
    }

    #[test]
    fn formats_round_trip((alg, k) in algebra_and_index(8)) {
        prop_assert_eq!(parse_algebra(&alg.inline()).unwrap(), alg.clone());
        prop_assert_eq!(parse_algebra(&to_json(&alg)).unwrap(), alg.clone());
        let t = enumerate_tilting(&alg, Enumeration::Mutation).unwrap().swap_remove(k);
        prop_assert_eq!(parse_modules(&t.to_string()).unwrap(), t.clone());
        prop_assert_eq!(parse_modules(&to_json(&t)).unwrap(), t.clone());
        let o = order_from_tilting(&alg, &t).unwrap().order;
        prop_assert_eq!(parse_order(&o.to_string(), 1, alg.n()).unwrap(), o.clone());
        prop_assert_eq!(parse_order(&to_json(&o), 1, alg.n()).unwrap(), o.clone());
        let seq = admissible_from_tilting(&alg, &t).unwrap();
        prop_assert_eq!(from_json::<nakayama_qhs::gluing::AdmissibleSequence>(&to_json(&seq)).unwrap(), seq);
    }
}
