mod common;

use proptest::prelude::*;
use szlenk_calc::tree::{
    embed_exists_bruteforce, is_monotone_length_preserving, monotone_embed, FiniteTree,
};

fn tree(max: usize) -> impl Strategy<Value = FiniteTree> {
    (1..=max)
        .prop_flat_map(|n| {
            (1..n.max(2))
                .map(|i| 0..i)
                .collect::<Vec<_>>()
                .prop_map(move |ps| (n, ps))
        })
        .prop_map(|(n, ps)| {
            let parents: Vec<Option<usize>> = std::iter::once(None)
                .chain(ps.into_iter().take(n - 1).map(Some))
                .collect();
            FiniteTree::from_parents(&parents).unwrap()
        })
}

proptest! {
    #[test]
    fn render_round_trips(t in tree(15)) {
        prop_assert_eq!(FiniteTree::parse(&t.render()).unwrap().render(), t.render());
    }

    #[test]
    fn order_equals_height(t in tree(15)) {
        prop_assert_eq!(t.order(), t.height());
    }

    #[test]
    fn derivation_lowers_order_by_one(t in tree(15)) {
        prop_assert_eq!(t.derive().order() + 1, t.order());
    }

    #[test]
    fn embedding_agrees_with_oracle(s in tree(9), t in tree(9)) {
        let brute = embed_exists_bruteforce(&s, &t).unwrap();
        let built = monotone_embed(&s, &t);
        prop_assert_eq!(built.is_some(), brute);
        prop_assert_eq!(brute, s.order() <= t.order());
        if let Some(map) = built {
            prop_assert!(is_monotone_length_preserving(&s, &t, &map));
        }
    }
}
