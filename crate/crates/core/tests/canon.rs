mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use recon_core::canon::{canonical_form, canonical_labeling, code_for_order};
use recon_core::{are_isomorphic, canonical_code, CanonicalCode, Graph};

#[test]
fn least_string_over_all_orderings_up_to_six_vertices() {
    for n in 0usize..=6 {
        let pairs = n * n.saturating_sub(1) / 2;
        for mask in 0..1u64 << pairs {
            let g = common::graph_from_mask(n, mask);
            assert_eq!(canonical_code(&g).as_bytes(), common::min_over_permutations(&g), "n={n} mask={mask:#x}");
        }
    }
}

#[test]
fn code_layout_matches_identity_string() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 0..=16 {
        let g = common::random_graph(n, 0.4, &mut rng);
        let id: Vec<usize> = (0..n).collect();
        assert_eq!(code_for_order(&g, &id).as_bytes(), common::identity_string(&g));
    }
}

#[test]
fn highly_symmetric_graphs() {
    use recon_core::named::*;
    for g in [complete(12), Graph::empty(20), complete_bipartite(7, 7), heawood(), petersen(), cycle(30)] {
        let code = canonical_code(&g);
        let mut rng = ChaCha8Rng::seed_from_u64(g.n() as u64);
        let p = common::random_permutation(g.n(), &mut rng);
        assert_eq!(canonical_code(&g.permuted(&p)), code);
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| common::graph_from_bits(n, &bits))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn relabeling_preserves_the_code(g in arb_graph(11), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = common::random_permutation(g.n(), &mut rng);
        let h = g.permuted(&p);
        prop_assert_eq!(canonical_code(&g), canonical_code(&h));
        prop_assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn labeling_spells_the_code(g in arb_graph(14)) {
        let (code, order) = canonical_labeling(&g);
        prop_assert_eq!(code_for_order(&g, &order), code.clone());
        let form = canonical_form(&g);
        prop_assert_eq!(canonical_code(&form), code.clone());
        prop_assert_eq!(code.to_graph(), form);
    }

    #[test]
    fn code_bytes_round_trip(g in arb_graph(14)) {
        let code = canonical_code(&g);
        let back = CanonicalCode::from_bytes(code.as_bytes().to_vec()).unwrap();
        prop_assert_eq!(back, code);
    }

    #[test]
    fn codes_separate_different_edge_counts(g in arb_graph(9), h in arb_graph(9)) {
        if g.n() != h.n() || g.degree_multiset() != h.degree_multiset() {
            prop_assert_ne!(canonical_code(&g), canonical_code(&h));
            prop_assert!(!are_isomorphic(&g, &h));
        }
    }
}

#[test]
fn malformed_code_bytes_are_rejected() {
    assert!(CanonicalCode::from_bytes(vec![]).is_err());
    assert!(CanonicalCode::from_bytes(vec![3]).is_err());
    // 3 vertices use 3 bits; the low 5 must be clear
    assert!(CanonicalCode::from_bytes(vec![3, 0b0110_0001]).is_err());
    assert!(CanonicalCode::from_bytes(vec![3, 0b0110_0000]).is_ok());
    assert!(CanonicalCode::from_bytes(vec![65]).is_err());
}

#[test]
fn sorting_codes_is_total_and_stable() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut codes: Vec<CanonicalCode> = (0..200).map(|i| canonical_code(&common::random_graph(i % 9, 0.5, &mut rng))).collect();
    let mut again = codes.clone();
    codes.sort();
    again.reverse();
    again.sort();
    assert_eq!(codes, again);
    assert!(codes.windows(2).all(|w| w[0].as_bytes() <= w[1].as_bytes()));
}
