mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use common::{indexed_set, random_span, random_word};
use spanfrob::rel::{compose_relations, functor_f, reduce_word, span_to_relation, word_matrix, word_trajectories};
use spanfrob::span::{compose_spans, span_to_matrix};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn reduction_preserves_trajectory_counts(seed: u64) {
        let mut rng = StdRng::seed_from_u64(seed);
        let w = random_word(&mut rng, 5, 4);
        let r = reduce_word(&w);
        prop_assert!(r.len() <= w.len());
        prop_assert!(r.monic_positions().is_empty());
        prop_assert_eq!(word_matrix(&w), word_matrix(&r));
    }

    #[test]
    fn each_single_contraction_preserves_counts(seed: u64) {
        let mut rng = StdRng::seed_from_u64(seed);
        let w = random_word(&mut rng, 5, 3);
        let m = word_matrix(&w);
        for i in w.monic_positions() {
            prop_assert_eq!(&word_matrix(&w.contract(i).unwrap()), &m);
        }
    }

    #[test]
    fn span_round_trips_through_words(seed: u64, a in 1..=4usize, b in 1..=4usize) {
        let mut rng = StdRng::seed_from_u64(seed);
        let s = random_span(&mut rng, &indexed_set("x", a), &indexed_set("y", b), 6);
        prop_assert_eq!(span_to_matrix(&word_trajectories(&functor_f(&s))), span_to_matrix(&s));
    }

    #[test]
    fn support_of_composite_is_relational_composite(seed: u64, a in 1..=4usize, b in 1..=4usize, c in 1..=4usize) {
        let mut rng = StdRng::seed_from_u64(seed);
        let (x, y, z) = (indexed_set("x", a), indexed_set("y", b), indexed_set("z", c));
        let f = random_span(&mut rng, &x, &y, 5);
        let g = random_span(&mut rng, &y, &z, 5);
        let composite = span_to_relation(&compose_spans(&f, &g).unwrap());
        let expected = compose_relations(&span_to_relation(&f), &span_to_relation(&g)).unwrap();
        prop_assert_eq!(composite, expected);
    }
}
