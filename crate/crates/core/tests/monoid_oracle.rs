mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use common::{frobenius_identity_failures, random_permutation, random_tss2};
use spanfrob::frobenius::{check_frobenius, FrobeniusDatum};
use spanfrob::simplicial::{monoid_from_simplicial, simplicial_from_monoid, verify_monoid_axioms};
use spanfrob::span::SetMap;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn generated_instances_are_simplicial(seed: u64) {
        let t = random_tss2(&mut StdRng::seed_from_u64(seed), 3, 8);
        prop_assert!(t.validate().is_empty(), "{:?}", t.validate());
    }

    #[test]
    fn simplicial_criteria_agree_with_span_axioms(seed: u64) {
        let t = random_tss2(&mut StdRng::seed_from_u64(seed), 3, 8);
        let axioms = verify_monoid_axioms(&t.monoid_spans()).unwrap();
        prop_assert_eq!(t.check_unit_conditions(), axioms.left_unit && axioms.right_unit);
        if t.check_unit_conditions() {
            prop_assert_eq!(t.check_associativity_fibers(), axioms.associative);
        }
        prop_assert_eq!(
            t.check_unit_conditions() && t.check_associativity_fibers(),
            axioms.all()
        );
    }

    #[test]
    fn monoids_rebuild_their_simplicial_set(seed: u64) {
        let t = random_tss2(&mut StdRng::seed_from_u64(seed), 3, 8);
        if monoid_from_simplicial(&t).is_ok() {
            let [d0, d1, d2] = [t.d2(0), t.d2(1), t.d2(2)];
            let back = simplicial_from_monoid(t.x0(), t.s0(), t.x2(), d0, d1, d2).unwrap();
            prop_assert_eq!(back.d1(0), t.d1(0));
            prop_assert_eq!(back.d1(1), t.d1(1));
            prop_assert_eq!(back.s1(0), t.s1(0));
            prop_assert_eq!(back.s1(1), t.s1(1));
        }
    }

    #[test]
    fn passing_frobenius_data_satisfy_the_identities(seed: u64) {
        let mut rng = StdRng::seed_from_u64(seed);
        let t = random_tss2(&mut rng, 3, 8);
        let alpha = random_permutation(&mut rng, t.x1());
        let f = FrobeniusDatum::new(t, alpha).unwrap();
        if check_frobenius(&f).is_ok() {
            prop_assert!(frobenius_identity_failures(&f).is_empty(), "{:?}", frobenius_identity_failures(&f));
        }
    }
}

#[test]
fn identity_alpha_on_a_point_is_frobenius() {
    // The terminal monoid: one vertex, one edge, one triangle.
    let t = random_tss2(&mut StdRng::seed_from_u64(0), 1, 1);
    assert_eq!(t.x2().len(), 1);
    let f = FrobeniusDatum::new(t.clone(), SetMap::identity(t.x1())).unwrap();
    assert!(check_frobenius(&f).is_ok());
    assert!(frobenius_identity_failures(&f).is_empty());
}
