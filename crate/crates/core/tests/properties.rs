use mapenum_core::{
    classify, enumerate_oriented, matchings, DegreeProfile, EnumOptions, Permutation,
};
use proptest::prelude::*;

fn permutation(max: usize) -> impl Strategy<Value = Permutation> {
    (1..=max)
        .prop_flat_map(|n| Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

fn same_size_pair(max: usize) -> impl Strategy<Value = (Permutation, Permutation)> {
    (1..=max).prop_flat_map(|n| {
        let shuffled = || Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle();
        (shuffled(), shuffled()).prop_map(|(a, b)| {
            (
                Permutation::from_images(a).unwrap(),
                Permutation::from_images(b).unwrap(),
            )
        })
    })
}

proptest! {
    #[test]
    fn cycle_notation_round_trips(p in permutation(12)) {
        let text = p.to_string();
        let back = Permutation::parse_cycles(&text, p.size()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn inverse_composes_to_identity(p in permutation(12)) {
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
    }

    #[test]
    fn conjugation_keeps_cycle_type((p, r) in same_size_pair(12)) {
        prop_assert_eq!(p.conjugate(&r).unwrap().cycle_type(), p.cycle_type());
    }

    #[test]
    fn products_in_either_order_have_equal_cycle_counts((a, b) in same_size_pair(12)) {
        let ab = a.compose(&b).unwrap();
        let ba = b.compose(&a).unwrap();
        prop_assert_eq!(ab.cycle_count(), ba.cycle_count());
    }

    #[test]
    fn every_matching_is_an_involution_without_fixed_points(half in 1usize..=5) {
        for m in matchings(2 * half).unwrap() {
            prop_assert!(m.to_permutation().is_fixed_point_free_involution());
        }
    }

    #[test]
    fn classify_agrees_with_enumerator_on_connectivity(degrees in prop::collection::vec(1u32..=5, 1..=3)) {
        let profile = DegreeProfile::from_degrees(&degrees).unwrap();
        prop_assume!(profile.total_darts().is_multiple_of(2) && profile.total_darts() <= 10);
        let sigma = mapenum_core::build_sigma(&profile).unwrap();
        let hist = enumerate_oriented(&profile, &EnumOptions::default()).unwrap();
        let mut connected = 0u64;
        for m in matchings(sigma.size()).unwrap() {
            if classify(&sigma, &m).unwrap().is_some() {
                connected += 1;
            }
        }
        prop_assert_eq!(connected, hist.total_connected);
    }
}
