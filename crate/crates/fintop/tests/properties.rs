//! Property tests over randomly generated finite spaces: operator laws,
//! duality between closures and interiors, class implications, agreement
//! between the memoized and definition-literal paths, and document round
//! trips. Spaces are generated as random set families closed under union
//! and intersection, so every case is a genuine topology.

use std::collections::BTreeSet;

use proptest::collection::vec;
use proptest::prelude::*;

use fintop::naive;
use fintop::operators::{gen_closure, gen_interior, ClosureKind, SetClass, SubsetClassification};
use fintop::space::{FiniteSpace, GroundSet, SubsetMask};

fn build_space(n: usize, seeds: &[u32]) -> FiniteSpace {
    let full = (1u32 << n) - 1;
    let mut opens: BTreeSet<u32> = BTreeSet::from([0, full]);
    opens.extend(seeds.iter().map(|s| s & full));
    loop {
        let snapshot: Vec<u32> = opens.iter().copied().collect();
        let before = opens.len();
        for (i, &a) in snapshot.iter().enumerate() {
            for &b in &snapshot[i + 1..] {
                opens.insert(a | b);
                opens.insert(a & b);
            }
        }
        if opens.len() == before {
            break;
        }
    }
    let ground = GroundSet::alphabetic(n).expect("alphabetic ground set");
    let members: Vec<SubsetMask> = opens.into_iter().map(SubsetMask::from_bits).collect();
    FiniteSpace::new(ground, members).expect("family closed under union and intersection")
}

fn space_seed() -> impl Strategy<Value = (usize, Vec<u32>)> {
    (1..=5usize).prop_flat_map(|n| {
        let full = (1u32 << n) - 1;
        (Just(n), vec(0..=full, 0..6))
    })
}

fn subset_in(sp: &FiniteSpace, raw: u32) -> SubsetMask {
    SubsetMask::from_bits(raw & sp.full().bits())
}

proptest! {
    #![proptest_config(ProptestConfig {
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn interior_and_closure_are_complement_duals(
        (n, seeds) in space_seed(),
        raw in any::<u32>(),
    ) {
        let sp = build_space(n, &seeds);
        let a = subset_in(&sp, raw);
        prop_assert_eq!(sp.closure(sp.complement(a)), sp.complement(sp.interior(a)));
    }

    #[test]
    fn closure_is_extensive_idempotent_and_monotone(
        (n, seeds) in space_seed(),
        raw_a in any::<u32>(),
        raw_b in any::<u32>(),
    ) {
        let sp = build_space(n, &seeds);
        let a = subset_in(&sp, raw_a);
        let b = subset_in(&sp, raw_b).union(a);
        let cl_a = sp.closure(a);
        prop_assert!(a.is_subset_of(cl_a));
        prop_assert_eq!(sp.closure(cl_a), cl_a);
        prop_assert!(cl_a.is_subset_of(sp.closure(b)));
    }

    #[test]
    fn closure_distributes_over_union(
        (n, seeds) in space_seed(),
        raw_a in any::<u32>(),
        raw_b in any::<u32>(),
    ) {
        let sp = build_space(n, &seeds);
        let a = subset_in(&sp, raw_a);
        let b = subset_in(&sp, raw_b);
        prop_assert_eq!(sp.closure(a.union(b)), sp.closure(a).union(sp.closure(b)));
    }

    #[test]
    fn interior_distributes_over_intersection(
        (n, seeds) in space_seed(),
        raw_a in any::<u32>(),
        raw_b in any::<u32>(),
    ) {
        let sp = build_space(n, &seeds);
        let a = subset_in(&sp, raw_a);
        let b = subset_in(&sp, raw_b);
        prop_assert_eq!(
            sp.interior(a.intersect(b)),
            sp.interior(a).intersect(sp.interior(b))
        );
    }

    #[test]
    fn generalized_closures_are_extensive_idempotent_and_monotone(
        (n, seeds) in space_seed(),
        raw_a in any::<u32>(),
        raw_b in any::<u32>(),
    ) {
        let sp = build_space(n, &seeds);
        let a = subset_in(&sp, raw_a);
        let b = subset_in(&sp, raw_b).union(a);
        for kind in ClosureKind::ALL {
            let once = gen_closure(&sp, kind, a).value;
            prop_assert!(a.is_subset_of(once), "{} closure not extensive", kind.name());
            prop_assert_eq!(gen_closure(&sp, kind, once).value, once);
            prop_assert!(once.is_subset_of(gen_closure(&sp, kind, b).value));
        }
    }

    #[test]
    fn generalized_interior_is_the_complement_dual(
        (n, seeds) in space_seed(),
        raw in any::<u32>(),
    ) {
        let sp = build_space(n, &seeds);
        let a = subset_in(&sp, raw);
        for kind in ClosureKind::ALL {
            let via_dual = sp.complement(gen_closure(&sp, kind, sp.complement(a)).value);
            prop_assert_eq!(gen_interior(&sp, kind, a).value, via_dual);
        }
    }

    #[test]
    fn starred_closure_fixes_every_subset(
        (n, seeds) in space_seed(),
        raw in any::<u32>(),
    ) {
        let sp = build_space(n, &seeds);
        let a = subset_in(&sp, raw);
        let outcome = gen_closure(&sp, ClosureKind::Scstar, a);
        prop_assert_eq!(outcome.value, a);
        prop_assert!(outcome.kind_closed);
    }

    #[test]
    fn closed_sets_belong_to_every_weaker_closed_class(
        (n, seeds) in space_seed(),
        raw in any::<u32>(),
    ) {
        let sp = build_space(n, &seeds);
        let a = subset_in(&sp, raw);
        if sp.is_closed(a) {
            for class in [
                SetClass::SemiClosed,
                SetClass::ScstarClosed,
                SetClass::GClosed,
                SetClass::GscstarClosed,
                SetClass::ScstarGClosed,
            ] {
                prop_assert!(class.holds(&sp, a), "closed set escapes {class}");
            }
        }
        if sp.is_open(a) {
            for class in [
                SetClass::SemiOpen,
                SetClass::ScstarOpen,
                SetClass::GOpen,
                SetClass::GscstarOpen,
                SetClass::ScstarGOpen,
            ] {
                prop_assert!(class.holds(&sp, a), "open set escapes {class}");
            }
        }
    }

    #[test]
    fn regular_sets_are_open_or_closed(
        (n, seeds) in space_seed(),
        raw in any::<u32>(),
    ) {
        let sp = build_space(n, &seeds);
        let a = subset_in(&sp, raw);
        if SetClass::RegularOpen.holds(&sp, a) {
            prop_assert!(sp.is_open(a));
        }
        if SetClass::RegularClosed.holds(&sp, a) {
            prop_assert!(sp.is_closed(a));
        }
    }

    #[test]
    fn memoized_path_matches_the_reference_everywhere(
        (n, seeds) in space_seed(),
        raw in any::<u32>(),
    ) {
        let sp = build_space(n, &seeds);
        let a = subset_in(&sp, raw);
        prop_assert_eq!(
            SubsetClassification::classify(&sp, a),
            naive::classify(&sp, a)
        );
        for kind in ClosureKind::ALL {
            prop_assert_eq!(gen_closure(&sp, kind, a), naive::gen_closure(&sp, kind, a));
        }
        prop_assert_eq!(sp.interior(a), naive::interior(&sp, a));
        prop_assert_eq!(sp.closure(a), naive::closure(&sp, a));
    }

    #[test]
    fn class_membership_dualizes_under_complement(
        (n, seeds) in space_seed(),
        raw in any::<u32>(),
    ) {
        let sp = build_space(n, &seeds);
        let a = subset_in(&sp, raw);
        let c = sp.complement(a);
        let dual_pairs = [
            (SetClass::Open, SetClass::Closed),
            (SetClass::RegularOpen, SetClass::RegularClosed),
            (SetClass::SemiOpen, SetClass::SemiClosed),
            (SetClass::CstarOpen, SetClass::CstarClosed),
            (SetClass::ScstarOpen, SetClass::ScstarClosed),
            (SetClass::GOpen, SetClass::GClosed),
            (SetClass::GscstarOpen, SetClass::GscstarClosed),
            (SetClass::ScstarGOpen, SetClass::ScstarGClosed),
        ];
        for (open_like, closed_like) in dual_pairs {
            prop_assert_eq!(
                open_like.holds(&sp, a),
                closed_like.holds(&sp, c),
                "{} on a set disagrees with {} on its complement",
                open_like,
                closed_like
            );
        }
    }

    #[test]
    fn text_and_document_round_trips_preserve_the_space(
        (n, seeds) in space_seed(),
    ) {
        let sp = build_space(n, &seeds);
        let reparsed = fintop::parse_space(&sp.to_text()).expect("reparse rendered space");
        prop_assert_eq!(reparsed.opens(), sp.opens());
        prop_assert_eq!(reparsed.ground().labels(), sp.ground().labels());

        let doc = sp.to_doc();
        let json = serde_json::to_string(&doc).expect("serialize doc");
        let back: fintop::SpaceDoc = serde_json::from_str(&json).expect("parse doc");
        let rebuilt = FiniteSpace::from_doc(&back).expect("rebuild from doc");
        prop_assert_eq!(rebuilt.opens(), sp.opens());
    }

    #[test]
    fn subset_masks_obey_de_morgan(
        n in 1..=5usize,
        raw_a in any::<u32>(),
        raw_b in any::<u32>(),
    ) {
        let full = (1u32 << n) - 1;
        let a = SubsetMask::from_bits(raw_a & full);
        let b = SubsetMask::from_bits(raw_b & full);
        prop_assert_eq!(
            a.union(b).complement_in(n),
            a.complement_in(n).intersect(b.complement_in(n))
        );
        prop_assert_eq!(a.minus(b), a.intersect(b.complement_in(n)));
    }
}
