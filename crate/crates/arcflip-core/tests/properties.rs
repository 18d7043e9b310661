//! Property-based invariants over randomly drawn instances.

use proptest::prelude::*;

use arcflip_core::test_support::params;
use arcflip_core::{
    all_arcs, build_quiver, enumerate_triangulations, flip, intertwines, mutable_arcs,
    triangulation_to_json, CoverVertex, DEFAULT_BUDGET,
};

fn small_params() -> impl Strategy<Value = arcflip_core::PolytopeParams> {
    prop_oneof![
        (6u32..=12).prop_map(|m| params(m, 1)),
        (7u32..=9).prop_map(|m| params(m, 2)),
        Just(params(9, 3)),
        Just(params(10, 3)),
    ]
}

/// Direct transcription of the intertwining definition: some anchored order
/// realizes the strict alternation starting from the first arc.
fn intertwine_oracle(a: &[u32], b: &[u32], m: u32) -> bool {
    use arcflip_core::cyclic::CyclicOrder;
    (1..=m).any(|anchor| {
        let ord = CyclicOrder::new(anchor, m);
        let xs = ord.sorted(a);
        let ys = ord.sorted(b);
        let mut merged = Vec::new();
        for (x, y) in xs.iter().zip(&ys) {
            merged.push(*x);
            merged.push(*y);
        }
        merged.windows(2).all(|w| ord.lt(w[0], w[1]))
    })
}

proptest! {
    #[test]
    fn intertwining_matches_the_anchored_definition(
        p in small_params(),
        ia in any::<prop::sample::Index>(),
        ib in any::<prop::sample::Index>(),
    ) {
        let arcs = all_arcs(p);
        let a = &arcs[ia.index(arcs.len())];
        let b = &arcs[ib.index(arcs.len())];
        let fast = intertwines(a, b).unwrap();
        let slow = intertwine_oracle(a.values(), b.values(), p.m());
        prop_assert_eq!(fast, slow);
        prop_assert_eq!(fast, intertwines(b, a).unwrap());
        prop_assert!(!intertwines(a, a).unwrap());
    }

    #[test]
    fn orbit_labels_are_shift_invariant(
        p in small_params(),
        ia in any::<prop::sample::Index>(),
        k in -50i64..50,
    ) {
        let arcs = all_arcs(p);
        let a = &arcs[ia.index(arcs.len())];
        let v = CoverVertex::new(a.values().iter().map(|x| *x as i64).collect(), p).unwrap();
        prop_assert_eq!(v.orbit_label(), v.shift(k).orbit_label());
        prop_assert_eq!(v.shift(k).project().values().len(), p.arity());
    }

    #[test]
    fn json_round_trip_preserves_triangulations(
        p in prop_oneof![Just(params(7, 1)), Just(params(8, 2)), Just(params(10, 3))],
        it in any::<prop::sample::Index>(),
    ) {
        let ts = enumerate_triangulations(p, DEFAULT_BUDGET).unwrap();
        let t = &ts[it.index(ts.len())];
        let json = triangulation_to_json(t);
        let parsed: arcflip_core::TriangulationFile = serde_json::from_str(&json).unwrap();
        let back = parsed.into_triangulation().unwrap();
        prop_assert_eq!(&back, t);
        prop_assert_eq!(triangulation_to_json(&back), json);
    }

    #[test]
    fn flips_exchange_one_intertwining_pair(
        p in prop_oneof![Just(params(8, 1)), Just(params(8, 2)), Just(params(10, 3))],
        it in any::<prop::sample::Index>(),
        ia in any::<prop::sample::Index>(),
    ) {
        let ts = enumerate_triangulations(p, DEFAULT_BUDGET).unwrap();
        let t = &ts[it.index(ts.len())];
        let mutable = mutable_arcs(t);
        prop_assume!(!mutable.is_empty());
        let arc = &mutable[ia.index(mutable.len())];
        let (flipped, replacement) = flip(t, arc).unwrap();
        prop_assert!(intertwines(arc, &replacement).unwrap());
        let shared = t.arcs().iter().filter(|a| flipped.contains(a)).count();
        prop_assert_eq!(shared + 1, t.arcs().len());
        let (back, removed) = flip(&flipped, &replacement).unwrap();
        prop_assert_eq!(&back, t);
        prop_assert_eq!(&removed, arc);
    }

    #[test]
    fn retrograde_paths_partition_the_arrows(
        p in small_params(),
        it in any::<prop::sample::Index>(),
    ) {
        let ts = enumerate_triangulations(p, DEFAULT_BUDGET).unwrap();
        let t = &ts[it.index(ts.len())];
        let q = build_quiver(t);
        let paths = arcflip_core::maximal_retrograde_paths(&q);
        let total: usize = paths.iter().map(|path| path.len()).sum();
        prop_assert_eq!(total, q.arrows().len());
        prop_assert!(paths.iter().all(|path| path.len() <= p.d() as usize));
        for path in &paths {
            for arrow in path.arrows() {
                let count = paths
                    .iter()
                    .filter(|other| other.arrows().contains(arrow))
                    .count();
                prop_assert_eq!(count, 1);
            }
        }
    }
}
