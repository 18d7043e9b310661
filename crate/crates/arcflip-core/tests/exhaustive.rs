//! Exhaustive small-instance cross-validation of the structural claims the
//! library relies on, beyond what the acceptance suite pins down.

use std::collections::BTreeSet;

use arcflip_core::qdn::{distinguished_cut_paths, enumerate_cuts, CompositionQuiver};
use arcflip_core::test_support::params;
use arcflip_core::{
    all_arcs, arrow_via_definition, build_quiver, enumerate_triangulations, intertwines,
    intertwining_subquiver, is_connected, CoverVertex, PolytopeParams, Quiver, DEFAULT_BUDGET,
};

fn desk_instances() -> Vec<PolytopeParams> {
    vec![params(6, 1), params(7, 1), params(8, 2), params(9, 2)]
}

#[test]
fn walk_construction_matches_arrow_definition_everywhere() {
    for p in desk_instances() {
        for t in enumerate_triangulations(p, DEFAULT_BUDGET).unwrap() {
            let q = build_quiver(&t);
            for a in t.arcs() {
                for b in t.arcs() {
                    let drawn = q.arrows_from(a).any(|ar| ar.target() == b);
                    assert_eq!(
                        drawn,
                        arrow_via_definition(&t, a, b),
                        "{t:?}: {a} -> {b}"
                    );
                }
            }
        }
    }
}

#[test]
fn quivers_have_no_loops_and_unique_incidences() {
    for p in desk_instances() {
        for t in enumerate_triangulations(p, DEFAULT_BUDGET).unwrap() {
            let q = build_quiver(&t);
            for arrow in q.arrows() {
                assert_ne!(arrow.source(), arrow.target(), "{t:?} has a loop");
            }
            for v in q.vertices() {
                let removed: BTreeSet<u32> = q.arrows_from(v).map(|a| a.removed()).collect();
                assert_eq!(removed.len(), q.arrows_from(v).count(), "{t:?} at {v}");
                let added: BTreeSet<u32> = q.arrows_into(v).map(|a| a.added()).collect();
                assert_eq!(added.len(), q.arrows_into(v).count(), "{t:?} at {v}");
            }
        }
    }
}

/// When the shifted arc intertwines another vertex, a directed path links
/// them.
#[test]
fn shifted_intertwining_forces_a_path() {
    for p in [params(6, 1), params(7, 1), params(8, 2)] {
        for t in enumerate_triangulations(p, DEFAULT_BUDGET).unwrap() {
            let q = build_quiver(&t);
            for a in t.arcs() {
                for b in t.arcs() {
                    if a == b || !intertwines(&a.minus_one(), b).unwrap() {
                        continue;
                    }
                    assert!(reachable(&q, a, b), "{t:?}: no path {a} -> {b}");
                }
            }
        }
    }
}

fn reachable(q: &Quiver, from: &arcflip_core::DArc, to: &arcflip_core::DArc) -> bool {
    let mut stack = vec![from.clone()];
    let mut seen = BTreeSet::new();
    seen.insert(from.clone());
    while let Some(v) = stack.pop() {
        if v == *to {
            return true;
        }
        for a in q.arrows_from(&v) {
            if seen.insert(a.target().clone()) {
                stack.push(a.target().clone());
            }
        }
    }
    false
}

/// A slack gap at some entry forces an arrow into or out of that gap.
#[test]
fn slack_gaps_carry_arrows() {
    for p in [params(6, 1), params(7, 1), params(8, 2), params(9, 2)] {
        for t in enumerate_triangulations(p, DEFAULT_BUDGET).unwrap() {
            let q = build_quiver(&t);
            let m = p.m();
            for arc in t.arcs() {
                let values = arc.values();
                let k = values.len();
                for i in 0..k {
                    let gap = if i + 1 < k {
                        values[i + 1] - values[i]
                    } else {
                        values[0] + m - values[k - 1]
                    };
                    if gap <= 2 {
                        continue;
                    }
                    let next = values[(i + 1) % k];
                    let out_here = q.arrows_from(arc).any(|a| a.removed() == values[i]);
                    let in_here = q.arrows_into(arc).any(|a| a.added() == next);
                    assert!(
                        out_here || in_here,
                        "{t:?}: slack gap after {} carries no arrow",
                        values[i]
                    );
                }
            }
        }
    }
}

/// The subquiver on the arcs intertwining an outside arc is connected, and
/// outside arcs always intertwine something (maximality).
#[test]
fn intertwining_subquivers_are_connected() {
    for p in [params(6, 1), params(7, 1), params(8, 2), params(9, 2)] {
        let universe = all_arcs(p);
        for t in enumerate_triangulations(p, DEFAULT_BUDGET).unwrap() {
            for b in universe.iter().filter(|b| !t.contains(b)) {
                let sub = intertwining_subquiver(&t, b).unwrap();
                assert!(
                    !sub.vertices().is_empty(),
                    "{t:?}: outside arc {b} intertwines nothing"
                );
                assert!(is_connected(&sub), "{t:?}: subquiver at {b} disconnected");
            }
        }
    }
}

/// Frozen regression counts from the first exhaustive runs; no published
/// values exist for these instances.
#[test]
fn frozen_triangulation_counts() {
    for (m, d, expected) in [(8u32, 2u32, 40usize), (9, 2, 357), (10, 3, 102)] {
        let found = enumerate_triangulations(params(m, d), DEFAULT_BUDGET)
            .unwrap()
            .len();
        assert_eq!(found, expected, "C({m},{})", 2 * d);
    }
}

/// Cell counts and arc counts are constant across all triangulations of an
/// instance; frozen constants from the first runs.
#[test]
fn cell_counts_are_constant_per_instance() {
    for (m, d, cells) in [(6u32, 1u32, 4usize), (7, 1, 5), (8, 2, 10)] {
        let p = params(m, d);
        for t in enumerate_triangulations(p, DEFAULT_BUDGET).unwrap() {
            assert_eq!(t.cells().len(), cells, "C({m},{}) {t:?}", 2 * d);
            assert_eq!(t.arcs().len() as u64, p.arc_count());
        }
    }
}

/// In every cut, a vertex that ends one distinguished path and starts
/// another has both bordering arrows cut with the same kind.
#[test]
fn bordering_cut_arrows_share_their_kind() {
    let quivers = [
        CompositionQuiver::new(2, 3),
        CompositionQuiver::new(1, 3),
        CompositionQuiver::new(1, 4),
        CompositionQuiver::new(1, 5),
    ];
    for q in &quivers {
        for cut in enumerate_cuts(q) {
            let paths = distinguished_cut_paths(q, &cut).unwrap();
            for head in &paths {
                for tail in &paths {
                    let v = head.vertices().last().unwrap();
                    if tail.vertices().first() != Some(v) {
                        continue;
                    }
                    // the arrow cut after `head` and the one cut before `tail`
                    let after = (head.kinds().last().unwrap() + 1) % q.vertices()[0].parts().len();
                    let before = (tail.kinds()[0] + q.vertices()[0].parts().len() - 1)
                        % q.vertices()[0].parts().len();
                    assert_eq!(after, before, "cut {cut:?} at {v}");
                }
            }
        }
    }
}

/// Sources of a cut quiver have no outgoing cut arrows and sinks no incoming
/// ones; this is what lets source/sink cut mutation invert itself.
#[test]
fn cut_sources_and_sinks_border_only_inward_cuts() {
    let quivers = [
        CompositionQuiver::new(2, 3),
        CompositionQuiver::new(2, 4),
        CompositionQuiver::new(1, 4),
        CompositionQuiver::new(3, 2),
    ];
    for q in &quivers {
        for cut in enumerate_cuts(q) {
            for v in q.vertices() {
                if cut.is_source(q, v) {
                    assert!(
                        q.arrows_from(v).all(|a| !cut.contains(a)),
                        "source {v} of {cut:?} has a cut out-arrow"
                    );
                }
                if cut.is_sink(q, v) {
                    assert!(
                        q.arrows_into(v).all(|a| !cut.contains(a)),
                        "sink {v} of {cut:?} has a cut in-arrow"
                    );
                }
            }
        }
    }
}

/// Orbit labels cover every composition, over the arcs of each instance.
#[test]
fn orbit_labels_cover_all_compositions() {
    for p in [params(6, 1), params(8, 2), params(10, 3)] {
        let quiver = CompositionQuiver::new(p.d(), p.n());
        let labels: BTreeSet<String> = all_arcs(p)
            .iter()
            .map(|arc| {
                let coords = arc.values().iter().map(|v| *v as i64).collect();
                CoverVertex::new(coords, p).unwrap().orbit_label().to_string()
            })
            .collect();
        let expected: BTreeSet<String> =
            quiver.vertices().iter().map(|v| v.to_string()).collect();
        assert_eq!(labels, expected);
    }
}
