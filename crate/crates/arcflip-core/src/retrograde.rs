//! Retrograde paths and bistellar flips.
//!
//! Two consecutive arrows form a retrograde pair when the second advances the
//! entry circularly preceding the value the first added, and lands strictly
//! below the value the first removed. Chaining is unique in both directions,
//! so the arrow set of a quiver partitions into maximal retrograde paths of
//! length at most d. An arc admits a bistellar flip exactly when it is not an
//! interior vertex of such a path, and the flip replacement is read off the
//! arrows incident to the arc.

use itertools::Itertools;
use thiserror::Error;

use crate::arc::{values_intertwine, DArc};
use crate::cyclic::{in_open_interval, reduce};
use crate::quiver::{build_quiver, Arrow, Quiver, QuiverError};
use crate::triangulation::Triangulation;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FlipError {
    #[error("arc {0} is not in the triangulation")]
    ArcNotInTriangulation(String),
    #[error("arc {arc} is in the middle of the retrograde path {path}")]
    NotMutable { arc: String, path: String },
}

/// A maximal chain of arrows under the retrograde successor relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RetrogradePath {
    arrows: Vec<Arrow>,
}

impl RetrogradePath {
    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// Number of arrows.
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Vertices in path order, one more than the arrow count.
    pub fn vertices(&self) -> Vec<&DArc> {
        let mut v: Vec<&DArc> = self.arrows.iter().map(|a| a.source()).collect();
        v.push(self.arrows.last().expect("paths are nonempty").target());
        v
    }

    /// Interior vertices: targets of all but the last arrow.
    pub fn middles(&self) -> Vec<&DArc> {
        self.arrows[..self.arrows.len() - 1]
            .iter()
            .map(|a| a.target())
            .collect()
    }

    /// `A -> B -> C` over the compact labels.
    pub fn display_compact(&self) -> String {
        self.vertices().iter().map(|v| v.compact()).join(" -> ")
    }
}

impl std::fmt::Display for RetrogradePath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.vertices().iter().map(|v| v.to_string()).join(" -> "))
    }
}

/// The unique arrow extending `arrow` retrogradely, if any: among the arrows
/// out of its target, the one removing the entry circularly before the added
/// value, provided its own added value stays strictly below the old removed
/// value (walking forward from its own removed entry).
pub fn retrograde_successor(q: &Quiver, arrow: &Arrow) -> Result<Option<Arrow>, QuiverError> {
    if !q.contains_arrow(arrow) {
        return Err(QuiverError::ArrowNotInQuiver);
    }
    let m = q.params().m();
    let wanted = arrow.target().entry_before(arrow.added());
    let successor = q
        .arrows_from(arrow.target())
        .find(|next| next.removed() == wanted)
        .filter(|next| in_open_interval(next.added(), next.removed(), arrow.removed(), m));
    Ok(successor.cloned())
}

/// Partition the arrow set into maximal retrograde paths, in order of their
/// starting arrows.
pub fn maximal_retrograde_paths(q: &Quiver) -> Vec<RetrogradePath> {
    let successor_of = |arrow: &Arrow| retrograde_successor(q, arrow).expect("arrow from q");
    let successors: Vec<Option<Arrow>> = q.arrows().iter().map(|a| successor_of(a)).collect();
    let is_successor = |arrow: &Arrow| successors.iter().flatten().any(|s| s == arrow);

    let mut paths = Vec::new();
    let mut used = 0usize;
    for start in q.arrows() {
        if is_successor(start) {
            continue;
        }
        let mut arrows = vec![start.clone()];
        while let Some(next) = successor_of(arrows.last().expect("nonempty")) {
            arrows.push(next);
        }
        used += arrows.len();
        paths.push(RetrogradePath { arrows });
    }
    // chaining is injective, so the starts cover every arrow exactly once
    assert_eq!(used, q.arrows().len(), "retrograde chains must partition the arrows");
    paths
}

/// Arcs not interior to any maximal retrograde path; exactly the arcs that
/// admit a bistellar flip.
pub fn mutable_arcs(t: &Triangulation) -> Vec<DArc> {
    mutable_arcs_of(&build_quiver(t))
}

pub fn mutable_arcs_of(q: &Quiver) -> Vec<DArc> {
    let paths = maximal_retrograde_paths(q);
    q.vertices()
        .iter()
        .filter(|v| !paths.iter().any(|p| p.middles().contains(v)))
        .cloned()
        .collect()
}

/// Perform the bistellar flip at `arc`, returning the new triangulation and
/// the replacement arc.
///
/// For each entry the candidate interval is bounded above by the added value
/// of the outgoing arrow advancing it (one below the next entry when absent)
/// and below by the removed value of the incoming arrow landing on the next
/// entry (one above the current entry when absent); mutability makes the two
/// bounds coincide, which pins the replacement.
pub fn flip(t: &Triangulation, arc: &DArc) -> Result<(Triangulation, DArc), FlipError> {
    let q = build_quiver(t);
    flip_with_quiver(t, &q, arc)
}

pub(crate) fn flip_with_quiver(
    t: &Triangulation,
    q: &Quiver,
    arc: &DArc,
) -> Result<(Triangulation, DArc), FlipError> {
    if !t.contains(arc) {
        return Err(FlipError::ArcNotInTriangulation(arc.compact()));
    }
    if let Some(path) = maximal_retrograde_paths(q)
        .into_iter()
        .find(|p| p.middles().contains(&arc))
    {
        return Err(FlipError::NotMutable {
            arc: arc.compact(),
            path: path.display_compact(),
        });
    }

    let m = t.params().m();
    let k = t.params().arity();
    let values = arc.values();

    // upper bounds from outgoing arrows
    let upper: Vec<u32> = (0..k)
        .map(|i| {
            q.arrows_from(arc)
                .find(|a| a.removed() == values[i])
                .map(|a| a.added())
                .unwrap_or_else(|| reduce(values[(i + 1) % k] as i64 - 1, m))
        })
        .collect();
    // lower bounds from incoming arrows, indexed by the entry they add
    let lower: Vec<u32> = (0..k)
        .map(|i| {
            q.arrows_into(arc)
                .find(|a| a.added() == values[i])
                .map(|a| a.removed())
                .unwrap_or_else(|| reduce(values[(i + k - 1) % k] as i64 + 1, m))
        })
        .collect();
    for i in 0..k {
        assert_eq!(
            lower[(i + 1) % k],
            upper[i],
            "flip bounds must agree at a mutable arc ({arc})"
        );
    }

    let replacement = DArc::new(upper, t.params()).expect("replacement entries stay internal");
    debug_assert!(values_intertwine(arc.values(), replacement.values()));
    let flipped = t
        .swap_arc(arc, replacement.clone())
        .expect("flip replacement is compatible with the rest");
    Ok((flipped, replacement))
}

/// Flip every mutable arc once, in arc order.
pub fn flip_neighbors(t: &Triangulation) -> Vec<(DArc, Triangulation)> {
    let q = build_quiver(t);
    mutable_arcs_of(&q)
        .into_iter()
        .map(|arc| {
            let (flipped, _) = flip_with_quiver(t, &q, &arc).expect("arc is mutable");
            (arc, flipped)
        })
        .collect()
}

/// Replacement search that ignores the quiver entirely: scan every arc of
/// the polytope for one that intertwines `arc` and nothing else in the
/// triangulation. Independent oracle for the retrograde criterion.
pub fn brute_force_mutable(t: &Triangulation, arc: &DArc) -> Option<DArc> {
    let candidates: Vec<DArc> = crate::arc::all_arcs(t.params())
        .into_iter()
        .filter(|b| values_intertwine(arc.values(), b.values()))
        .filter(|b| {
            t.arcs()
                .iter()
                .filter(|other| *other != arc)
                .all(|other| !values_intertwine(b.values(), other.values()))
        })
        .collect();
    assert!(
        candidates.len() <= 1,
        "at most one replacement can exist ({arc}: {candidates:?})"
    );
    candidates.into_iter().next()
}
