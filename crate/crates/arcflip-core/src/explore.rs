//! Exhaustive enumeration and verification at desk scale.
//!
//! Triangulations are enumerated by depth-first extension of
//! non-intertwining arc sets in lexicographic order, so the output order is
//! deterministic. On top of that sit the flip graph, its interior-free
//! subgraph, and exhaustive checkers for the two structural equivalences:
//! acyclic quiver / no interior simplex / liftable to a slice-with-cut, and
//! retrograde mutability versus replacement search.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::arc::{all_arcs, values_intertwine, DArc};
use crate::params::PolytopeParams;
use crate::qdn::{distinguished_cut_paths, Composition, CompositionQuiver, Direction};
use crate::quiver::build_quiver;
use crate::retrograde::{brute_force_mutable, flip_neighbors, maximal_retrograde_paths, mutable_arcs_of};
use crate::slice::{cut_from_slice, flip_on_cut_quiver, mutate_slice, slice_lift, SliceError};
use crate::triangulation::Triangulation;

/// Default search-node allowance, far above anything desk scale needs.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ExploreError {
    #[error("search exceeded the node budget of {budget}")]
    BudgetExceeded { budget: u64 },
    #[error("counterexample: {0}")]
    Counterexample(String),
}

/// All triangulations of C(m, 2d) in lexicographic order of their arc sets.
pub fn enumerate_triangulations(
    params: PolytopeParams,
    budget: u64,
) -> Result<Vec<Triangulation>, ExploreError> {
    let universe = all_arcs(params);
    let target = params.arc_count() as usize;
    let compatible: Vec<Vec<bool>> = universe
        .iter()
        .map(|a| {
            universe
                .iter()
                .map(|b| !values_intertwine(a.values(), b.values()))
                .collect()
        })
        .collect();

    let mut results = Vec::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(target);
    let mut nodes: u64 = 0;
    if target == 0 {
        // the simplex has the empty triangulation only
        results.push(Triangulation::new(Vec::new(), params).expect("empty set is valid"));
        return Ok(results);
    }

    // iterative depth-first search; stack holds the next candidate index to
    // try at each depth
    let mut next_at_depth: Vec<usize> = vec![0];
    while let Some(next) = next_at_depth.last_mut() {
        let candidate = *next;
        // not enough arcs left to reach the target
        if candidate >= universe.len()
            || universe.len() - candidate < target - chosen.len()
        {
            next_at_depth.pop();
            chosen.pop();
            if let Some(parent) = next_at_depth.last_mut() {
                *parent += 1;
            }
            continue;
        }
        nodes += 1;
        if nodes > budget {
            return Err(ExploreError::BudgetExceeded { budget });
        }
        if chosen.iter().all(|i| compatible[*i][candidate]) {
            chosen.push(candidate);
            if chosen.len() == target {
                let arcs: Vec<DArc> = chosen.iter().map(|i| universe[*i].clone()).collect();
                results.push(
                    Triangulation::new(arcs, params)
                        .expect("maximal non-intertwining sets are triangulations"),
                );
                chosen.pop();
                *next += 1;
            } else {
                next_at_depth.push(candidate + 1);
            }
        } else {
            *next += 1;
        }
    }
    Ok(results)
}

/// Graph on all triangulations with one edge per bistellar flip, labelled by
/// the exchanged arcs.
#[derive(Debug, Clone)]
pub struct FlipGraph {
    params: PolytopeParams,
    nodes: Vec<Triangulation>,
    edges: Vec<FlipEdge>,
}

/// Edge between nodes `a < b`; `a_arc` is the arc only in `a`, `b_arc` the
/// arc only in `b`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FlipEdge {
    pub a: usize,
    pub b: usize,
    pub a_arc: DArc,
    pub b_arc: DArc,
}

impl FlipGraph {
    pub fn params(&self) -> PolytopeParams {
        self.params
    }

    pub fn nodes(&self) -> &[Triangulation] {
        &self.nodes
    }

    pub fn edges(&self) -> &[FlipEdge] {
        &self.edges
    }

    pub fn degree(&self, node: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.a == node || e.b == node)
            .count()
    }

    /// Connectivity of the subgraph induced by `keep`.
    pub fn connected_on(&self, keep: &[bool]) -> bool {
        let live: Vec<usize> = (0..self.nodes.len()).filter(|i| keep[*i]).collect();
        let Some(&start) = live.first() else {
            return true;
        };
        let mut seen = vec![false; self.nodes.len()];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for e in &self.edges {
                let w = if e.a == v {
                    e.b
                } else if e.b == v {
                    e.a
                } else {
                    continue;
                };
                if keep[w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        live.into_iter().all(|v| seen[v])
    }

    pub fn is_connected(&self) -> bool {
        self.connected_on(&vec![true; self.nodes.len()])
    }
}

/// Build the flip graph by flipping every mutable arc of every triangulation.
/// Each edge must be discovered from both endpoints, with the labels swapped.
pub fn flip_graph(params: PolytopeParams, budget: u64) -> Result<FlipGraph, ExploreError> {
    let nodes = enumerate_triangulations(params, budget)?;
    let index: BTreeMap<&Triangulation, usize> =
        nodes.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut half_edges: Vec<(usize, usize, DArc, DArc)> = Vec::new();
    for (i, t) in nodes.iter().enumerate() {
        for (removed, flipped) in flip_neighbors(t) {
            let j = *index.get(&flipped).expect("flip result is a triangulation");
            let added = flipped
                .arcs()
                .iter()
                .find(|a| !t.contains(a))
                .cloned()
                .expect("flip changes one arc");
            half_edges.push((i, j, removed, added));
        }
    }
    let mut edges: Vec<FlipEdge> = Vec::new();
    for (i, j, removed, added) in &half_edges {
        // keep each edge once, from its smaller endpoint
        if i < j {
            assert!(
                half_edges
                    .iter()
                    .any(|(a, b, r, d)| (a, b, r, d) == (j, i, added, removed)),
                "flip edges must be symmetric"
            );
            edges.push(FlipEdge {
                a: *i,
                b: *j,
                a_arc: removed.clone(),
                b_arc: added.clone(),
            });
        }
    }
    edges.sort_unstable();
    Ok(FlipGraph {
        params,
        nodes,
        edges,
    })
}

/// Is the subgraph induced by the triangulations without interior
/// (d+1)-simplices connected?
pub fn interior_free_flip_graph_connected(
    params: PolytopeParams,
    budget: u64,
) -> Result<bool, ExploreError> {
    let graph = flip_graph(params, budget)?;
    let keep: Vec<bool> = graph
        .nodes()
        .iter()
        .map(|t| t.interior_simplices().is_empty())
        .collect();
    Ok(graph.connected_on(&keep))
}

/// Outcome of the acyclic / interior-free / liftable equivalence sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InteriorReport {
    pub triangulations: usize,
    pub interior_free: usize,
    pub with_interior: usize,
}

impl std::fmt::Display for InteriorReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} triangulations: {} interior-free, {} with interior simplices",
            self.triangulations, self.interior_free, self.with_interior
        )
    }
}

/// For every triangulation of the instance, check that these agree:
/// the quiver is acyclic; there is no interior (d+1)-simplex; the
/// triangulation lifts to a slice whose complement-image is a valid cut.
/// The slice route re-derives the triangulation and, when it exists, must
/// reproduce the quiver arrow-for-arrow through the orbit labels.
pub fn verify_interior_criterion(
    params: PolytopeParams,
    budget: u64,
) -> Result<InteriorReport, ExploreError> {
    let mut report = InteriorReport {
        triangulations: 0,
        interior_free: 0,
        with_interior: 0,
    };
    for t in enumerate_triangulations(params, budget)? {
        report.triangulations += 1;
        let acyclic = build_quiver(&t).is_acyclic();
        let interior = t.interior_simplices();
        let lift = slice_lift(&t);
        if acyclic != interior.is_empty() {
            return Err(ExploreError::Counterexample(format!(
                "{t:?}: acyclic={acyclic} but interior={interior:?}"
            )));
        }
        match lift {
            Ok(slice) => {
                if !acyclic {
                    return Err(ExploreError::Counterexample(format!(
                        "{t:?}: cyclic quiver but the lift succeeded"
                    )));
                }
                // cut_from_slice validates the exactly-one-per-cycle property
                let _cut = cut_from_slice(&slice);
                if slice.to_triangulation() != t {
                    return Err(ExploreError::Counterexample(format!(
                        "{t:?}: lift does not project back"
                    )));
                }
                report.interior_free += 1;
            }
            Err(SliceError::CyclicQuiver) => {
                if acyclic {
                    return Err(ExploreError::Counterexample(format!(
                        "{t:?}: acyclic quiver but the lift failed"
                    )));
                }
                report.with_interior += 1;
            }
            Err(other) => {
                return Err(ExploreError::Counterexample(format!(
                    "{t:?}: lift failed with {other}"
                )));
            }
        }
    }
    Ok(report)
}

/// Outcome of the mutability sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MutabilityReport {
    pub triangulations: usize,
    pub arcs_checked: usize,
    pub mutable: usize,
    pub flips_verified: usize,
}

impl std::fmt::Display for MutabilityReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} triangulations, {} arcs checked, {} mutable, {} flips verified",
            self.triangulations, self.arcs_checked, self.mutable, self.flips_verified
        )
    }
}

/// For every triangulation and every arc, compare the retrograde criterion
/// with the brute-force replacement search, and when both admit a flip check
/// that the replacements agree, that the flip exchanges one intertwining
/// pair, and that flipping back restores the triangulation.
pub fn verify_mutability_criterion(
    params: PolytopeParams,
    budget: u64,
) -> Result<MutabilityReport, ExploreError> {
    let mut report = MutabilityReport {
        triangulations: 0,
        arcs_checked: 0,
        mutable: 0,
        flips_verified: 0,
    };
    for t in enumerate_triangulations(params, budget)? {
        report.triangulations += 1;
        let quiver = build_quiver(&t);
        let mutable = mutable_arcs_of(&quiver);
        for arc in t.arcs() {
            report.arcs_checked += 1;
            let by_paths = mutable.contains(arc);
            let by_search = brute_force_mutable(&t, arc);
            match (by_paths, by_search) {
                (true, Some(expected)) => {
                    report.mutable += 1;
                    let (flipped, replacement) =
                        crate::retrograde::flip(&t, arc).expect("criterion says mutable");
                    if replacement != expected {
                        return Err(ExploreError::Counterexample(format!(
                            "{t:?}: flip at {arc} gives {replacement}, search gives {expected}"
                        )));
                    }
                    verify_flip_shape(&t, &flipped, arc, &replacement)?;
                    let (back, back_arc) =
                        crate::retrograde::flip(&flipped, &replacement).expect("flip back");
                    if back != t || back_arc != *arc {
                        return Err(ExploreError::Counterexample(format!(
                            "{t:?}: flip at {arc} is not an involution"
                        )));
                    }
                    report.flips_verified += 1;
                }
                (false, None) => {}
                (by_paths, by_search) => {
                    return Err(ExploreError::Counterexample(format!(
                        "{t:?} at {arc}: retrograde criterion {by_paths}, search {by_search:?}"
                    )));
                }
            }
        }
    }
    Ok(report)
}

fn verify_flip_shape(
    t: &Triangulation,
    flipped: &Triangulation,
    removed: &DArc,
    added: &DArc,
) -> Result<(), ExploreError> {
    let only_in_t: Vec<&DArc> = t.arcs().iter().filter(|a| !flipped.contains(a)).collect();
    let only_in_f: Vec<&DArc> = flipped.arcs().iter().filter(|a| !t.contains(a)).collect();
    let ok = only_in_t == vec![removed]
        && only_in_f == vec![added]
        && values_intertwine(removed.values(), added.values());
    if ok {
        Ok(())
    } else {
        Err(ExploreError::Counterexample(format!(
            "{t:?}: flip at {removed} does not exchange a single intertwining pair"
        )))
    }
}

/// Outcome of the cut/slice coherence sweep over interior-free
/// triangulations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutCoherenceReport {
    pub interior_free: usize,
    pub flips_checked: usize,
    pub source_sink_mutations: usize,
}

impl std::fmt::Display for CutCoherenceReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} interior-free triangulations, {} predicted flips, {} source/sink mutations",
            self.interior_free, self.flips_checked, self.source_sink_mutations
        )
    }
}

/// For every interior-free triangulation: lift, read off the cut, and check
/// that the distinguished cut paths reproduce the maximal retrograde paths;
/// that every mutable arc's flip matches the predicted quiver exchange; and
/// that source/sink slice and cut mutations commute with the flip through
/// the projection.
pub fn verify_cut_coherence(
    params: PolytopeParams,
    budget: u64,
) -> Result<CutCoherenceReport, ExploreError> {
    let quiver_template = CompositionQuiver::new(params.d(), params.n());
    let mut report = CutCoherenceReport {
        interior_free: 0,
        flips_checked: 0,
        source_sink_mutations: 0,
    };
    for t in enumerate_triangulations(params, budget)? {
        let slice = match slice_lift(&t) {
            Ok(slice) => slice,
            Err(SliceError::CyclicQuiver) => continue,
            Err(other) => {
                return Err(ExploreError::Counterexample(format!(
                    "{t:?}: lift failed with {other}"
                )))
            }
        };
        report.interior_free += 1;
        let cut = cut_from_slice(&slice);
        let quiver = build_quiver(&t);

        // distinguished cut paths == maximal retrograde paths through labels
        let label_of = |arc: &DArc| -> Composition {
            slice.vertex_over(arc).expect("arc lifts").orbit_label()
        };
        let mut from_cut: Vec<Vec<Composition>> = distinguished_cut_paths(&quiver_template, &cut)
            .expect("complement of a slice image is a cut")
            .into_iter()
            .map(|p| p.vertices().to_vec())
            .collect();
        from_cut.sort_unstable();
        let mut from_retro: Vec<Vec<Composition>> = maximal_retrograde_paths(&quiver)
            .iter()
            .map(|p| p.vertices().into_iter().map(label_of).collect())
            .collect();
        from_retro.sort_unstable();
        if from_cut != from_retro {
            return Err(ExploreError::Counterexample(format!(
                "{t:?}: distinguished cut paths {from_cut:?} != retrograde paths {from_retro:?}"
            )));
        }

        for arc in mutable_arcs_of(&quiver) {
            // the exchange prediction is asserted inside flip_on_cut_quiver
            let outcome = flip_on_cut_quiver(&t, &arc).map_err(|e| {
                ExploreError::Counterexample(format!("{t:?}: predicted flip failed: {e}"))
            })?;
            report.flips_checked += 1;

            let x = slice.vertex_over(&arc).expect("arc lifts").clone();
            let direction = if slice.is_source(&x) {
                Some(Direction::Plus)
            } else if slice.is_sink(&x) {
                Some(Direction::Minus)
            } else {
                None
            };
            if let Some(direction) = direction {
                let mutated = mutate_slice(&slice, &x, direction).map_err(|e| {
                    ExploreError::Counterexample(format!("{t:?}: slice mutation failed: {e}"))
                })?;
                if mutated.to_triangulation() != outcome.triangulation {
                    return Err(ExploreError::Counterexample(format!(
                        "{t:?}: slice mutation at {arc} disagrees with the flip"
                    )));
                }
                let mutated_cut = crate::qdn::mutate_cut(
                    &quiver_template,
                    &cut,
                    &x.orbit_label(),
                    direction,
                )
                .map_err(|e| {
                    ExploreError::Counterexample(format!("{t:?}: cut mutation failed: {e}"))
                })?;
                if mutated_cut != cut_from_slice(&mutated) {
                    return Err(ExploreError::Counterexample(format!(
                        "{t:?}: cut mutation at {arc} disagrees with the mutated slice"
                    )));
                }
                report.source_sink_mutations += 1;
            }
        }

        // the cut-path reading of mutability must agree with the retrograde one
        let by_cut = crate::slice::cut_mutable_arcs(&t).expect("interior-free");
        let by_retro = mutable_arcs_of(&quiver);
        if by_cut != by_retro {
            return Err(ExploreError::Counterexample(format!(
                "{t:?}: cut-path mutability {by_cut:?} != retrograde {by_retro:?}"
            )));
        }
    }
    Ok(report)
}
