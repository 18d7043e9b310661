//! Slices of the infinite cover quiver and their interplay with cuts,
//! triangulations, and flips.
//!
//! The cover quiver lives on integer (d+1)-tuples with circular gaps >= 2
//! (entries no longer confined to [m]); arrows bump a single coordinate by
//! one. Reducing the entries mod m projects a cover vertex onto a d-arc,
//! while subtracting a constant from all coordinates ("shifting") walks its
//! orbit. The reversed gap vector is a complete orbit invariant and
//! identifies orbits with the vertices of the composition quiver.
//!
//! A slice picks one vertex from every orbit, convexly. Projecting a slice
//! gives a triangulation without interior (d+1)-simplices; conversely, an
//! acyclic triangulation quiver lifts to a slice, and the slice determines a
//! cut of the composition quiver via the orbit labels.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use itertools::Itertools;
use thiserror::Error;

use crate::arc::DArc;
use crate::cyclic::reduce;
use crate::params::PolytopeParams;
use crate::qdn::{CompArrow, Composition, CompositionQuiver, Cut, Direction};
use crate::quiver::build_quiver;
use crate::retrograde::{flip_with_quiver, FlipError};
use crate::triangulation::Triangulation;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SliceError {
    #[error("{0:?} violates the circular gap conditions")]
    InvalidCoverVertex(Vec<i64>),
    #[error("vertices belong to different polytopes")]
    ParamMismatch,
    #[error("{a:?} and {b:?} lie in the same orbit")]
    DuplicateOrbit { a: Vec<i64>, b: Vec<i64> },
    #[error("no vertex covers the orbit labelled {0}")]
    MissingOrbit(String),
    #[error("{missing:?} lies between {lo:?} and {hi:?} but is not in the slice")]
    NotConvex {
        lo: Vec<i64>,
        hi: Vec<i64>,
        missing: Vec<i64>,
    },
    #[error("vertex {0:?} is not a source/sink of the slice")]
    NotSourceOrSink(Vec<i64>),
    #[error("vertex is not in the slice")]
    UnknownVertex,
    #[error("the quiver has a cycle, so the triangulation does not lift")]
    CyclicQuiver,
}

/// A vertex of the cover quiver: an integer tuple with circular gaps >= 2.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoverVertex {
    coords: Vec<i64>,
    params: PolytopeParams,
}

impl CoverVertex {
    pub fn new(coords: Vec<i64>, params: PolytopeParams) -> Result<Self, SliceError> {
        let ok = coords.len() == params.arity()
            && coords.windows(2).all(|w| w[1] >= w[0] + 2)
            && coords[coords.len() - 1] + 2 <= coords[0] + params.m() as i64;
        if !ok {
            return Err(SliceError::InvalidCoverVertex(coords));
        }
        Ok(Self { coords, params })
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn params(&self) -> PolytopeParams {
        self.params
    }

    /// Apply the k-th power of the shift automorphism (subtract k everywhere).
    pub fn shift(&self, k: i64) -> CoverVertex {
        let coords = self.coords.iter().map(|c| c - k).collect();
        CoverVertex::new(coords, self.params).expect("shifting preserves gaps")
    }

    /// Bump one coordinate, when the gaps allow it.
    pub fn step(&self, index: usize, delta: i64) -> Option<CoverVertex> {
        let mut coords = self.coords.clone();
        coords[index] += delta;
        CoverVertex::new(coords, self.params).ok()
    }

    /// Reduce the coordinates mod m and sort: the d-arc under this vertex.
    pub fn project(&self) -> DArc {
        let m = self.params.m();
        let values: Vec<u32> = self.coords.iter().map(|c| reduce(*c, m)).collect();
        DArc::new(values, self.params).expect("cover conditions force an internal face")
    }

    /// Reversed circular gap vector; constant on orbits and a bijection from
    /// orbits onto the compositions of n - 1.
    pub fn orbit_label(&self) -> Composition {
        let m = self.params.m() as i64;
        let k = self.coords.len();
        let mut gaps: Vec<u32> = (0..k)
            .map(|i| {
                if i + 1 < k {
                    (self.coords[i + 1] - self.coords[i] - 2) as u32
                } else {
                    (self.coords[0] + m - self.coords[k - 1] - 2) as u32
                }
            })
            .collect();
        gaps.reverse();
        Composition::new(gaps)
    }

    fn le(&self, other: &CoverVertex) -> bool {
        self.coords
            .iter()
            .zip(&other.coords)
            .all(|(a, b)| a <= b)
    }
}

impl std::fmt::Debug for CoverVertex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.coords.iter().join(","))
    }
}

/// A convex choice of one cover vertex per orbit.
#[derive(Clone, PartialEq, Eq)]
pub struct Slice {
    vertices: Vec<CoverVertex>,
    params: PolytopeParams,
}

impl Slice {
    pub fn new(mut vertices: Vec<CoverVertex>, params: PolytopeParams) -> Result<Self, SliceError> {
        if vertices.iter().any(|v| v.params != params) {
            return Err(SliceError::ParamMismatch);
        }
        vertices.sort_unstable();
        vertices.dedup();

        let mut by_label: BTreeMap<Composition, &CoverVertex> = BTreeMap::new();
        for v in &vertices {
            if let Some(prev) = by_label.insert(v.orbit_label(), v) {
                return Err(SliceError::DuplicateOrbit {
                    a: prev.coords.clone(),
                    b: v.coords.clone(),
                });
            }
        }
        let quiver = CompositionQuiver::new(params.d(), params.n());
        for label in quiver.vertices() {
            if !by_label.contains_key(label) {
                return Err(SliceError::MissingOrbit(label.to_string()));
            }
        }

        // convexity via the box criterion: a path exists iff the endpoints
        // compare coordinatewise, so betweenness is betweenness in the box
        for (lo, hi) in vertices.iter().tuple_combinations() {
            let (lo, hi) = if lo.le(hi) {
                (lo, hi)
            } else if hi.le(lo) {
                (hi, lo)
            } else {
                continue;
            };
            let mut missing = None;
            for_each_box_point(lo.coords(), hi.coords(), &mut |coords| {
                if missing.is_some() {
                    return;
                }
                if let Ok(x) = CoverVertex::new(coords.to_vec(), params) {
                    if vertices.binary_search(&x).is_err() {
                        missing = Some(x);
                    }
                }
            });
            if let Some(x) = missing {
                return Err(SliceError::NotConvex {
                    lo: lo.coords.clone(),
                    hi: hi.coords.clone(),
                    missing: x.coords.clone(),
                });
            }
        }
        Ok(Self { vertices, params })
    }

    pub fn params(&self) -> PolytopeParams {
        self.params
    }

    pub fn vertices(&self) -> &[CoverVertex] {
        &self.vertices
    }

    pub fn contains(&self, v: &CoverVertex) -> bool {
        self.vertices.binary_search(v).is_ok()
    }

    /// Induced arrows `(source, coordinate index)` within the slice.
    pub fn arrows(&self) -> Vec<(CoverVertex, usize)> {
        self.vertices
            .iter()
            .flat_map(|v| {
                (0..self.params.arity()).filter_map(|i| {
                    let target = v.step(i, 1)?;
                    self.contains(&target).then(|| (v.clone(), i))
                })
            })
            .collect()
    }

    pub fn is_source(&self, v: &CoverVertex) -> bool {
        (0..self.params.arity()).all(|i| match v.step(i, -1) {
            Some(w) => !self.contains(&w),
            None => true,
        })
    }

    pub fn is_sink(&self, v: &CoverVertex) -> bool {
        (0..self.params.arity()).all(|i| match v.step(i, 1) {
            Some(w) => !self.contains(&w),
            None => true,
        })
    }

    /// Project every vertex; slices always land on valid triangulations.
    pub fn to_triangulation(&self) -> Triangulation {
        let arcs: Vec<DArc> = self.vertices.iter().map(|v| v.project()).collect();
        Triangulation::new(arcs, self.params)
            .expect("slices project onto non-intertwining collections")
    }

    /// The vertex lying over `arc`, if any.
    pub fn vertex_over(&self, arc: &DArc) -> Option<&CoverVertex> {
        self.vertices.iter().find(|v| v.project() == *arc)
    }
}

impl std::fmt::Debug for Slice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Slice{:?}", self.vertices)
    }
}

fn for_each_box_point(lo: &[i64], hi: &[i64], f: &mut impl FnMut(&[i64])) {
    let mut point = lo.to_vec();
    loop {
        f(&point);
        let mut i = 0;
        loop {
            if i == point.len() {
                return;
            }
            if point[i] < hi[i] {
                point[i] += 1;
                break;
            }
            point[i] = lo[i];
            i += 1;
        }
    }
}

/// Lift an interior-free triangulation to a slice of the cover quiver.
///
/// Starting from the first arc read as a cover vertex, grow the connected
/// component of the preimage of the arc set. For an acyclic quiver the
/// component holds exactly one vertex per orbit; a cycle in the quiver lifts
/// to a shifted copy of its starting fibre instead, which surfaces here as
/// two component vertices sharing an orbit label, detected by pigeonhole
/// without any cycle search.
pub fn slice_lift(t: &Triangulation) -> Result<Slice, SliceError> {
    let params = t.params();
    if t.arcs().is_empty() {
        return Ok(Slice::new(Vec::new(), params).expect("empty slice for the simplex"));
    }
    let base = CoverVertex::new(
        t.arcs()[0].values().iter().map(|v| *v as i64).collect(),
        params,
    )
    .expect("arcs are cover vertices");

    let mut by_label: BTreeMap<Composition, CoverVertex> = BTreeMap::new();
    by_label.insert(base.orbit_label(), base.clone());
    let mut frontier = vec![base];
    while let Some(v) = frontier.pop() {
        for i in 0..params.arity() {
            for delta in [-1i64, 1] {
                let Some(w) = v.step(i, delta) else { continue };
                if !t.contains(&w.project()) {
                    continue;
                }
                match by_label.entry(w.orbit_label()) {
                    Entry::Vacant(slot) => {
                        slot.insert(w.clone());
                        frontier.push(w);
                    }
                    Entry::Occupied(seen) => {
                        if *seen.get() != w {
                            return Err(SliceError::CyclicQuiver);
                        }
                    }
                }
            }
        }
    }

    // Interior-free quivers have single-step arrows only, so their preimage
    // component reaches every orbit; a multi-step arrow (which forces an
    // interior simplex) strands part of the fibre instead.
    let vertices: Vec<CoverVertex> = by_label.into_values().collect();
    if (vertices.len() as u64) < params.arc_count() {
        return Err(SliceError::CyclicQuiver);
    }
    Slice::new(vertices, params)
}

/// The cut whose cut quiver realizes this slice: orbit labels carry slice
/// arrows onto composition-quiver arrows, and the cut is the complement of
/// the image.
pub fn cut_from_slice(slice: &Slice) -> Cut {
    let params = slice.params();
    let quiver = CompositionQuiver::new(params.d(), params.n());
    let image: Vec<CompArrow> = slice
        .arrows()
        .iter()
        .map(|(v, i)| {
            let source = v.orbit_label();
            let target = v.step(*i, 1).expect("arrow exists").orbit_label();
            let arrow = quiver
                .arrows_from(&source)
                .find(|a| a.target() == target)
                .expect("label difference of a slice arrow is a composition move");
            arrow.clone()
        })
        .collect();
    let cut = Cut::new(
        quiver
            .arrows()
            .iter()
            .filter(|a| !image.contains(*a))
            .cloned(),
    );
    debug_assert!(crate::qdn::validate_cut(&quiver, &cut).is_ok());
    cut
}

/// Replace a source by its forward shift (direction plus) or a sink by its
/// backward shift (minus); the projected triangulations differ by the
/// bistellar flip at the projected vertex.
pub fn mutate_slice(
    slice: &Slice,
    x: &CoverVertex,
    direction: Direction,
) -> Result<Slice, SliceError> {
    if !slice.contains(x) {
        return Err(SliceError::UnknownVertex);
    }
    let ok = match direction {
        Direction::Plus => slice.is_source(x),
        Direction::Minus => slice.is_sink(x),
    };
    if !ok {
        return Err(SliceError::NotSourceOrSink(x.coords().to_vec()));
    }
    let replacement = match direction {
        Direction::Plus => x.shift(-1),
        Direction::Minus => x.shift(1),
    };
    let vertices: Vec<CoverVertex> = slice
        .vertices()
        .iter()
        .filter(|v| *v != x)
        .cloned()
        .chain(std::iter::once(replacement))
        .collect();
    Slice::new(vertices, slice.params())
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CutQuiverFlipError {
    #[error("the quiver has a cycle, so it is not a cut quiver")]
    NotACutQuiver,
    #[error(transparent)]
    Flip(#[from] FlipError),
}

/// Outcome of a flip performed on a triangulation with an acyclic quiver,
/// together with the exchanged quiver arrows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutQuiverFlip {
    pub triangulation: Triangulation,
    pub replacement: DArc,
    /// Arrows of the old quiver incident to the flipped arc.
    pub removed_arrows: Vec<(DArc, DArc)>,
    /// Arrows gained at the replacement arc.
    pub added_arrows: Vec<(DArc, DArc)>,
}

/// Flip a mutable arc of an interior-free triangulation and predict the new
/// quiver without rebuilding it: at a source or sink the slice mutation says
/// which arrows appear, and otherwise the cut arrows at the arc's orbit label
/// swap places with the quiver arrows there. The rebuilt quiver of the
/// flipped triangulation is asserted to match the prediction.
///
/// The swap prediction needs d >= 2: there the gaps around a mutable
/// non-source/sink arc are tight off two positions, which rules out new
/// arrows elsewhere. For d = 1 removing an interior vertex of an orientation
/// splices its two arrows into a composite, so the exchanged arrows are
/// reported from the rebuilt quiver instead.
pub fn flip_on_cut_quiver(t: &Triangulation, arc: &DArc) -> Result<CutQuiverFlip, CutQuiverFlipError> {
    let quiver = build_quiver(t);
    let slice = match slice_lift(t) {
        Ok(slice) => slice,
        Err(SliceError::CyclicQuiver) => return Err(CutQuiverFlipError::NotACutQuiver),
        Err(other) => unreachable!("lift can only fail on cycles: {other}"),
    };
    let (flipped, replacement) = flip_with_quiver(t, &quiver, arc)?;

    let removed_arrows: Vec<(DArc, DArc)> = quiver
        .arrows()
        .iter()
        .filter(|a| a.source() == arc || a.target() == arc)
        .map(|a| (a.source().clone(), a.target().clone()))
        .collect();
    let kept: Vec<(DArc, DArc)> = quiver
        .arrows()
        .iter()
        .filter(|a| a.source() != arc && a.target() != arc)
        .map(|a| (a.source().clone(), a.target().clone()))
        .collect();

    let x = slice.vertex_over(arc).expect("arc lifts into the slice").clone();
    let added_arrows: Vec<(DArc, DArc)> = if slice.is_source(&x) || slice.is_sink(&x) {
        let direction = if slice.is_source(&x) { Direction::Plus } else { Direction::Minus };
        let mutated = mutate_slice(&slice, &x, direction).expect("source/sink mutation");
        mutated
            .arrows()
            .iter()
            .map(|(v, i)| {
                let to = v.step(*i, 1).expect("arrow exists");
                (v.project(), to.project())
            })
            .filter(|pair| !kept.contains(pair))
            .collect()
    } else {
        // swap with the cut: cut arrows at the arc's label become quiver
        // arrows at the replacement
        let cut = cut_from_slice(&slice);
        let label_of: BTreeMap<Composition, DArc> = slice
            .vertices()
            .iter()
            .map(|v| (v.orbit_label(), v.project()))
            .collect();
        let arc_label = x.orbit_label();
        let resolve = |label: &Composition| -> DArc {
            if *label == arc_label {
                replacement.clone()
            } else {
                label_of[label].clone()
            }
        };
        cut.arrows()
            .iter()
            .filter(|a| *a.source() == arc_label || a.target() == arc_label)
            .map(|a| (resolve(a.source()), resolve(&a.target())))
            .collect()
    };

    let mut predicted: Vec<(DArc, DArc)> = kept.into_iter().chain(added_arrows.clone()).collect();
    predicted.sort_unstable();
    let mut rebuilt: Vec<(DArc, DArc)> = build_quiver(&flipped)
        .arrows()
        .iter()
        .map(|a| (a.source().clone(), a.target().clone()))
        .collect();
    rebuilt.sort_unstable();
    assert_eq!(predicted, rebuilt, "predicted quiver after flipping {arc}");

    Ok(CutQuiverFlip {
        triangulation: flipped,
        replacement,
        removed_arrows,
        added_arrows,
    })
}

/// Immutability read off the cut rather than the retrograde paths: the arcs
/// whose orbit labels sit in the middle of a distinguished cut path.
pub fn cut_mutable_arcs(t: &Triangulation) -> Result<Vec<DArc>, SliceError> {
    let slice = slice_lift(t)?;
    let quiver = CompositionQuiver::new(t.params().d(), t.params().n());
    let cut = cut_from_slice(&slice);
    let paths = crate::qdn::distinguished_cut_paths(&quiver, &cut)
        .expect("cut_from_slice returns valid cuts");
    let middles: Vec<Composition> = paths
        .iter()
        .flat_map(|p| p.middles().iter().cloned())
        .collect();
    Ok(t.arcs()
        .iter()
        .filter(|arc| {
            let label = slice
                .vertex_over(arc)
                .expect("every arc lifts")
                .orbit_label();
            !middles.contains(&label)
        })
        .cloned()
        .collect())
}
