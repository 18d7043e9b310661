//! Triangulations of C(m, 2d) as maximal non-intertwining arc collections.

use itertools::Itertools;
use thiserror::Error;

use crate::arc::{values_intertwine, ArcError, DArc, Simplex};
use crate::params::PolytopeParams;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum TriangulationError {
    #[error("arcs belong to different polytopes")]
    ParamMismatch,
    #[error("arc {0} listed twice")]
    DuplicateArc(String),
    #[error("intertwining pair {0} \u{2240} {1}")]
    IntertwiningPair(String, String),
    #[error("expected {expected} arcs, found {found}")]
    WrongCardinality { found: usize, expected: u64 },
    #[error(transparent)]
    Arc(#[from] ArcError),
}

/// A triangulation, held as its sorted set of d-arcs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangulation {
    arcs: Vec<DArc>,
    params: PolytopeParams,
}

impl Triangulation {
    /// Validate a collection of arcs: pairwise non-intertwining and of the
    /// cardinality binom(n + d - 1, d) that every triangulation has.
    pub fn new(mut arcs: Vec<DArc>, params: PolytopeParams) -> Result<Self, TriangulationError> {
        if arcs.iter().any(|a| a.params() != params) {
            return Err(TriangulationError::ParamMismatch);
        }
        arcs.sort_unstable();
        if let Some(w) = arcs.windows(2).find(|w| w[0] == w[1]) {
            return Err(TriangulationError::DuplicateArc(w[0].compact()));
        }
        for (i, a) in arcs.iter().enumerate() {
            for b in &arcs[i + 1..] {
                if values_intertwine(a.values(), b.values()) {
                    return Err(TriangulationError::IntertwiningPair(
                        a.compact(),
                        b.compact(),
                    ));
                }
            }
        }
        let expected = params.arc_count();
        if arcs.len() as u64 != expected {
            return Err(TriangulationError::WrongCardinality {
                found: arcs.len(),
                expected,
            });
        }
        Ok(Self { arcs, params })
    }

    pub fn params(&self) -> PolytopeParams {
        self.params
    }

    /// The arcs in ascending order.
    pub fn arcs(&self) -> &[DArc] {
        &self.arcs
    }

    pub fn contains(&self, arc: &DArc) -> bool {
        self.contains_values(arc.values())
    }

    pub fn contains_values(&self, values: &[u32]) -> bool {
        self.arcs
            .binary_search_by(|a| a.values().cmp(values))
            .is_ok()
    }

    /// Replace `from` by `to`, revalidating the result.
    pub fn swap_arc(&self, from: &DArc, to: DArc) -> Result<Triangulation, TriangulationError> {
        let mut arcs: Vec<DArc> = self.arcs.iter().filter(|a| *a != from).cloned().collect();
        arcs.push(to);
        Triangulation::new(arcs, self.params)
    }

    /// Interior (d+1)-simplices: the (d+2)-subsets of [m] all of whose d-faces
    /// are arcs of this triangulation. Every d-face of such a subset crosses
    /// nothing in the triangulation, so the subset is one of its faces.
    pub fn interior_simplices(&self) -> Vec<Simplex> {
        let k = self.params.arity() + 1;
        (1..=self.params.m())
            .combinations(k)
            .filter(|candidate| {
                (0..k).all(|drop| {
                    let facet: Vec<u32> = candidate
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| *i != drop)
                        .map(|(_, v)| *v)
                        .collect();
                    self.contains_values(&facet)
                })
            })
            .map(|values| Simplex::new(values, self.params).expect("entries are distinct"))
            .collect()
    }

    /// The full-dimensional cells, reconstructed from the arcs: a
    /// (2d+1)-subset is a cell iff every internal d-face it spans is an arc
    /// of the triangulation. Internal faces of a genuine cell are always
    /// arcs, and two subsets passing the test contain no circuit between
    /// them, so the test never selects overlapping simplices; the exact
    /// volume oracle in [`crate::geometry`] re-checks the outcome per
    /// instance.
    pub fn cells(&self) -> Vec<Simplex> {
        let m = self.params.m();
        let arity = self.params.arity();
        (1..=m)
            .combinations(self.params.cell_arity())
            .filter(|candidate| {
                candidate.iter().copied().combinations(arity).all(|face| {
                    !face_is_internal(&face, m) || self.contains_values(&face)
                })
            })
            .map(|values| Simplex::new(values, self.params).expect("entries are distinct"))
            .collect()
    }
}

fn face_is_internal(values: &[u32], m: u32) -> bool {
    values.windows(2).all(|w| w[1] >= w[0] + 2) && values[values.len() - 1] + 2 <= values[0] + m
}

impl std::fmt::Debug for Triangulation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Triangulation[{}]",
            self.arcs.iter().map(|a| a.compact()).join(" ")
        )
    }
}
