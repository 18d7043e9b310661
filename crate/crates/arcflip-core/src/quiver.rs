//! The quiver of a triangulation.
//!
//! Vertices are the arcs; an arrow advances a single entry of its source arc
//! forward around the circle to the nearest value that lands back in the
//! triangulation. Arrows are stored by the value they remove and the value
//! they add, because "which coordinate moved" depends on where the circle is
//! anchored while the value pair does not.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::arc::{intertwines, values_intertwine, DArc};
use crate::cyclic::{distance, reduce};
use crate::params::PolytopeParams;
use crate::triangulation::Triangulation;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum QuiverError {
    #[error("arrow is not part of this quiver")]
    ArrowNotInQuiver,
    #[error("arc {0} already belongs to the triangulation")]
    ArcInTriangulation(String),
}

/// An arrow `source -> target` that removes `removed` and adds `added`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    source: DArc,
    target: DArc,
    removed: u32,
    added: u32,
}

impl Arrow {
    pub fn source(&self) -> &DArc {
        &self.source
    }

    pub fn target(&self) -> &DArc {
        &self.target
    }

    pub fn removed(&self) -> u32 {
        self.removed
    }

    pub fn added(&self) -> u32 {
        self.added
    }

    /// Circular distance advanced, always at least 1.
    pub fn step(&self) -> u32 {
        distance(self.removed, self.added, self.source.params().m())
    }
}

impl std::fmt::Display for Arrow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} -> {}", self.source, self.target)
    }
}

impl std::fmt::Debug for Arrow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} -> {}", self.source.compact(), self.target.compact())
    }
}

/// Directed graph on the arcs of a triangulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    params: PolytopeParams,
    vertices: Vec<DArc>,
    arrows: Vec<Arrow>,
    out_by_vertex: BTreeMap<DArc, Vec<usize>>,
    in_by_vertex: BTreeMap<DArc, Vec<usize>>,
}

impl Quiver {
    fn from_parts(params: PolytopeParams, vertices: Vec<DArc>, mut arrows: Vec<Arrow>) -> Self {
        arrows.sort_unstable_by(|a, b| {
            (a.source.values(), a.removed).cmp(&(b.source.values(), b.removed))
        });
        let mut out_by_vertex: BTreeMap<DArc, Vec<usize>> = BTreeMap::new();
        let mut in_by_vertex: BTreeMap<DArc, Vec<usize>> = BTreeMap::new();
        for (i, arrow) in arrows.iter().enumerate() {
            out_by_vertex.entry(arrow.source.clone()).or_default().push(i);
            in_by_vertex.entry(arrow.target.clone()).or_default().push(i);
        }
        Self {
            params,
            vertices,
            arrows,
            out_by_vertex,
            in_by_vertex,
        }
    }

    pub fn params(&self) -> PolytopeParams {
        self.params
    }

    pub fn vertices(&self) -> &[DArc] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrows_from(&self, vertex: &DArc) -> impl Iterator<Item = &Arrow> {
        self.out_by_vertex
            .get(vertex)
            .into_iter()
            .flatten()
            .map(|i| &self.arrows[*i])
    }

    pub fn arrows_into(&self, vertex: &DArc) -> impl Iterator<Item = &Arrow> {
        self.in_by_vertex
            .get(vertex)
            .into_iter()
            .flatten()
            .map(|i| &self.arrows[*i])
    }

    pub fn contains_arrow(&self, arrow: &Arrow) -> bool {
        self.arrows_from(arrow.source()).any(|a| a == arrow)
    }

    /// Vertices with no incoming arrow.
    pub fn sources(&self) -> Vec<&DArc> {
        self.vertices
            .iter()
            .filter(|v| self.arrows_into(v).next().is_none())
            .collect()
    }

    /// Vertices with no outgoing arrow.
    pub fn sinks(&self) -> Vec<&DArc> {
        self.vertices
            .iter()
            .filter(|v| self.arrows_from(v).next().is_none())
            .collect()
    }

    pub fn is_acyclic(&self) -> bool {
        self.find_cycle().is_none()
    }

    /// One directed cycle if any exists, rotated so its least vertex is
    /// first. Iterative three-colour depth-first search over the sorted
    /// vertex list keeps the witness deterministic.
    pub fn find_cycle(&self) -> Option<Vec<DArc>> {
        #[derive(Clone, Copy, PartialEq)]
        enum Colour {
            White,
            Grey,
            Black,
        }
        let index: BTreeMap<&DArc, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v, i))
            .collect();
        let mut colour = vec![Colour::White; self.vertices.len()];
        for start in 0..self.vertices.len() {
            if colour[start] != Colour::White {
                continue;
            }
            // stack of (vertex, outgoing arrows not yet explored)
            let mut stack: Vec<(usize, Vec<usize>)> = Vec::new();
            colour[start] = Colour::Grey;
            stack.push((start, self.succ_indices(start, &index)));
            while let Some((v, pending)) = stack.last_mut() {
                if let Some(w) = pending.pop() {
                    match colour[w] {
                        Colour::White => {
                            colour[w] = Colour::Grey;
                            let next = self.succ_indices(w, &index);
                            stack.push((w, next));
                        }
                        Colour::Grey => {
                            let pos = stack.iter().position(|(u, _)| *u == w).expect("grey on stack");
                            let cycle: Vec<usize> = stack[pos..].iter().map(|(u, _)| *u).collect();
                            return Some(rotate_to_least(cycle, &self.vertices));
                        }
                        Colour::Black => {}
                    }
                } else {
                    colour[*v] = Colour::Black;
                    stack.pop();
                }
            }
        }
        None
    }

    fn succ_indices(&self, v: usize, index: &BTreeMap<&DArc, usize>) -> Vec<usize> {
        // reversed so pop() explores targets in ascending order
        let mut succ: Vec<usize> = self
            .arrows_from(&self.vertices[v])
            .map(|a| index[a.target()])
            .collect();
        succ.sort_unstable();
        succ.reverse();
        succ
    }
}

fn rotate_to_least(cycle: Vec<usize>, vertices: &[DArc]) -> Vec<DArc> {
    let least = cycle
        .iter()
        .enumerate()
        .min_by_key(|(_, v)| &vertices[**v])
        .map(|(i, _)| i)
        .expect("cycle is nonempty");
    cycle[least..]
        .iter()
        .chain(&cycle[..least])
        .map(|v| vertices[*v].clone())
        .collect()
}

/// Build the quiver of a triangulation.
///
/// For each arc and each entry, walk the entry forward one step at a time
/// while the tuple stays internal (the next entry bounds the walk, with the
/// wrap bound first + m - 2 at the last position) and emit an arrow to the
/// first tuple that is again an arc of the triangulation.
pub fn build_quiver(t: &Triangulation) -> Quiver {
    let params = t.params();
    let m = params.m() as i64;
    let mut arrows = Vec::new();
    for arc in t.arcs() {
        let values = arc.values();
        let k = values.len();
        for i in 0..k {
            let from = values[i] as i64;
            let bound = if i + 1 < k {
                values[i + 1] as i64 - 2
            } else {
                values[0] as i64 + m - 2
            };
            for raw in from + 1..=bound {
                let candidate = arc.with_entry(i, raw).expect("walk stays internal");
                if t.contains(&candidate) {
                    arrows.push(Arrow {
                        source: arc.clone(),
                        target: candidate,
                        removed: values[i],
                        added: reduce(raw, params.m()),
                    });
                    break;
                }
            }
        }
    }
    let quiver = Quiver::from_parts(params, t.arcs().to_vec(), arrows);
    debug_assert!(quiver.arrows.iter().all(|a| a.source != a.target));
    debug_assert!(incidences_unique(&quiver));
    quiver
}

/// At most one incoming arrow per added entry and one outgoing arrow per
/// removed entry of each vertex.
fn incidences_unique(q: &Quiver) -> bool {
    q.vertices.iter().all(|v| {
        let removed: Vec<u32> = q.arrows_from(v).map(|a| a.removed).collect();
        let added: Vec<u32> = q.arrows_into(v).map(|a| a.added).collect();
        let unique = |mut xs: Vec<u32>| {
            xs.sort_unstable();
            xs.windows(2).all(|w| w[0] != w[1])
        };
        unique(removed) && unique(added)
    })
}

/// Direct transcription of the arrow definition, used as an oracle for
/// [`build_quiver`]: `a -> b` iff `(a - 1)` intertwines `b` and no third arc
/// interposes.
pub fn arrow_via_definition(t: &Triangulation, a: &DArc, b: &DArc) -> bool {
    if a == b {
        return false;
    }
    if !values_intertwine(a.minus_one().values(), b.values()) {
        return false;
    }
    !t.arcs().iter().any(|mid| {
        mid != a
            && mid != b
            && values_intertwine(a.minus_one().values(), mid.values())
            && values_intertwine(mid.minus_one().values(), b.values())
    })
}

/// Full subquiver on the arcs of `t` that intertwine `b`, for `b` outside
/// the triangulation. Nonempty instances are connected as undirected graphs.
pub fn intertwining_subquiver(t: &Triangulation, b: &DArc) -> Result<Quiver, QuiverError> {
    if t.contains(b) {
        return Err(QuiverError::ArcInTriangulation(b.compact()));
    }
    let q = build_quiver(t);
    let vertices: Vec<DArc> = q
        .vertices
        .iter()
        .filter(|v| intertwines(v, b).unwrap_or(false))
        .cloned()
        .collect();
    let arrows: Vec<Arrow> = q
        .arrows
        .iter()
        .filter(|a| vertices.contains(&a.source) && vertices.contains(&a.target))
        .cloned()
        .collect();
    Ok(Quiver::from_parts(q.params, vertices, arrows))
}

/// Undirected connectivity; the empty quiver counts as connected.
pub fn is_connected(q: &Quiver) -> bool {
    if q.vertices.is_empty() {
        return true;
    }
    let mut seen = vec![false; q.vertices.len()];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        let vertex = &q.vertices[v];
        let neighbours = q
            .arrows_from(vertex)
            .map(|a| a.target())
            .chain(q.arrows_into(vertex).map(|a| a.source()));
        for w in neighbours {
            let wi = q.vertices.iter().position(|x| x == w).expect("endpoint is a vertex");
            if !seen[wi] {
                seen[wi] = true;
                stack.push(wi);
            }
        }
    }
    seen.into_iter().all(|s| s)
}
