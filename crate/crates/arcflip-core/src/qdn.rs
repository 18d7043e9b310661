//! The finite composition quiver and its cuts.
//!
//! Vertices are the compositions of n - 1 into d + 1 parts; the arrow of kind
//! i moves one unit from part i to part i + 1 (indices mod d + 1). A cut picks
//! exactly one arrow out of every directed (d+1)-cycle, and removing a cut
//! from the quiver leaves exactly the quivers of interior-free triangulations.
//!
//! Every (d+1)-cycle uses each kind once. The cycles whose kinds ascend
//! cyclically (i, i+1, ..., wrapping) are the distinguished ones: they are the
//! closures of the maximal retrograde paths of the corresponding
//! triangulation quivers.

use std::collections::BTreeSet;

use itertools::Itertools;
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CutError {
    #[error("no cycle may carry {found} cut arrows (cycle through {cycle})")]
    NotACut { cycle: String, found: usize },
    #[error("vertex {0} is not a source/sink of the cut quiver")]
    NotSourceOrSink(String),
    #[error("vertex or arrow does not belong to this quiver")]
    UnknownVertex,
}

/// A composition of n - 1 into d + 1 non-negative parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        Self { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }
}

impl std::fmt::Display for Composition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        // digit string as long as every part is small, else comma-separated
        if self.parts.iter().all(|p| *p <= 9) {
            for p in &self.parts {
                write!(f, "{p}")?;
            }
            Ok(())
        } else {
            f.write_str(&self.parts.iter().join(","))
        }
    }
}

impl std::fmt::Debug for Composition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Composition({self})")
    }
}

/// Arrow of the composition quiver: `source` with one unit moved from part
/// `kind` to part `kind + 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CompArrow {
    source: Composition,
    kind: usize,
}

impl CompArrow {
    pub fn new(source: Composition, kind: usize) -> Self {
        Self { source, kind }
    }

    pub fn source(&self) -> &Composition {
        &self.source
    }

    pub fn kind(&self) -> usize {
        self.kind
    }

    pub fn target(&self) -> Composition {
        let mut parts = self.source.parts.clone();
        let k = parts.len();
        parts[self.kind] -= 1;
        parts[(self.kind + 1) % k] += 1;
        Composition::new(parts)
    }
}

impl std::fmt::Debug for CompArrow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} -> {}", self.source, self.target())
    }
}

/// The quiver on compositions of n - 1 into d + 1 parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionQuiver {
    d: u32,
    n: u32,
    vertices: Vec<Composition>,
    arrows: Vec<CompArrow>,
}

impl CompositionQuiver {
    pub fn new(d: u32, n: u32) -> Self {
        let len = d as usize + 1;
        let mut vertices = Vec::new();
        if n >= 1 {
            compositions_into(n - 1, len, &mut Vec::with_capacity(len), &mut vertices);
        }
        vertices.sort_unstable();
        let arrows = vertices
            .iter()
            .flat_map(|v| {
                (0..len)
                    .filter(|i| v.parts()[*i] >= 1)
                    .map(|i| CompArrow::new(v.clone(), i))
            })
            .collect();
        Self { d, n, vertices, arrows }
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertices(&self) -> &[Composition] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[CompArrow] {
        &self.arrows
    }

    pub fn contains_vertex(&self, v: &Composition) -> bool {
        self.vertices.binary_search(v).is_ok()
    }

    pub fn arrows_from<'a>(&'a self, v: &'a Composition) -> impl Iterator<Item = &'a CompArrow> {
        self.arrows.iter().filter(move |a| a.source() == v)
    }

    pub fn arrows_into<'a>(&'a self, v: &'a Composition) -> impl Iterator<Item = &'a CompArrow> {
        self.arrows.iter().filter(move |a| &a.target() == v)
    }

    /// All directed (d+1)-cycles, each using every kind exactly once,
    /// deduplicated up to rotation (least vertex first).
    pub fn short_cycles(&self) -> Vec<CompCycle> {
        let len = self.d as usize + 1;
        let mut seen = BTreeSet::new();
        let mut cycles = Vec::new();
        for start in &self.vertices {
            for kinds in (0..len).permutations(len) {
                let mut vertices = vec![start.clone()];
                let mut ok = true;
                for kind in &kinds {
                    let current = vertices.last().expect("nonempty");
                    if current.parts()[*kind] < 1 {
                        ok = false;
                        break;
                    }
                    vertices.push(CompArrow::new(current.clone(), *kind).target());
                }
                if !ok || vertices.last() != Some(start) {
                    continue;
                }
                vertices.pop();
                let cycle = CompCycle::canonical(vertices, kinds);
                if seen.insert(cycle.clone()) {
                    cycles.push(cycle);
                }
            }
        }
        cycles.sort_unstable();
        cycles
    }

    /// Distinguished cycles: kinds ascend cyclically along the traversal.
    pub fn distinguished_cycles(&self) -> Vec<CompCycle> {
        self.short_cycles()
            .into_iter()
            .filter(|c| c.is_distinguished())
            .collect()
    }
}

fn compositions_into(
    total: u32,
    len: usize,
    prefix: &mut Vec<u32>,
    out: &mut Vec<Composition>,
) {
    if prefix.len() + 1 == len {
        let mut parts = prefix.clone();
        parts.push(total);
        out.push(Composition::new(parts));
        return;
    }
    for first in 0..=total {
        prefix.push(first);
        compositions_into(total - first, len, prefix, out);
        prefix.pop();
    }
}

/// A (d+1)-cycle, stored with its least vertex first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CompCycle {
    vertices: Vec<Composition>,
    kinds: Vec<usize>,
}

impl CompCycle {
    fn canonical(vertices: Vec<Composition>, kinds: Vec<usize>) -> Self {
        let least = vertices
            .iter()
            .enumerate()
            .min_by_key(|(_, v)| (*v).clone())
            .map(|(i, _)| i)
            .expect("cycle is nonempty");
        fn rotate<T: Clone>(xs: &[T], by: usize) -> Vec<T> {
            xs[by..].iter().chain(&xs[..by]).cloned().collect()
        }
        Self {
            vertices: rotate(&vertices, least),
            kinds: rotate(&kinds, least),
        }
    }

    pub fn vertices(&self) -> &[Composition] {
        &self.vertices
    }

    /// kinds[k] is the kind of the arrow vertices[k] -> vertices[k+1].
    pub fn kinds(&self) -> &[usize] {
        &self.kinds
    }

    pub fn arrows(&self) -> Vec<CompArrow> {
        self.vertices
            .iter()
            .zip(&self.kinds)
            .map(|(v, k)| CompArrow::new(v.clone(), *k))
            .collect()
    }

    pub fn is_distinguished(&self) -> bool {
        let len = self.kinds.len();
        (0..len).all(|i| self.kinds[(i + 1) % len] == (self.kinds[i] + 1) % len)
    }
}

impl std::fmt::Debug for CompCycle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.vertices.iter().join(", "))
    }
}

/// A choice of one arrow from every (d+1)-cycle.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cut {
    arrows: BTreeSet<CompArrow>,
}

impl Cut {
    pub fn new(arrows: impl IntoIterator<Item = CompArrow>) -> Self {
        Self {
            arrows: arrows.into_iter().collect(),
        }
    }

    pub fn arrows(&self) -> &BTreeSet<CompArrow> {
        &self.arrows
    }

    pub fn contains(&self, arrow: &CompArrow) -> bool {
        self.arrows.contains(arrow)
    }

    /// Arrows of the cut quiver: everything except the cut.
    pub fn kept_arrows<'a>(&'a self, q: &'a CompositionQuiver) -> impl Iterator<Item = &'a CompArrow> {
        q.arrows().iter().filter(|a| !self.contains(a))
    }

    /// No kept arrow ends here.
    pub fn is_source(&self, q: &CompositionQuiver, v: &Composition) -> bool {
        q.arrows_into(v).all(|a| self.contains(a))
    }

    /// No kept arrow starts here.
    pub fn is_sink(&self, q: &CompositionQuiver, v: &Composition) -> bool {
        q.arrows_from(v).all(|a| self.contains(a))
    }
}

impl std::fmt::Debug for Cut {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cut{{{}}}", self.arrows.iter().map(|a| format!("{a:?}")).join(", "))
    }
}

/// Check the exactly-one-arrow-per-cycle property.
pub fn validate_cut(q: &CompositionQuiver, cut: &Cut) -> Result<(), CutError> {
    for cycle in q.short_cycles() {
        let found = cycle.arrows().iter().filter(|a| cut.contains(a)).count();
        if found != 1 {
            return Err(CutError::NotACut {
                cycle: format!("{cycle:?}"),
                found,
            });
        }
    }
    Ok(())
}

/// A directed path in the composition quiver.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CompPath {
    vertices: Vec<Composition>,
    kinds: Vec<usize>,
}

impl CompPath {
    pub fn vertices(&self) -> &[Composition] {
        &self.vertices
    }

    pub fn kinds(&self) -> &[usize] {
        &self.kinds
    }

    pub fn arrows(&self) -> Vec<CompArrow> {
        self.vertices[..self.vertices.len() - 1]
            .iter()
            .zip(&self.kinds)
            .map(|(v, k)| CompArrow::new(v.clone(), *k))
            .collect()
    }

    /// Vertices other than the two endpoints.
    pub fn middles(&self) -> &[Composition] {
        &self.vertices[1..self.vertices.len() - 1]
    }
}

/// Remove the cut arrow from each distinguished cycle; the d-arrow paths that
/// remain decompose the cut quiver, and their middles are exactly the
/// immutable arcs of any triangulation whose quiver realizes the cut.
pub fn distinguished_cut_paths(q: &CompositionQuiver, cut: &Cut) -> Result<Vec<CompPath>, CutError> {
    validate_cut(q, cut)?;
    let mut paths = Vec::new();
    for cycle in q.distinguished_cycles() {
        let arrows = cycle.arrows();
        let cut_at = arrows
            .iter()
            .position(|a| cut.contains(a))
            .expect("validate_cut guarantees one cut arrow");
        let len = arrows.len();
        let mut vertices = Vec::with_capacity(len);
        let mut kinds = Vec::with_capacity(len - 1);
        for step in 1..=len {
            let i = (cut_at + step) % len;
            vertices.push(cycle.vertices()[i].clone());
            if step < len {
                kinds.push(cycle.kinds()[i]);
            }
        }
        paths.push(CompPath { vertices, kinds });
    }
    paths.sort_unstable();
    Ok(paths)
}

/// Which way a cut or slice mutation moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Mutate at a source.
    Plus,
    /// Mutate at a sink.
    Minus,
}

/// Source/sink mutation of a cut: at a source, arrows of the cut ending
/// there leave the cut and all arrows starting there enter it; dually at a
/// sink.
pub fn mutate_cut(
    q: &CompositionQuiver,
    cut: &Cut,
    x: &Composition,
    direction: Direction,
) -> Result<Cut, CutError> {
    if !q.contains_vertex(x) {
        return Err(CutError::UnknownVertex);
    }
    let ok = match direction {
        Direction::Plus => cut.is_source(q, x),
        Direction::Minus => cut.is_sink(q, x),
    };
    if !ok {
        return Err(CutError::NotSourceOrSink(x.to_string()));
    }
    let mut arrows = cut.arrows.clone();
    match direction {
        Direction::Plus => {
            arrows.retain(|a| a.target() != *x);
            arrows.extend(q.arrows_from(x).cloned());
        }
        Direction::Minus => {
            arrows.retain(|a| a.source() != x);
            arrows.extend(q.arrows_into(x).cloned());
        }
    }
    let mutated = Cut::new(arrows);
    validate_cut(q, &mutated).expect("source/sink mutation preserves cuts");
    Ok(mutated)
}

/// All cuts of a small quiver by direct search over arrow subsets.
/// Exponential in the arrow count; intended for tests and desk instances.
pub fn enumerate_cuts(q: &CompositionQuiver) -> Vec<Cut> {
    let arrows = q.arrows();
    assert!(arrows.len() <= 20, "cut enumeration is for small quivers");
    let cycles = q.short_cycles();
    let mut cuts = Vec::new();
    for mask in 0u32..(1 << arrows.len()) {
        let chosen: Vec<&CompArrow> = arrows
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, a)| a)
            .collect();
        let ok = cycles.iter().all(|cycle| {
            cycle
                .arrows()
                .iter()
                .filter(|a| chosen.contains(&*a))
                .count()
                == 1
        });
        if ok {
            cuts.push(Cut::new(chosen.into_iter().cloned()));
        }
    }
    cuts
}
