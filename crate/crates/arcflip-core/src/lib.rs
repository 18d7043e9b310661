//! Combinatorics of triangulations of even-dimensional cyclic polytopes.
//!
//! A triangulation of C(m, 2d) is encoded by its internal d-simplices
//! ("d-arcs"); this crate builds the quiver of a triangulation, decomposes it
//! into maximal retrograde paths to decide which arcs admit a bistellar flip,
//! performs the flips, relates acyclic quivers to cuts and slices of the
//! associated composition quivers, and exhaustively enumerates and verifies
//! small instances, backed by an exact-arithmetic geometric oracle.

pub mod arc;
pub mod cyclic;
pub mod explore;
pub mod format;
pub mod geometry;
pub mod params;
pub mod qdn;
pub mod quiver;
pub mod retrograde;
pub mod slice;
pub mod triangulation;

#[doc(hidden)]
pub mod test_support;

pub use arc::{all_arcs, intertwines, ArcError, DArc, Simplex};
pub use explore::{
    enumerate_triangulations, flip_graph, interior_free_flip_graph_connected,
    verify_cut_coherence, verify_interior_criterion, verify_mutability_criterion,
    CutCoherenceReport, ExploreError, FlipEdge, FlipGraph, InteriorReport, MutabilityReport,
    DEFAULT_BUDGET,
};
pub use format::{
    parse_arc_values, slice_to_json, triangulation_to_json, CutFile, FormatError,
    TriangulationFile, TriangulationFileError,
};
pub use geometry::{geometric_oracle_validate, validate_cells, CellValidation, GeometryError};
pub use params::{binomial, ParamsError, PolytopeParams};
pub use quiver::{
    arrow_via_definition, build_quiver, intertwining_subquiver, is_connected, Arrow, Quiver,
    QuiverError,
};
pub use qdn::{
    distinguished_cut_paths, enumerate_cuts, mutate_cut, validate_cut, CompArrow, CompCycle,
    CompPath, Composition, CompositionQuiver, Cut, CutError, Direction,
};
pub use retrograde::{
    brute_force_mutable, flip, flip_neighbors, maximal_retrograde_paths, mutable_arcs,
    retrograde_successor, FlipError, RetrogradePath,
};
pub use slice::{
    cut_from_slice, cut_mutable_arcs, flip_on_cut_quiver, mutate_slice, slice_lift, CoverVertex,
    CutQuiverFlip, CutQuiverFlipError, Slice, SliceError,
};
pub use triangulation::{Triangulation, TriangulationError};
