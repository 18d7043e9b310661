//! Small constructors shared by unit and integration tests.

#![allow(missing_docs)]

use crate::arc::DArc;
use crate::params::PolytopeParams;
use crate::triangulation::Triangulation;

pub fn params(m: u32, d: u32) -> PolytopeParams {
    PolytopeParams::new(m, d).unwrap()
}

pub fn arcs_of(values: &[&[u32]], p: PolytopeParams) -> Vec<DArc> {
    values
        .iter()
        .map(|v| DArc::new(v.to_vec(), p).unwrap())
        .collect()
}

pub fn triangulation(values: &[&[u32]], m: u32, d: u32) -> Triangulation {
    let p = params(m, d);
    Triangulation::new(arcs_of(values, p), p).unwrap()
}

/// The triangulation of C(8, 4) whose quiver is a six-cycle.
pub fn c84_cyclic() -> Triangulation {
    triangulation(
        &[&[1, 3, 5], &[1, 3, 6], &[1, 3, 7], &[3, 5, 7], &[1, 4, 7], &[1, 5, 7]],
        8,
        2,
    )
}

/// The interior-free triangulation of C(8, 4) with mutable arcs 135, 146, 157.
pub fn c84_cut() -> Triangulation {
    triangulation(
        &[&[1, 3, 5], &[1, 3, 6], &[1, 3, 7], &[1, 4, 6], &[1, 4, 7], &[1, 5, 7]],
        8,
        2,
    )
}

/// The triangulation of C(10, 6) with one maximal retrograde path of each
/// length 2, 3, 3, 3.
pub fn c106_figure() -> Triangulation {
    triangulation(
        &[
            &[1, 3, 5, 9],
            &[1, 3, 5, 8],
            &[1, 3, 6, 9],
            &[1, 3, 5, 7],
            &[1, 3, 6, 8],
            &[1, 3, 7, 9],
            &[3, 5, 7, 10],
            &[1, 4, 7, 9],
            &[3, 5, 7, 9],
            &[1, 5, 7, 9],
        ],
        10,
        3,
    )
}

/// The hexagon fan at vertex 1.
pub fn hexagon_fan() -> Triangulation {
    triangulation(&[&[1, 3], &[1, 4], &[1, 5]], 6, 1)
}
