//! Exact geometric validation of reconstructed cells.
//!
//! Vertices are realized on the moment curve at the integer parameters
//! t = 1, ..., m, so every simplex volume is an integer determinant over
//! (2d)!. The combinatorics is independent of the realization, which makes
//! this a one-sided oracle: the cells of a triangulation are pairwise
//! interior-disjoint by the circuit structure, so their scaled volumes sum
//! to the scaled volume of the polytope exactly when the reconstruction is
//! right. The polytope volume comes from an independent route: facets via
//! the evenness criterion, coned over vertex 1.

use num_bigint::BigInt;
use thiserror::Error;

use crate::arc::Simplex;
use crate::params::PolytopeParams;
use crate::triangulation::Triangulation;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("cell reconstruction failed: {0}")]
    ReconstructionFailure(String),
}

/// Scaled-volume summary of a validated cell set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellValidation {
    pub cell_count: usize,
    /// (2d)! times the common volume.
    pub scaled_volume: BigInt,
}

/// Point on the moment curve (t, t^2, ..., t^dim) at t = `value`.
fn moment_point(value: u32, dim: usize) -> Vec<BigInt> {
    let t = BigInt::from(value);
    let mut coords = Vec::with_capacity(dim);
    let mut power = BigInt::from(1);
    for _ in 0..dim {
        power *= &t;
        coords.push(power.clone());
    }
    coords
}

/// |det| of the edge matrix of the simplex on `values`: (2d)! times its
/// volume. Bareiss fraction-free elimination keeps everything integral.
fn scaled_simplex_volume(values: &[u32], dim: usize) -> BigInt {
    debug_assert_eq!(values.len(), dim + 1);
    let base = moment_point(values[0], dim);
    let mut mat: Vec<Vec<BigInt>> = values[1..]
        .iter()
        .map(|v| {
            moment_point(*v, dim)
                .into_iter()
                .zip(&base)
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect();

    let n = dim;
    let mut sign = BigInt::from(1);
    let mut prev = BigInt::from(1);
    for k in 0..n {
        if mat[k][k] == BigInt::from(0) {
            let swap = (k + 1..n).find(|i| mat[*i][k] != BigInt::from(0));
            match swap {
                Some(i) => {
                    mat.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::from(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &mat[i][j] * &mat[k][k] - &mat[i][k] * &mat[k][j];
                mat[i][j] = num / &prev;
            }
        }
        prev = mat[k][k].clone();
    }
    let det = sign * mat[n - 1][n - 1].clone();
    if det < BigInt::from(0) {
        -det
    } else {
        det
    }
}

/// Facets of C(m, dim) by the evenness criterion: a dim-subset is a facet
/// iff any two vertices outside it have an even number of its elements
/// strictly between them.
pub fn facets(params: PolytopeParams) -> Vec<Vec<u32>> {
    use itertools::Itertools;
    let m = params.m();
    let dim = 2 * params.d() as usize;
    (1..=m)
        .combinations(dim)
        .filter(|f| {
            let outside: Vec<u32> = (1..=m).filter(|v| !f.contains(v)).collect();
            outside.iter().tuple_combinations().all(|(x, y)| {
                f.iter().filter(|v| **v > *x && **v < *y).count() % 2 == 0
            })
        })
        .collect()
}

/// (2d)! times the volume of C(m, 2d): cones from vertex 1 over the facets
/// avoiding it.
pub fn scaled_polytope_volume(params: PolytopeParams) -> BigInt {
    let dim = 2 * params.d() as usize;
    facets(params)
        .into_iter()
        .filter(|f| !f.contains(&1))
        .map(|f| {
            let mut vertices = vec![1u32];
            vertices.extend(f);
            scaled_simplex_volume(&vertices, dim)
        })
        .sum()
}

/// Check a candidate cell set against the exact volume of the polytope.
pub fn validate_cells(
    t: &Triangulation,
    cells: &[Simplex],
) -> Result<CellValidation, GeometryError> {
    let params = t.params();
    let dim = 2 * params.d() as usize;
    let mut total = BigInt::from(0);
    for cell in cells {
        let volume = scaled_simplex_volume(cell.values(), dim);
        if volume == BigInt::from(0) {
            return Err(GeometryError::ReconstructionFailure(format!(
                "cell {cell} is degenerate"
            )));
        }
        total += volume;
    }
    let expected = scaled_polytope_volume(params);
    if total != expected {
        return Err(GeometryError::ReconstructionFailure(format!(
            "cells cover {total} but the polytope measures {expected} (times {dim}! each)"
        )));
    }
    Ok(CellValidation {
        cell_count: cells.len(),
        scaled_volume: total,
    })
}

/// Reconstruct the cells of `t` and validate them exactly.
pub fn geometric_oracle_validate(t: &Triangulation) -> Result<CellValidation, GeometryError> {
    validate_cells(t, &t.cells())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::{c84_cyclic, hexagon_fan, params, triangulation};

    #[test]
    fn hexagon_facets_are_its_edges() {
        let f = facets(params(6, 1));
        assert_eq!(f.len(), 6);
        assert!(f.contains(&vec![1, 2]));
        assert!(f.contains(&vec![1, 6]));
        assert!(!f.contains(&vec![1, 3]));
    }

    #[test]
    fn hexagon_volume_matches_shoelace() {
        // shoelace over (1,1),(2,4),(3,9),(4,16),(5,25),(6,36) gives area 20
        let v = scaled_polytope_volume(params(6, 1));
        assert_eq!(v, BigInt::from(40));
    }

    #[test]
    fn fan_tiles_the_hexagon() {
        let t = hexagon_fan();
        let check = geometric_oracle_validate(&t).unwrap();
        assert_eq!(check.cell_count, 4);
    }

    #[test]
    fn central_triangle_tiles_the_hexagon() {
        let t = triangulation(&[&[1, 3], &[3, 5], &[1, 5]], 6, 1);
        let check = geometric_oracle_validate(&t).unwrap();
        assert_eq!(check.cell_count, 4);
    }

    #[test]
    fn c84_figure_cells_tile() {
        let t = c84_cyclic();
        let check = geometric_oracle_validate(&t).unwrap();
        assert_eq!(check.cell_count, t.cells().len());
    }

    #[test]
    fn corrupted_cell_set_is_rejected() {
        let t = hexagon_fan();
        let mut cells = t.cells();
        cells.pop();
        let err = validate_cells(&t, &cells).unwrap_err();
        assert!(matches!(err, GeometryError::ReconstructionFailure(_)));
    }
}
