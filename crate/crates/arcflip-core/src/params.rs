//! Instance parameters for the cyclic polytope C(m, 2d).

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ParamsError {
    #[error("half-dimension d must be at least 1")]
    DimensionZero,
    #[error("C(m, 2d) needs m >= 2d + 1, got m = {m} with d = {d}")]
    TooFewVertices { m: u32, d: u32 },
}

/// Parameters of the cyclic polytope C(m, 2d) with m = n + 2d + 1 vertices.
///
/// `d` is the half-dimension (the polytope lives in dimension 2d) and
/// `n = m - 2d - 1 >= 0` counts the "free" vertices beyond the simplex case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PolytopeParams {
    m: u32,
    d: u32,
}

impl PolytopeParams {
    pub fn new(m: u32, d: u32) -> Result<Self, ParamsError> {
        if d == 0 {
            return Err(ParamsError::DimensionZero);
        }
        if m < 2 * d + 1 {
            return Err(ParamsError::TooFewVertices { m, d });
        }
        Ok(Self { m, d })
    }

    /// Number of vertices of the polytope.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// Half-dimension: the polytope is 2d-dimensional.
    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn n(&self) -> u32 {
        self.m - 2 * self.d - 1
    }

    /// Entries per arc: d + 1.
    pub fn arity(&self) -> usize {
        self.d as usize + 1
    }

    /// Every triangulation of C(m, 2d) has exactly binom(n + d - 1, d) arcs.
    pub fn arc_count(&self) -> u64 {
        let n = self.n() as u64;
        let d = self.d as u64;
        if n == 0 {
            return 0;
        }
        binomial(n + d - 1, d)
    }

    /// Vertices of a full-dimensional cell: 2d + 1.
    pub fn cell_arity(&self) -> usize {
        2 * self.d as usize + 1
    }
}

/// Exact binomial coefficient; 0 when k > n.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as u64
}
