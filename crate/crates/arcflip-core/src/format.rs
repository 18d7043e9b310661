//! Text and JSON formats.
//!
//! Arc tokens are accepted in two forms: comma-separated decimals
//! ("1,3,6,8") and the compact single-symbol form used in figures ("357A",
//! with A-Z standing for 10-35). Output is always decimal. Triangulations
//! travel as `{"m": .., "d": .., "arcs": [[..], ..]}` with the arcs in
//! canonical sorted order, so serializing is deterministic and
//! round-trip-stable byte for byte.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arc::DArc;
use crate::params::{ParamsError, PolytopeParams};
use crate::qdn::{CompArrow, Composition, Cut};
use crate::slice::Slice;
use crate::triangulation::{Triangulation, TriangulationError};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("empty arc token")]
    EmptyToken,
    #[error("bad arc token {0:?}")]
    BadToken(String),
}

/// Parse an arc token in either decimal or compact form.
pub fn parse_arc_values(token: &str) -> Result<Vec<u32>, FormatError> {
    let token = token.trim();
    if token.is_empty() {
        return Err(FormatError::EmptyToken);
    }
    if token.contains(',') {
        token
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u32>()
                    .map_err(|_| FormatError::BadToken(token.to_string()))
            })
            .collect()
    } else {
        token
            .chars()
            .map(|c| match c {
                '1'..='9' => Ok(c as u32 - '0' as u32),
                'A'..='Z' => Ok(c as u32 - 'A' as u32 + 10),
                'a'..='z' => Ok(c as u32 - 'a' as u32 + 10),
                _ => Err(FormatError::BadToken(token.to_string())),
            })
            .collect()
    }
}

/// On-disk shape of a triangulation.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct TriangulationFile {
    pub m: u32,
    pub d: u32,
    pub arcs: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum TriangulationFileError {
    #[error(transparent)]
    Params(#[from] ParamsError),
    #[error(transparent)]
    Triangulation(#[from] TriangulationError),
}

impl TriangulationFile {
    pub fn from_triangulation(t: &Triangulation) -> Self {
        Self {
            m: t.params().m(),
            d: t.params().d(),
            arcs: t.arcs().iter().map(|a| a.values().to_vec()).collect(),
        }
    }

    pub fn into_triangulation(self) -> Result<Triangulation, TriangulationFileError> {
        let params = PolytopeParams::new(self.m, self.d)?;
        let arcs = self
            .arcs
            .into_iter()
            .map(|values| DArc::new(values, params))
            .collect::<Result<Vec<_>, _>>()
            .map_err(TriangulationError::from)?;
        Ok(Triangulation::new(arcs, params)?)
    }
}

/// Canonical JSON for a triangulation; stable across round trips.
pub fn triangulation_to_json(t: &Triangulation) -> String {
    serde_json::to_string(&TriangulationFile::from_triangulation(t))
        .expect("serialization cannot fail")
}

/// On-disk shape of a cut: arrows as (source composition, kind) pairs.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CutFile {
    pub d: u32,
    pub n: u32,
    pub cut: Vec<(Vec<u32>, usize)>,
}

impl CutFile {
    pub fn new(d: u32, n: u32, cut: &Cut) -> Self {
        Self {
            d,
            n,
            cut: cut
                .arrows()
                .iter()
                .map(|a| (a.source().parts().to_vec(), a.kind()))
                .collect(),
        }
    }

    pub fn into_cut(self) -> Cut {
        Cut::new(
            self.cut
                .into_iter()
                .map(|(parts, kind)| CompArrow::new(Composition::new(parts), kind)),
        )
    }
}

/// Slices serialize as a bare list of coordinate tuples.
pub fn slice_to_json(slice: &Slice) -> String {
    let coords: Vec<&[i64]> = slice.vertices().iter().map(|v| v.coords()).collect();
    serde_json::to_string(&coords).expect("serialization cannot fail")
}
