//! d-arcs of C(m, 2d) and the intertwining relation.
//!
//! A d-arc is a (d+1)-subset of [m] whose entries keep a circular gap of at
//! least 2 from each other; these are exactly the d-simplices that do not lie
//! in any facet of the polytope. Two arcs intertwine when their entries
//! strictly alternate around the circle; intertwining pairs are the circuits
//! of C(m, 2d), so a triangulation is the same thing as a maximal
//! non-intertwining collection of arcs.

use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::cyclic::reduce;
use crate::params::PolytopeParams;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ArcError {
    #[error("expected {expected} entries, got {found}")]
    WrongArity { expected: usize, found: usize },
    #[error("entry {value} is outside [1, {m}]")]
    OutOfRange { value: u32, m: u32 },
    #[error("{0} lies in a facet (circular gap < 2)")]
    NotInternal(String),
    #[error("arcs belong to different polytopes")]
    ParamMismatch,
}

/// An internal d-simplex of C(m, 2d), stored as its ascending (d+1)-tuple.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DArc {
    values: Vec<u32>,
    params: PolytopeParams,
}

impl DArc {
    /// Canonicalize and validate a tuple of vertex labels as a d-arc.
    pub fn new(values: impl Into<Vec<u32>>, params: PolytopeParams) -> Result<Self, ArcError> {
        let mut values = values.into();
        if values.len() != params.arity() {
            return Err(ArcError::WrongArity {
                expected: params.arity(),
                found: values.len(),
            });
        }
        if let Some(&value) = values.iter().find(|v| **v < 1 || **v > params.m()) {
            return Err(ArcError::OutOfRange {
                value,
                m: params.m(),
            });
        }
        values.sort_unstable();
        if !gaps_ok(&values, params.m()) {
            return Err(ArcError::NotInternal(format!("{values:?}")));
        }
        Ok(Self { values, params })
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn params(&self) -> PolytopeParams {
        self.params
    }

    pub fn index_of(&self, value: u32) -> Option<usize> {
        self.values.iter().position(|v| *v == value)
    }

    /// Entry circularly preceding `value` among this arc's entries.
    pub fn entry_before(&self, value: u32) -> u32 {
        let i = self.index_of(value).expect("value must be an entry");
        let k = self.values.len();
        self.values[(i + k - 1) % k]
    }

    /// Entry circularly following `value` among this arc's entries.
    pub fn entry_after(&self, value: u32) -> u32 {
        let i = self.index_of(value).expect("value must be an entry");
        self.values[(i + 1) % self.values.len()]
    }

    /// The arc with every entry shifted one step backwards around the circle.
    pub fn minus_one(&self) -> DArc {
        let m = self.params.m();
        let values: Vec<u32> = self
            .values
            .iter()
            .map(|v| reduce(*v as i64 - 1, m))
            .collect();
        DArc::new(values, self.params).expect("circular shift preserves gaps")
    }

    /// Replace the entry at `index` by `value` (mod m) and re-canonicalize.
    pub fn with_entry(&self, index: usize, value: i64) -> Result<DArc, ArcError> {
        let mut values = self.values.clone();
        values[index] = reduce(value, self.params.m());
        DArc::new(values, self.params)
    }

    /// Comma-separated decimal form, e.g. `1,3,6,8`.
    pub fn decimal(&self) -> String {
        self.values.iter().join(",")
    }

    /// Single-symbol form used in figures (`357A` for 3,5,7,10); falls back
    /// to the decimal form when an entry exceeds 35.
    pub fn compact(&self) -> String {
        compact_label(&self.values).unwrap_or_else(|| self.decimal())
    }
}

impl fmt::Display for DArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.decimal())
    }
}

impl fmt::Debug for DArc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DArc({})", self.compact())
    }
}

pub(crate) fn compact_label(values: &[u32]) -> Option<String> {
    values
        .iter()
        .map(|v| match v {
            1..=9 => Some((b'0' + *v as u8) as char),
            10..=35 => Some((b'A' + (*v as u8 - 10)) as char),
            _ => None,
        })
        .collect()
}

/// Ascending, distinct, circular gaps >= 2 (including the wrap-around gap).
fn gaps_ok(values: &[u32], m: u32) -> bool {
    for w in values.windows(2) {
        if w[1] < w[0] + 2 {
            return false;
        }
    }
    let first = values[0];
    let last = values[values.len() - 1];
    last + 2 <= first + m
}

/// True iff the entries of `a` and `b` strictly alternate around the circle.
///
/// Walking the circle once meets the 2(d+1) entries in their ascending order,
/// so circular alternation holds exactly when the merged ascending sequence
/// alternates; a shared entry rules alternation out immediately.
pub fn intertwines(a: &DArc, b: &DArc) -> Result<bool, ArcError> {
    if a.params != b.params {
        return Err(ArcError::ParamMismatch);
    }
    Ok(values_intertwine(&a.values, &b.values))
}

pub(crate) fn values_intertwine(a: &[u32], b: &[u32]) -> bool {
    let (mut i, mut j) = (0, 0);
    let mut last_from_a = None;
    while i < a.len() || j < b.len() {
        let take_a = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) if x == y => return false,
            (Some(x), Some(y)) => x < y,
            (Some(_), None) => true,
            (None, _) => false,
        };
        if last_from_a == Some(take_a) {
            return false;
        }
        last_from_a = Some(take_a);
        if take_a {
            i += 1;
        } else {
            j += 1;
        }
    }
    true
}

/// All d-arcs of C(m, 2d), in ascending lexicographic order.
pub fn all_arcs(params: PolytopeParams) -> Vec<DArc> {
    (1..=params.m())
        .combinations(params.arity())
        .filter_map(|values| DArc::new(values, params).ok())
        .collect()
}

/// A k-simplex on the vertex set [m], stored ascending.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    values: Vec<u32>,
    params: PolytopeParams,
}

impl Simplex {
    pub fn new(values: impl Into<Vec<u32>>, params: PolytopeParams) -> Result<Self, ArcError> {
        let mut values = values.into();
        if let Some(&value) = values.iter().find(|v| **v < 1 || **v > params.m()) {
            return Err(ArcError::OutOfRange {
                value,
                m: params.m(),
            });
        }
        values.sort_unstable();
        if values.windows(2).any(|w| w[0] == w[1]) {
            return Err(ArcError::NotInternal(format!("{values:?} repeats an entry")));
        }
        Ok(Self { values, params })
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn params(&self) -> PolytopeParams {
        self.params
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.values.iter().join(","))
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Simplex({})",
            compact_label(&self.values).unwrap_or_else(|| self.values.iter().join(","))
        )
    }
}
