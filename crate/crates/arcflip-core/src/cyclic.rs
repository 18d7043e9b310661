//! Arithmetic on the cyclically ordered ground set [m] = {1, ..., m}.
//!
//! Vertices of C(m, 2d) are labelled by [m] with the circular successor of m
//! being 1. All comparisons that depend on a starting point go through
//! [`CyclicOrder`], which anchors the circle at a chosen element.

/// Reduce an integer to its representative in [1, m].
pub fn reduce(value: i64, m: u32) -> u32 {
    ((value - 1).rem_euclid(m as i64) + 1) as u32
}

/// Steps needed to walk forward from `from` to `to`; 0 iff equal.
pub fn distance(from: u32, to: u32, m: u32) -> u32 {
    (to + m - from) % m
}

/// True iff `x` lies strictly between `lo` and `hi` walking forward from `lo`.
pub fn in_open_interval(x: u32, lo: u32, hi: u32, m: u32) -> bool {
    let d_x = distance(lo, x, m);
    d_x > 0 && d_x < distance(lo, hi, m)
}

/// The total order on [m] that starts at `anchor`:
/// anchor < anchor+1 < ... < m < 1 < ... < anchor-1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicOrder {
    anchor: u32,
    m: u32,
}

impl CyclicOrder {
    pub fn new(anchor: u32, m: u32) -> Self {
        debug_assert!((1..=m).contains(&anchor));
        Self { anchor, m }
    }

    pub fn anchor(&self) -> u32 {
        self.anchor
    }

    /// Rank of `x` in this order, 0-based.
    pub fn key(&self, x: u32) -> u32 {
        distance(self.anchor, x, self.m)
    }

    pub fn lt(&self, x: u32, y: u32) -> bool {
        self.key(x) < self.key(y)
    }

    pub fn sorted(&self, values: &[u32]) -> Vec<u32> {
        let mut v = values.to_vec();
        v.sort_by_key(|x| self.key(*x));
        v
    }
}
