use std::fmt;

use serde::{Deserialize, Serialize};

use super::Partition;
use crate::error::{Error, Result};

/// A box of a Young diagram, 1-based `(row, col)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", from = "[usize; 2]")]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1, "cells are 1-based");
        Self { row, col }
    }

    /// `col − row`
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl From<Cell> for [usize; 2] {
    fn from(c: Cell) -> Self {
        [c.row, c.col]
    }
}

impl From<[usize; 2]> for Cell {
    fn from([row, col]: [usize; 2]) -> Self {
        Self { row, col }
    }
}

/// `col − row` of a box.
pub fn content(b: Cell) -> i64 {
    b.content()
}

/// `|row₁ − row₂| + |col₁ − col₂|`
pub fn axial_distance(b1: Cell, b2: Cell) -> usize {
    b1.row.abs_diff(b2.row) + b1.col.abs_diff(b2.col)
}

/// The skew shape `outer ∖ inner`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawSkew")]
pub struct SkewShape {
    inner: Partition,
    outer: Partition,
}

#[derive(Deserialize)]
struct RawSkew {
    inner: Partition,
    outer: Partition,
}

impl TryFrom<RawSkew> for SkewShape {
    type Error = Error;

    fn try_from(raw: RawSkew) -> Result<Self> {
        SkewShape::new(raw.inner, raw.outer)
    }
}

impl SkewShape {
    pub fn new(inner: Partition, outer: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained { inner: inner.to_string(), outer: outer.to_string() });
        }
        Ok(Self { inner, outer })
    }

    /// `μ / ∅`
    pub fn straight(outer: Partition) -> Self {
        Self { inner: Partition::empty(), outer }
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Cells of the outer diagram not in the inner one, row-major.
    pub fn cells(&self) -> Vec<super::Cell> {
        (0..self.outer.len())
            .flat_map(|r| (self.inner.part(r) + 1..=self.outer.part(r)).map(move |c| Cell::new(r + 1, c)))
            .collect()
    }

    /// No two boxes share a column, i.e. `outer[i+1] ≤ inner[i]` for all `i`.
    pub fn is_horizontal_strip(&self) -> bool {
        (0..self.outer.len()).all(|i| self.outer.part(i + 1) <= self.inner.part(i))
    }
}

/// See [`SkewShape::is_horizontal_strip`].
pub fn is_horizontal_strip(s: &SkewShape) -> bool {
    s.is_horizontal_strip()
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl fmt::Debug for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
