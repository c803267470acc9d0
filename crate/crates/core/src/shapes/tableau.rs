use std::collections::HashMap;

use serde::Serialize;

use super::{Cell, Partition, SkewShape};
use crate::error::{Error, Result};

/// A standard skew tableau, stored as the path it traces in Young's lattice:
/// `cells[k]` is the box added at step `k + 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct SkewTableau {
    shape: SkewShape,
    #[serde(rename = "boxes")]
    cells: Vec<Cell>,
}

impl SkewTableau {
    /// Validates that every step adds one box to a partition and ends at
    /// the outer shape.
    pub fn from_cells(shape: SkewShape, cells: Vec<Cell>) -> Result<Self> {
        let mut cur = shape.inner().clone();
        for (k, c) in cells.iter().enumerate() {
            let row = c.row.checked_sub(1).ok_or_else(|| bad_step(k, c))?;
            if !cur.addable_rows().any(|r| r == row) || cur.part(row) + 1 != c.col {
                return Err(bad_step(k, c));
            }
            cur = cur.with_box_in_row(row);
        }
        if &cur != shape.outer() {
            return Err(Error::PreconditionViolation(format!(
                "path ends at {cur}, expected {}",
                shape.outer()
            )));
        }
        Ok(Self { shape, cells })
    }

    /// The empty path at `p`.
    pub fn identity(p: Partition) -> Self {
        Self { shape: SkewShape::new(p.clone(), p).unwrap(), cells: Vec::new() }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Added boxes in step order.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Box holding entry `k` (1-based).
    pub fn cell_of(&self, k: usize) -> Cell {
        self.cells[k - 1]
    }

    /// The chain `inner = ν₀ ⊂ ν₁ ⊂ … ⊂ νₙ = outer`.
    pub fn chain(&self) -> Vec<Partition> {
        let mut cur = self.shape.inner().clone();
        let mut out = vec![cur.clone()];
        for c in &self.cells {
            cur = cur.with_box_in_row(c.row - 1);
            out.push(cur.clone());
        }
        out
    }

    /// The filling `box ↦ step index` (1-based).
    pub fn filling(&self) -> HashMap<Cell, usize> {
        self.cells.iter().enumerate().map(|(k, &c)| (c, k + 1)).collect()
    }

    /// Path concatenation: `self` followed by `next`.
    pub fn concat(&self, next: &SkewTableau) -> Result<SkewTableau> {
        if self.shape.outer() != next.shape.inner() {
            return Err(Error::SourceTargetMismatch(format!(
                "path ends at {} but next starts at {}",
                self.shape.outer(),
                next.shape.inner()
            )));
        }
        let shape = SkewShape::new(self.shape.inner().clone(), next.shape.outer().clone())?;
        let mut cells = self.cells.clone();
        cells.extend_from_slice(&next.cells);
        Ok(SkewTableau { shape, cells })
    }
}

fn bad_step(k: usize, c: &Cell) -> Error {
    Error::PreconditionViolation(format!("step {} adds non-addable box ({}, {})", k + 1, c.row, c.col))
}

/// All standard tableaux of shape `s`, ordered lexicographically by the
/// sequence of rows in which boxes are added. This order is the basis order
/// of every skew representation.
pub fn enumerate_skew_tableaux(s: &SkewShape) -> Vec<SkewTableau> {
    fn go(
        outer: &Partition,
        cur: &mut Vec<usize>,
        path: &mut Vec<Cell>,
        remaining: usize,
        visit: &mut impl FnMut(&[Cell]),
    ) {
        if remaining == 0 {
            visit(path);
            return;
        }
        for r in 0..outer.len() {
            let fits = cur[r] < outer.part(r);
            let addable = r == 0 || cur[r - 1] > cur[r];
            if fits && addable {
                cur[r] += 1;
                path.push(Cell::new(r + 1, cur[r]));
                go(outer, cur, path, remaining - 1, visit);
                path.pop();
                cur[r] -= 1;
            }
        }
    }

    let outer = s.outer();
    let mut cur: Vec<usize> = (0..outer.len()).map(|r| s.inner().part(r)).collect();
    let mut out = Vec::new();
    go(outer, &mut cur, &mut Vec::new(), s.size(), &mut |path| {
        out.push(SkewTableau { shape: s.clone(), cells: path.to_vec() });
    });
    out
}

/// Number of standard tableaux of shape `s`, counted along Young's lattice
/// without materialising them.
pub fn count_skew_tableaux(s: &SkewShape) -> u64 {
    fn go(outer: &Partition, cur: &mut Vec<usize>, memo: &mut HashMap<Vec<usize>, u64>) -> u64 {
        if cur.iter().zip(outer.parts()).all(|(c, o)| c == o) {
            return 1;
        }
        if let Some(&n) = memo.get(cur.as_slice()) {
            return n;
        }
        let mut total = 0;
        for r in 0..outer.len() {
            if cur[r] < outer.part(r) && (r == 0 || cur[r - 1] > cur[r]) {
                cur[r] += 1;
                total += go(outer, cur, memo);
                cur[r] -= 1;
            }
        }
        memo.insert(cur.clone(), total);
        total
    }
    let mut cur: Vec<usize> = (0..s.outer().len()).map(|r| s.inner().part(r)).collect();
    go(s.outer(), &mut cur, &mut HashMap::new())
}
