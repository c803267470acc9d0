use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Cell;
use crate::error::{Error, Result};

/// An integer partition: weakly decreasing positive parts, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `row` (0-based); zero past the last row.
    pub fn part(&self, row: usize) -> usize {
        self.parts.get(row).copied().unwrap_or(0)
    }

    /// `true` iff the diagram of `inner` fits inside this one.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(i, o)| i <= o)
    }

    /// All boxes in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(r + 1, c)))
            .collect()
    }

    /// 0-based rows where a box can be added.
    pub fn addable_rows(&self) -> impl Iterator<Item = usize> + '_ {
        (0..=self.len()).filter(move |&r| r == 0 || self.part(r - 1) > self.part(r))
    }

    pub(crate) fn with_box_in_row(&self, row: usize) -> Self {
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Self { parts }
    }

    /// Every partition obtained by adding one box, ordered by the row of the
    /// added box.
    pub fn successors(&self) -> Vec<Partition> {
        self.addable_rows().map(|r| self.with_box_in_row(r)).collect()
    }

    /// All partitions of `n`, in decreasing lexicographic order
    /// (`(3), (2,1), (1,1,1)`).
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with at most `n` boxes, grouped by size.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Self::all_of_size).collect()
    }

    /// Every partition contained in this one (including `∅` and itself).
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(outer: &[usize], row: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if row == outer.len() {
                out.push(Partition::new(cur.clone()).expect("decreasing by construction"));
                return;
            }
            for p in 0..=outer[row].min(max) {
                cur.push(p);
                go(outer, row + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.parts, 0, usize::MAX, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.cmp(a)));
        out
    }

    /// Comma notation used on the command line: `"2,1"`, `""` for empty.
    pub fn to_comma_string(&self) -> String {
        self.parts.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    }
}

/// `true` iff `inner[i] ≤ outer[i]` for every row.
pub fn contains(inner: &Partition, outer: &Partition) -> bool {
    outer.contains(inner)
}

/// Young's lattice edges out of `p` (one-box Pieri rule).
pub fn young_successors(p: &Partition) -> Vec<Partition> {
    p.successors()
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("∅")
        } else {
            write!(f, "({})", self.to_comma_string())
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
