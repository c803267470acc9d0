//! Ram–Leduc seminormal matrices in the standard skew tableaux basis.
//!
//! For a tableau `T` and generator `g_i`, let `b` and `b'` be the boxes of
//! `i` and `i + 1`:
//!
//! * same row: `g_i T = a T`
//! * same column: `g_i T = −a⁻¹ T`
//! * otherwise `T` pairs with `T'` (entries `i`, `i + 1` swapped). With `d` the
//!   axial distance and `T₊` the member of the pair in which `i + 1` sits at
//!   the larger content,
//!
//! ```text
//!   g_i T₊ = a^d/[d] · T₊ + T₋
//!   g_i T₋ = [d−1][d+1]/[d]² · T₊ + a^{−d}/[−d] · T₋
//! ```

use std::collections::HashMap;

use crate::arith::{quantum_int, QMatrix, RationalFunction};
use crate::error::{Error, Result};
use crate::shapes::{axial_distance, enumerate_skew_tableaux, Cell, SkewShape, SkewTableau};

/// Which member of a mixing pair carries the `a^d/[d]` diagonal entry.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum BlockConvention {
    /// The tableau in which `i + 1` has the larger content.
    #[default]
    Standard,
    /// The opposite assignment. Not a representation; kept so the relation
    /// and Morita sweeps can be shown to reject it.
    Swapped,
}

/// The three distinct entries of the 2×2 block for axial distance `d`:
/// `(a^d/[d], [d−1][d+1]/[d]², a^{−d}/[−d])`.
pub fn block_entries(d: usize) -> [RationalFunction; 3] {
    let d = d as i64;
    let qd = RationalFunction::from(quantum_int(d));
    let plus = &RationalFunction::a_pow(d) / &qd;
    let off = &RationalFunction::from(&quantum_int(d - 1) * &quantum_int(d + 1)) / &(&qd * &qd);
    let minus = &RationalFunction::a_pow(-d) / &RationalFunction::from(quantum_int(-d));
    [plus, off, minus]
}

pub(crate) struct MatrixBuilder<'a> {
    basis: &'a [SkewTableau],
    index: HashMap<&'a [Cell], usize>,
    blocks: HashMap<usize, [RationalFunction; 3]>,
    convention: BlockConvention,
}

impl<'a> MatrixBuilder<'a> {
    pub(crate) fn new(basis: &'a [SkewTableau], convention: BlockConvention) -> Self {
        let index = basis.iter().enumerate().map(|(k, t)| (t.cells(), k)).collect();
        Self { basis, index, blocks: HashMap::new(), convention }
    }

    /// Matrix of `g_i`, columns are images of basis vectors.
    pub(crate) fn generator(&mut self, i: usize) -> Result<QMatrix> {
        let dim = self.basis.len();
        let mut cols: Vec<Vec<(usize, RationalFunction)>> = Vec::with_capacity(dim);
        for (t, tab) in self.basis.iter().enumerate() {
            let lo = tab.cell_of(i);
            let hi = tab.cell_of(i + 1);
            if lo.row == hi.row {
                cols.push(vec![(t, RationalFunction::a_pow(1))]);
                continue;
            }
            if lo.col == hi.col {
                cols.push(vec![(t, -RationalFunction::a_pow(-1))]);
                continue;
            }
            let mut swapped = tab.cells().to_vec();
            swapped.swap(i - 1, i);
            let partner = *self.index.get(swapped.as_slice()).ok_or_else(|| {
                Error::InternalError(format!("swapping {i} and {} in {tab:?} leaves the basis", i + 1))
            })?;
            let d = axial_distance(lo, hi);
            let mut plus = hi.content() > lo.content();
            if self.convention == BlockConvention::Swapped {
                plus = !plus;
            }
            let [diag_plus, off, diag_minus] = self.blocks.entry(d).or_insert_with(|| block_entries(d)).clone();
            if plus {
                cols.push(vec![(t, diag_plus), (partner, RationalFunction::one())]);
            } else {
                cols.push(vec![(partner, off), (t, diag_minus)]);
            }
        }
        let mut m = vec![RationalFunction::zero(); dim * dim];
        for (c, col) in cols.into_iter().enumerate() {
            for (r, v) in col {
                m[r * dim + c] = v;
            }
        }
        QMatrix::from_vec(dim, dim, m)
    }
}

/// Matrix of the Hecke generator `g_i` (1-based) on the skew representation
/// of `shape`, in [`enumerate_skew_tableaux`] order.
pub fn seminormal_matrix(shape: &SkewShape, i: usize) -> Result<QMatrix> {
    seminormal_matrix_with(shape, i, BlockConvention::Standard)
}

pub fn seminormal_matrix_with(shape: &SkewShape, i: usize, convention: BlockConvention) -> Result<QMatrix> {
    let n = shape.size();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
    }
    let basis = enumerate_skew_tableaux(shape);
    MatrixBuilder::new(&basis, convention).generator(i)
}
