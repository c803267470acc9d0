//! Artin–Wedderburn bookkeeping for `H_n`: the irreducible seminormal
//! representations `V_λ, λ ⊢ n` should have `Σ (f^λ)² = n!` and the images
//! of the basis `{T_w}` should be linearly independent, so that
//! `H_n ≅ ⊕_λ End(V_λ)` and every matrix unit lifts back into `H_n`.

use std::fmt;

use itertools::Itertools;
use num_rational::BigRational;
use serde::Serialize;

use super::{build_representation, HeckeWord, SkewRepresentation};
use crate::arith::{Matrix, QMatrix, RationalFunction, Scalar};
use crate::error::{Error, Result};
use crate::shapes::{Partition, SkewShape};

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &v in &one_line {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::InvalidPermutation(format!("{one_line:?}")));
            }
        }
        Ok(Self(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    /// All permutations of `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        (1..=n).permutations(n).map(Permutation).collect()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn inversions(&self) -> usize {
        self.0.iter().tuple_combinations().filter(|(a, b)| a > b).count()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(" "))
    }
}

/// Reduced word for `perm` by bubble sort: repeatedly undo the leftmost
/// descent. The word has length equal to the inversion count.
pub fn reduced_word(perm: &Permutation) -> HeckeWord {
    let mut w = perm.0.clone();
    let mut undo = Vec::new();
    while let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
        w.swap(i, i + 1);
        undo.push(i + 1);
    }
    undo.reverse();
    HeckeWord(undo)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WedderburnReport {
    pub n: usize,
    pub shapes: Vec<Partition>,
    pub dims: Vec<usize>,
    pub sum_of_squares: u64,
    pub factorial: u64,
    /// Rank of the `n! × Σ(f^λ)²` matrix of word images.
    pub rank: usize,
    pub faithful: bool,
    /// `true` when the rank was computed over ℚ(a) rather than certified at a
    /// rational specialisation.
    pub symbolic_rank: bool,
}

/// Specialisation used to pre-screen the faithfulness rank.
pub fn prescreen_point() -> BigRational {
    BigRational::new(7.into(), 3.into())
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn straight_reps(n: usize) -> Result<Vec<SkewRepresentation>> {
    Partition::all_of_size(n).into_iter().map(|l| build_representation(&SkewShape::straight(l))).collect()
}

/// Rows are words (lexicographic permutation order), columns are the
/// concatenated entries of every block.
fn word_images<S: Scalar>(gens: &[Vec<Matrix<S>>], dims: &[usize], words: &[HeckeWord]) -> Matrix<S> {
    let width: usize = dims.iter().map(|d| d * d).sum();
    let mut rows = Vec::with_capacity(words.len() * width);
    for w in words {
        for (block, &d) in gens.iter().zip(dims) {
            let img = w.letters().iter().fold(Matrix::<S>::identity(d), |acc, &i| acc.mul(&block[i - 1]));
            rows.extend(img.into_entries());
        }
    }
    Matrix::from_vec(words.len(), width, rows).expect("row width")
}

/// Dimension count and faithfulness check for `H_n`.
///
/// The rank is first computed at `a = 7/3`. A full rank there is an exact
/// certificate of full generic rank (specialisation cannot raise rank); only
/// otherwise is the rank recomputed over ℚ(a).
pub fn wedderburn_check(n: usize) -> Result<WedderburnReport> {
    wedderburn_check_with(n, false)
}

/// Like [`wedderburn_check`] but always computes the rank over ℚ(a).
pub fn wedderburn_check_symbolic(n: usize) -> Result<WedderburnReport> {
    wedderburn_check_with(n, true)
}

fn wedderburn_check_with(n: usize, symbolic: bool) -> Result<WedderburnReport> {
    if n == 0 {
        return Err(Error::PreconditionViolation("wedderburn_check needs n >= 1".into()));
    }
    let reps = straight_reps(n)?;
    let shapes: Vec<_> = reps.iter().map(|r| r.shape().outer().clone()).collect();
    let dims: Vec<_> = reps.iter().map(SkewRepresentation::dimension).collect();
    let sum_of_squares = dims.iter().map(|&d| (d * d) as u64).sum();
    let words: Vec<_> = Permutation::all(n).iter().map(reduced_word).collect();
    let full = words.len();

    let mut rank = 0;
    let mut used_symbolic = symbolic;
    if !symbolic {
        let x = prescreen_point();
        let gens = reps
            .iter()
            .map(|r| r.generators().iter().map(|m| m.eval(&x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        rank = word_images(&gens, &dims, &words).rank();
        used_symbolic = rank < full;
    }
    if used_symbolic {
        let gens: Vec<Vec<QMatrix>> = reps.iter().map(|r| r.generators().to_vec()).collect();
        rank = word_images(&gens, &dims, &words).rank();
    }
    Ok(WedderburnReport {
        n,
        shapes,
        dims,
        sum_of_squares,
        factorial: factorial(n),
        rank,
        faithful: rank == full,
        symbolic_rank: used_symbolic,
    })
}

/// Coefficients `c_w` with `Σ_w c_w ρ(T_w) = E_{row,col}` in the block of
/// `shape` and zero in every other block.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MatrixUnitLift {
    pub n: usize,
    pub shape: Partition,
    pub row: usize,
    pub col: usize,
    pub terms: Vec<LiftTerm>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LiftTerm {
    pub word: HeckeWord,
    pub coefficient: RationalFunction,
}

/// Largest `n` accepted by [`matrix_unit_lift`].
pub const MAX_LIFT_SIZE: usize = 4;

/// Expresses the matrix unit `E_{row,col}` (0-based) of the `shape` block as
/// a combination of `{T_w : w ∈ S_n}` and verifies it by multiplying back.
pub fn matrix_unit_lift(n: usize, shape: &Partition, row: usize, col: usize) -> Result<MatrixUnitLift> {
    if n == 0 || n > MAX_LIFT_SIZE {
        return Err(Error::PreconditionViolation(format!("matrix_unit_lift needs 1 <= n <= {MAX_LIFT_SIZE}")));
    }
    if shape.size() != n {
        return Err(Error::PreconditionViolation(format!("{shape} is not a partition of {n}")));
    }
    let reps = straight_reps(n)?;
    let target_block = reps
        .iter()
        .position(|r| r.shape().outer() == shape)
        .ok_or_else(|| Error::InternalError(format!("no block for {shape}")))?;
    let f = reps[target_block].dimension();
    if row >= f || col >= f {
        return Err(Error::IndexOutOfRange { index: row.max(col) + 1, max: f });
    }

    let dims: Vec<_> = reps.iter().map(SkewRepresentation::dimension).collect();
    let gens: Vec<Vec<QMatrix>> = reps.iter().map(|r| r.generators().to_vec()).collect();
    let words: Vec<_> = Permutation::all(n).iter().map(reduced_word).collect();
    let images = word_images(&gens, &dims, &words);

    let offset: usize = dims[..target_block].iter().map(|d| d * d).sum();
    let mut target = vec![RationalFunction::zero(); images.cols()];
    target[offset + row * f + col] = RationalFunction::one();
    let target = QMatrix::column(target);

    let coeffs = images.transpose().solve(&target).map_err(|e| match e {
        Error::NoSolution => Error::InternalError(format!("E_{row},{col} of {shape} is not in the image of H_{n}")),
        other => other,
    })?;
    if images.transpose().mul(&coeffs) != target {
        return Err(Error::InternalError("matrix unit lift failed re-multiplication".into()));
    }

    // re-multiply block by block from the generator matrices
    for (k, (rep, &d)) in reps.iter().zip(&dims).enumerate() {
        let mut acc = QMatrix::zeros(d, d);
        for (w, c) in words.iter().zip(coeffs.entries()) {
            if !c.is_zero() {
                acc = acc.add(&rep.act_word(w)?.scale(c));
            }
        }
        let expected = if k == target_block {
            QMatrix::from_fn(d, d, |i, j| {
                if (i, j) == (row, col) {
                    RationalFunction::one()
                } else {
                    RationalFunction::zero()
                }
            })
        } else {
            QMatrix::zeros(d, d)
        };
        if acc != expected {
            return Err(Error::InternalError(format!("lift reproduces the wrong matrix in block {}", rep.shape())));
        }
    }

    let terms = words
        .into_iter()
        .zip(coeffs.into_entries())
        .filter(|(_, c)| !c.is_zero())
        .map(|(word, coefficient)| LiftTerm { word, coefficient })
        .collect();
    Ok(MatrixUnitLift { n, shape: shape.clone(), row, col, terms })
}
