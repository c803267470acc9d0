use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::fmt_rational;
use super::RationalFunction;
use crate::error::{Error, Result};

/// Exact field elements the dense linear algebra runs over.
pub trait Scalar: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; callers never pass zero.
    fn inv(&self) -> Self;
}

impl Scalar for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        RationalFunction::inv(self)
    }
}

impl Scalar for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

/// Matrix over ℚ(a).
pub type QMatrix = Matrix<RationalFunction>;
/// Matrix over ℚ, e.g. a specialisation of a [`QMatrix`].
pub type RatMatrix = Matrix<BigRational>;

impl<S: Scalar> Matrix<S> {
    pub fn from_vec(rows: usize, cols: usize, entries: Vec<S>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::PreconditionViolation(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::PreconditionViolation("ragged rows".into()));
        }
        Self::from_vec(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { S::one() } else { S::zero() })
    }

    /// Column vector.
    pub fn column(v: Vec<S>) -> Self {
        let n = v.len();
        Self { rows: n, cols: 1, entries: v }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<S> {
        self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(S::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<T: Scalar>(&self, f: impl FnMut(&S) -> T) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn try_map<T: Scalar>(&self, f: impl FnMut(&S) -> Result<T>) -> Result<Matrix<T>> {
        let entries = self.entries.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in add");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(x, y)| x.add(y)).collect();
        Self { rows: self.rows, cols: self.cols, entries }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in sub");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(x, y)| x.sub(y)).collect();
        Self { rows: self.rows, cols: self.cols, entries }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let y = rhs.get(k, j);
                    if !y.is_zero() {
                        let idx = i * rhs.cols + j;
                        out.entries[idx] = out.entries[idx].add(&x.mul(y));
                    }
                }
            }
        }
        out
    }

    /// `[self | rhs]`
    pub fn hstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.rows, rhs.rows, "row mismatch in hstack");
        Self::from_fn(self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - self.cols).clone()
            }
        })
    }

    /// `self` on top of `rhs`.
    pub fn vstack(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.cols, "column mismatch in vstack");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&rhs.entries);
        Self { rows: self.rows + rhs.rows, cols: self.cols, entries }
    }

    pub fn trace(&self) -> S {
        (0..self.rows.min(self.cols)).fold(S::zero(), |acc, i| acc.add(self.get(i, i)))
    }

    /// Reduced row-echelon form and its pivot columns. Pivots are the first
    /// nonzero entry found scanning rows top-down in each column.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv();
            for j in c..m.cols {
                let idx = r * m.cols + j;
                m.entries[idx] = m.entries[idx].mul(&inv);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let pv = &m.entries[r * m.cols + j];
                    if pv.is_zero() {
                        continue;
                    }
                    let delta = factor.mul(pv);
                    let idx = i * m.cols + j;
                    m.entries[idx] = m.entries[idx].sub(&delta);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel as column vectors; empty when trivial.
    pub fn nullspace(&self) -> Vec<Self> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|free| {
                let mut v = vec![S::zero(); self.cols];
                v[free] = S::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = r.get(row, free).neg();
                }
                Self::column(v)
            })
            .collect()
    }

    /// Some exact `x` with `self · x = b` (free variables set to zero).
    pub fn solve(&self, b: &Self) -> Result<Self> {
        if b.rows != self.rows {
            return Err(Error::PreconditionViolation(format!(
                "right-hand side has {} rows, system has {}",
                b.rows, self.rows
            )));
        }
        let (r, pivots) = self.hstack(b).rref();
        if pivots.last().is_some_and(|&p| p >= self.cols) {
            return Err(Error::NoSolution);
        }
        let mut x = Self::zeros(self.cols, b.cols);
        for (row, &p) in pivots.iter().enumerate() {
            for k in 0..b.cols {
                x.entries[p * b.cols + k] = r.get(row, self.cols + k).clone();
            }
        }
        Ok(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl QMatrix {
    /// Entrywise specialisation `a := x`.
    pub fn eval(&self, x: &BigRational) -> Result<RatMatrix> {
        self.try_map(|f| f.eval(x))
    }
}

/// Right kernel of `m`; see [`Matrix::nullspace`].
pub fn nullspace<S: Scalar>(m: &Matrix<S>) -> Vec<Matrix<S>> {
    m.nullspace()
}

/// Reduced row-echelon form of `m`; see [`Matrix::rref`].
pub fn rref<S: Scalar>(m: &Matrix<S>) -> (Matrix<S>, Vec<usize>) {
    m.rref()
}

/// Solve `a · x = b`; see [`Matrix::solve`].
pub fn solve_linear<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Result<Matrix<S>> {
    a.solve(b)
}

impl<S: fmt::Display> fmt::Display for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(0);
        for i in 0..self.rows {
            f.write_str("[ ")?;
            for j in 0..self.cols {
                write!(f, "{:>width$} ", cells[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<_> = self.entries.chunks(self.cols.max(1)).collect();
        f.debug_struct("Matrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("entries", &rows)
            .finish()
    }
}

fn serialize_rows<T: Serialize, S: Serializer>(
    s: S,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<T>>,
) -> std::result::Result<S::Ok, S::Error> {
    let mut st = s.serialize_struct("Matrix", 3)?;
    st.serialize_field("rows", &rows)?;
    st.serialize_field("cols", &cols)?;
    st.serialize_field("entries", &entries)?;
    st.end()
}

impl<S: Scalar> Matrix<S> {
    fn nested(&self) -> Vec<Vec<&S>> {
        (0..self.rows).map(|i| self.row(i).iter().collect()).collect()
    }
}

impl Serialize for QMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_rows(s, self.rows, self.cols, self.nested())
    }
}

impl Serialize for RatMatrix {
    /// Entries as `"num/den"` strings.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows = (0..self.rows).map(|i| self.row(i).iter().map(fmt_rational).collect()).collect();
        serialize_rows::<String, S>(s, self.rows, self.cols, rows)
    }
}

impl<'de> Deserialize<'de> for QMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            rows: usize,
            cols: usize,
            entries: Vec<Vec<RationalFunction>>,
        }
        let raw = Raw::deserialize(d)?;
        if raw.entries.len() != raw.rows || raw.entries.iter().any(|r| r.len() != raw.cols) {
            return Err(serde::de::Error::custom("entries do not match rows x cols"));
        }
        Ok(Matrix::from_vec(raw.rows, raw.cols, raw.entries.into_iter().flatten().collect()).unwrap())
    }
}
