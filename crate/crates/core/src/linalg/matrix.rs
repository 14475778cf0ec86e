use alloc::vec::Vec;
use alloc::{format, vec};

use super::field::Field;
use crate::error::{Error, Result};

/// Dense row-major matrix. Zero rows or zero columns are legal and still
/// carry the other dimension, which is how boundary maps of complexes keep
/// track of their source and target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Matrix { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<E>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        Ok(Matrix { rows, cols, data })
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[E] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    pub fn column(&self, c: usize) -> Vec<E> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Matrix::from_fn(self.rows, cols.len(), |r, c| self.get(r, cols[c]).clone())
    }

    pub fn select_rows(&self, rows: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), self.cols, |r, c| self.get(rows[r], c).clone())
    }

    /// `[self | other]`.
    pub fn hcat(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::ShapeMismatch(format!("cannot place {} rows beside {} rows", self.rows, other.rows)));
        }
        Ok(Matrix::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        }))
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Copies `block` with its top-left corner at `(r0, c0)`.
    pub fn put_block(&mut self, r0: usize, c0: usize, block: &Self) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }
}

impl<E: Clone + PartialEq + core::fmt::Debug> Matrix<E> {
    pub fn zeros<F: Field<Elem = E>>(f: &F, rows: usize, cols: usize) -> Self {
        Matrix::filled(rows, cols, f.zero())
    }

    pub fn identity<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { f.one() } else { f.zero() })
    }

    /// Builds a matrix from integer rows; every row must have `cols` entries.
    pub fn from_i64_rows<F: Field<Elem = E>>(f: &F, cols: usize, rows: &[&[i64]]) -> Self {
        Matrix::from_fn(rows.len(), cols, |r, c| f.from_i64(rows[r][c]))
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.data.iter().all(|e| f.is_zero(e))
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(f, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if f.is_zero(a) {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if f.is_zero(b) {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, s: &E) -> Self {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|e| f.mul(e, s)).collect() }
    }

    /// Row `target -= factor * row source`, touching only the columns where
    /// the source row is nonzero.
    pub(crate) fn axpy_row<F: Field<Elem = E>>(&mut self, f: &F, target: usize, source: usize, factor: &E) {
        let cols = self.cols;
        for c in 0..cols {
            let s = &self.data[source * cols + c];
            if f.is_zero(s) {
                continue;
            }
            let delta = f.mul(factor, s);
            let t = &mut self.data[target * cols + c];
            *t = f.sub(t, &delta);
        }
    }

    pub(crate) fn scale_row<F: Field<Elem = E>>(&mut self, f: &F, row: usize, factor: &E) {
        let cols = self.cols;
        for c in 0..cols {
            let t = &mut self.data[row * cols + c];
            if !f.is_zero(t) {
                *t = f.mul(t, factor);
            }
        }
    }
}
