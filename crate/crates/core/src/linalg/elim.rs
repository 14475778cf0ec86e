//! Gaussian elimination and the cohomology of short complex slices.
//!
//! Pivots are always the first nonzero entry of the current column at or
//! below the current row, scanning columns left to right. Every basis the
//! crate produces (kernels, cohomology representatives, induced maps) is a
//! deterministic function of the input matrices.

use alloc::vec::Vec;
use alloc::{format, vec};

use num_integer::Integer;

use super::field::Field;
use super::matrix::Matrix;
use super::rational::Rat;
use crate::error::{Error, Result};

pub fn rank<F: Field>(f: &F, m: &Matrix<F::Elem>) -> usize {
    f.rank(m)
}

pub(crate) fn gauss_rank<F: Field>(f: &F, m: &Matrix<F::Elem>) -> usize {
    let mut a = m.clone();
    let mut r = 0;
    for c in 0..a.cols() {
        if r == a.rows() {
            break;
        }
        let Some(p) = (r..a.rows()).find(|&i| !f.is_zero(a.get(i, c))) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = f.inv(a.get(r, c));
        for i in r + 1..a.rows() {
            if f.is_zero(a.get(i, c)) {
                continue;
            }
            let factor = f.mul(a.get(i, c), &inv);
            a.axpy_row(f, i, r, &factor);
        }
        r += 1;
    }
    r
}

/// Rank over `Q` by fraction-free (Bareiss) elimination after clearing the
/// denominators of each row.
pub(crate) fn bareiss_rank(m: &Matrix<Rat>) -> usize {
    let (rows, cols) = m.shape();
    let mut a: Vec<Vec<Rat>> = (0..rows)
        .map(|r| {
            let row = m.row(r);
            if row.iter().all(Rat::is_integer) {
                return row.to_vec();
            }
            let lcm = row.iter().fold(num_bigint::BigInt::from(1), |acc, e| acc.lcm(&e.denominator()));
            let scale = Rat::from_bigint(lcm);
            row.iter().map(|e| e.mul(&scale)).collect()
        })
        .collect();
    let mut prev = Rat::ONE;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let pivot = a[r][c].clone();
        for i in r + 1..rows {
            let lead = a[i][c].clone();
            for j in c + 1..cols {
                let v = pivot.mul(&a[i][j]).sub(&lead.mul(&a[r][j]));
                a[i][j] = if prev.is_one() { v } else { v.div(&prev) };
            }
            a[i][c] = Rat::ZERO;
        }
        prev = pivot;
        r += 1;
    }
    r
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref<E> {
    pub matrix: Matrix<E>,
    pub pivots: Vec<usize>,
}

pub fn rref<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Rref<F::Elem> {
    let mut a = m.clone();
    let pivots = reduce(f, &mut a, m.cols());
    Rref { matrix: a, pivots }
}

/// Gauss-Jordan in place; pivots are searched only in the first
/// `pivot_cols` columns, row operations act on all of them.
fn reduce<F: Field>(f: &F, a: &mut Matrix<F::Elem>, pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == a.rows() {
            break;
        }
        let Some(p) = (r..a.rows()).find(|&i| !f.is_zero(a.get(i, c))) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = f.inv(a.get(r, c));
        a.scale_row(f, r, &inv);
        for i in 0..a.rows() {
            if i == r || f.is_zero(a.get(i, c)) {
                continue;
            }
            let factor = a.get(i, c).clone();
            a.axpy_row(f, i, r, &factor);
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Columns form a basis of the null space of `m`, one per free column of
/// the echelon form, in increasing order of that column.
pub fn kernel_basis<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let Rref { matrix, pivots } = rref(f, m);
    let n = m.cols();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
    let mut basis = Matrix::zeros(f, n, free.len());
    for (k, &fc) in free.iter().enumerate() {
        basis.set(fc, k, f.one());
        for (r, &pc) in pivots.iter().enumerate() {
            let v = matrix.get(r, fc);
            if !f.is_zero(v) {
                basis.set(pc, k, f.neg(v));
            }
        }
    }
    basis
}

fn check_composable<E: Clone>(d_in: &Matrix<E>, d_out: &Matrix<E>) -> Result<()> {
    if d_in.rows() != d_out.cols() {
        return Err(Error::ShapeMismatch(format!(
            "incoming map lands in dimension {} but outgoing map starts from dimension {}",
            d_in.rows(),
            d_out.cols()
        )));
    }
    Ok(())
}

/// `dim ker(d_out) - rank(d_in)` for `V_prev --d_in--> V --d_out--> V_next`.
pub fn cohomology_dim<F: Field>(f: &F, d_in: &Matrix<F::Elem>, d_out: &Matrix<F::Elem>) -> Result<usize> {
    check_composable(d_in, d_out)?;
    if !d_out.mul(f, d_in)?.is_zero(f) {
        return Err(Error::NotAComplex);
    }
    Ok(unchecked_cohomology_dim(f, d_in, d_out))
}

pub(crate) fn unchecked_cohomology_dim<F: Field>(f: &F, d_in: &Matrix<F::Elem>, d_out: &Matrix<F::Elem>) -> usize {
    let mid = d_out.cols();
    if mid == 0 {
        return 0;
    }
    mid - f.rank(d_out) - f.rank(d_in)
}

/// The middle of a complex: `V_prev --d_in--> V --d_out--> V_next`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexSlice<E> {
    pub d_in: Matrix<E>,
    pub d_out: Matrix<E>,
}

/// A chain map between two slices, one matrix per term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMapSlice<E> {
    pub prev: Matrix<E>,
    pub mid: Matrix<E>,
    pub next: Matrix<E>,
}

/// Cohomology of a slice with chosen representatives.
///
/// `reps` holds one cocycle per basis class (columns). `coords` maps any
/// cocycle to its coordinates in that basis: `coords * z` for `z` in
/// `ker d_out`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyBasis<E> {
    pub reps: Matrix<E>,
    pub coords: Matrix<E>,
}

impl<E: Clone + PartialEq + core::fmt::Debug> CohomologyBasis<E> {
    pub fn new<F: Field<Elem = E>>(f: &F, slice: &ComplexSlice<E>) -> Result<Self> {
        check_composable(&slice.d_in, &slice.d_out)?;
        if !slice.d_out.mul(f, &slice.d_in)?.is_zero(f) {
            return Err(Error::NotAComplex);
        }
        Ok(Self::compute(f, &slice.d_in, &slice.d_out))
    }

    /// Representatives are the kernel vectors that become pivots when the
    /// image columns are eliminated first.
    pub(crate) fn compute<F: Field<Elem = E>>(f: &F, d_in: &Matrix<E>, d_out: &Matrix<E>) -> Self {
        let mid = d_out.cols();
        let kernel = kernel_basis(f, d_out);
        let img_cols = d_in.cols();
        let span_cols = img_cols + kernel.cols();
        // [d_in | kernel | I]; the identity block records the row operations.
        let mut aug = Matrix::zeros(f, mid, span_cols + mid);
        aug.put_block(0, 0, d_in);
        aug.put_block(0, img_cols, &kernel);
        for r in 0..mid {
            aug.set(r, span_cols + r, f.one());
        }
        let pivots = reduce(f, &mut aug, span_cols);
        let mut rep_cols = Vec::new();
        let mut coord_rows = Vec::new();
        for (row, &p) in pivots.iter().enumerate() {
            if p >= img_cols {
                rep_cols.push(p - img_cols);
                coord_rows.push(row);
            }
        }
        let reps = kernel.select_columns(&rep_cols);
        let coords = Matrix::from_fn(coord_rows.len(), mid, |r, c| aug.get(coord_rows[r], span_cols + c).clone());
        CohomologyBasis { reps, coords }
    }

    pub fn dim(&self) -> usize {
        self.reps.cols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.reps.rows()
    }

    /// Coordinates of the cocycles in the columns of `z`.
    pub fn coordinates<F: Field<Elem = E>>(&self, f: &F, z: &Matrix<E>) -> Result<Matrix<E>> {
        self.coords.mul(f, z)
    }
}

/// The map induced on cohomology, in the bases of [`CohomologyBasis`].
pub fn induced_cohomology_map<F: Field>(
    f: &F,
    source: &ComplexSlice<F::Elem>,
    target: &ComplexSlice<F::Elem>,
    map: &ChainMapSlice<F::Elem>,
) -> Result<Matrix<F::Elem>> {
    let left = map.mid.mul(f, &source.d_in)?;
    let right = target.d_in.mul(f, &map.prev)?;
    if left != right {
        return Err(Error::NotAChainMap);
    }
    let left = target.d_out.mul(f, &map.mid)?;
    let right = map.next.mul(f, &source.d_out)?;
    if left != right {
        return Err(Error::NotAChainMap);
    }
    let src = CohomologyBasis::new(f, source)?;
    let tgt = CohomologyBasis::new(f, target)?;
    let images = map.mid.mul(f, &src.reps)?;
    tgt.coordinates(f, &images)
}
