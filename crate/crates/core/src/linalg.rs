//! Dense exact-rational vectors, matrices and rank-3 tensors.
//!
//! Everything is immutable after construction and dimensions are
//! desk-scale (n <= 64), so dense row-major storage and plain rational
//! Gaussian elimination are the right tools.

use crate::scalar::{self, Scalar};
use crate::{Error, Result};
use num::Zero;

pub type Vector = Vec<Scalar>;

pub fn zero_vec(n: usize) -> Vector {
    vec![scalar::zero(); n]
}

pub fn vec_add(u: &[Scalar], v: &[Scalar]) -> Vector {
    assert_eq!(u.len(), v.len());
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

pub fn vec_sub(u: &[Scalar], v: &[Scalar]) -> Vector {
    assert_eq!(u.len(), v.len());
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn vec_scale(c: &Scalar, u: &[Scalar]) -> Vector {
    u.iter().map(|a| c * a).collect()
}

/// `out += c * v`, skipping zero work.
pub fn vec_axpy(out: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    assert_eq!(out.len(), v.len());
    if c.is_zero() {
        return;
    }
    for (o, x) in out.iter_mut().zip(v) {
        if !x.is_zero() {
            *o += c * x;
        }
    }
}

pub fn vec_is_zero(u: &[Scalar]) -> bool {
    u.iter().all(|a| a.is_zero())
}

/// Standard basis vector `e_i` of length `n`.
pub fn basis_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = scalar::one();
    v
}

/// Dense row-major matrix over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix { rows, cols, entries }
    }

    /// Build from integer rows; panics on ragged input.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        Matrix::from_fn(r, c, |i, j| {
            assert_eq!(rows[i].len(), c, "ragged matrix rows");
            scalar::int(rows[i][j])
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.entries[r * self.cols + c]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Column `c` as a vector.
    pub fn col(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| c * e).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    *out.at_mut(r, c) += a * b;
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[Scalar]) -> Vector {
        assert_eq!(self.cols, v.len(), "matvec shape mismatch");
        let mut out = zero_vec(self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.at(r, c);
                if a.is_zero() || v[c].is_zero() {
                    continue;
                }
                out[r] += a * &v[c];
            }
        }
        out
    }

    /// Exact rank via rational Gaussian elimination.
    pub fn rank(&self) -> usize {
        let (rank, _) = self.clone().row_echelon();
        rank
    }

    /// Exact inverse; errors when not square or singular.
    pub fn invert(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::DimMismatch("invert requires a square matrix".into()));
        }
        let n = self.rows;
        // Gauss-Jordan on [self | I].
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                *aug.at_mut(r, c) = self.at(r, c).clone();
            }
            *aug.at_mut(r, n + r) = scalar::one();
        }
        let mut row = 0;
        for col in 0..n {
            let pivot = (row..n).find(|&r| !aug.at(r, col).is_zero());
            let Some(p) = pivot else {
                return Err(Error::Singular);
            };
            aug.swap_rows(row, p);
            let inv = aug.at(row, col).recip();
            for c in 0..2 * n {
                let v = aug.at(row, c) * &inv;
                *aug.at_mut(row, c) = v;
            }
            for r in 0..n {
                if r == row || aug.at(r, col).is_zero() {
                    continue;
                }
                let factor = aug.at(r, col).clone();
                for c in 0..2 * n {
                    let v = aug.at(r, c) - &factor * aug.at(row, c);
                    *aug.at_mut(r, c) = v;
                }
            }
            row += 1;
        }
        Ok(Matrix::from_fn(n, n, |r, c| aug.at(r, n + c).clone()))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Basis of the right null space, as column vectors.
    pub fn nullspace(&self) -> Vec<Vector> {
        let (rank, echelon) = self.clone().row_echelon();
        let mut pivot_cols = Vec::with_capacity(rank);
        let mut col = 0;
        for r in 0..rank {
            while col < self.cols && echelon.at(r, col).is_zero() {
                col += 1;
            }
            pivot_cols.push(col);
        }
        let free_cols: Vec<usize> = (0..self.cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut basis = Vec::with_capacity(free_cols.len());
        for &free in &free_cols {
            let mut v = zero_vec(self.cols);
            v[free] = scalar::one();
            // Back-substitute: echelon is fully reduced, so each pivot row
            // reads pivot_var + sum(free coefficients) = 0.
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -echelon.at(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form; returns (rank, rref).
    fn row_echelon(mut self) -> (usize, Matrix) {
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self.at(row, col).recip();
            for c in 0..self.cols {
                let v = self.at(row, c) * &inv;
                *self.at_mut(row, c) = v;
            }
            for r in 0..self.rows {
                if r == row || self.at(r, col).is_zero() {
                    continue;
                }
                let factor = self.at(r, col).clone();
                for c in 0..self.cols {
                    let v = self.at(r, c) - &factor * self.at(row, c);
                    *self.at_mut(r, c) = v;
                }
            }
            row += 1;
        }
        (row, self)
    }
}

/// Dense rank-3 tensor `t[i][j][k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3 {
    d0: usize,
    d1: usize,
    d2: usize,
    entries: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(d0: usize, d1: usize, d2: usize) -> Self {
        Tensor3 {
            d0,
            d1,
            d2,
            entries: vec![scalar::zero(); d0 * d1 * d2],
        }
    }

    pub fn from_fn(d0: usize, d1: usize, d2: usize, mut f: impl FnMut(usize, usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(d0 * d1 * d2);
        for i in 0..d0 {
            for j in 0..d1 {
                for k in 0..d2 {
                    entries.push(f(i, j, k));
                }
            }
        }
        Tensor3 { d0, d1, d2, entries }
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        (self.d0, self.d1, self.d2)
    }

    pub fn at(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.entries[(i * self.d1 + j) * self.d2 + k]
    }

    pub fn at_mut(&mut self, i: usize, j: usize, k: usize) -> &mut Scalar {
        &mut self.entries[(i * self.d1 + j) * self.d2 + k]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn add(&self, other: &Tensor3) -> Tensor3 {
        assert_eq!(self.dims(), other.dims());
        Tensor3 {
            d0: self.d0,
            d1: self.d1,
            d2: self.d2,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Tensor3) -> Tensor3 {
        assert_eq!(self.dims(), other.dims());
        Tensor3 {
            d0: self.d0,
            d1: self.d1,
            d2: self.d2,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Tensor3 {
        Tensor3 {
            d0: self.d0,
            d1: self.d1,
            d2: self.d2,
            entries: self.entries.iter().map(|e| c * e).collect(),
        }
    }

    /// The fibre `t[i][j][.]` as a slice.
    pub fn fibre(&self, i: usize, j: usize) -> &[Scalar] {
        let base = (i * self.d1 + j) * self.d2;
        &self.entries[base..base + self.d2]
    }

    /// `result_k = sum_{i,j} u_i v_j t[i][j][k]`.
    pub fn contract(&self, u: &[Scalar], v: &[Scalar]) -> Result<Vector> {
        if u.len() != self.d0 || v.len() != self.d1 {
            return Err(Error::DimMismatch(format!(
                "contract: tensor {}x{}x{} with vectors {} and {}",
                self.d0,
                self.d1,
                self.d2,
                u.len(),
                v.len()
            )));
        }
        let mut out = zero_vec(self.d2);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let uv = ui * vj;
                for (k, o) in out.iter_mut().enumerate() {
                    let t = self.at(i, j, k);
                    if !t.is_zero() {
                        *o += &uv * t;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Contract a vector against the first leg only: `(u . t)[j][k]`.
    pub fn contract_left(&self, u: &[Scalar]) -> Matrix {
        assert_eq!(u.len(), self.d0);
        let mut out = Matrix::zeros(self.d1, self.d2);
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for j in 0..self.d1 {
                for k in 0..self.d2 {
                    let t = self.at(i, j, k);
                    if !t.is_zero() {
                        *out.at_mut(j, k) += ui * t;
                    }
                }
            }
        }
        out
    }
}
