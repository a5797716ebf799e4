//! Dense matrices over GF(q).
//!
//! Row reduction picks as pivot the first nonzero entry scanning columns left
//! to right and, within a column, rows top to bottom. Over GF(2) rows are
//! packed into machine words and eliminated with XOR; the result is the same
//! reduced row echelon form either way.

use std::fmt;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// Reduced row echelon form with rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_flat(field: &Field, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(&bad) = data.iter().find(|&&x| x as u32 >= field.q()) {
            return Err(Error::ElementOutOfRange { value: bad as u32, q: field.q() });
        }
        Ok(Matrix { field: field.clone(), rows, cols, data })
    }

    /// Builds a matrix from row slices of integer codes.
    pub fn from_rows<R: AsRef<[u32]>>(field: &Field, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row of length {} in a matrix with {cols} columns",
                    r.len()
                )));
            }
            for &x in r {
                data.push(field.check(x)?);
            }
        }
        Ok(Matrix { field: field.clone(), rows: rows.len(), cols, data })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: &Field, height: usize, columns: &[Vec<Elem>]) -> Result<Self> {
        let mut m = Self::zeros(field, height, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != height {
                return Err(Error::DimensionMismatch(format!(
                    "column of length {} in a matrix with {height} rows",
                    c.len()
                )));
            }
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, field.check(x as u32)?);
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn field(&self) -> &Field {
        &self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [Elem] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn data(&self) -> &[Elem] {
        &self.data
    }

    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(t, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Elem]) -> Vec<Elem> {
        debug_assert_eq!(v.len(), self.rows);
        let f = &self.field;
        let mut out = vec![0; self.cols];
        for (i, &c) in v.iter().enumerate() {
            if c != 0 {
                axpy(f, &mut out, c, self.row(i));
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        Matrix { field: self.field.clone(), rows: idx.len(), cols: self.cols, data }
    }

    /// Column-selected copy; indices must be strictly increasing and in range.
    pub fn submatrix_columns(&self, idx: &[usize]) -> Result<Matrix> {
        if let Some(&bad) = idx.iter().find(|&&j| j >= self.cols) {
            return Err(Error::IndexOutOfRange { index: bad, len: self.cols });
        }
        if idx.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::IndicesNotIncreasing);
        }
        Ok(self.columns_unchecked(idx))
    }

    pub(crate) fn columns_unchecked(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.rows, idx.len());
        for r in 0..self.rows {
            let src = self.row(r);
            let dst = out.row_mut(r);
            for (d, &j) in dst.iter_mut().zip(idx) {
                *d = src[j];
            }
        }
        out
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot concatenate {} rows with {} rows",
                self.rows, other.rows
            )));
        }
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend_from_slice(other.row(r));
        }
        Ok(Matrix { field: self.field.clone(), rows: self.rows, cols, data })
    }

    pub fn rref(&self) -> Rref {
        if self.field.q() == 2 {
            self.rref_gf2()
        } else {
            self.rref_generic()
        }
    }

    fn rref_generic(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv_nz(m.get(r, c));
            if inv != 1 {
                for x in m.row_mut(r) {
                    *x = f.mul(*x, inv);
                }
            }
            let pivot_row = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor != 0 {
                    axpy(f, m.row_mut(i), f.neg(factor), &pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { rank: pivots.len(), pivots, matrix: m }
    }

    fn rref_gf2(&self) -> Rref {
        let mut rows: Vec<Bits> = (0..self.rows)
            .map(|r| Bits::from_indices(self.cols, self.row(r).iter().enumerate().filter(|(_, &x)| x != 0).map(|(j, _)| j)))
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(pr) = (r..rows.len()).find(|&i| rows[i].get(c)) else {
                continue;
            };
            rows.swap(r, pr);
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.get(c) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        let mut m = Matrix::zeros(&self.field, self.rows, self.cols);
        for (i, row) in rows.iter().enumerate() {
            for j in row.ones() {
                m.set(i, j, 1);
            }
        }
        Rref { rank: pivots.len(), pivots, matrix: m }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis (as rows) of `{x : M xᵀ = 0}`, one row per non-pivot column in
    /// increasing column order.
    pub fn nullspace(&self) -> Matrix {
        let f = &self.field;
        let Rref { matrix: r, pivots, rank } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(f, free.len(), self.cols);
        for (bi, &fc) in free.iter().enumerate() {
            out.set(bi, fc, 1);
            for (i, &pc) in pivots.iter().enumerate().take(rank) {
                out.set(bi, pc, f.neg(r.get(i, fc)));
            }
        }
        out
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// `dst += c * src`.
#[inline]
pub(crate) fn axpy(f: &Field, dst: &mut [Elem], c: Elem, src: &[Elem]) {
    if f.is_prime_field() {
        let p = f.p();
        let c = c as u32;
        for (d, &s) in dst.iter_mut().zip(src) {
            *d = ((*d as u32 + c * s as u32) % p) as Elem;
        }
    } else {
        for (d, &s) in dst.iter_mut().zip(src) {
            *d = f.add(*d, f.mul(c, s));
        }
    }
}

/// Incrementally built echelon basis; reports whether each inserted vector
/// was independent of the ones before it.
pub(crate) struct EchelonBasis {
    field: Field,
    rows: Vec<Vec<Elem>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(field: &Field) -> Self {
        EchelonBasis { field: field.clone(), rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, v: &[Elem]) -> bool {
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                axpy(f, &mut v, f.neg(c), row);
            }
        }
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv_nz(v[p]);
        if inv != 1 {
            for x in v.iter_mut() {
                *x = f.mul(*x, inv);
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }
}

/// GF(2) counterpart of [`EchelonBasis`] on packed words.
pub(crate) struct BitEchelon {
    rows: Vec<Vec<u64>>,
    pivots: Vec<(usize, u64)>,
}

impl BitEchelon {
    pub fn new() -> Self {
        BitEchelon { rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn insert(&mut self, v: &[u64]) -> bool {
        let mut v = v.to_vec();
        for (row, &(w, mask)) in self.rows.iter().zip(&self.pivots) {
            if v[w] & mask != 0 {
                for (a, b) in v.iter_mut().zip(row) {
                    *a ^= b;
                }
            }
        }
        let Some(w) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let mask = v[w] & v[w].wrapping_neg();
        self.rows.push(v);
        self.pivots.push((w, mask));
        true
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:?} {}x{}", self.field, self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", line.join(" "))?;
        }
        Ok(())
    }
}
