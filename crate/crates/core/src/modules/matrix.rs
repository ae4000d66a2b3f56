//! Matrices of polynomials: presentation matrices and their minors.

use crate::algebra::{Poly, PolyRing};
use crate::error::Result;
use crate::groebner::{poly_normal_form, Budget};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

/// A rows x cols matrix over a polynomial ring, stored row-major. Columns are
/// the relation vectors when the matrix presents a module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    ring: Arc<PolyRing>,
    rows: usize,
    cols: usize,
    data: Vec<Poly>,
}

impl Matrix {
    pub fn new(ring: &Arc<PolyRing>, rows: usize, cols: usize, data: Vec<Poly>) -> Matrix {
        assert_eq!(data.len(), rows * cols, "matrix shape mismatch");
        Matrix {
            ring: ring.clone(),
            rows,
            cols,
            data,
        }
    }

    pub fn zero(ring: &Arc<PolyRing>, rows: usize, cols: usize) -> Matrix {
        Matrix::new(ring, rows, cols, vec![Poly::zero(ring); rows * cols])
    }

    pub fn identity(ring: &Arc<PolyRing>, n: usize) -> Matrix {
        let mut m = Matrix::zero(ring, n, n);
        for i in 0..n {
            *m.entry_mut(i, i) = Poly::one(ring);
        }
        m
    }

    pub fn from_cols(ring: &Arc<PolyRing>, rows: usize, cols: Vec<Vec<Poly>>) -> Matrix {
        let ncols = cols.len();
        let mut data = vec![Poly::zero(ring); rows * ncols];
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, p) in col.iter().enumerate() {
                data[i * ncols + j] = p.clone();
            }
        }
        Matrix::new(ring, rows, ncols, data)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.data[i * self.cols + j]
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut Poly {
        &mut self.data[i * self.cols + j]
    }

    pub fn col(&self, j: usize) -> Vec<Poly> {
        (0..self.rows).map(|i| self.entry(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<Poly> {
        (0..self.cols).map(|j| self.entry(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Poly>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.entry(i, j).clone());
            }
        }
        Matrix::new(&self.ring, self.cols, self.rows, data)
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "row count mismatch");
        let mut cols = self.columns();
        cols.extend(other.columns());
        Matrix::from_cols(&self.ring, self.rows, cols)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|p| p.is_zero())
    }

    pub fn delete_row(&self, i: usize) -> Matrix {
        let mut data = Vec::with_capacity((self.rows - 1) * self.cols);
        for r in 0..self.rows {
            if r == i {
                continue;
            }
            data.extend(self.row(r));
        }
        Matrix::new(&self.ring, self.rows - 1, self.cols, data)
    }

    pub fn delete_col(&self, j: usize) -> Matrix {
        let cols: Vec<Vec<Poly>> = (0..self.cols)
            .filter(|&c| c != j)
            .map(|c| self.col(c))
            .collect();
        Matrix::from_cols(&self.ring, self.rows, cols)
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Matrix::zero(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Poly::zero(&self.ring);
                for k in 0..self.cols {
                    acc = acc.add(&self.entry(i, k).mul(other.entry(k, j)));
                }
                *out.entry_mut(i, j) = acc;
            }
        }
        out
    }

    /// Reduces every entry to normal form against the given basis.
    pub fn reduce_entries(&self, gb: &[Poly], budget: &mut Budget) -> Result<Matrix> {
        if gb.is_empty() {
            return Ok(self.clone());
        }
        let mut data = Vec::with_capacity(self.data.len());
        for p in &self.data {
            data.push(poly_normal_form(p, gb, &self.ring, self.ring.order(), budget)?);
        }
        Ok(Matrix::new(&self.ring, self.rows, self.cols, data))
    }

    /// All `size x size` minors; the unit for size 0, empty when the shape
    /// cannot host a minor of that size.
    pub fn minors(&self, size: usize) -> Vec<Poly> {
        if size == 0 {
            return vec![Poly::one(&self.ring)];
        }
        if size > self.rows || size > self.cols {
            return Vec::new();
        }
        let row_sets = combinations(self.rows, size);
        let col_sets = combinations(self.cols, size);
        let mut out = Vec::new();
        for rs in &row_sets {
            for cs in &col_sets {
                out.push(self.det_of(rs, cs));
            }
        }
        out
    }

    fn det_of(&self, rows: &[usize], cols: &[usize]) -> Poly {
        if rows.len() == 1 {
            return self.entry(rows[0], cols[0]).clone();
        }
        let mut acc = Poly::zero(&self.ring);
        let sub_rows = &rows[1..];
        for (k, &c) in cols.iter().enumerate() {
            let e = self.entry(rows[0], c);
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != k)
                .map(|(_, &cc)| cc)
                .collect();
            let sub = self.det_of(sub_rows, &rest);
            let signed = if k % 2 == 0 { e.mul(&sub) } else { e.mul(&sub).neg() };
            acc = acc.add(&signed);
        }
        acc
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
