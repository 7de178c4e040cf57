//! Dense exact linear algebra over the ground field.
//!
//! Strata at desk scale stay small (at most a few thousand columns), so plain
//! row reduction with exact division is used for ranks, kernels, solving and
//! quotient-space representatives.

use crate::scalar::{Field, FieldElement};

#[derive(Clone, Debug)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl Matrix {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<FieldElement>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { field, rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// In-place reduced row echelon form; returns the pivot column of each
    /// surviving row, in order.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self.get(row, col).inv();
            self.scale_row(row, &inv);
            for r in 0..self.rows {
                if r != row && !self.get(r, col).is_zero() {
                    let factor = self.get(r, col).clone();
                    self.sub_scaled_row(r, row, &factor);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel (solutions of `A x = 0`), as vectors of
    /// length `cols`, one per free column, in column order.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElement>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![self.field.zero(); self.cols];
            vec[free] = self.field.one();
            for (col, slot) in pivot_set.iter().enumerate() {
                if let Some(r) = slot {
                    vec[col] = m.get(*r, free).neg();
                }
            }
            basis.push(vec);
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &FieldElement) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            if !self.data[idx].is_zero() {
                self.data[idx] = self.data[idx].mul(c);
            }
        }
    }

    fn sub_scaled_row(&mut self, target: usize, source: usize, factor: &FieldElement) {
        for j in 0..self.cols {
            let s = self.data[source * self.cols + j].clone();
            if s.is_zero() {
                continue;
            }
            let idx = target * self.cols + j;
            self.data[idx] = self.data[idx].sub(&s.mul(factor));
        }
    }

    /// Prepare for repeated solves of `A x = b` with this matrix.
    pub fn solver(&self) -> Solver {
        // Row-reduce [A | I] so each b reduces by replaying E = row ops.
        let mut aug = Matrix::zero(self.field, self.rows, self.cols + self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols + i, self.field.one());
        }
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..aug.rows).find(|&r| !aug.get(r, col).is_zero()) else {
                continue;
            };
            aug.swap_rows(row, p);
            let inv = aug.get(row, col).inv();
            aug.scale_row(row, &inv);
            for r in 0..aug.rows {
                if r != row && !aug.get(r, col).is_zero() {
                    let factor = aug.get(r, col).clone();
                    aug.sub_scaled_row(r, row, &factor);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Solver { field: self.field, cols: self.cols, rows: self.rows, aug, pivots }
    }
}

/// Reusable consistent-system solver, sharing one row reduction across many
/// right-hand sides.
pub struct Solver {
    field: Field,
    rows: usize,
    cols: usize,
    aug: Matrix,
    pivots: Vec<usize>,
}

impl Solver {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// A particular solution of `A x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[FieldElement]) -> Option<Vec<FieldElement>> {
        assert_eq!(b.len(), self.rows);
        // c = E b, replayed from the stored row-op record.
        let mut c = vec![self.field.zero(); self.rows];
        for (i, ci) in c.iter_mut().enumerate() {
            for (k, bk) in b.iter().enumerate() {
                if bk.is_zero() {
                    continue;
                }
                let e = self.aug.get(i, self.cols + k);
                if !e.is_zero() {
                    *ci = ci.add(&e.mul(bk));
                }
            }
        }
        // consistency: rows beyond the rank must have zero c entries
        if c.iter().skip(self.pivots.len()).any(|ci| !ci.is_zero()) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &col) in self.pivots.iter().enumerate() {
            x[col] = c[r].clone();
        }
        Some(x)
    }
}

/// Reduce `vec` against a row-reduced spanning set; used to pick canonical
/// quotient-space representatives with zero entries at the pivots.
pub fn reduce_against(vec: &mut [FieldElement], rref_rows: &Matrix, pivots: &[usize]) {
    for (r, &col) in pivots.iter().enumerate() {
        if vec[col].is_zero() {
            continue;
        }
        let factor = vec[col].clone();
        for j in 0..rref_rows.cols() {
            let s = rref_rows.get(r, j);
            if !s.is_zero() {
                vec[j] = vec[j].sub(&s.mul(&factor));
            }
        }
    }
}
