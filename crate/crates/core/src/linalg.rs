//! Exact dense linear algebra over any [`Field`].
//!
//! Everything downstream — cocycle spaces, triviality decisions, condition
//! generators — reduces to row-reducing small dense matrices with exact
//! entries, so this module provides only what those callers need: reduced
//! row echelon form, rank, nullspace bases, and exact linear solves.

use crate::scalars::Field;

/// Dense row-major matrix with exact entries.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<K: Field> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Field> Matrix<K> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![K::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        debug_assert!(rows.iter().all(|row| row.len() == c));
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &K {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: K) {
        self.data[r * self.cols + c] = v;
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self
                .at(row, col)
                .inv()
                .expect("nonzero pivot is invertible");
            for c in col..self.cols {
                let v = self.at(row, c).mul(&inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row || self.at(r, col).is_zero() {
                    continue;
                }
                let f = self.at(r, col).clone();
                for c in col..self.cols {
                    let v = self.at(r, c).sub(&f.mul(self.at(row, c)));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right nullspace, one vector per free column; in each
    /// basis vector the corresponding free variable is 1 and the other free
    /// variables are 0.
    pub fn nullspace(&self) -> Vec<Vec<K>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut vec = vec![K::zero(); self.cols];
            vec[free] = K::one();
            for (r, &p) in pivots.iter().enumerate() {
                vec[p] = m.at(r, free).neg();
            }
            basis.push(vec);
        }
        basis
    }

    /// One exact solution of `self · x = rhs` with all free variables set to
    /// zero, or `None` if the system is inconsistent.
    pub fn solve(&self, rhs: &[K]) -> Option<Vec<K>> {
        debug_assert_eq!(rhs.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.at(r, c).clone());
            }
            aug.set(r, self.cols, rhs[r].clone());
        }
        let pivots = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None; // a pivot in the augmented column: inconsistent
        }
        let mut x = vec![K::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = aug.at(r, self.cols).clone();
        }
        Some(x)
    }
}

/// Express `target` in the span of `gens` coordinate-wise over a shared key
/// set: returns coefficients `c` with `target = Σ c_i · gens_i`, free
/// variables set to zero, or `None` when `target` is outside the span.
///
/// `keys` indexes the coordinates; `extract(item, key)` reads one coordinate.
pub fn decompose_in_span<K: Field, T, Q>(
    target: &T,
    gens: &[T],
    keys: &[Q],
    extract: impl Fn(&T, &Q) -> K,
) -> Option<Vec<K>> {
    let mut m = Matrix::zeros(keys.len(), gens.len());
    let mut rhs = Vec::with_capacity(keys.len());
    for (r, key) in keys.iter().enumerate() {
        for (c, g) in gens.iter().enumerate() {
            m.set(r, c, extract(g, key));
        }
        rhs.push(extract(target, key));
    }
    m.solve(&rhs)
}
