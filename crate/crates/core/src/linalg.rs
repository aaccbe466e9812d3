//! Dense exact linear algebra over ℚ by plain rational Gauss-Jordan elimination.

use std::fmt;

use num_traits::{One, Zero};

use crate::scalar::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(|x| x.to_string()).collect())
            .collect();
        f.debug_struct("Matrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("data", &rows)
            .finish()
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[Vec<Rational>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), r, "ragged columns");
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j) + a * b;
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Matrix, op: impl Fn(&Rational, &Rational) -> Rational) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| op(a, b))
                .collect(),
        }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        if self.rows == 0 {
            return other.clone();
        }
        if other.rows == 0 {
            return self.clone();
        }
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c).clone());
            }
        }
    }

    /// Adds `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn add_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                let b = block.get(r, c);
                if !b.is_zero() {
                    let v = self.get(r0 + r, c0 + c) + b;
                    self.set(r0 + r, c0 + c, v);
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce(self.cols).len()
    }

    /// Basis of `{x : A x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.row_reduce(self.cols);
        free_solutions(&m, &pivots, self.cols)
    }

    /// Nonzero rows of the reduced row echelon form, with their pivot columns.
    pub fn rref_rows(&self) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.row_reduce(self.cols);
        let rows = (0..pivots.len()).map(|r| m.row(r).to_vec()).collect();
        (rows, pivots)
    }

    /// All solutions of `A x = rhs`: a particular solution (free variables set
    /// to zero) and a nullspace basis, or `None` when inconsistent.
    pub fn solve(&self, rhs: &[Rational]) -> Option<(Vec<Rational>, Vec<Vec<Rational>>)> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        aug.set_block(0, 0, self);
        for (r, b) in rhs.iter().enumerate() {
            aug.set(r, self.cols, b.clone());
        }
        let pivots = aug.row_reduce(self.cols);
        // any nonzero rhs in a zero row means no solution
        for r in pivots.len()..self.rows {
            if !aug.get(r, self.cols).is_zero() {
                return None;
            }
        }
        let mut particular = vec![Rational::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            particular[p] = aug.get(r, self.cols).clone();
        }
        Some((particular, free_solutions(&aug, &pivots, self.cols)))
    }

    /// In-place Gauss-Jordan on the first `ncols` columns. Returns the pivot
    /// columns; row `r` holds the pivot `pivots[r]`, normalized to one.
    fn row_reduce(&mut self, ncols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..ncols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = self.get(row, col).recip();
            for c in col..self.cols {
                let v = self.get(row, c) * &inv;
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..self.cols {
                    let pivot_val = self.get(row, c);
                    if pivot_val.is_zero() {
                        continue;
                    }
                    let v = self.get(r, c) - &factor * pivot_val;
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
}

fn free_solutions(reduced: &Matrix, pivots: &[usize], ncols: usize) -> Vec<Vec<Rational>> {
    let mut is_pivot = vec![false; ncols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Rational::zero(); ncols];
            v[free] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -reduced.get(r, free).clone();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn solves_square_system() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let (x, null) = a.solve(&[rat(3), rat(5)]).unwrap();
        assert!(null.is_empty());
        assert_eq!(x, vec![ratio(4, 5), ratio(7, 5)]);
        assert_eq!(a.mul_vec(&x), vec![rat(3), rat(5)]);
    }

    #[test]
    fn detects_inconsistency() {
        let a = m(&[&[1, 1], &[2, 2]]);
        assert!(a.solve(&[rat(1), rat(3)]).is_none());
        let (x, null) = a.solve(&[rat(1), rat(2)]).unwrap();
        assert_eq!(null.len(), 1);
        assert_eq!(a.mul_vec(&x), vec![rat(1), rat(2)]);
        assert_eq!(a.mul_vec(&null[0]), vec![rat(0), rat(0)]);
    }

    #[test]
    fn rank_and_nullspace_agree() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let null = a.nullspace();
        assert_eq!(null.len(), 2);
        for v in &null {
            assert!(a.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn empty_system() {
        let a = Matrix::zeros(0, 3);
        let (x, null) = a.solve(&[]).unwrap();
        assert_eq!(x.len(), 3);
        assert_eq!(null.len(), 3);
    }
}
