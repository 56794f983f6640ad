//! Row-major dense matrix over f64.
//!
//! This is deliberately minimal: just the products and column accessors the
//! SAE forward/backward passes need. All accumulation happens in f64;
//! 32-bit precision only appears at the file-format boundary.

use crate::error::{Result, SaeError};

#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix { rows, cols, data: vec![0.0; rows * cols] }
    }

    /// Build from a row-major buffer; the length must equal `rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(SaeError::dims(format!(
                "matrix buffer has {} entries, expected {}x{}={}",
                data.len(),
                rows,
                cols,
                rows * cols
            )));
        }
        Ok(DenseMatrix { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        DenseMatrix { rows, cols, data }
    }

    /// Identity-like matrix (ones on the main diagonal), not necessarily square.
    pub fn eye(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn data_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        debug_assert!(i < self.rows);
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [f64] {
        debug_assert!(i < self.rows);
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// `y = self * x` where `x` has `cols` entries.
    pub fn matvec(&self, x: &[f64]) -> Vec<f64> {
        debug_assert_eq!(x.len(), self.cols);
        let mut y = vec![0.0; self.rows];
        for i in 0..self.rows {
            let row = self.row(i);
            let mut acc = 0.0;
            for (a, b) in row.iter().zip(x.iter()) {
                acc += a * b;
            }
            y[i] = acc;
        }
        y
    }

    /// `y = self^T * x` where `x` has `rows` entries.
    pub fn matvec_t(&self, x: &[f64]) -> Vec<f64> {
        debug_assert_eq!(x.len(), self.rows);
        let mut y = vec![0.0; self.cols];
        for i in 0..self.rows {
            let row = self.row(i);
            let xi = x[i];
            if xi == 0.0 {
                continue;
            }
            for (yj, a) in y.iter_mut().zip(row.iter()) {
                *yj += xi * a;
            }
        }
        y
    }

    /// Rank-one update `self += scale * y * x^T` (`y` over rows, `x` over cols).
    pub fn add_outer(&mut self, y: &[f64], x: &[f64], scale: f64) {
        debug_assert_eq!(y.len(), self.rows);
        debug_assert_eq!(x.len(), self.cols);
        for i in 0..self.rows {
            let yi = scale * y[i];
            if yi == 0.0 {
                continue;
            }
            let row = self.row_mut(i);
            for (r, xj) in row.iter_mut().zip(x.iter()) {
                *r += yi * xj;
            }
        }
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut out = DenseMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Dot product of column `j` with `x` (`x` has `rows` entries).
    pub fn col_dot(&self, j: usize, x: &[f64]) -> f64 {
        debug_assert!(j < self.cols);
        let mut acc = 0.0;
        for i in 0..self.rows {
            acc += self.data[i * self.cols + j] * x[i];
        }
        acc
    }

    /// `x += scale * col_j`.
    pub fn col_axpy(&self, j: usize, scale: f64, x: &mut [f64]) {
        debug_assert!(j < self.cols);
        debug_assert_eq!(x.len(), self.rows);
        for i in 0..self.rows {
            x[i] += scale * self.data[i * self.cols + j];
        }
    }

    pub fn col_norm(&self, j: usize) -> f64 {
        self.col_dot(j, &self.col_vec(j)).sqrt()
    }

    pub fn col_vec(&self, j: usize) -> Vec<f64> {
        debug_assert!(j < self.cols);
        (0..self.rows).map(|i| self.data[i * self.cols + j]).collect()
    }

    pub fn col_scale(&mut self, j: usize, s: f64) {
        debug_assert!(j < self.cols);
        for i in 0..self.rows {
            self.data[i * self.cols + j] *= s;
        }
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_vec_rejects_bad_length() {
        assert!(DenseMatrix::from_vec(2, 3, vec![0.0; 5]).is_err());
    }

    #[test]
    fn matvec_small_case() {
        // [1 2; 3 4] * [5, 6] = [17, 39]
        let m = DenseMatrix::from_vec(2, 2, vec![1.0, 2.0, 3.0, 4.0]).unwrap();
        assert_eq!(m.matvec(&[5.0, 6.0]), vec![17.0, 39.0]);
        // transpose product: [1 3; 2 4] * [5, 6] = [23, 34]
        assert_eq!(m.matvec_t(&[5.0, 6.0]), vec![23.0, 34.0]);
    }

    #[test]
    fn outer_and_column_ops() {
        let mut m = DenseMatrix::zeros(2, 3);
        m.add_outer(&[1.0, 2.0], &[3.0, 4.0, 5.0], 0.5);
        assert_eq!(m.row(0), &[1.5, 2.0, 2.5]);
        assert_eq!(m.row(1), &[3.0, 4.0, 5.0]);
        assert_eq!(m.col_vec(1), vec![2.0, 4.0]);
        assert!((m.col_dot(2, &[1.0, 1.0]) - 7.5).abs() < 1e-15);
    }
}
