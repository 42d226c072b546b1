//! Dense row-major real matrices.
//!
//! [`Matrix`] is always square with finite entries; [`Block`] is the
//! rectangular counterpart used for off-diagonal blocks `K[α, β]`.

use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};
use crate::subset::IndexSet;

/// A square matrix with finite real entries.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    n: usize,
    data: Vec<f64>,
}

/// A rectangular matrix with finite real entries.
#[derive(Clone, PartialEq)]
pub struct Block {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

fn check_finite(data: &[f64], cols: usize) -> Result<()> {
    match data.iter().position(|x| !x.is_finite()) {
        Some(p) => Err(Error::NonFinite {
            row: p / cols,
            col: p % cols,
        }),
        None => Ok(()),
    }
}

fn collect_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<(usize, usize, Vec<f64>)> {
    let r = rows.len();
    let c = rows.first().map_or(0, |row| row.as_ref().len());
    if r == 0 || c == 0 {
        return Err(Error::Empty);
    }
    let mut data = Vec::with_capacity(r * c);
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_ref();
        if row.len() != c {
            return Err(Error::RaggedRow {
                row: i,
                expected: c,
                found: row.len(),
            });
        }
        data.extend_from_slice(row);
    }
    check_finite(&data, c)?;
    Ok((r, c, data))
}

impl Matrix {
    /// Builds an `n×n` matrix from row-major data.
    pub fn new(n: usize, data: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Empty);
        }
        if data.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: data.len(),
            });
        }
        check_finite(&data, n)?;
        Ok(Matrix { n, data })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let (r, c, data) = collect_rows(rows)?;
        if r != c {
            return Err(Error::NotSquare { rows: r, cols: c });
        }
        Ok(Matrix { n: r, data })
    }

    pub(crate) fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Matrix { n, data }
    }

    pub fn zeros(n: usize) -> Self {
        assert!(n > 0);
        Matrix {
            n,
            data: vec![0.0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    /// Panics on an empty or non-finite diagonal.
    pub fn diag(values: &[f64]) -> Self {
        assert!(!values.is_empty() && values.iter().all(|x| x.is_finite()));
        Self::from_fn(values.len(), |i, j| if i == j { values[i] } else { 0.0 })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.n).map(|i| self[(i, i)]).collect()
    }

    /// Returns a copy with entry `(i, j)` replaced.
    pub fn with_entry(&self, i: usize, j: usize, value: f64) -> Result<Self> {
        if i >= self.n || j >= self.n {
            return Err(Error::IndexOutOfRange {
                index: i.max(j),
                n: self.n,
            });
        }
        if !value.is_finite() {
            return Err(Error::NonFinite { row: i, col: j });
        }
        let mut out = self.clone();
        out.data[i * self.n + j] = value;
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)])
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Self> {
        same_dim(self, other)?;
        let n = self.n;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * other[(k, j)];
                }
            }
        }
        Ok(Matrix { n, data: out })
    }

    /// `K·Diag(scale)`: column `j` multiplied by `scale[j]`.
    pub fn scale_columns(&self, scale: &[f64]) -> Result<Self> {
        self.check_len(scale.len())?;
        Ok(Self::from_fn(self.n, |i, j| self[(i, j)] * scale[j]))
    }

    /// `Diag(scale)·K`: row `i` multiplied by `scale[i]`.
    pub fn scale_rows(&self, scale: &[f64]) -> Result<Self> {
        self.check_len(scale.len())?;
        Ok(Self::from_fn(self.n, |i, j| scale[i] * self[(i, j)]))
    }

    /// `D·K·D⁻¹` for `D = Diag(d)`; every `d_i` must be nonzero.
    pub fn diagonal_similarity(&self, d: &[f64]) -> Result<Self> {
        self.check_len(d.len())?;
        if let Some(i) = d.iter().position(|&x| x == 0.0 || !x.is_finite()) {
            return Err(Error::NonFinite { row: i, col: i });
        }
        Ok(Self::from_fn(self.n, |i, j| d[i] * self[(i, j)] / d[j]))
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self::from_fn(self.n, |i, j| factor * self[(i, j)])
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// First negative entry, if any.
    pub fn first_negative(&self) -> Option<(usize, usize, f64)> {
        self.data
            .iter()
            .position(|&x| x < 0.0)
            .map(|p| (p / self.n, p % self.n, self.data[p]))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.first_negative().is_none()
    }

    /// `|K_ij - K_ji| <= tol·max(1, ‖K‖_max)` for every pair.
    pub fn is_symmetric(&self, tol: f64) -> bool {
        let bound = tol * self.max_abs().max(1.0);
        (0..self.n).all(|i| (0..i).all(|j| (self[(i, j)] - self[(j, i)]).abs() <= bound))
    }

    /// Largest entrywise difference.
    pub fn max_abs_diff(&self, other: &Matrix) -> Result<f64> {
        same_dim(self, other)?;
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs())))
    }

    /// `K[rows, cols]`, keeping entry order.
    pub fn submatrix(&self, rows: &IndexSet, cols: &IndexSet) -> Result<Block> {
        self.check_set(rows)?;
        self.check_set(cols)?;
        if rows.is_empty() || cols.is_empty() {
            return Err(Error::EmptySelection);
        }
        let ri = rows.to_vec();
        let ci = cols.to_vec();
        let mut data = Vec::with_capacity(ri.len() * ci.len());
        for &i in &ri {
            for &j in &ci {
                data.push(self[(i, j)]);
            }
        }
        Ok(Block {
            rows: ri.len(),
            cols: ci.len(),
            data,
        })
    }

    /// The principal submatrix `K[α] = K[α, α]`.
    pub fn principal(&self, alpha: &IndexSet) -> Result<Matrix> {
        let b = self.submatrix(alpha, alpha)?;
        Ok(Matrix {
            n: b.rows,
            data: b.data,
        })
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn determinant(&self) -> f64 {
        let mut work = self.data.clone();
        det_in_place(&mut work, self.n)
    }

    pub fn rank_at_most(&self, r: usize, tol: f64) -> bool {
        self.as_block().rank_at_most(r, tol)
    }

    pub fn as_block(&self) -> Block {
        Block {
            rows: self.n,
            cols: self.n,
            data: self.data.clone(),
        }
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: len,
            });
        }
        Ok(())
    }

    fn check_set(&self, s: &IndexSet) -> Result<()> {
        if s.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: s.dim(),
            });
        }
        Ok(())
    }
}

pub(crate) fn same_dim(a: &Matrix, b: &Matrix) -> Result<()> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch {
            expected: a.n,
            found: b.n,
        });
    }
    Ok(())
}

/// Determinant of the row-major `k×k` matrix in `a`, destroying it.
pub(crate) fn det_in_place(a: &mut [f64], k: usize) -> f64 {
    let mut det = 1.0;
    for col in 0..k {
        let mut piv = col;
        let mut best = a[col * k + col].abs();
        for r in col + 1..k {
            let v = a[r * k + col].abs();
            if v > best {
                best = v;
                piv = r;
            }
        }
        if best == 0.0 {
            return 0.0;
        }
        if piv != col {
            for j in col..k {
                a.swap(piv * k + j, col * k + j);
            }
            det = -det;
        }
        let p = a[col * k + col];
        det *= p;
        for r in col + 1..k {
            let f = a[r * k + col] / p;
            if f == 0.0 {
                continue;
            }
            for j in col + 1..k {
                a[r * k + j] -= f * a[col * k + j];
            }
        }
    }
    det
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        assert!(i < self.n && j < self.n, "index ({i}, {j}) out of range");
        &self.data[i * self.n + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.n).map(|i| self.row(i)))
            .finish()
    }
}

impl Block {
    pub fn new(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Empty);
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        check_finite(&data, cols)?;
        Ok(Block { rows, cols, data })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let (r, c, data) = collect_rows(rows)?;
        Ok(Block {
            rows: r,
            cols: c,
            data,
        })
    }

    /// The rank-one block `u·vᵀ`.
    pub fn outer(u: &[f64], v: &[f64]) -> Result<Self> {
        let mut data = Vec::with_capacity(u.len() * v.len());
        for a in u {
            for b in v {
                data.push(a * b);
            }
        }
        Block::new(u.len(), v.len(), data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Position of the largest-magnitude entry (first in row-major order on ties).
    pub fn argmax_abs(&self) -> (usize, usize) {
        let mut best = 0;
        for (p, x) in self.data.iter().enumerate() {
            if x.abs() > self.data[best].abs() {
                best = p;
            }
        }
        (best / self.cols, best % self.cols)
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)]);
            }
        }
        Block {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn into_square(self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(Matrix {
            n: self.rows,
            data: self.data,
        })
    }

    /// Numerical rank by full-pivoting elimination: a pivot counts when its
    /// magnitude exceeds `tol·‖B‖_max`.
    pub fn rank(&self, tol: f64) -> usize {
        self.pivots(tol, usize::MAX).len()
    }

    pub fn rank_at_most(&self, r: usize, tol: f64) -> bool {
        self.pivots(tol, r + 1).len() <= r
    }

    /// Pivot positions of full-pivoting elimination, stopping after `limit`.
    pub(crate) fn pivots(&self, tol: f64, limit: usize) -> Vec<(usize, usize)> {
        let threshold = tol * self.max_abs();
        let (m, n) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut row_used = vec![false; m];
        let mut col_used = vec![false; n];
        let mut out = Vec::new();
        while out.len() < limit {
            let mut best = (0, 0, -1.0f64);
            for i in (0..m).filter(|&i| !row_used[i]) {
                for j in (0..n).filter(|&j| !col_used[j]) {
                    let v = a[i * n + j].abs();
                    if v > best.2 {
                        best = (i, j, v);
                    }
                }
            }
            let (p, q, v) = best;
            if v <= threshold || v <= 0.0 {
                break;
            }
            row_used[p] = true;
            col_used[q] = true;
            out.push((p, q));
            let pivot = a[p * n + q];
            for i in (0..m).filter(|&i| !row_used[i]) {
                let f = a[i * n + q] / pivot;
                if f == 0.0 {
                    continue;
                }
                for j in (0..n).filter(|&j| !col_used[j]) {
                    a[i * n + j] -= f * a[p * n + j];
                }
            }
        }
        out
    }
}

impl Index<(usize, usize)> for Block {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        assert!(
            i < self.rows && j < self.cols,
            "index ({i}, {j}) out of range"
        );
        &self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| self.row(i)))
            .finish()
    }
}

impl From<Matrix> for Block {
    fn from(m: Matrix) -> Block {
        Block {
            rows: m.n,
            cols: m.n,
            data: m.data,
        }
    }
}
