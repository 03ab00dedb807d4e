//! Dense and sparse matrices over an exact [`Scalar`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors. Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged rows");
            data.extend(row);
        }
        Matrix {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    /// Builds a `rows x columns.len()` matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<T>]) -> Self {
        for c in columns {
            assert_eq!(c.len(), rows, "column length mismatch");
        }
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn diagonal(diag: &[T]) -> Self {
        let n = diag.len();
        Self::from_fn(n, n, |i, j| if i == j { diag[i].clone() } else { T::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<T> {
        self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut T {
        &mut self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<T>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conj())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(T::is_zero)
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.mul_ref(s))
    }

    pub fn trace(&self) -> T {
        let mut t = T::zero();
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    /// Matrix product. Panics on incompatible shapes.
    pub fn matmul(&self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "matmul shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        *out.get_mut(i, j) += &a.mul_ref(b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "mul_vec shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &a.mul_ref(b);
                    }
                }
                acc
            })
            .collect()
    }

    /// `self·rhs − rhs·self`.
    pub fn commutator(&self, rhs: &Matrix<T>) -> Matrix<T> {
        &self.matmul(rhs) - &rhs.matmul(self)
    }

    /// Kronecker product: `(A⊗B)[i·rB + k, j·cB + l] = A[i,j]·B[k,l]`.
    pub fn kron(&self, rhs: &Matrix<T>) -> Matrix<T> {
        let (rb, cb) = rhs.shape();
        Matrix::from_fn(self.rows * rb, self.cols * cb, |r, c| {
            let a = self.get(r / rb, c / cb);
            if a.is_zero() {
                T::zero()
            } else {
                a.mul_ref(rhs.get(r % rb, c % cb))
            }
        })
    }

    /// Stacks matrices vertically; all must share a column count.
    pub fn vstack(blocks: &[Matrix<T>]) -> Result<Matrix<T>> {
        let Some(first) = blocks.first() else {
            return Ok(Matrix::zeros(0, 0));
        };
        let cols = first.cols;
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(Error::DimensionMismatch(format!(
                    "cannot stack {} columns onto {cols}",
                    b.cols
                )));
            }
            rows += b.rows;
            data.extend(b.data.iter().cloned());
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Inverse via Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix<T>> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut rows: Vec<Vec<T>> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { T::one() } else { T::zero() }));
                r
            })
            .collect();
        let pivots = crate::linalg::reduce_rows(&mut rows, 2 * n, n);
        if pivots.len() < n {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(n, n, |i, j| rows[i][n + j].clone()))
    }
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(|x| x.to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(0);
        for row in &cells {
            let padded: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", padded.join("  "))?;
        }
        Ok(())
    }
}

impl<'b, T: Scalar> Add<&'b Matrix<T>> for &Matrix<T> {
    type Output = Matrix<T>;

    fn add(self, rhs: &'b Matrix<T>) -> Matrix<T> {
        assert_eq!(self.shape(), rhs.shape(), "add shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.add_ref(b)).collect(),
        }
    }
}

impl<'b, T: Scalar> Sub<&'b Matrix<T>> for &Matrix<T> {
    type Output = Matrix<T>;

    fn sub(self, rhs: &'b Matrix<T>) -> Matrix<T> {
        assert_eq!(self.shape(), rhs.shape(), "sub shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.sub_ref(b)).collect(),
        }
    }
}

impl<'b, T: Scalar> Mul<&'b Matrix<T>> for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: &'b Matrix<T>) -> Matrix<T> {
        self.matmul(rhs)
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;

    fn neg(self) -> Matrix<T> {
        self.map(|x| -x.clone())
    }
}

/// Row-compressed sparse matrix. Each row holds `(column, value)` pairs in
/// increasing column order with no explicit zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SparseMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<(usize, T)>>,
}

impl<T: Scalar> SparseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            entries: (0..n).map(|i| vec![(i, T::one())]).collect(),
        }
    }

    /// Sums duplicate `(row, col)` positions and drops zeros.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, T)>,
    ) -> Self {
        let mut acc: Vec<BTreeMap<usize, T>> = vec![BTreeMap::new(); rows];
        for (r, c, v) in triplets {
            assert!(r < rows && c < cols, "triplet out of range");
            *acc[r].entry(c).or_insert_with(T::zero) += &v;
        }
        SparseMatrix {
            rows,
            cols,
            entries: acc
                .into_iter()
                .map(|row| row.into_iter().filter(|(_, v)| !v.is_zero()).collect())
                .collect(),
        }
    }

    pub fn from_dense(m: &Matrix<T>) -> Self {
        SparseMatrix {
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows())
                .map(|r| {
                    m.row(r)
                        .iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(c, v)| (c, v.clone()))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_dense(&self) -> Matrix<T> {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for (r, row) in self.entries.iter().enumerate() {
            for (c, v) in row {
                m.set(r, *c, v.clone());
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

    pub fn row(&self, r: usize) -> &[(usize, T)] {
        &self.entries[r]
    }

    pub fn nnz(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Vec::is_empty)
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &T)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn scale(&self, s: &T) -> Self {
        if s.is_zero() {
            return SparseMatrix::zeros(self.rows, self.cols);
        }
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|(c, v)| (*c, v.mul_ref(s))).collect())
                .collect(),
        }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> SparseMatrix<U> {
        SparseMatrix::from_triplets(
            self.rows,
            self.cols,
            self.triplets().map(|(r, c, v)| (r, c, f(v))),
        )
    }

    pub fn add(&self, rhs: &SparseMatrix<T>) -> SparseMatrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add shape mismatch");
        let trip = self
            .triplets()
            .chain(rhs.triplets())
            .map(|(r, c, v)| (r, c, v.clone()));
        SparseMatrix::from_triplets(self.rows, self.cols, trip)
    }

    pub fn sub(&self, rhs: &SparseMatrix<T>) -> SparseMatrix<T> {
        self.add(&rhs.scale(&-T::one()))
    }

    pub fn matmul(&self, rhs: &SparseMatrix<T>) -> SparseMatrix<T> {
        assert_eq!(self.cols, rhs.rows, "matmul shape mismatch");
        let mut trip = Vec::new();
        for (r, row) in self.entries.iter().enumerate() {
            for (k, a) in row {
                for (c, b) in &rhs.entries[*k] {
                    trip.push((r, *c, a.mul_ref(b)));
                }
            }
        }
        SparseMatrix::from_triplets(self.rows, rhs.cols, trip)
    }

    /// Sparse times dense.
    pub fn mul_dense(&self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows(), "mul_dense shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols());
        for (r, row) in self.entries.iter().enumerate() {
            for (k, a) in row {
                for j in 0..rhs.cols() {
                    let b = rhs.get(*k, j);
                    if !b.is_zero() {
                        *out.get_mut(r, j) += &a.mul_ref(b);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "mul_vec shape mismatch");
        self.entries
            .iter()
            .map(|row| {
                let mut acc = T::zero();
                for (c, a) in row {
                    if !v[*c].is_zero() {
                        acc += &a.mul_ref(&v[*c]);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn commutator(&self, rhs: &SparseMatrix<T>) -> SparseMatrix<T> {
        self.matmul(rhs).sub(&rhs.matmul(self))
    }

    pub fn kron(&self, rhs: &SparseMatrix<T>) -> SparseMatrix<T> {
        let mut trip = Vec::new();
        for (i, j, a) in self.triplets() {
            for (k, l, b) in rhs.triplets() {
                trip.push((i * rhs.rows + k, j * rhs.cols + l, a.mul_ref(b)));
            }
        }
        SparseMatrix::from_triplets(self.rows * rhs.rows, self.cols * rhs.cols, trip)
    }
}
