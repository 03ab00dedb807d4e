//! Exact elimination: rank, nullspaces, simultaneous kernels and span solves.
//!
//! Pivoting is deterministic: the leftmost column with a nonzero entry, and
//! within it the first nonzero row at or below the current pivot row. All
//! subspaces are returned in a canonical basis (see [`Subspace`]), so two
//! computations of the same subspace produce identical bases.

use crate::error::{Error, Result};
use crate::matrix::{Matrix, SparseMatrix};
use crate::scalar::Scalar;

/// Gauss-Jordan elimination in place.
///
/// Pivots are searched only in the first `pivot_cols` columns (the rest are
/// carried along, as for an augmented system). Returns the pivot columns;
/// afterwards `rows[k]` is the reduced row for the `k`-th pivot.
pub(crate) fn reduce_rows<T: Scalar>(
    rows: &mut [Vec<T>],
    ncols: usize,
    pivot_cols: usize,
) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..pivot_cols.min(ncols) {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);

        let inv = rows[next][col].checked_inv().expect("pivot is nonzero");
        let support: Vec<usize> = (col..ncols).filter(|&j| !rows[next][j].is_zero()).collect();
        for &j in &support {
            rows[next][j] *= &inv;
        }

        let (before, rest) = rows.split_at_mut(next);
        let (pivot_row, after) = rest.split_first_mut().expect("pivot row exists");
        for row in before.iter_mut().chain(after.iter_mut()) {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for &j in &support {
                let delta = factor.mul_ref(&pivot_row[j]);
                row[j] -= &delta;
            }
        }
        pivots.push(col);
        next += 1;
    }
    pivots
}

/// Forward elimination only; returns the rank.
fn echelon_rank<T: Scalar>(rows: &mut [Vec<T>], ncols: usize) -> usize {
    let mut next = 0;
    for col in 0..ncols {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = rows[next][col].checked_inv().expect("pivot is nonzero");
        let support: Vec<usize> = (col..ncols).filter(|&j| !rows[next][j].is_zero()).collect();
        let (head, tail) = rows.split_at_mut(next + 1);
        let pivot_row = &head[next];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].mul_ref(&inv);
            for &j in &support {
                let delta = factor.mul_ref(&pivot_row[j]);
                row[j] -= &delta;
            }
        }
        next += 1;
    }
    next
}

/// Reduced row echelon form and its pivot columns.
pub fn rref<T: Scalar>(a: &Matrix<T>) -> (Matrix<T>, Vec<usize>) {
    let mut rows = a.row_vecs();
    let pivots = reduce_rows(&mut rows, a.cols(), a.cols());
    if rows.is_empty() {
        return (a.clone(), pivots);
    }
    (Matrix::from_rows(rows), pivots)
}

/// Exact rank.
pub fn rank<T: Scalar>(a: &Matrix<T>) -> usize {
    let mut rows = a.row_vecs();
    echelon_rank(&mut rows, a.cols())
}

/// Rank of a list of vectors of a common length.
pub fn rank_of_vectors<T: Scalar>(vectors: &[Vec<T>]) -> usize {
    let Some(first) = vectors.first() else {
        return 0;
    };
    let mut rows = vectors.to_vec();
    echelon_rank(&mut rows, first.len())
}

/// A linear subspace of `T^n` held in canonical basis.
///
/// The canonical basis is the unique one in which every vector's last
/// nonzero coordinate (its *lead*) equals one, the leads are strictly
/// increasing, and every vector vanishes at the leads of the others. This is
/// exactly the basis read off the reduced echelon form of any matrix whose
/// kernel is the subspace.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace<T> {
    ambient_dim: usize,
    vectors: Vec<Vec<T>>,
    leads: Vec<usize>,
}

impl<T: Scalar> Subspace<T> {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            vectors: Vec::new(),
            leads: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            vectors: (0..ambient_dim)
                .map(|i| {
                    (0..ambient_dim)
                        .map(|j| if i == j { T::one() } else { T::zero() })
                        .collect()
                })
                .collect(),
            leads: (0..ambient_dim).collect(),
        }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient_dim: usize, vectors: &[Vec<T>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in ambient dimension {ambient_dim}",
                v.len()
            )));
        }
        // Reverse coordinates so that the leftmost pivot is the last nonzero entry.
        let mut rows: Vec<Vec<T>> = vectors
            .iter()
            .map(|v| v.iter().rev().cloned().collect())
            .collect();
        let pivots = reduce_rows(&mut rows, ambient_dim, ambient_dim);
        let r = pivots.len();
        let mut out: Vec<(usize, Vec<T>)> = rows
            .into_iter()
            .take(r)
            .zip(pivots)
            .map(|(row, p)| (ambient_dim - 1 - p, row.into_iter().rev().collect()))
            .collect();
        out.sort_by_key(|(lead, _)| *lead);
        let (leads, vectors) = out.into_iter().unzip();
        Ok(Subspace {
            ambient_dim,
            vectors,
            leads,
        })
    }

    /// Span of the columns of `m`.
    pub fn column_span(m: &Matrix<T>) -> Self {
        Subspace::span(m.rows(), &m.columns()).expect("columns share the row count")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<T>] {
        &self.vectors
    }

    /// Basis as the columns of an `ambient_dim x dim` matrix.
    pub fn basis(&self) -> Matrix<T> {
        Matrix::from_columns(self.ambient_dim, &self.vectors)
    }

    /// Coordinate index of each basis vector's lead.
    pub fn leads(&self) -> &[usize] {
        &self.leads
    }

    /// Coefficients of `v` in the canonical basis, or `None` if `v` is not
    /// in the subspace.
    pub fn coordinates(&self, v: &[T]) -> Option<Vec<T>> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let coeffs: Vec<T> = self.leads.iter().map(|&l| v[l].clone()).collect();
        let mut residual = v.to_vec();
        for (c, b) in coeffs.iter().zip(&self.vectors) {
            if c.is_zero() {
                continue;
            }
            for (r, x) in residual.iter_mut().zip(b) {
                if !x.is_zero() {
                    *r -= &c.mul_ref(x);
                }
            }
        }
        residual.iter().all(T::is_zero).then_some(coeffs)
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Subspace equality checked by rank: both spans and their sum agree.
    pub fn same_span(&self, other: &Subspace<T>) -> bool {
        if self.ambient_dim != other.ambient_dim || self.dim() != other.dim() {
            return false;
        }
        let mut all = self.vectors.clone();
        all.extend(other.vectors.iter().cloned());
        rank_of_vectors(&all) == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Subspace<T>) -> bool {
        self.vectors.iter().all(|v| other.contains(v))
    }
}

/// Kernel `{v : A·v = 0}` in canonical basis.
pub fn nullspace<T: Scalar>(a: &Matrix<T>) -> Subspace<T> {
    let n = a.cols();
    let mut rows = a.row_vecs();
    let pivots = reduce_rows(&mut rows, n, n);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut vectors = Vec::new();
    let mut leads = Vec::new();
    for free in (0..n).filter(|&j| !is_pivot[j]) {
        let mut v = vec![T::zero(); n];
        v[free] = T::one();
        for (k, &p) in pivots.iter().enumerate() {
            v[p] = -rows[k][free].clone();
        }
        vectors.push(v);
        leads.push(free);
    }
    Subspace {
        ambient_dim: n,
        vectors,
        leads,
    }
}

/// Something that can multiply a dense block of column vectors.
pub trait LinearOperator<T: Scalar> {
    fn in_dim(&self) -> usize;
    fn apply(&self, columns: &Matrix<T>) -> Matrix<T>;
}

impl<T: Scalar> LinearOperator<T> for Matrix<T> {
    fn in_dim(&self) -> usize {
        self.cols()
    }

    fn apply(&self, columns: &Matrix<T>) -> Matrix<T> {
        self.matmul(columns)
    }
}

impl<T: Scalar> LinearOperator<T> for SparseMatrix<T> {
    fn in_dim(&self) -> usize {
        self.cols()
    }

    fn apply(&self, columns: &Matrix<T>) -> Matrix<T> {
        self.mul_dense(columns)
    }
}

/// Common kernel of several operators on `T^ambient_dim`.
///
/// Equal to the nullspace of the vertically stacked matrix (same canonical
/// basis), but computed by successive restriction so that the stacked matrix
/// is never formed. The empty list yields the whole space.
pub fn simultaneous_kernel<T: Scalar, O: LinearOperator<T>>(
    ambient_dim: usize,
    ops: &[O],
) -> Result<Subspace<T>> {
    if let Some(op) = ops.iter().find(|op| op.in_dim() != ambient_dim) {
        return Err(Error::DimensionMismatch(format!(
            "operator on {} columns in ambient dimension {ambient_dim}",
            op.in_dim()
        )));
    }
    let mut current = Subspace::full(ambient_dim);
    for op in ops {
        if current.dim() == 0 {
            break;
        }
        let basis = current.basis();
        let restricted = nullspace(&op.apply(&basis));
        if restricted.dim() == current.dim() {
            continue;
        }
        let next = basis.matmul(&restricted.basis());
        current = Subspace::column_span(&next);
    }
    Ok(current)
}

/// Outcome of solving `A·x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution<T> {
    Unique(Vec<T>),
    /// Consistent but underdetermined; carries the solution with all free
    /// variables set to zero.
    Multiple(Vec<T>),
    Inconsistent,
}

impl<T> Solution<T> {
    pub fn into_option(self) -> Option<Vec<T>> {
        match self {
            Solution::Unique(x) | Solution::Multiple(x) => Some(x),
            Solution::Inconsistent => None,
        }
    }
}

pub fn solve<T: Scalar>(a: &Matrix<T>, b: &[T]) -> Result<Solution<T>> {
    if b.len() != a.rows() {
        return Err(Error::DimensionMismatch(format!(
            "right-hand side of length {} for {} rows",
            b.len(),
            a.rows()
        )));
    }
    let n = a.cols();
    let mut rows: Vec<Vec<T>> = (0..a.rows())
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let pivots = reduce_rows(&mut rows, n + 1, n);
    if rows[pivots.len()..].iter().any(|r| !r[n].is_zero()) {
        return Ok(Solution::Inconsistent);
    }
    let mut x = vec![T::zero(); n];
    for (k, &p) in pivots.iter().enumerate() {
        x[p] = rows[k][n].clone();
    }
    Ok(if pivots.len() == n {
        Solution::Unique(x)
    } else {
        Solution::Multiple(x)
    })
}

/// Coefficients `c` with `Σ c_i·basis_i = target`, or `None` when `target` is
/// outside the span. The basis is expected to be linearly independent.
pub fn solve_in_span<T: Scalar>(target: &Matrix<T>, basis: &[Matrix<T>]) -> Option<Vec<T>> {
    if basis.iter().any(|b| b.shape() != target.shape()) {
        return None;
    }
    let len = target.rows() * target.cols();
    let a = Matrix::from_fn(len, basis.len(), |r, c| basis[c].entries()[r].clone());
    solve(&a, target.entries()).ok()?.into_option()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, GaussianRational as G, Rational};
    use num_traits::{One, Zero};

    fn q(rows: Vec<Vec<i64>>) -> Matrix<Rational> {
        Matrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(|x| rat(x, 1)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_edge_cases() {
        assert_eq!(rank(&Matrix::<G>::identity(4)), 4);
        assert_eq!(rank(&Matrix::<G>::zeros(3, 5)), 0);
        assert_eq!(rank(&q(vec![vec![1, 2], vec![2, 4]])), 1);
    }

    #[test]
    fn nullspace_edge_cases() {
        assert_eq!(nullspace(&Matrix::<G>::identity(3)).dim(), 0);
        let z = nullspace(&Matrix::<G>::zeros(2, 5));
        assert_eq!(z.dim(), 5);
        assert_eq!(z, Subspace::full(5));
    }

    #[test]
    fn nullspace_basis_is_echelon_derived() {
        // x + 2y + 3z = 0 -> free columns y, z.
        let ns = nullspace(&q(vec![vec![1, 2, 3]]));
        assert_eq!(
            ns.vectors(),
            &[
                vec![rat(-2, 1), rat(1, 1), rat(0, 1)],
                vec![rat(-3, 1), rat(0, 1), rat(1, 1)]
            ]
        );
        assert_eq!(ns.leads(), &[1, 2]);
        assert_eq!(Subspace::span(3, ns.vectors()).unwrap(), ns);
    }

    #[test]
    fn canonical_span_is_independent_of_spanning_set() {
        let a = Subspace::span(3, &[vec![rat(1, 1), rat(1, 1), rat(0, 1)], vec![rat(0, 1), rat(1, 1), rat(1, 1)]])
            .unwrap();
        let b = Subspace::span(
            3,
            &[
                vec![rat(1, 1), rat(2, 1), rat(1, 1)],
                vec![rat(2, 1), rat(2, 1), rat(0, 1)],
                vec![rat(3, 1), rat(4, 1), rat(1, 1)],
            ],
        )
        .unwrap();
        assert_eq!(a, b);
        assert!(a.same_span(&b));
    }

    #[test]
    fn simultaneous_kernel_conventions() {
        let none: [Matrix<G>; 0] = [];
        assert_eq!(simultaneous_kernel(4, &none).unwrap().dim(), 4);
        let a = Matrix::from_rows(vec![vec![G::one(), G::i(), G::zero()]]);
        assert_eq!(simultaneous_kernel(3, std::slice::from_ref(&a)).unwrap(), nullspace(&a));
        let b = Matrix::<G>::zeros(1, 2);
        assert!(matches!(
            simultaneous_kernel(3, &[a, b]),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn solve_in_span_basics() {
        let e = |i: usize| Matrix::from_fn(2, 2, |r, c| if r * 2 + c == i { rat(1, 1) } else { rat(0, 1) });
        let basis = vec![e(0), e(1), e(3)];
        assert_eq!(
            solve_in_span(&basis[0], &basis),
            Some(vec![rat(1, 1), rat(0, 1), rat(0, 1)])
        );
        assert_eq!(
            solve_in_span(&Matrix::zeros(2, 2), &basis),
            Some(vec![Rational::zero(); 3])
        );
        assert_eq!(solve_in_span(&e(2), &basis), None);
    }

    #[test]
    fn solve_reports_structure() {
        let a = q(vec![vec![1, 1], vec![1, -1]]);
        assert_eq!(
            solve(&a, &[rat(2, 1), rat(0, 1)]).unwrap(),
            Solution::Unique(vec![rat(1, 1), rat(1, 1)])
        );
        let a = q(vec![vec![1, 1], vec![2, 2]]);
        assert_eq!(solve(&a, &[rat(1, 1), rat(3, 1)]).unwrap(), Solution::Inconsistent);
        assert!(matches!(
            solve(&a, &[rat(1, 1), rat(2, 1)]).unwrap(),
            Solution::Multiple(_)
        ));
    }
}
