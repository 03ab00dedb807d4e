use std::fmt;

use serde::{Deserialize, Serialize};

use crate::matrix::Matrix;
use crate::scalar::{Rational, Scalar};

/// Signature `(p, q)` of a scalar product on `R^m`, `m = p + q`.
///
/// Negative directions come first: `ε_i = −1` for `i < p` and `+1` for
/// `p ≤ i < m` (indices are zero-based in code).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Signature {
    pub p: usize,
    pub q: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Self {
        Signature { p, q }
    }

    pub fn dim(&self) -> usize {
        self.p + self.q
    }

    /// `n = ⌊m/2⌋`; the spinor module has dimension `2^n`.
    pub fn half_dim(&self) -> usize {
        self.dim() / 2
    }

    pub fn spinor_dim(&self) -> usize {
        1 << self.half_dim()
    }

    pub fn is_odd(&self) -> bool {
        self.dim() % 2 == 1
    }

    pub fn epsilon(&self, i: usize) -> i64 {
        assert!(i < self.dim(), "index {i} out of range for {self}");
        if i < self.p {
            -1
        } else {
            1
        }
    }

    pub fn epsilons(&self) -> Vec<i64> {
        (0..self.dim()).map(|i| self.epsilon(i)).collect()
    }

    /// `G = diag(ε)`.
    pub fn metric<T: Scalar>(&self) -> Matrix<T> {
        let diag: Vec<T> = self.epsilons().into_iter().map(T::from_i64).collect();
        Matrix::diagonal(&diag)
    }

    /// `⟨x, y⟩_{p,q}` for real vectors.
    pub fn inner(&self, x: &[Rational], y: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.dim());
        assert_eq!(y.len(), self.dim());
        let mut acc = Rational::from_integer(0.into());
        for (i, (a, b)) in x.iter().zip(y).enumerate() {
            let t = a * b;
            if self.epsilon(i) < 0 {
                acc -= t;
            } else {
                acc += t;
            }
        }
        acc
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}
