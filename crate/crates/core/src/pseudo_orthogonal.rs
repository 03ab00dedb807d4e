//! Exact elements of `O(p,q)` from the Cayley transform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{rat, Rational};
use crate::signature::Signature;

pub type QMatrix = Matrix<Rational>;

/// Whether `Sᵀ·G + G·S = 0` for `G = diag(ε)`.
pub fn is_in_so(sig: Signature, s: &QMatrix) -> bool {
    if s.shape() != (sig.dim(), sig.dim()) {
        return false;
    }
    let g = sig.metric::<Rational>();
    (&s.transpose().matmul(&g) + &g.matmul(s)).is_zero()
}

/// Whether `Qᵀ·G·Q = G`.
pub fn is_pseudo_orthogonal(sig: Signature, q: &QMatrix) -> bool {
    if q.shape() != (sig.dim(), sig.dim()) {
        return false;
    }
    let g = sig.metric::<Rational>();
    q.transpose().matmul(&g).matmul(q) == g
}

/// `(I + S)(I − S)⁻¹` for `S ∈ so(p,q)`.
pub fn cayley_pseudo_orthogonal(sig: Signature, s: &QMatrix) -> Result<QMatrix> {
    if !is_in_so(sig, s) {
        return Err(Error::NotInSo { p: sig.p, q: sig.q });
    }
    let id = QMatrix::identity(sig.dim());
    let inv = (&id - s).inverse()?;
    Ok((&id + s).matmul(&inv))
}

/// Inverse of a pseudo-orthogonal matrix, `G·Qᵀ·G`.
pub fn pseudo_orthogonal_inverse(sig: Signature, q: &QMatrix) -> QMatrix {
    let g = sig.metric::<Rational>();
    g.matmul(&q.transpose()).matmul(&g)
}

const SEED_VALUES: [(i64, i64); 6] = [(1, 2), (2, 1), (1, 3), (3, 2), (2, 3), (1, 1)];

/// Deterministic Cayley parameter `S = G·A` from a seed.
///
/// `A` is antisymmetric and couples the coordinates in disjoint random
/// pairs, so `Q` is a product of commuting plane rotations and boosts with
/// small entries. Pairs mix a negative with a positive direction whenever
/// the shuffle puts them together.
pub fn cayley_seed(sig: Signature, seed: u64) -> QMatrix {
    let m = sig.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..m).collect();
    order.shuffle(&mut rng);
    let mut a = QMatrix::zeros(m, m);
    for w in order.chunks_exact(2) {
        let (num, den) = SEED_VALUES[rng.random_range(0..SEED_VALUES.len())];
        let sign = if rng.random_bool(0.5) { 1 } else { -1 };
        let t = rat(sign * num, den);
        a.set(w[0], w[1], t.clone());
        a.set(w[1], w[0], -t);
    }
    sig.metric::<Rational>().matmul(&a)
}

/// A seeded element of `SO(p,q)`; reseeds until `I − S` is invertible.
pub fn seeded_pseudo_orthogonal(sig: Signature, seed: u64) -> QMatrix {
    let mut s = seed;
    loop {
        if let Ok(q) = cayley_pseudo_orthogonal(sig, &cayley_seed(sig, s)) {
            return q;
        }
        s = s.wrapping_add(0x9e37_79b9_7f4a_7c15);
    }
}

/// Whether `q` is the identity matrix.
pub fn is_identity(q: &QMatrix) -> bool {
    q.is_square() && q == &QMatrix::identity(q.rows())
}
