//! The spinor representation `Φ_{p,q}` of the complexified Clifford algebra.
//!
//! With the 2x2 matrices
//!
//! ```text
//! U = (0 i; i 0)   V = (0 −1; 1 0)   E = I₂   T = (−1 0; 0 1)
//! ```
//!
//! and `m = 2n`, the generators are
//!
//! ```text
//! Φ(e_{2j−1}) = τ_{2j−1} · E⊗…⊗E⊗U⊗T⊗…⊗T
//! Φ(e_{2j})   = τ_{2j}   · E⊗…⊗E⊗V⊗T⊗…⊗T      (j−1 trailing T's)
//! ```
//!
//! with `τ_k = i` for negative directions and `1` otherwise. For odd
//! `m = 2n+1` the first `m−1` generators are those of `Φ_{p,q−1}` and the
//! last one is `i·T⊗…⊗T`, the first component of the pair.
//!
//! Since `U² = V² = −I` and `T² = I`, these satisfy `Φ(e_i)² = −ε_i·I`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::solve_in_span;
use crate::matrix::{Matrix, SparseMatrix};
use crate::pseudo_orthogonal::QMatrix;
use crate::scalar::{GaussianRational as G, Rational, Scalar};
use crate::signature::Signature;

pub type CMatrix = Matrix<G>;
pub type SparseCMatrix = SparseMatrix<G>;

fn two_by_two(entries: [[G; 2]; 2]) -> SparseCMatrix {
    let [[a, b], [c, d]] = entries;
    SparseMatrix::from_triplets(2, 2, [(0, 0, a), (0, 1, b), (1, 0, c), (1, 1, d)])
}

pub fn mat_u() -> SparseCMatrix {
    two_by_two([[G::zero(), G::i()], [G::i(), G::zero()]])
}

pub fn mat_v() -> SparseCMatrix {
    two_by_two([[G::zero(), -G::one()], [G::one(), G::zero()]])
}

pub fn mat_e() -> SparseCMatrix {
    SparseMatrix::identity(2)
}

pub fn mat_t() -> SparseCMatrix {
    two_by_two([[-G::one(), G::zero()], [G::zero(), G::one()]])
}

fn kron_chain(factors: &[SparseCMatrix]) -> SparseCMatrix {
    factors
        .iter()
        .fold(SparseMatrix::identity(1), |acc, f| acc.kron(f))
}

/// A vector of `Δ_{p,q} = C^{2^n}` in the basis `u(ν_n,…,ν_1)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Spinor(pub Vec<G>);

impl Spinor {
    pub fn zero(dim: usize) -> Self {
        Spinor(vec![G::zero(); dim])
    }

    pub fn coefficients(&self) -> &[G] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(G::is_zero)
    }

    pub fn scale(&self, s: &G) -> Spinor {
        Spinor(self.0.iter().map(|x| x * s).collect())
    }
}

/// `u(ν_n,…,ν_1) = u(ν_n)⊗…⊗u(ν_1)` with `u(1) = (1,0)ᵀ`, `u(−1) = (0,1)ᵀ`.
///
/// `nus[0]` is `ν_n`, the leftmost tensor factor.
pub fn basis_spinor(nus: &[i8]) -> Result<Spinor> {
    let mut index = 0usize;
    for &nu in nus {
        let bit = match nu {
            1 => 0,
            -1 => 1,
            other => {
                return Err(Error::InvalidSpinorIndex(format!(
                    "entries must be ±1, got {other}"
                )))
            }
        };
        index = (index << 1) | bit;
    }
    let mut v = Spinor::zero(1 << nus.len());
    v.0[index] = G::one();
    Ok(v)
}

/// Like [`basis_spinor`] but also checks the length against `n`.
pub fn basis_spinor_for(sig: Signature, nus: &[i8]) -> Result<Spinor> {
    if nus.len() != sig.half_dim() {
        return Err(Error::InvalidSpinorIndex(format!(
            "expected {} signs for {sig}, got {}",
            sig.half_dim(),
            nus.len()
        )));
    }
    basis_spinor(nus)
}

/// `u⁺ = u(1,…,1)` and `u⁻ = u(−1,…,−1)`.
pub fn extremal_spinors(sig: Signature) -> (Spinor, Spinor) {
    let n = sig.half_dim();
    (
        basis_spinor(&vec![1; n]).expect("valid signs"),
        basis_spinor(&vec![-1; n]).expect("valid signs"),
    )
}

#[derive(Clone, Debug)]
pub struct CliffordRep {
    signature: Signature,
    gammas: Vec<SparseCMatrix>,
    odd: bool,
}

/// Builds `Φ_{p,q}(e_1), …, Φ_{p,q}(e_m)`.
pub fn build_rep(sig: Signature) -> Result<CliffordRep> {
    let m = sig.dim();
    if m == 0 {
        return Err(Error::UnsupportedSignature {
            p: sig.p,
            q: sig.q,
            reason: "empty signature".into(),
        });
    }
    if sig.is_odd() {
        if sig.q == 0 {
            return Err(Error::UnsupportedSignature {
                p: sig.p,
                q: sig.q,
                reason: "odd dimension needs at least one positive direction".into(),
            });
        }
        let mut gammas = if m == 1 {
            Vec::new()
        } else {
            build_rep(Signature::new(sig.p, sig.q - 1))?.gammas
        };
        let n = sig.half_dim();
        let last = kron_chain(&vec![mat_t(); n]).scale(&G::i());
        gammas.push(last);
        return Ok(CliffordRep {
            signature: sig,
            gammas,
            odd: true,
        });
    }

    let n = sig.half_dim();
    let mut gammas = Vec::with_capacity(m);
    for j in 1..=n {
        for (k, core) in [(2 * j - 1, mat_u()), (2 * j, mat_v())] {
            let mut factors = vec![mat_e(); n - j];
            factors.push(core);
            factors.extend(std::iter::repeat_n(mat_t(), j - 1));
            let tau = if sig.epsilon(k - 1) < 0 { G::i() } else { G::one() };
            gammas.push(kron_chain(&factors).scale(&tau));
        }
    }
    Ok(CliffordRep {
        signature: sig,
        gammas,
        odd: false,
    })
}

impl CliffordRep {
    pub fn signature(&self) -> Signature {
        self.signature
    }

    /// Whether `m` is odd (generators are first components of the pairs).
    pub fn is_odd(&self) -> bool {
        self.odd
    }

    pub fn spinor_dim(&self) -> usize {
        self.signature.spinor_dim()
    }

    /// `Φ(e_i)`, zero-based.
    pub fn gamma(&self, i: usize) -> &SparseCMatrix {
        &self.gammas[i]
    }

    pub fn gammas(&self) -> &[SparseCMatrix] {
        &self.gammas
    }

    pub fn gamma_dense(&self, i: usize) -> CMatrix {
        self.gammas[i].to_dense()
    }

    /// `Φ(e_i)·Φ(e_j)`.
    pub fn bivector(&self, i: usize, j: usize) -> SparseCMatrix {
        self.gammas[i].matmul(&self.gammas[j])
    }

    /// `Φ(x) = Σ x_i Φ(e_i)` for complex coordinates.
    pub fn clifford_matrix(&self, x: &[G]) -> Result<SparseCMatrix> {
        self.check_vector_len(x.len())?;
        let d = self.spinor_dim();
        let trip = self
            .gammas
            .iter()
            .zip(x)
            .filter(|(_, c)| !c.is_zero())
            .flat_map(|(g, c)| g.triplets().map(move |(r, col, v)| (r, col, v * c)))
            .collect::<Vec<_>>();
        Ok(SparseMatrix::from_triplets(d, d, trip))
    }

    /// Clifford multiplication `x · v`.
    pub fn clifford_mul(&self, x: &[G], v: &Spinor) -> Result<Spinor> {
        self.check_spinor(v)?;
        Ok(Spinor(self.clifford_matrix(x)?.mul_vec(&v.0)))
    }

    /// `Φ(X)` for a real vector.
    pub fn real_vector_matrix(&self, x: &[Rational]) -> Result<SparseCMatrix> {
        let xc: Vec<G> = x.iter().cloned().map(G::real).collect();
        self.clifford_matrix(&xc)
    }

    /// The matrix `M = i^{p(p−1)/2}·Φ(e_1)⋯Φ(e_p)` with `⟨v,w⟩_Δ = w^*·M·v`.
    pub fn hermitian_form_matrix(&self) -> SparseCMatrix {
        let p = self.signature.p as i64;
        let mut gamma = SparseMatrix::identity(self.spinor_dim());
        for i in 0..self.signature.p {
            gamma = gamma.matmul(&self.gammas[i]);
        }
        gamma.scale(&G::i_pow(p * (p - 1) / 2))
    }

    /// `⟨v,w⟩_Δ = i^{p(p−1)/2}·(e_1⋯e_p·v, w)` with `(z,z') = Σ z_k·conj(z'_k)`.
    pub fn hermitian_product(&self, v: &Spinor, w: &Spinor) -> Result<G> {
        self.check_spinor(v)?;
        self.check_spinor(w)?;
        let mv = self.hermitian_form_matrix().mul_vec(&v.0);
        let mut acc = G::zero();
        for (a, b) in mv.iter().zip(&w.0) {
            acc += &(a * &b.conj());
        }
        Ok(acc)
    }

    /// Gram matrix `H[i][j] = ⟨b_j, b_i⟩_Δ` on the standard basis.
    pub fn gram_matrix(&self) -> CMatrix {
        self.hermitian_form_matrix().to_dense()
    }

    /// `Φ(X_1)⋯Φ(X_k)` after checking `⟨X_i,X_i⟩ = ±1` exactly.
    pub fn unit_product(&self, g: &[Vec<Rational>]) -> Result<SparseCMatrix> {
        let mut acc = SparseMatrix::identity(self.spinor_dim());
        for x in g {
            self.check_vector_len(x.len())?;
            let norm = self.signature.inner(x, x);
            if norm != Rational::one() && norm != -Rational::one() {
                return Err(Error::InvalidArgument(format!(
                    "vector has ⟨X,X⟩ = {norm}, expected ±1"
                )));
            }
            acc = acc.matmul(&self.real_vector_matrix(x)?);
        }
        Ok(acc)
    }

    /// The `Spin^c` action `[g, z]·v = z·Φ(X_1)⋯Φ(X_{2k})·v`.
    pub fn spinc_action(&self, g: &[Vec<Rational>], z: &G, v: &Spinor) -> Result<Spinor> {
        if !g.len().is_multiple_of(2) {
            return Err(Error::InvalidArgument(
                "a Spin element needs an even number of unit vectors".into(),
            ));
        }
        if z.norm_sqr() != Rational::one() {
            return Err(Error::InvalidArgument(format!("|z|² = {} ≠ 1", z.norm_sqr())));
        }
        self.check_spinor(v)?;
        let phi = self.unit_product(g)?;
        Ok(Spinor(phi.mul_vec(&v.0)).scale(z))
    }

    /// `λ(g)`: the matrix `L` with `Φ(g)Φ(x)Φ(g)⁻¹ = Φ(L·x)`.
    pub fn lambda_group(&self, g: &[Vec<Rational>]) -> Result<QMatrix> {
        let sig = self.signature;
        if sig.is_odd() {
            return Err(Error::UnsupportedSignature {
                p: sig.p,
                q: sig.q,
                reason: "λ is recovered only for even dimension".into(),
            });
        }
        if !g.len().is_multiple_of(2) {
            return Err(Error::InvalidArgument(
                "a Spin element needs an even number of unit vectors".into(),
            ));
        }
        let phi = self.unit_product(g)?;
        // Φ(X)² = −⟨X,X⟩, so Φ(X)⁻¹ = −⟨X,X⟩·Φ(X).
        let mut phi_inv = SparseMatrix::identity(self.spinor_dim());
        for x in g.iter().rev() {
            let norm = G::real(self.signature.inner(x, x));
            phi_inv = phi_inv.matmul(&self.real_vector_matrix(x)?.scale(&-norm));
        }
        let basis: Vec<CMatrix> = self.gammas.iter().map(SparseMatrix::to_dense).collect();
        let m = sig.dim();
        let mut l = QMatrix::zeros(m, m);
        for (i, gamma) in self.gammas.iter().enumerate() {
            let conj = phi.matmul(gamma).matmul(&phi_inv).to_dense();
            let coeffs = solve_in_span(&conj, &basis).ok_or_else(|| {
                Error::Internal(format!("Φ(g)Φ(e_{})Φ(g)⁻¹ is not a vector", i + 1))
            })?;
            for (r, c) in coeffs.into_iter().enumerate() {
                if !c.is_real() {
                    return Err(Error::Internal("λ(g) has a non-real entry".into()));
                }
                l.set(r, i, c.re);
            }
        }
        Ok(l)
    }

    /// `Φ(e_i)Φ(e_j) + Φ(e_j)Φ(e_i) = −2·ε_i·δ_ij·I` for all `i, j`.
    pub fn anticommutation_holds(&self) -> bool {
        let m = self.signature.dim();
        let d = self.spinor_dim();
        for i in 0..m {
            for j in i..m {
                let ac = self.bivector(i, j).add(&self.bivector(j, i));
                let expected = if i == j {
                    SparseMatrix::identity(d).scale(&G::from_i64(-2 * self.signature.epsilon(i)))
                } else {
                    SparseMatrix::zeros(d, d)
                };
                if ac != expected {
                    return false;
                }
            }
        }
        true
    }

    /// `⟨e_k·v, w⟩_Δ = (−1)^{p+1}·⟨v, e_k·w⟩_Δ` for every generator, as the
    /// matrix identity `M·Φ(e_k) = (−1)^{p+1}·Φ(e_k)^*·M`.
    pub fn adjointness_holds(&self) -> bool {
        let m = self.hermitian_form_matrix().to_dense();
        let sign = if self.signature.p.is_multiple_of(2) { -G::one() } else { G::one() };
        self.gammas.iter().all(|g| {
            let g = g.to_dense();
            m.matmul(&g) == g.adjoint().matmul(&m).scale(&sign)
        })
    }

    fn check_vector_len(&self, len: usize) -> Result<()> {
        if len != self.signature.dim() {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {len} for {}",
                self.signature
            )));
        }
        Ok(())
    }

    fn check_spinor(&self, v: &Spinor) -> Result<()> {
        if v.dim() != self.spinor_dim() {
            return Err(Error::DimensionMismatch(format!(
                "spinor of dimension {} for Δ of dimension {}",
                v.dim(),
                self.spinor_dim()
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn g(re: i64, im: i64) -> G {
        G::from_parts(re, 1, im, 1)
    }

    fn e(m: usize, i: usize) -> Vec<Rational> {
        (0..m).map(|k| rat((k == i) as i64, 1)).collect()
    }

    #[test]
    fn euclidean_plane_uses_u_and_v() {
        let rep = build_rep(Signature::new(0, 2)).unwrap();
        assert_eq!(rep.gamma(0), &mat_u());
        assert_eq!(rep.gamma(1), &mat_v());
    }

    #[test]
    fn negative_plane_picks_up_tau() {
        let rep = build_rep(Signature::new(2, 0)).unwrap();
        assert_eq!(rep.gamma(0), &mat_u().scale(&G::i()));
        assert_eq!(rep.gamma(1), &mat_v().scale(&G::i()));
    }

    #[test]
    fn odd_dimension_appends_first_component() {
        let rep = build_rep(Signature::new(0, 3)).unwrap();
        assert!(rep.is_odd());
        assert_eq!(rep.gamma(2), &mat_t().scale(&G::i()));
        assert_eq!(rep.gamma(0), &mat_u());
        assert!(matches!(
            build_rep(Signature::new(3, 0)),
            Err(Error::UnsupportedSignature { .. })
        ));
        assert!(build_rep(Signature::new(0, 1)).unwrap().anticommutation_holds());
    }

    #[test]
    fn clifford_multiplication_examples() {
        let rep = build_rep(Signature::new(0, 2)).unwrap();
        let up = basis_spinor(&[1]).unwrap();
        let down = basis_spinor(&[-1]).unwrap();
        assert_eq!(rep.clifford_mul(&[g(0, 0), g(0, 0)], &up).unwrap(), Spinor::zero(2));
        assert_eq!(rep.clifford_mul(&[g(1, 0), g(0, 0)], &up).unwrap(), down.scale(&G::i()));
        // U·u(1) = i·u(−1) and V·u(1) = u(−1), so e₁ − i·e₂ annihilates u(1).
        assert_eq!(rep.clifford_mul(&[g(1, 0), g(0, -1)], &up).unwrap(), Spinor::zero(2));
        assert_eq!(
            rep.clifford_mul(&[g(1, 0), g(0, 1)], &up).unwrap(),
            down.scale(&g(0, 2))
        );
        assert!(rep.clifford_mul(&[g(1, 0)], &up).is_err());
    }

    #[test]
    fn basis_spinor_indexing() {
        assert_eq!(basis_spinor(&[1]).unwrap().0, vec![g(1, 0), g(0, 0)]);
        assert_eq!(basis_spinor(&[1, 1]).unwrap().0[0], g(1, 0));
        assert_eq!(basis_spinor(&[-1, -1]).unwrap().0[3], g(1, 0));
        assert_eq!(basis_spinor(&[-1, 1]).unwrap().0[2], g(1, 0));
        assert!(basis_spinor(&[0]).is_err());
        assert!(basis_spinor_for(Signature::new(0, 4), &[1]).is_err());
    }

    #[test]
    fn hermitian_product_examples() {
        let rep = build_rep(Signature::new(0, 2)).unwrap();
        let up = basis_spinor(&[1]).unwrap();
        let down = basis_spinor(&[-1]).unwrap();
        assert_eq!(rep.hermitian_product(&up, &up).unwrap(), G::one());
        assert_eq!(rep.hermitian_product(&up, &down).unwrap(), G::zero());
        // (1,1): Φ(e₁) = iU = (0 −1; −1 0), so Φ(e₁)u(1) = −u(−1).
        let rep = build_rep(Signature::new(1, 1)).unwrap();
        assert_eq!(rep.hermitian_product(&up, &down).unwrap(), -G::one());
    }

    #[test]
    fn spinc_action_examples() {
        let rep = build_rep(Signature::new(0, 2)).unwrap();
        let v = Spinor(vec![g(1, 0), g(2, -1)]);
        assert_eq!(rep.spinc_action(&[], &G::one(), &v).unwrap(), v);
        assert_eq!(rep.spinc_action(&[], &G::i(), &v).unwrap(), v.scale(&G::i()));
        assert_eq!(
            rep.spinc_action(&[e(2, 0), e(2, 0)], &G::one(), &v).unwrap(),
            v.scale(&-G::one())
        );
        assert!(rep.spinc_action(&[e(2, 0)], &G::one(), &v).is_err());
        assert!(rep.spinc_action(&[], &g(2, 0), &v).is_err());
        let long = vec![rat(1, 1), rat(1, 1)];
        assert!(rep.spinc_action(&[long.clone(), long], &G::one(), &v).is_err());
    }

    #[test]
    fn lambda_of_e1e2_is_minus_identity() {
        let sig = Signature::new(0, 2);
        let rep = build_rep(sig).unwrap();
        assert_eq!(rep.lambda_group(&[]).unwrap(), QMatrix::identity(2));
        assert_eq!(
            rep.lambda_group(&[e(2, 0), e(2, 1)]).unwrap(),
            QMatrix::identity(2).scale(&rat(-1, 1))
        );
    }

    #[test]
    fn lambda_is_multiplicative_and_pseudo_orthogonal() {
        use crate::pseudo_orthogonal::is_pseudo_orthogonal;
        let sig = Signature::new(1, 3);
        let rep = build_rep(sig).unwrap();
        // Unit vectors with rational entries: (5/3)e_2 + (4/3)e_1 has norm −1·16/9 + 25/9 = 1.
        let a = vec![rat(4, 3), rat(5, 3), rat(0, 1), rat(0, 1)];
        let b = vec![rat(0, 1), rat(3, 5), rat(4, 5), rat(0, 1)];
        let c = e(4, 0);
        let d = vec![rat(0, 1), rat(0, 1), rat(3, 5), rat(-4, 5)];
        let g1 = vec![a, b];
        let g2 = vec![c, d];
        let l1 = rep.lambda_group(&g1).unwrap();
        let l2 = rep.lambda_group(&g2).unwrap();
        let both: Vec<_> = g1.iter().chain(&g2).cloned().collect();
        assert_eq!(rep.lambda_group(&both).unwrap(), l1.matmul(&l2));
        assert!(is_pseudo_orthogonal(sig, &l1));
        assert!(is_pseudo_orthogonal(sig, &l2));
    }
}
