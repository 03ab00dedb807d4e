//! The Lie algebra layer: `so(p,q)`, its lift to `End(Δ_{p,q})`, the
//! infinitesimal `Spin^c` structure and the unitary embedding
//! `u(p',q') ↪ so(2p',2q')`.

use num_traits::{One, Zero};

use crate::clifford::{CMatrix, CliffordRep, SparseCMatrix};
use crate::error::{Error, Result};
use crate::linalg::solve_in_span;
use crate::matrix::{Matrix, SparseMatrix};
use crate::pseudo_orthogonal::{is_in_so, QMatrix};
use crate::scalar::{rat, GaussianRational as G, Rational, Scalar};
use crate::signature::Signature;

/// An element of `so(p,q)`: a real matrix with `Bᵀ·G + G·B = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SOElement {
    signature: Signature,
    matrix: QMatrix,
}

impl SOElement {
    pub fn new(signature: Signature, matrix: QMatrix) -> Result<Self> {
        if !is_in_so(signature, &matrix) {
            return Err(Error::NotInSo {
                p: signature.p,
                q: signature.q,
            });
        }
        Ok(SOElement { signature, matrix })
    }

    pub fn zero(signature: Signature) -> Self {
        let m = signature.dim();
        SOElement {
            signature,
            matrix: QMatrix::zeros(m, m),
        }
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> QMatrix {
        self.matrix
    }

    pub fn to_complex(&self) -> CMatrix {
        self.matrix.map(|x| G::real(x.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn scale(&self, s: &Rational) -> Self {
        SOElement {
            signature: self.signature,
            matrix: self.matrix.scale(s),
        }
    }

    pub fn add(&self, other: &SOElement) -> Result<Self> {
        self.check_same(other)?;
        Ok(SOElement {
            signature: self.signature,
            matrix: &self.matrix + &other.matrix,
        })
    }

    pub fn bracket(&self, other: &SOElement) -> Result<Self> {
        self.check_same(other)?;
        Ok(SOElement {
            signature: self.signature,
            matrix: self.matrix.commutator(&other.matrix),
        })
    }

    /// `Q·B·Q⁻¹`, which stays in `so(p,q)` when `Q ∈ O(p,q)`.
    pub fn conjugate(&self, q: &QMatrix, q_inv: &QMatrix) -> Result<Self> {
        SOElement::new(self.signature, q.matmul(&self.matrix).matmul(q_inv))
    }

    /// Coordinates in the `E_ij` basis, ordered like [`so_basis`].
    pub fn coordinates(&self) -> Vec<Rational> {
        let m = self.signature.dim();
        let mut out = Vec::with_capacity(m * (m - 1) / 2);
        for i in 0..m {
            for j in i + 1..m {
                // E_ij has (j,i) entry ε_i.
                let eps = Rational::from_integer(self.signature.epsilon(i).into());
                out.push(self.matrix.get(j, i) * &eps);
            }
        }
        out
    }

    fn check_same(&self, other: &SOElement) -> Result<()> {
        if self.signature != other.signature {
            return Err(Error::DimensionMismatch(format!(
                "so{} vs so{}",
                self.signature, other.signature
            )));
        }
        Ok(())
    }
}

/// `E_ij = −ε_j·D_ij + ε_i·D_ji` (zero-based), so that `E_ij·e_i = ε_i·e_j`.
pub fn e_ij(sig: Signature, i: usize, j: usize) -> Result<SOElement> {
    let m = sig.dim();
    if i >= m || j >= m || i == j {
        return Err(Error::InvalidArgument(format!(
            "E_ij needs distinct indices below {m}, got ({i},{j})"
        )));
    }
    let mut b = QMatrix::zeros(m, m);
    b.set(i, j, Rational::from_integer((-sig.epsilon(j)).into()));
    b.set(j, i, Rational::from_integer(sig.epsilon(i).into()));
    Ok(SOElement {
        signature: sig,
        matrix: b,
    })
}

/// `{E_ij : i < j}` in lexicographic order.
pub fn so_basis(sig: Signature) -> Vec<SOElement> {
    let m = sig.dim();
    let mut out = Vec::with_capacity(m * m.saturating_sub(1) / 2);
    for i in 0..m {
        for j in i + 1..m {
            out.push(e_ij(sig, i, j).expect("valid pair"));
        }
    }
    out
}

/// `λ_*⁻¹(B) = ¼·Σ_i ε_i·Φ(e_i)·Φ(B·e_i)`, kept sparse.
pub fn lambda_inv_sparse(rep: &CliffordRep, b: &SOElement) -> Result<SparseCMatrix> {
    let sig = rep.signature();
    if b.signature != sig {
        return Err(Error::DimensionMismatch(format!(
            "so{} element lifted with Φ{}",
            b.signature, sig
        )));
    }
    let m = sig.dim();
    let d = rep.spinor_dim();
    let quarter = rat(1, 4);
    let mut trip = Vec::new();
    for i in 0..m {
        for l in 0..m {
            let bli = b.matrix.get(l, i);
            if bli.is_zero() || l == i {
                continue;
            }
            let coeff = G::real(Rational::from_integer(sig.epsilon(i).into()) * bli * &quarter);
            let prod = rep.bivector(i, l);
            trip.extend(prod.triplets().map(|(r, c, v)| (r, c, v * &coeff)));
        }
    }
    Ok(SparseMatrix::from_triplets(d, d, trip))
}

/// Dense form of [`lambda_inv_sparse`].
pub fn lambda_inv(rep: &CliffordRep, b: &SOElement) -> Result<CMatrix> {
    Ok(lambda_inv_sparse(rep, b)?.to_dense())
}

/// Whether `[λ_*⁻¹(B), Φ(e_i)] = Φ(B·e_i)` for every `i`.
pub fn lift_certificate_holds(rep: &CliffordRep, b: &SOElement) -> Result<bool> {
    let lifted = lambda_inv_sparse(rep, b)?;
    for i in 0..rep.signature().dim() {
        let lhs = lifted.commutator(rep.gamma(i));
        let column: Vec<Rational> = b.matrix.column(i);
        if lhs != rep.real_vector_matrix(&column)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An element `(endo, i·t)` of `spin^c(p,q) = spin(p,q) ⊕ iℝ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpinCAlgebraElement {
    pub endo: CMatrix,
    pub it: G,
}

impl SpinCAlgebraElement {
    pub fn new(endo: CMatrix, it: G) -> Result<Self> {
        if !it.re.is_zero() {
            return Err(Error::InvalidArgument(format!(
                "the iℝ part must be imaginary, got {it}"
            )));
        }
        Ok(SpinCAlgebraElement { endo, it })
    }
}

/// `ξ_*(e_i·e_j, i·t) = (2·E_ij, 2·i·t)`.
pub fn xi_star(sig: Signature, i: usize, j: usize, t: &Rational) -> Result<(SOElement, G)> {
    if i >= j {
        return Err(Error::InvalidArgument(format!(
            "expected i < j, got ({i},{j})"
        )));
    }
    let b = e_ij(sig, i, j)?.scale(&rat(2, 1));
    Ok((b, G::new(Rational::zero(), t * rat(2, 1))))
}

/// `ξ_*` on a general element: the endomorphism is expanded over
/// `{Φ(e_i)Φ(e_j) : i < j}` and each term is sent through [`xi_star`].
pub fn xi_star_element(rep: &CliffordRep, x: &SpinCAlgebraElement) -> Result<(SOElement, G)> {
    let sig = rep.signature();
    let m = sig.dim();
    let mut pairs = Vec::new();
    let mut basis = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            pairs.push((i, j));
            basis.push(rep.bivector(i, j).to_dense());
        }
    }
    let coeffs = if basis.is_empty() {
        if !x.endo.is_zero() {
            return Err(Error::InvalidArgument("endomorphism is not in spin(p,q)".into()));
        }
        Vec::new()
    } else {
        solve_in_span(&x.endo, &basis)
            .ok_or_else(|| Error::InvalidArgument("endomorphism is not in spin(p,q)".into()))?
    };
    let mut b = SOElement::zero(sig);
    for ((i, j), c) in pairs.into_iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        if !c.is_real() {
            return Err(Error::InvalidArgument(
                "endomorphism has a non-real bivector coefficient".into(),
            ));
        }
        let (term, _) = xi_star(sig, i, j, &Rational::zero())?;
        b = b.add(&term.scale(&c.re))?;
    }
    let it = x.it.mul_ref(&G::from_i64(2));
    Ok((b, it))
}

/// The Hermitian form of `u(p',q')`.
///
/// A definite form `(p',0)` is replaced by `(0,p')`; both have the same
/// unitary algebra, and this puts the image in a positive definite `so`.
pub fn hermitian_signature(pprime: usize, qprime: usize) -> Signature {
    if qprime == 0 {
        Signature::new(0, pprime)
    } else {
        Signature::new(pprime, qprime)
    }
}

/// Ambient `so` signature of the image of `u(p',q')`.
pub fn unitary_ambient(pprime: usize, qprime: usize) -> Signature {
    let h = hermitian_signature(pprime, qprime);
    Signature::new(2 * h.p, 2 * h.q)
}

fn check_square(name: &str, a: &QMatrix, k: usize) -> Result<()> {
    if a.shape() != (k, k) {
        return Err(Error::DimensionMismatch(format!(
            "{name} has shape {:?}, expected ({k},{k})",
            a.shape()
        )));
    }
    Ok(())
}

/// Whether `C = A + i·Bm` satisfies `C^*·G' + G'·C = 0`.
pub fn is_in_u(pprime: usize, qprime: usize, a: &QMatrix, bm: &QMatrix) -> bool {
    let k = pprime + qprime;
    if a.shape() != (k, k) || bm.shape() != (k, k) {
        return false;
    }
    let c = complex_from_parts(a, bm);
    let g = hermitian_signature(pprime, qprime).metric::<G>();
    (&c.adjoint().matmul(&g) + &g.matmul(&c)).is_zero()
}

pub fn complex_from_parts(a: &QMatrix, bm: &QMatrix) -> CMatrix {
    Matrix::from_fn(a.rows(), a.cols(), |r, c| {
        G::new(a.get(r, c).clone(), bm.get(r, c).clone())
    })
}

pub fn complex_parts(c: &CMatrix) -> (QMatrix, QMatrix) {
    (c.map(|z| z.re.clone()), c.map(|z| z.im.clone()))
}

/// Entry `a + i·b` becomes the block `(a b; −b a)`.
pub fn u_embedding(pprime: usize, qprime: usize, a: &QMatrix, bm: &QMatrix) -> Result<SOElement> {
    let k = pprime + qprime;
    check_square("A", a, k)?;
    check_square("Bm", bm, k)?;
    if !is_in_u(pprime, qprime, a, bm) {
        return Err(Error::NotInU {
            p: pprime,
            q: qprime,
        });
    }
    let m = 2 * k;
    let mut out = QMatrix::zeros(m, m);
    for r in 0..k {
        for c in 0..k {
            let (x, y) = (a.get(r, c), bm.get(r, c));
            out.set(2 * r, 2 * c, x.clone());
            out.set(2 * r, 2 * c + 1, y.clone());
            out.set(2 * r + 1, 2 * c, -y.clone());
            out.set(2 * r + 1, 2 * c + 1, x.clone());
        }
    }
    SOElement::new(unitary_ambient(pprime, qprime), out)
}

/// Complex-matrix form of [`u_embedding`].
pub fn u_embedding_complex(pprime: usize, qprime: usize, c: &CMatrix) -> Result<SOElement> {
    let (a, bm) = complex_parts(c);
    u_embedding(pprime, qprime, &a, &bm)
}

/// A basis of `su(p',q')` as complex matrices.
pub fn su_basis(pprime: usize, qprime: usize) -> Vec<CMatrix> {
    let h = hermitian_signature(pprime, qprime);
    let k = h.dim();
    let mut out = Vec::new();
    for d in 0..k.saturating_sub(1) {
        let mut c = CMatrix::zeros(k, k);
        c.set(d, d, G::i());
        c.set(d + 1, d + 1, -G::i());
        out.push(c);
    }
    for r in 0..k {
        for c in r + 1..k {
            let s = G::from_i64(h.epsilon(r) * h.epsilon(c));
            let mut x = CMatrix::zeros(k, k);
            x.set(r, c, G::one());
            x.set(c, r, -s.clone());
            out.push(x);
            let mut y = CMatrix::zeros(k, k);
            y.set(r, c, G::i());
            y.set(c, r, s * G::i());
            out.push(y);
        }
    }
    out
}

/// `i·diag(1,0,…,0)`, which spans `u(p',q')` modulo `su(p',q')`.
pub fn u_center_generator(pprime: usize, qprime: usize) -> CMatrix {
    let k = pprime + qprime;
    let mut c = CMatrix::zeros(k, k);
    c.set(0, 0, G::i());
    c
}

/// Images of a basis of `su(p',q')` and of `D₁ = i·diag(1,0,…,0)`.
pub fn u_algebra_basis(pprime: usize, qprime: usize) -> Result<(Vec<SOElement>, SOElement)> {
    if pprime + qprime == 0 {
        return Err(Error::InvalidArgument("u(0,0) is empty".into()));
    }
    let derived = su_basis(pprime, qprime)
        .iter()
        .map(|c| u_embedding_complex(pprime, qprime, c))
        .collect::<Result<Vec<_>>>()?;
    let d1 = u_embedding_complex(pprime, qprime, &u_center_generator(pprime, qprime))?;
    Ok((derived, d1))
}

/// `α_*(C) = (i_*(C), tr C)` for `C = A + i·Bm ∈ u(p',q')`.
pub fn alpha_star(pprime: usize, qprime: usize, a: &QMatrix, bm: &QMatrix) -> Result<(SOElement, G)> {
    let b = u_embedding(pprime, qprime, a, bm)?;
    Ok((b, G::new(Rational::zero(), bm.trace())))
}

/// `α̃_*(C) = (λ_*⁻¹(i_*(C)), ½·i·tr Bm)`, the lift with `ξ_* ∘ α̃_* = α_*`.
pub fn alpha_tilde_star(
    rep: &CliffordRep,
    pprime: usize,
    qprime: usize,
    a: &QMatrix,
    bm: &QMatrix,
) -> Result<SpinCAlgebraElement> {
    let b = u_embedding(pprime, qprime, a, bm)?;
    let endo = lambda_inv(rep, &b)?;
    SpinCAlgebraElement::new(endo, G::new(Rational::zero(), bm.trace() * rat(1, 2)))
}
