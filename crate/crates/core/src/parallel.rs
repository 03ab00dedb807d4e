//! Parallel spinors as fixed vectors of a lifted holonomy algebra.

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::HolonomyAlgebra;
use crate::clifford::{build_rep, CMatrix, CliffordRep, SparseCMatrix, Spinor};
use crate::error::{Error, Result};
use crate::linalg::{nullspace, simultaneous_kernel, solve, Solution, Subspace};
use crate::matrix::Matrix;
use crate::pseudo_orthogonal::{pseudo_orthogonal_inverse, seeded_pseudo_orthogonal, QMatrix};
use crate::scalar::{rational_sqrt, GaussianRational as G, Rational, Scalar};
use crate::signature::Signature;
use crate::spin_lie::lambda_inv_sparse;

pub type SpinorSubspace = Subspace<G>;

/// Lifted generators, split like the algebra they came from.
#[derive(Clone, Debug)]
pub struct LiftedAlgebra {
    pub derived: Vec<SparseCMatrix>,
    pub center: Vec<SparseCMatrix>,
}

impl LiftedAlgebra {
    pub fn len(&self) -> usize {
        self.derived.len() + self.center.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn all(&self) -> Vec<&SparseCMatrix> {
        self.derived.iter().chain(&self.center).collect()
    }
}

fn check_signature(rep: &CliffordRep, h: &HolonomyAlgebra) -> Result<()> {
    if rep.signature() != h.signature {
        return Err(Error::DimensionMismatch(format!(
            "{} lives in so{}, representation is for {}",
            h.name(),
            h.signature,
            rep.signature()
        )));
    }
    Ok(())
}

/// `λ_*⁻¹` applied to every generator.
pub fn lift_algebra(rep: &CliffordRep, h: &HolonomyAlgebra) -> Result<LiftedAlgebra> {
    check_signature(rep, h)?;
    let lift = |v: &[crate::spin_lie::SOElement]| -> Result<Vec<SparseCMatrix>> {
        v.iter().map(|b| lambda_inv_sparse(rep, b)).collect()
    };
    Ok(LiftedAlgebra {
        derived: lift(&h.derived_generators)?,
        center: lift(&h.center_complement)?,
    })
}

/// `{v ∈ Δ : λ_*⁻¹(B)·v = 0 for every generator B}`.
pub fn fixed_space(rep: &CliffordRep, h: &HolonomyAlgebra) -> Result<SpinorSubspace> {
    if h.spinc {
        return Err(Error::WrongSolver(format!(
            "{} is a Spin^c entry; use spinc_fixed_space",
            h.name()
        )));
    }
    let lifted = lift_algebra(rep, h)?;
    simultaneous_kernel(rep.spinor_dim(), &lifted.derived)
}

/// Spinors on which the derived algebra acts trivially and the center
/// complement acts by purely imaginary scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinCWitness {
    /// Eigenvectors of the center complement spanning the space.
    pub basis: Vec<Vec<G>>,
    /// For each basis spinor, its eigenvalue under each center generator.
    pub characters: Vec<Vec<G>>,
    ambient_dim: usize,
}

impl SpinCWitness {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn subspace(&self) -> SpinorSubspace {
        Subspace::span(self.ambient_dim, &self.basis).expect("basis vectors of equal length")
    }

    pub fn characters_imaginary(&self) -> bool {
        self.characters.iter().flatten().all(G::is_imaginary)
    }
}

/// Solves the `Spin^c` fixed-point condition for an algebra with a single
/// center-complement generator `ρ` whose restriction satisfies `ρ² = c·I`.
pub fn spinc_fixed_space(rep: &CliffordRep, h: &HolonomyAlgebra) -> Result<SpinCWitness> {
    if !h.spinc {
        return Err(Error::WrongSolver(format!(
            "{} is a Spin entry; use fixed_space",
            h.name()
        )));
    }
    let lifted = lift_algebra(rep, h)?;
    let [rho] = lifted.center.as_slice() else {
        return Err(Error::UnsupportedEntry(format!(
            "{} center generators; exactly one is supported",
            lifted.center.len()
        )));
    };
    let d = rep.spinor_dim();
    let v0 = simultaneous_kernel(d, &lifted.derived)?;
    let k = v0.dim();
    let empty = SpinCWitness {
        basis: Vec::new(),
        characters: Vec::new(),
        ambient_dim: d,
    };
    if k == 0 {
        return Ok(empty);
    }

    let mut r = CMatrix::zeros(k, k);
    for (j, v) in v0.vectors().iter().enumerate() {
        let image = rho.mul_vec(v);
        let coords = v0.coordinates(&image).ok_or_else(|| {
            Error::UnsupportedEntry("center generator does not preserve the derived kernel".into())
        })?;
        for (i, c) in coords.into_iter().enumerate() {
            r.set(i, j, c);
        }
    }
    let r2 = r.matmul(&r);
    let c = r2.get(0, 0).clone();
    if r2 != CMatrix::identity(k).scale(&c) {
        return Err(Error::UnsupportedEntry(
            "restricted center generator does not square to a scalar".into(),
        ));
    }

    // Purely imaginary eigenvalues need c real and ≤ 0.
    let eigenvalues: Vec<G> = if !c.is_real() || c.re > Rational::zero() {
        Vec::new()
    } else if c.is_zero() {
        vec![G::zero()]
    } else {
        let s = rational_sqrt(&-c.re.clone()).ok_or_else(|| {
            Error::UnsupportedEntry(format!("eigenvalues ±√({c}) are not in ℚ[i]"))
        })?;
        vec![G::new(Rational::zero(), s.clone()), G::new(Rational::zero(), -s)]
    };
    if eigenvalues.is_empty() {
        return Ok(empty);
    }

    let mut basis = Vec::new();
    let mut characters = Vec::new();
    for lambda in eigenvalues {
        let shifted = &r - &CMatrix::identity(k).scale(&lambda);
        for coords in nullspace(&shifted).vectors() {
            let mut v = vec![G::zero(); d];
            for (c, kv) in coords.iter().zip(v0.vectors()) {
                if c.is_zero() {
                    continue;
                }
                for (acc, x) in v.iter_mut().zip(kv) {
                    *acc += &(c * x);
                }
            }
            basis.push(v);
            characters.push(vec![lambda.clone()]);
        }
    }
    Ok(SpinCWitness {
        basis,
        characters,
        ambient_dim: d,
    })
}

/// The eigenvalue of the lifted center generator on `v`, if `v` is an eigenvector.
pub fn center_character(rep: &CliffordRep, h: &HolonomyAlgebra, v: &[G]) -> Result<Option<G>> {
    let lifted = lift_algebra(rep, h)?;
    let [rho] = lifted.center.as_slice() else {
        return Err(Error::UnsupportedEntry("expected one center generator".into()));
    };
    let image = rho.mul_vec(v);
    let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
        return Err(Error::ZeroSpinor);
    };
    let lambda = image[pivot].clone() / v[pivot].clone();
    let matches = image.iter().zip(v).all(|(a, b)| *a == &lambda * b);
    Ok(matches.then_some(lambda))
}

/// `N`: complex dimension of the (Spin or Spin^c) fixed space.
pub fn parallel_spinor_count(rep: &CliffordRep, h: &HolonomyAlgebra) -> Result<usize> {
    if h.spinc {
        Ok(spinc_fixed_space(rep, h)?.dim())
    } else {
        Ok(fixed_space(rep, h)?.dim())
    }
}

/// Basis of the fixed space for either kind of entry.
pub fn parallel_spinor_basis(rep: &CliffordRep, h: &HolonomyAlgebra) -> Result<Vec<Vec<G>>> {
    if h.spinc {
        Ok(spinc_fixed_space(rep, h)?.basis)
    } else {
        Ok(fixed_space(rep, h)?.vectors().to_vec())
    }
}

fn clifford_columns(rep: &CliffordRep, psi: &Spinor) -> Result<Vec<Vec<G>>> {
    if psi.dim() != rep.spinor_dim() {
        return Err(Error::DimensionMismatch(format!(
            "spinor of dimension {} for Δ of dimension {}",
            psi.dim(),
            rep.spinor_dim()
        )));
    }
    if psi.is_zero() {
        return Err(Error::ZeroSpinor);
    }
    Ok(rep.gammas().iter().map(|g| g.mul_vec(psi.coefficients())).collect())
}

/// Basis of `{x ∈ ℂ^m : Σ x_i·Φ(e_i)·ψ = 0}`.
pub fn annihilator_vectors(rep: &CliffordRep, psi: &Spinor) -> Result<Vec<Vec<G>>> {
    let cols = clifford_columns(rep, psi)?;
    Ok(nullspace(&Matrix::from_columns(rep.spinor_dim(), &cols))
        .vectors()
        .to_vec())
}

/// Real and imaginary parts stacked, so a complex system becomes a real one.
fn realify_columns(cols: &[Vec<G>]) -> Vec<Vec<Rational>> {
    cols.iter()
        .map(|c| {
            c.iter()
                .map(|z| z.re.clone())
                .chain(c.iter().map(|z| z.im.clone()))
                .collect()
        })
        .collect()
}

/// Basis of the real vectors `X` with `X·ψ = 0`.
pub fn real_annihilator(rep: &CliffordRep, psi: &Spinor) -> Result<Vec<Vec<Rational>>> {
    let cols = realify_columns(&clifford_columns(rep, psi)?);
    Ok(nullspace(&Matrix::from_columns(2 * rep.spinor_dim(), &cols))
        .vectors()
        .to_vec())
}

/// A real endomorphism `J` of `R^{p,q}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexStructureJ {
    pub j: QMatrix,
}

impl ComplexStructureJ {
    pub fn squares_to_minus_one(&self) -> bool {
        let m = self.j.rows();
        self.j.matmul(&self.j) == QMatrix::identity(m).scale(&-Rational::one())
    }

    /// `Jᵀ·G·J = G`.
    pub fn is_orthogonal(&self, sig: Signature) -> bool {
        let g = sig.metric::<Rational>();
        self.j.transpose().matmul(&g).matmul(&self.j) == g
    }

    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        self.j.mul_vec(x)
    }
}

/// Solves `X·ψ = i·J(X)·ψ` for a real `J`.
pub fn induced_complex_structure(rep: &CliffordRep, psi: &Spinor) -> Result<ComplexStructureJ> {
    let cols = clifford_columns(rep, psi)?;
    let rotated: Vec<Vec<G>> = cols
        .iter()
        .map(|c| c.iter().map(|z| z * &G::i()).collect())
        .collect();
    let a = Matrix::from_columns(2 * rep.spinor_dim(), &realify_columns(&rotated));
    let targets = realify_columns(&cols);
    let m = rep.signature().dim();
    let mut j = QMatrix::zeros(m, m);
    for (k, b) in targets.iter().enumerate() {
        match solve(&a, b)? {
            Solution::Unique(x) => {
                for (l, v) in x.into_iter().enumerate() {
                    j.set(l, k, v);
                }
            }
            Solution::Inconsistent => return Err(Error::NotKahlerType),
            Solution::Multiple(_) => return Err(Error::DegenerateSpinor),
        }
    }
    let j = ComplexStructureJ { j };
    if !j.squares_to_minus_one() || !j.is_orthogonal(rep.signature()) {
        return Err(Error::Internal(
            "induced J is not an orthogonal complex structure".into(),
        ));
    }
    Ok(j)
}

/// For every basis vector `X` and `Y = −J(X)`: `(X + iY)·ψ = 0`,
/// `G(X,Y) = 0` and `G(X,X) = G(Y,Y)`.
pub fn lemma1_holds(rep: &CliffordRep, psi: &Spinor, j: &ComplexStructureJ) -> Result<bool> {
    let sig = rep.signature();
    let m = sig.dim();
    for k in 0..m {
        let x: Vec<Rational> = (0..m).map(|i| Rational::from_integer(((i == k) as i64).into())).collect();
        let y: Vec<Rational> = j.apply(&x).into_iter().map(|v| -v).collect();
        let z: Vec<G> = x
            .iter()
            .zip(&y)
            .map(|(a, b)| G::new(a.clone(), b.clone()))
            .collect();
        if !rep.clifford_mul(&z, psi)?.is_zero() {
            return Ok(false);
        }
        if !sig.inner(&x, &y).is_zero() || sig.inner(&x, &x) != sig.inner(&y, &y) {
            return Ok(false);
        }
    }
    // Polarized forms of the last two conditions for arbitrary real X.
    let g = sig.metric::<Rational>();
    let gj = g.matmul(&j.j);
    Ok((&gj + &gj.transpose()).is_zero() && j.is_orthogonal(sig))
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Number of Cayley conjugations per entry.
    pub conjugations: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            conjugations: 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub name: String,
    pub signature: Signature,
    pub algebra_dim: usize,
    pub n_expected: usize,
    pub n_computed: usize,
    pub matches: bool,
    pub conjugated_n: Vec<usize>,
    pub conjugation_stable: bool,
    pub basis: Vec<Vec<G>>,
    pub error: Option<String>,
}

fn verify_entry(h: &HolonomyAlgebra, opts: VerifyOptions) -> ReportRow {
    let mut row = ReportRow {
        name: h.name(),
        signature: h.signature,
        algebra_dim: h.dim(),
        n_expected: h.expected_n,
        n_computed: 0,
        matches: false,
        conjugated_n: Vec::new(),
        conjugation_stable: false,
        basis: Vec::new(),
        error: None,
    };
    let result = (|| -> Result<()> {
        let rep = build_rep(h.signature)?;
        row.basis = parallel_spinor_basis(&rep, h)?;
        row.n_computed = row.basis.len();
        row.matches = row.n_computed == h.expected_n;
        for c in 0..opts.conjugations {
            let q = seeded_pseudo_orthogonal(h.signature, opts.seed.wrapping_add(c as u64));
            let q_inv = pseudo_orthogonal_inverse(h.signature, &q);
            let conj = h.conjugate(&q, &q_inv)?;
            row.conjugated_n.push(parallel_spinor_count(&rep, &conj)?);
        }
        row.conjugation_stable = row.conjugated_n.iter().all(|&n| n == row.n_computed);
        Ok(())
    })();
    if let Err(e) = result {
        row.matches = false;
        row.conjugation_stable = false;
        row.error = Some(e.to_string());
    }
    row
}

/// Computes `N` for every entry and re-checks it after conjugation.
/// Rows come back in input order.
pub fn verify_table(entries: &[HolonomyAlgebra], opts: VerifyOptions) -> Vec<ReportRow> {
    entries.par_iter().map(|h| verify_entry(h, opts)).collect()
}
