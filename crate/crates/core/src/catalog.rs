//! Explicit generators for the holonomy algebras admitting parallel spinors.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::clifford::CMatrix;
use crate::error::{Error, Result};
use crate::linalg::{nullspace, rank_of_vectors, Subspace};
use crate::matrix::Matrix;
use crate::pseudo_orthogonal::QMatrix;
use crate::scalar::{GaussianRational as G, Rational, Scalar};
use crate::signature::Signature;
use crate::spin_lie::{
    hermitian_signature, so_basis, u_algebra_basis, u_embedding_complex, unitary_ambient,
    SOElement,
};

/// A constant exterior `k`-form on `R^m`, stored on increasing index tuples.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExteriorForm {
    degree: usize,
    dim: usize,
    coefficients: BTreeMap<Vec<usize>, Rational>,
}

/// Sorts `indices`, returning the sign of the permutation, or `None` on a repeat.
fn sort_with_sign(indices: &[usize]) -> Option<(Vec<usize>, i64)> {
    let mut v = indices.to_vec();
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, sign))
}

fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, k, &mut Vec::with_capacity(k), &mut out);
    out
}

impl ExteriorForm {
    pub fn zero(dim: usize, degree: usize) -> Self {
        ExteriorForm {
            degree,
            dim,
            coefficients: BTreeMap::new(),
        }
    }

    /// Builds a form from `(indices, coefficient)` terms; indices are
    /// zero-based and may come in any order (the sign is adjusted).
    pub fn from_terms(
        dim: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (Vec<usize>, Rational)>,
    ) -> Result<Self> {
        let mut form = ExteriorForm::zero(dim, degree);
        for (idx, c) in terms {
            form.add_term(&idx, c)?;
        }
        Ok(form)
    }

    pub fn add_term(&mut self, indices: &[usize], c: Rational) -> Result<()> {
        if indices.len() != self.degree || indices.iter().any(|&i| i >= self.dim) {
            return Err(Error::DimensionMismatch(format!(
                "term {indices:?} in a {}-form on R^{}",
                self.degree, self.dim
            )));
        }
        let Some((key, sign)) = sort_with_sign(indices) else {
            return Ok(());
        };
        let c = if sign < 0 { -c } else { c };
        let entry = self.coefficients.entry(key).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coefficients.remove(indices_sorted(indices).as_slice());
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.coefficients.iter()
    }

    /// `φ(e_{i_1},…,e_{i_k})` for any index tuple.
    pub fn evaluate(&self, indices: &[usize]) -> Rational {
        match sort_with_sign(indices) {
            None => Rational::zero(),
            Some((key, sign)) => match self.coefficients.get(&key) {
                None => Rational::zero(),
                Some(c) if sign < 0 => -c.clone(),
                Some(c) => c.clone(),
            },
        }
    }

    /// Coefficient vector over all increasing `k`-tuples in lexicographic order.
    pub fn coefficient_vector(&self) -> Vec<Rational> {
        combinations(self.dim, self.degree)
            .iter()
            .map(|t| self.evaluate(t))
            .collect()
    }

    /// Renames coordinate `i` to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let terms = self
            .coefficients
            .iter()
            .map(|(k, c)| (k.iter().map(|&i| perm[i]).collect(), c.clone()));
        ExteriorForm::from_terms(self.dim, self.degree, terms)
    }
}

fn indices_sorted(indices: &[usize]) -> Vec<usize> {
    let mut v = indices.to_vec();
    v.sort_unstable();
    v
}

/// `(B·φ)(X_1,…,X_k) = −Σ_j φ(X_1,…,B·X_j,…,X_k)`.
pub fn form_action(b: &SOElement, phi: &ExteriorForm) -> Result<ExteriorForm> {
    let m = b.signature().dim();
    if phi.dim != m {
        return Err(Error::DimensionMismatch(format!(
            "so on R^{m} acting on a form on R^{}",
            phi.dim
        )));
    }
    let mat = b.matrix();
    let mut out = ExteriorForm::zero(m, phi.degree);
    for tuple in combinations(m, phi.degree) {
        let mut acc = Rational::zero();
        let mut t = tuple.clone();
        for j in 0..tuple.len() {
            for l in 0..m {
                let blj = mat.get(l, tuple[j]);
                if blj.is_zero() {
                    continue;
                }
                t[j] = l;
                acc -= blj * phi.evaluate(&t);
            }
            t[j] = tuple[j];
        }
        if !acc.is_zero() {
            out.coefficients.insert(tuple, acc);
        }
    }
    Ok(out)
}

/// Basis of `{B ∈ so(p,q) : B·φ = 0}`.
pub fn stabilizer_in_so(sig: Signature, phi: &ExteriorForm) -> Result<Vec<SOElement>> {
    let basis = so_basis(sig);
    let columns = basis
        .iter()
        .map(|e| form_action(e, phi).map(|f| f.coefficient_vector()))
        .collect::<Result<Vec<_>>>()?;
    let rows = columns.first().map_or(0, Vec::len);
    let action = Matrix::from_columns(rows, &columns);
    nullspace(&action)
        .vectors()
        .iter()
        .map(|c| combine(sig, &basis, c))
        .collect()
}

fn combine(sig: Signature, basis: &[SOElement], coeffs: &[Rational]) -> Result<SOElement> {
    let mut acc = SOElement::zero(sig);
    for (e, c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            acc = acc.add(&e.scale(c))?;
        }
    }
    Ok(acc)
}

const ASSOCIATIVE_TERMS: [([usize; 3], i64); 7] = [
    ([1, 2, 7], 1),
    ([3, 4, 7], 1),
    ([5, 6, 7], 1),
    ([1, 3, 5], 1),
    ([1, 4, 6], -1),
    ([2, 3, 6], -1),
    ([2, 4, 5], -1),
];

/// Directions that become negative in the split forms (one-based).
const SPLIT_NEGATIVE: [usize; 4] = [3, 4, 5, 6];

/// New order of the coordinates after splitting, so negatives come first.
const SPLIT_ORDER: [usize; 8] = [3, 4, 5, 6, 1, 2, 7, 8];

fn int(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

/// `φ = e¹²⁷ + e³⁴⁷ + e⁵⁶⁷ + e¹³⁵ − e¹⁴⁶ − e²³⁶ − e²⁴⁵`.
pub fn associative_form() -> ExteriorForm {
    ExteriorForm::from_terms(
        7,
        3,
        ASSOCIATIVE_TERMS
            .iter()
            .map(|(t, c)| (t.iter().map(|i| i - 1).collect(), int(*c))),
    )
    .expect("valid terms")
}

/// `φ ∧ e⁸ + *φ` on `R^8`.
pub fn cayley_form() -> ExteriorForm {
    let phi = associative_form();
    let mut psi = ExteriorForm::zero(8, 4);
    for (t, c) in phi.terms() {
        let mut idx = t.clone();
        idx.push(7);
        psi.add_term(&idx, c.clone()).expect("valid term");
        let complement: Vec<usize> = (0..7).filter(|i| !t.contains(i)).collect();
        // *e^T = s·e^{T^c} with e^T ∧ e^{T^c} = s·vol.
        let mut full = t.clone();
        full.extend(&complement);
        let (_, s) = sort_with_sign(&full).expect("disjoint");
        let mut star = ExteriorForm::zero(8, 4);
        star.add_term(&complement, c * int(s)).expect("valid term");
        for (k, v) in star.terms() {
            psi.add_term(k, v.clone()).expect("valid term");
        }
    }
    psi
}

/// Substitutes `e_s → i·e_s` for the split directions, then moves them first.
fn split(form: &ExteriorForm) -> ExteriorForm {
    let mut out = ExteriorForm::zero(form.dim, form.degree);
    for (t, c) in form.terms() {
        let hits = t.iter().filter(|&&i| SPLIT_NEGATIVE.contains(&(i + 1))).count();
        debug_assert!(hits % 2 == 0);
        let sign = if (hits / 2) % 2 == 0 { 1 } else { -1 };
        out.add_term(t, c * int(sign)).expect("valid term");
    }
    let mut perm = vec![0; form.dim];
    for (new, &old) in SPLIT_ORDER.iter().take(form.dim).enumerate() {
        perm[old - 1] = new;
    }
    out.relabel(&perm).expect("permutation")
}

/// Split associative form, stabilized by `g₂₍₂₎ ⊂ so(4,3)`.
pub fn split_associative_form() -> ExteriorForm {
    split(&associative_form())
}

/// Split Cayley form, stabilized by `spin(4,3) ⊂ so(4,4)`.
pub fn split_cayley_form() -> ExteriorForm {
    split(&cayley_form())
}

/// A quaternion `z₁ + z₂·j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quaternion(pub G, pub G);

impl Quaternion {
    pub fn units() -> [Quaternion; 4] {
        [
            Quaternion(G::one(), G::zero()),
            Quaternion(G::i(), G::zero()),
            Quaternion(G::zero(), G::one()),
            Quaternion(G::zero(), G::i()),
        ]
    }

    pub fn conj(&self) -> Quaternion {
        Quaternion(self.0.conj(), -self.1.clone())
    }

    pub fn scale(&self, s: i64) -> Quaternion {
        let s = G::from(s);
        Quaternion(&self.0 * &s, &self.1 * &s)
    }

    /// `(z₁ z₂; −z̄₂ z̄₁)`.
    pub fn to_complex_block(&self) -> [[G; 2]; 2] {
        [
            [self.0.clone(), self.1.clone()],
            [-self.1.conj(), self.0.conj()],
        ]
    }
}

fn quaternionic_to_complex(x: &[Vec<Quaternion>]) -> CMatrix {
    let k = x.len();
    let mut out = CMatrix::zeros(2 * k, 2 * k);
    for (r, row) in x.iter().enumerate() {
        for (c, q) in row.iter().enumerate() {
            let b = q.to_complex_block();
            for (a, brow) in b.iter().enumerate() {
                for (d, v) in brow.iter().enumerate() {
                    out.set(2 * r + a, 2 * c + d, v.clone());
                }
            }
        }
    }
    out
}

/// Basis of `sp(p',q')` realified through `ℍ^k → ℂ^{2k} → ℝ^{4k}`.
pub fn sp_algebra(pprime: usize, qprime: usize) -> Result<Vec<SOElement>> {
    let h = hermitian_signature(pprime, qprime);
    let k = h.dim();
    if k == 0 {
        return Err(Error::InvalidArgument("sp(0,0) is empty".into()));
    }
    let zero = || vec![vec![Quaternion(G::zero(), G::zero()); k]; k];
    let units = Quaternion::units();
    let mut quaternionic = Vec::new();
    for d in 0..k {
        for u in &units[1..] {
            let mut x = zero();
            x[d][d] = u.clone();
            quaternionic.push(x);
        }
    }
    for r in 0..k {
        for c in r + 1..k {
            let s = h.epsilon(r) * h.epsilon(c);
            for u in &units {
                let mut x = zero();
                x[r][c] = u.clone();
                x[c][r] = u.conj().scale(-s);
                quaternionic.push(x);
            }
        }
    }
    quaternionic
        .iter()
        .map(|x| u_embedding_complex(2 * h.p, 2 * h.q, &quaternionic_to_complex(x)))
        .collect()
}

/// Realifies complex generators `Z = X + i·Y` of `so(m,ℂ)` in coordinates
/// `(y, x)`, giving `(X Y; −Y X) ∈ so(m,m)`. Each `Z` contributes `Z` and `i·Z`.
pub fn realify_complex_subalgebra(generators: &[CMatrix], source_dim: usize) -> Result<Vec<SOElement>> {
    let m = source_dim;
    let sig = Signature::new(m, m);
    let mut out = Vec::with_capacity(2 * generators.len());
    for z in generators {
        if z.shape() != (m, m) {
            return Err(Error::DimensionMismatch(format!(
                "generator of shape {:?}, expected ({m},{m})",
                z.shape()
            )));
        }
        if z.transpose() != z.scale(&-G::one()) {
            return Err(Error::InvalidArgument(
                "complex generator is not antisymmetric".into(),
            ));
        }
        for w in [z.clone(), z.scale(&G::i())] {
            let mut r = QMatrix::zeros(2 * m, 2 * m);
            for a in 0..m {
                for b in 0..m {
                    let v = w.get(a, b);
                    r.set(a, b, v.re.clone());
                    r.set(a, m + b, v.im.clone());
                    r.set(m + a, b, -v.im.clone());
                    r.set(m + a, m + b, v.re.clone());
                }
            }
            out.push(SOElement::new(sig, r)?);
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HolonomyKind {
    Su,
    Sp,
    U,
    G2,
    G2Split,
    G2Complex,
    Spin7,
    Spin43,
    Spin7Complex,
}

impl HolonomyKind {
    pub const ALL: [HolonomyKind; 9] = [
        HolonomyKind::Su,
        HolonomyKind::Sp,
        HolonomyKind::U,
        HolonomyKind::G2,
        HolonomyKind::G2Split,
        HolonomyKind::G2Complex,
        HolonomyKind::Spin7,
        HolonomyKind::Spin43,
        HolonomyKind::Spin7Complex,
    ];

    pub fn label(self) -> &'static str {
        match self {
            HolonomyKind::Su => "su",
            HolonomyKind::Sp => "sp",
            HolonomyKind::U => "u",
            HolonomyKind::G2 => "g2",
            HolonomyKind::G2Split => "g2_split",
            HolonomyKind::G2Complex => "g2_complex",
            HolonomyKind::Spin7 => "spin7",
            HolonomyKind::Spin43 => "spin43",
            HolonomyKind::Spin7Complex => "spin7_complex",
        }
    }

    pub fn needs_params(self) -> bool {
        matches!(self, HolonomyKind::Su | HolonomyKind::Sp | HolonomyKind::U)
    }
}

impl fmt::Display for HolonomyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for HolonomyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        HolonomyKind::ALL
            .into_iter()
            .find(|k| k.label() == s)
            .ok_or_else(|| Error::UnknownHolonomy(s.to_string()))
    }
}

/// A holonomy algebra given by generators inside `so(p,q)`.
#[derive(Clone, Debug)]
pub struct HolonomyAlgebra {
    pub kind: HolonomyKind,
    pub params: Option<(usize, usize)>,
    pub signature: Signature,
    pub derived_generators: Vec<SOElement>,
    /// Nonempty only for `u(p',q')`.
    pub center_complement: Vec<SOElement>,
    pub expected_n: usize,
    pub spinc: bool,
}

impl HolonomyAlgebra {
    /// Row label such as `su(1,1)` or `g2`.
    pub fn name(&self) -> String {
        match self.params {
            Some((a, b)) => format!("{}({a},{b})", self.kind),
            None => self.kind.to_string(),
        }
    }

    pub fn dim(&self) -> usize {
        self.derived_generators.len() + self.center_complement.len()
    }

    pub fn generators(&self) -> impl Iterator<Item = &SOElement> {
        self.derived_generators.iter().chain(&self.center_complement)
    }

    /// Conjugates every generator by `Q ∈ O(p,q)`.
    pub fn conjugate(&self, q: &QMatrix, q_inv: &QMatrix) -> Result<Self> {
        let conj = |v: &[SOElement]| -> Result<Vec<SOElement>> {
            v.iter().map(|e| e.conjugate(q, q_inv)).collect()
        };
        Ok(HolonomyAlgebra {
            derived_generators: conj(&self.derived_generators)?,
            center_complement: conj(&self.center_complement)?,
            ..self.clone()
        })
    }

    fn flattened(&self) -> Vec<Vec<Rational>> {
        self.generators().map(|e| e.matrix().entries().to_vec()).collect()
    }

    pub fn generators_in_so(&self) -> bool {
        self.generators().all(|e| {
            e.signature() == self.signature
                && crate::pseudo_orthogonal::is_in_so(self.signature, e.matrix())
        })
    }

    pub fn is_independent(&self) -> bool {
        rank_of_vectors(&self.flattened()) == self.dim()
    }

    /// Whether every bracket of generators lies in their span.
    pub fn is_closed(&self) -> bool {
        let m = self.signature.dim();
        let Ok(span) = Subspace::span(m * m, &self.flattened()) else {
            return false;
        };
        let gens: Vec<&SOElement> = self.generators().collect();
        for (a, x) in gens.iter().enumerate() {
            for y in &gens[a + 1..] {
                let br = x.matrix().commutator(y.matrix());
                if !span.contains(br.entries()) {
                    return false;
                }
            }
        }
        true
    }
}

/// Assembles a catalog entry; `params` is `(p', q')` for `su`, `sp` and `u`.
pub fn catalog(kind: HolonomyKind, params: Option<(usize, usize)>) -> Result<HolonomyAlgebra> {
    if kind.needs_params() {
        match params {
            Some((a, b)) if a + b > 0 => {}
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "{kind} needs p' + q' ≥ 1"
                )))
            }
        }
    } else if params.is_some() {
        return Err(Error::InvalidArgument(format!("{kind} takes no parameters")));
    }
    let entry = |signature, derived_generators, expected_n| HolonomyAlgebra {
        kind,
        params,
        signature,
        derived_generators,
        center_complement: Vec::new(),
        expected_n,
        spinc: false,
    };
    Ok(match kind {
        HolonomyKind::Su => {
            let (a, b) = params.expect("checked");
            let (derived, _) = u_algebra_basis(a, b)?;
            entry(unitary_ambient(a, b), derived, 2)
        }
        HolonomyKind::U => {
            let (a, b) = params.expect("checked");
            let (derived, d1) = u_algebra_basis(a, b)?;
            HolonomyAlgebra {
                center_complement: vec![d1],
                spinc: true,
                ..entry(unitary_ambient(a, b), derived, 2)
            }
        }
        HolonomyKind::Sp => {
            let (a, b) = params.expect("checked");
            let h = hermitian_signature(a, b);
            let sig = Signature::new(4 * h.p, 4 * h.q);
            entry(sig, sp_algebra(a, b)?, a + b + 1)
        }
        HolonomyKind::G2 => {
            let sig = Signature::new(0, 7);
            entry(sig, stabilizer_in_so(sig, &associative_form())?, 1)
        }
        HolonomyKind::G2Split => {
            let sig = Signature::new(4, 3);
            entry(sig, stabilizer_in_so(sig, &split_associative_form())?, 1)
        }
        HolonomyKind::Spin7 => {
            let sig = Signature::new(0, 8);
            entry(sig, stabilizer_in_so(sig, &cayley_form())?, 1)
        }
        HolonomyKind::Spin43 => {
            let sig = Signature::new(4, 4);
            entry(sig, stabilizer_in_so(sig, &split_cayley_form())?, 1)
        }
        HolonomyKind::G2Complex => {
            let compact = catalog(HolonomyKind::G2, None)?;
            let gens: Vec<CMatrix> = compact.derived_generators.iter().map(SOElement::to_complex).collect();
            entry(Signature::new(7, 7), realify_complex_subalgebra(&gens, 7)?, 2)
        }
        HolonomyKind::Spin7Complex => {
            let compact = catalog(HolonomyKind::Spin7, None)?;
            let gens: Vec<CMatrix> = compact.derived_generators.iter().map(SOElement::to_complex).collect();
            entry(Signature::new(8, 8), realify_complex_subalgebra(&gens, 8)?, 1)
        }
    })
}

/// The fixed list of rows verified by `table1`.
pub fn default_suite() -> Result<Vec<HolonomyAlgebra>> {
    use HolonomyKind::*;
    [
        (Su, Some((2, 0))),
        (Su, Some((1, 1))),
        (Sp, Some((1, 0))),
        (Sp, Some((1, 1))),
        (Sp, Some((2, 0))),
        (G2, None),
        (G2Split, None),
        (G2Complex, None),
        (Spin7, None),
        (Spin43, None),
        (Spin7Complex, None),
        (U, Some((1, 1))),
        (U, Some((2, 0))),
    ]
    .into_iter()
    .map(|(k, p)| catalog(k, p))
    .collect()
}
