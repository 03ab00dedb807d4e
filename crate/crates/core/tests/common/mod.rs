//! Independent oracle: fraction-free (Bareiss) elimination over the Gaussian
//! integers, used to recount fixed spinors from stacked dense matrices.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use holospin::{CliffordRep, GaussianRational, QMatrix, Rational, SOElement, Signature};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Zi {
    pub re: BigInt,
    pub im: BigInt,
}

impl Zi {
    pub fn zero() -> Self {
        Zi { re: BigInt::zero(), im: BigInt::zero() }
    }

    pub fn from_int(x: i64) -> Self {
        Zi { re: x.into(), im: BigInt::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Zi) -> Zi {
        Zi { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    pub fn sub(&self, o: &Zi) -> Zi {
        Zi { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    pub fn mul(&self, o: &Zi) -> Zi {
        Zi {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    /// Division that must be exact in `Z[i]`.
    pub fn div_exact(&self, o: &Zi) -> Zi {
        let n = &o.re * &o.re + &o.im * &o.im;
        let re = &self.re * &o.re + &self.im * &o.im;
        let im = &self.im * &o.re - &self.re * &o.im;
        let (qr, rr) = re.div_rem(&n);
        let (qi, ri) = im.div_rem(&n);
        assert!(rr.is_zero() && ri.is_zero(), "inexact Bareiss division");
        Zi { re: qr, im: qi }
    }

    /// `g` must have integer parts.
    pub fn from_gaussian(g: &GaussianRational) -> Zi {
        assert!(g.re.is_integer() && g.im.is_integer());
        Zi { re: g.re.to_integer(), im: g.im.to_integer() }
    }
}

/// Rank by Bareiss elimination; every division is checked to be exact.
pub fn bareiss_rank(mut a: Vec<Vec<Zi>>) -> usize {
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut prev = Zi::from_int(1);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, piv);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let t = a[r][c].mul(&a[i][j]).sub(&a[i][c].mul(&a[r][j]));
                a[i][j] = t.div_exact(&prev);
            }
            a[i][c] = Zi::zero();
        }
        prev = a[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

fn lcm_of_denominators(m: &QMatrix) -> BigInt {
    m.entries().iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

fn dense(rep: &CliffordRep, i: usize) -> Vec<Vec<Zi>> {
    rep.gamma_dense(i)
        .row_vecs()
        .iter()
        .map(|r| r.iter().map(Zi::from_gaussian).collect())
        .collect()
}

fn matmul(a: &[Vec<Zi>], b: &[Vec<Zi>]) -> Vec<Vec<Zi>> {
    let n = a.len();
    let k = b.len();
    let m = b[0].len();
    let mut out = vec![vec![Zi::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[l][j].is_zero() {
                    out[i][j] = out[i][j].add(&a[i][l].mul(&b[l][j]));
                }
            }
        }
    }
    out
}

/// A nonzero integer multiple of the spin lift of `B`, computed densely as
/// `Σ_{i,l} ε_i·B_{li}·Φ(e_i)Φ(e_l)`.
pub fn integral_lift(rep: &CliffordRep, b: &QMatrix) -> Vec<Vec<Zi>> {
    let sig = rep.signature();
    let m = sig.dim();
    let d = rep.spinor_dim();
    let scale = Rational::from_integer(lcm_of_denominators(b));
    let gammas: Vec<_> = (0..m).map(|i| dense(rep, i)).collect();
    let mut out = vec![vec![Zi::zero(); d]; d];
    for i in 0..m {
        for l in 0..m {
            let c = b.get(l, i) * &scale * Rational::from_integer(sig.epsilon(i).into());
            if c.is_zero() {
                continue;
            }
            let c = Zi { re: c.to_integer(), im: BigInt::zero() };
            let prod = matmul(&gammas[i], &gammas[l]);
            for (orow, prow) in out.iter_mut().zip(&prod) {
                for (o, p) in orow.iter_mut().zip(prow) {
                    if !p.is_zero() {
                        *o = o.add(&c.mul(p));
                    }
                }
            }
        }
    }
    out
}

/// Random integer combinations of `gens`, redrawn until they span the same space.
pub fn randomized_spanning_set(gens: &[QMatrix], seed: u64) -> Vec<QMatrix> {
    if gens.is_empty() {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = gens.len() + 2;
    loop {
        let coeffs: Vec<Vec<i64>> = (0..count)
            .map(|_| (0..gens.len()).map(|_| rng.random_range(-4..=4)).collect())
            .collect();
        let rows: Vec<Vec<Zi>> = coeffs
            .iter()
            .map(|r| r.iter().map(|&x| Zi::from_int(x)).collect())
            .collect();
        if bareiss_rank(rows) < gens.len() {
            continue;
        }
        return coeffs
            .iter()
            .map(|cs| {
                let (r, c) = gens[0].shape();
                let mut acc = QMatrix::zeros(r, c);
                for (g, &x) in gens.iter().zip(cs) {
                    acc = &acc + &g.scale(&Rational::from_integer(x.into()));
                }
                acc
            })
            .collect();
    }
}

/// `dim Δ − rank` of the stacked integral lifts of a randomized spanning set.
pub fn oracle_fixed_dim(rep: &CliffordRep, gens: &[SOElement], seed: u64) -> usize {
    let mats: Vec<QMatrix> = gens.iter().map(|g| g.matrix().clone()).collect();
    let stacked: Vec<Vec<Zi>> = randomized_spanning_set(&mats, seed)
        .iter()
        .flat_map(|b| integral_lift(rep, b))
        .collect();
    rep.spinor_dim() - bareiss_rank(stacked)
}

/// Like [`oracle_fixed_dim`] but with `ρ − λ` appended, for a Gaussian
/// rational `λ = a + b·i`. Everything is scaled to stay integral.
pub fn oracle_character_dim(
    rep: &CliffordRep,
    derived: &[SOElement],
    center: &SOElement,
    lambda: &GaussianRational,
    seed: u64,
) -> usize {
    let mats: Vec<QMatrix> = derived.iter().map(|g| g.matrix().clone()).collect();
    let mut stacked: Vec<Vec<Zi>> = randomized_spanning_set(&mats, seed)
        .iter()
        .flat_map(|b| integral_lift(rep, b))
        .collect();
    // integral_lift(B) = 4·s·λ_*⁻¹(B), s = lcm of B's denominators.
    let s = Rational::from_integer(lcm_of_denominators(center.matrix()));
    let four_s = s * Rational::from_integer(4.into());
    let lam = GaussianRational::new(&lambda.re * &four_s, &lambda.im * &four_s);
    let den = lam.re.denom().lcm(lam.im.denom());
    let den_r = Rational::from_integer(den.clone());
    let lam = Zi::from_gaussian(&GaussianRational::new(&lam.re * &den_r, &lam.im * &den_r));
    let rho = integral_lift(rep, center.matrix());
    let den_zi = Zi { re: den, im: BigInt::zero() };
    for (i, row) in rho.into_iter().enumerate() {
        let mut row: Vec<Zi> = row.iter().map(|x| x.mul(&den_zi)).collect();
        row[i] = row[i].sub(&lam);
        stacked.push(row);
    }
    rep.spinor_dim() - bareiss_rank(stacked)
}

pub fn signatures_up_to(max_dim: usize) -> Vec<Signature> {
    let mut out = Vec::new();
    for m in 1..=max_dim {
        for p in 0..=m {
            let sig = Signature::new(p, m - p);
            if m % 2 == 1 && sig.q == 0 {
                continue;
            }
            out.push(sig);
        }
    }
    out
}

