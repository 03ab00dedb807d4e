mod common;

use common::signatures_up_to;
use holospin::catalog::{catalog, HolonomyAlgebra, HolonomyKind};
use holospin::linalg::{nullspace, simultaneous_kernel, solve_in_span, Subspace};
use holospin::parallel::{fixed_space, lift_algebra};
use holospin::pseudo_orthogonal::{cayley_pseudo_orthogonal, is_pseudo_orthogonal};
use holospin::spin_lie::{
    alpha_star, alpha_tilde_star, complex_parts, lambda_inv, lift_certificate_holds, so_basis,
    su_basis, u_center_generator, u_embedding_complex, xi_star_element,
};
use holospin::{build_rep, CMatrix, GaussianRational as G, Matrix, Rational, SOElement, Signature};
use holospin::Scalar;
use num_traits::Zero;
use proptest::prelude::*;

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn gaussian() -> impl Strategy<Value = G> {
    (-20i64..=20, 1i64..=6, -20i64..=20, 1i64..=6).prop_map(|(a, b, c, d)| G::from_parts(a, b, c, d))
}

fn signature(max_dim: usize) -> impl Strategy<Value = Signature> {
    proptest::sample::select(signatures_up_to(max_dim).into_iter().filter(|s| s.dim() >= 2).collect::<Vec<_>>())
}

fn so_element(sig: Signature) -> impl Strategy<Value = SOElement> {
    let n = sig.dim() * (sig.dim() - 1) / 2;
    proptest::collection::vec((-3i64..=3, 1i64..=3), n).prop_map(move |cs| {
        let mut acc = SOElement::zero(sig);
        for (e, (a, b)) in so_basis(sig).iter().zip(cs) {
            acc = acc.add(&e.scale(&r(a, b))).unwrap();
        }
        acc
    })
}

fn sig_and_two_elements(max_dim: usize) -> impl Strategy<Value = (Signature, SOElement, SOElement)> {
    signature(max_dim).prop_flat_map(|s| (Just(s), so_element(s), so_element(s)))
}

/// A random element of `u(p',q')` as a combination of the su basis and `D₁`.
fn unitary_element() -> impl Strategy<Value = ((usize, usize), CMatrix)> {
    proptest::sample::select(vec![(1usize, 0usize), (0, 1), (1, 1), (2, 0), (1, 2)]).prop_flat_map(|(a, b)| {
        let basis: Vec<CMatrix> = su_basis(a, b).into_iter().chain([u_center_generator(a, b)]).collect();
        let n = basis.len();
        proptest::collection::vec(-4i64..=4, n).prop_map(move |cs| {
            let k = a + b;
            let mut acc = CMatrix::zeros(k, k);
            for (m, c) in basis.iter().zip(cs) {
                acc = &acc + &m.scale(&G::from(c));
            }
            ((a, b), acc)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn gaussian_field_axioms(a in gaussian(), b in gaussian(), c in gaussian()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), G::from(1));
        }
        prop_assert_eq!(G::parse_exact(&a.to_string()), Some(a.clone()));
        prop_assert!((&a * &a.conj()).im.is_zero());
    }

    #[test]
    fn lift_is_a_lie_homomorphism((sig, b1, b2) in sig_and_two_elements(5)) {
        let rep = build_rep(sig).unwrap();
        let l1 = lambda_inv(&rep, &b1).unwrap();
        let l2 = lambda_inv(&rep, &b2).unwrap();
        let bracket = lambda_inv(&rep, &b1.bracket(&b2).unwrap()).unwrap();
        prop_assert_eq!(bracket, l1.commutator(&l2));
    }

    #[test]
    fn lift_certificate_for_random_elements((sig, b, _) in sig_and_two_elements(6)) {
        let rep = build_rep(sig).unwrap();
        prop_assert!(lift_certificate_holds(&rep, &b).unwrap());
    }

    #[test]
    fn unitary_embedding_is_an_injective_homomorphism(
        ((a, b), x) in unitary_element(),
        cs in proptest::collection::vec(-3i64..=3, 9),
    ) {
        // A second element of the same algebra.
        let basis: Vec<CMatrix> = su_basis(a, b).into_iter().chain([u_center_generator(a, b)]).collect();
        let k = a + b;
        let mut y = CMatrix::zeros(k, k);
        for (m, c) in basis.iter().zip(&cs) {
            y = &y + &m.scale(&G::from(*c));
        }
        let ix = u_embedding_complex(a, b, &x).unwrap();
        let iy = u_embedding_complex(a, b, &y).unwrap();
        let ixy = u_embedding_complex(a, b, &x.commutator(&y)).unwrap();
        prop_assert_eq!(ixy, ix.bracket(&iy).unwrap());
        prop_assert_eq!(ix.is_zero(), x.is_zero());
    }

    #[test]
    fn xi_after_alpha_tilde_is_alpha(((a, b), x) in unitary_element()) {
        let sig = holospin::spin_lie::unitary_ambient(a, b);
        let rep = build_rep(sig).unwrap();
        let (re, im) = complex_parts(&x);
        let lifted = alpha_tilde_star(&rep, a, b, &re, &im).unwrap();
        prop_assert_eq!(xi_star_element(&rep, &lifted).unwrap(), alpha_star(a, b, &re, &im).unwrap());
    }

    #[test]
    fn cayley_transforms_are_pseudo_orthogonal((sig, b, _) in sig_and_two_elements(5)) {
        match cayley_pseudo_orthogonal(sig, b.matrix()) {
            Ok(q) => prop_assert!(is_pseudo_orthogonal(sig, &q)),
            Err(e) => prop_assert_eq!(e, holospin::Error::Singular),
        }
    }

    #[test]
    fn adding_generators_never_grows_the_fixed_space(
        (sig, b1, b2) in sig_and_two_elements(5),
    ) {
        let rep = build_rep(sig).unwrap();
        let mk = |gens: Vec<SOElement>| HolonomyAlgebra {
            kind: HolonomyKind::Su,
            params: None,
            signature: sig,
            derived_generators: gens,
            center_complement: Vec::new(),
            expected_n: 0,
            spinc: false,
        };
        let one = fixed_space(&rep, &mk(vec![b1.clone()])).unwrap();
        let two = fixed_space(&rep, &mk(vec![b1, b2])).unwrap();
        prop_assert!(two.dim() <= one.dim());
        prop_assert!(two.is_subspace_of(&one));
    }

    #[test]
    fn canonical_spans_ignore_the_spanning_set(
        vs in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 5), 1..5),
        scale in 1i64..5,
    ) {
        let q: Vec<Vec<Rational>> = vs.iter().map(|v| v.iter().map(|&x| r(x, 1)).collect()).collect();
        let mut alt: Vec<Vec<Rational>> = q.iter().rev().map(|v| v.iter().map(|x| x * r(scale, 1)).collect()).collect();
        if q.len() > 1 {
            let sum: Vec<Rational> = q[0].iter().zip(&q[1]).map(|(a, b)| a + b).collect();
            alt.push(sum);
        }
        let a = Subspace::span(5, &q).unwrap();
        let b = Subspace::span(5, &alt).unwrap();
        prop_assert_eq!(a.vectors(), b.vectors());
    }

    #[test]
    fn iterative_kernel_equals_stacked_nullspace(
        mats in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 12), 1..4),
    ) {
        let ms: Vec<Matrix<Rational>> = mats
            .iter()
            .map(|v| Matrix::new(3, 4, v.iter().map(|&x| r(x, 1)).collect()).unwrap())
            .collect();
        let stacked = Matrix::vstack(&ms).unwrap();
        let k = simultaneous_kernel(4, &ms).unwrap();
        let direct = nullspace(&stacked);
        prop_assert_eq!(k.vectors(), direct.vectors());
    }
}

#[test]
fn anticommutation_up_to_dimension_nine() {
    for sig in signatures_up_to(9) {
        assert!(build_rep(sig).unwrap().anticommutation_holds(), "{sig}");
    }
}

#[test]
fn generators_square_to_minus_epsilon() {
    for sig in signatures_up_to(6) {
        let rep = build_rep(sig).unwrap();
        for i in 0..sig.dim() {
            let g = rep.gamma_dense(i);
            let expected = CMatrix::identity(rep.spinor_dim()).scale(&G::from(-sig.epsilon(i)));
            assert_eq!(g.matmul(&g), expected);
        }
    }
}

#[test]
fn lifted_catalog_generators_satisfy_the_certificate() {
    for kind in [HolonomyKind::G2, HolonomyKind::G2Split] {
        let h = catalog(kind, None).unwrap();
        let rep = build_rep(h.signature).unwrap();
        for b in h.generators() {
            assert!(lift_certificate_holds(&rep, b).unwrap());
        }
        assert_eq!(lift_algebra(&rep, &h).unwrap().len(), 14);
    }
}

#[test]
fn bivectors_decompose_over_the_bivector_basis() {
    let rep = build_rep(Signature::new(0, 2)).unwrap();
    let u = rep.gamma_dense(0);
    let v = rep.gamma_dense(1);
    let conj = u.matmul(&v).matmul(&u.inverse().unwrap());
    assert_eq!(solve_in_span(&conj, &[u, v]), Some(vec![G::zero(), G::from(-1)]));
}
