//! Symplectic structures, r-matrices and the symplectic double extension.

use jforge::catalog;
use jforge::extensions::AdmissiblePair;
use jforge::linalg::vector;
use jforge::scalar::{frac, int, one, zero};
use jforge::symplectic::{
    bridge_from_derivation, bridge_from_omega, check_nil1, check_symplectic, cjr_functional, cjr_tensor,
    delta_r_and_double, double_report, image_u_symplectic, peel_symplectic, peel_symplectic_at,
    symplectic_double_extension, u_identity_holds, ybe_check, Comultiplication, RMatrix, SymplecticPe,
};
use jforge::{Error, Matrix, PseudoEuclidean};

fn hyperbolic_omega() -> Matrix {
    Matrix::from_i64(&[&[0, 1], &[-1, 0]])
}

fn j20_symplectic() -> SymplecticPe {
    SymplecticPe::new(catalog::j2(&zero()), hyperbolic_omega()).unwrap()
}

#[test]
fn check_symplectic_basics() {
    let j20 = catalog::j2(&zero());
    assert!(check_symplectic(&j20.algebra, &hyperbolic_omega()).ok());
    // on J_2_1 the cyclic sum at (a1, a1, a1) is 3 w(b1, a1)
    let j21 = catalog::j2(&one());
    let rep = check_symplectic(&j21.algebra, &hyperbolic_omega());
    assert_eq!(rep.first_violation, Some((0, 0, 0)));
    let sym = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
    assert!(!check_symplectic(&j20.algebra, &sym).antisymmetric);
}

#[test]
fn j21_has_no_compatible_derivation() {
    // the cyclic identity holds but the bridged D is not a derivation
    let j21 = catalog::j2(&one());
    let br = bridge_from_omega(&j21, &hyperbolic_omega());
    assert!(!br.symplectic());
    // derivations are D(a1) = p a1 + q b1, D(b1) = 2p b1; antisymmetry forces p = q = 0
    for (pp, q) in [(0, 1), (1, 0), (1, 1), (0, 0)] {
        let mut d = Matrix::zeros(2, 2);
        d[(0, 0)] = int(pp);
        d[(1, 0)] = int(q);
        d[(1, 1)] = int(2 * pp);
        let br = bridge_from_derivation(&j21, &d);
        assert!(br.derivation);
        assert_eq!(br.antisymmetric, pp == 0 && q == 0);
        assert!(!br.symplectic());
    }
    let mut d = Matrix::identity(2);
    d[(1, 1)] = int(-1);
    assert!(!bridge_from_derivation(&j21, &d).derivation);
}

#[test]
fn tensor_example_is_symplectic() {
    let (p, dbar) = catalog::tensor_symplectic_example(&catalog::unit1().algebra, 2).unwrap();
    let br = bridge_from_derivation(&p, &dbar);
    assert!(br.derivation && br.antisymmetric && br.invertible);
    assert!(check_symplectic(&p.algebra, &br.omega).ok());
    assert_eq!(check_nil1(&p.algebra, &dbar), Some(true));
    let u = dbar.inverse().unwrap();
    assert!(u_identity_holds(&p.algebra, &u));
    let r = RMatrix::from_u(&p, &u).unwrap();
    let rep = ybe_check(&p, &r).unwrap();
    assert!(rep.cjr_zero && rep.u_morphism && rep.u_antisymmetric && rep.dual_isomorphic);
    assert_eq!(rep.u, u);
    assert!(rep.star.is_some());
    let dbl = delta_r_and_double(&p.algebra, &r).unwrap();
    assert!(dbl.is_bialgebra);
    let img = image_u_symplectic(&p, &r).unwrap();
    assert!(img.image.is_full());
}

#[test]
fn tensor_and_functional_evaluators_agree_on_failures() {
    let p = catalog::hermitian(2).unwrap();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let mut m = Matrix::zeros(3, 3);
        m[(i, j)] = one();
        m[(j, i)] = int(-1);
        let r = RMatrix::new(m).unwrap();
        assert_eq!(cjr_tensor(&p.algebra, &r), cjr_functional(&p.algebra, &r));
    }
    let mut m = Matrix::zeros(3, 3);
    m[(0, 1)] = one();
    m[(1, 0)] = int(-1);
    let rep = ybe_check(&p, &RMatrix::new(m).unwrap()).unwrap();
    assert!(!rep.cjr_zero);
}

#[test]
fn r_must_be_antisymmetric() {
    assert!(matches!(RMatrix::new(Matrix::identity(2)), Err(Error::NotAntisymmetric(_))));
}

#[test]
fn zero_r() {
    let p = catalog::j2(&one());
    let r = RMatrix::new(Matrix::zeros(2, 2)).unwrap();
    let rep = ybe_check(&p, &r).unwrap();
    assert!(rep.cjr_zero);
    assert!(rep.u.is_zero());
    assert!(rep.star.unwrap().algebra().product_space(&jforge::Subspace::full(2), &jforge::Subspace::full(2)).is_zero());
    assert!(image_u_symplectic(&p, &r).unwrap().image.is_zero());
    assert!(delta_r_and_double(&p.algebra, &r).unwrap().delta.is_zero());
}

#[test]
fn zero_comultiplication_double_of_j21() {
    let p = catalog::j2(&one());
    let rep = double_report(&p.algebra, Comultiplication::zero(2)).unwrap();
    assert_eq!(rep.double.dim(), 4);
    // a1 a1 = b1 and a1 * b1* = a1* through the star action
    assert_eq!(rep.double.product(0, 3), &vec![zero(), zero(), one(), zero()]);
    assert!(rep.is_bialgebra);
}

#[test]
fn rank_deficient_r_on_two_copies() {
    let p = catalog::j2(&zero()).orthogonal_sum(&catalog::j2(&zero()));
    let mut m = Matrix::zeros(4, 4);
    m[(0, 1)] = one();
    m[(1, 0)] = int(-1);
    let r = RMatrix::new(m).unwrap();
    let img = image_u_symplectic(&p, &r).unwrap();
    assert_eq!(img.image, jforge::Subspace::span(4, [vector::unit(4, 0), vector::unit(4, 1)]));
}

#[test]
fn symplectic_extension_of_j20() {
    let s1 = j20_symplectic();
    let s = symplectic_double_extension(&s1, &AdmissiblePair::zero(2), &vector::zeros(2), &one(), &zero()).unwrap();
    assert_eq!(s.dim(), 4);
    assert!(check_symplectic(&s.pe.algebra, &s.omega).ok());
    let b = vector::unit(4, 3);
    let back = peel_symplectic_at(&s, &b).unwrap();
    assert_eq!(back.base.dim(), 2);
    assert_eq!(back.lambda, one());
    let auto = peel_symplectic(&s).unwrap();
    assert_eq!(auto.base.dim(), 2);
}

#[test]
fn compatibility_failures_are_named() {
    let s1 = j20_symplectic();
    // R_a0 = 0 in a zero algebra; D = E_ba breaks the commutator equation
    let mut d = Matrix::zeros(2, 2);
    d[(1, 0)] = one();
    let pair = AdmissiblePair::new(d, vector::zeros(2));
    let err = symplectic_double_extension(&s1, &pair, &vector::zeros(2), &one(), &zero()).unwrap_err();
    assert_eq!(err, Error::CompatibilityFails("R_a0 = delta D - D delta + lambda D".into()));
    let pair = AdmissiblePair::new(Matrix::zeros(2, 2), vec![one(), zero()]);
    let err = symplectic_double_extension(&s1, &pair, &vector::zeros(2), &one(), &zero()).unwrap_err();
    assert_eq!(err, Error::CompatibilityFails("D(a0) = lambda x0 + delta(x0)/2".into()));
}

#[test]
fn k_lambda_condition_is_needed() {
    // with delta = diag(mu, -mu), D = 0, lambda = -mu/2, x0 = eta a1 the first two conditions hold
    let s1 = j20_symplectic();
    let lam = frac(-1, 2);
    let pair = AdmissiblePair::new(Matrix::zeros(2, 2), vec![int(2), zero()]);
    let a0 = vec![zero(), int(3)];
    let good_k = &s1.pe.b(&a0, &pair.x0) / &lam;
    let ok = symplectic_double_extension(&s1, &pair, &a0, &lam, &good_k).unwrap();
    assert!(check_symplectic(&ok.pe.algebra, &ok.omega).ok());
    let err = symplectic_double_extension(&s1, &pair, &a0, &lam, &zero()).unwrap_err();
    assert_eq!(err, Error::CompatibilityFails("k lambda = B1(a0, x0)".into()));
}

#[test]
fn tensor_example_peels() {
    let (p, dbar) = catalog::tensor_symplectic_example(&catalog::j2(&one()).algebra, 2).unwrap();
    let s = SymplecticPe::from_derivation(p, &dbar).unwrap();
    let back = peel_symplectic(&s).unwrap();
    assert_eq!(back.base.dim(), s.dim() - 2);
}

#[test]
fn peeling_down_to_zero() {
    let (p, dbar) = catalog::tensor_symplectic_example(&catalog::unit1().algebra, 2).unwrap();
    let mut s = SymplecticPe::from_derivation(p, &dbar).unwrap();
    while s.dim() > 0 {
        s = peel_symplectic(&s).unwrap().base;
    }
}

#[test]
fn nondegenerate_needed() {
    let p: PseudoEuclidean = catalog::j2(&zero());
    assert!(SymplecticPe::new(p, Matrix::zeros(2, 2)).is_err());
}
