//! Exact linear algebra: solving, subspace operations and rational spectral decomposition.

use jforge::linalg::{rational_spectral, vector, Matrix, Subspace, Vector};
use jforge::scalar::{frac, int, Scalar};
use proptest::prelude::*;

fn unit(n: usize, i: usize) -> Vector {
    vector::unit(n, i)
}

fn mat(n: usize, m: usize, entries: &[(i64, i64)]) -> Matrix {
    Matrix::from_fn(n, m, |i, j| {
        let (p, q) = entries[i * m + j];
        frac(p, q)
    })
}

fn entries(len: usize) -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-4i64..=4, 1i64..=3), len)
}

#[test]
fn solve_examples() {
    let (x, k) = Matrix::identity(3).solve_and_kernel(&unit(3, 0)).unwrap();
    assert_eq!(x, unit(3, 0));
    assert!(k.is_empty());
    let (x, k) = Matrix::zeros(2, 2).solve_and_kernel(&vector::zeros(2)).unwrap();
    assert_eq!(x, vector::zeros(2));
    assert_eq!(Subspace::span(2, k), Subspace::full(2));
    assert!(Matrix::zeros(2, 2).solve(&unit(2, 1)).is_none());
}

#[test]
fn subspace_examples() {
    let u = Subspace::span(3, [unit(3, 0)]);
    let v = Subspace::span(3, [unit(3, 1)]);
    assert_eq!(u.sum(&v), Subspace::span(3, [unit(3, 0), unit(3, 1)]));
    assert_eq!(u.intersect(&u), u);
    assert!(u.intersect(&v).is_zero());
    assert!(u.sum(&v).contains_space(&u));
    assert!(!u.contains_space(&v));
}

#[test]
fn spectral_examples() {
    let d = Matrix::from_i64(&[&[1, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, -2]]);
    let sp = rational_spectral(&d).unwrap();
    let vals: Vec<Scalar> = sp.iter().map(|e| e.value.clone()).collect();
    assert_eq!(vals, vec![int(-2), int(-1), int(1), int(2)]);
    assert!(sp.iter().all(|e| e.generalized.dim() == 1 && e.eigenspace.dim() == 1));

    let block = Matrix::from_i64(&[&[3, 1], &[0, 3]]);
    let sp = rational_spectral(&block).unwrap();
    assert_eq!(sp.len(), 1);
    assert_eq!(sp[0].value, int(3));
    assert_eq!(sp[0].generalized.dim(), 2);
    assert_eq!(sp[0].eigenspace.dim(), 1);

    let rot = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
    let fail = rational_spectral(&rot).unwrap_err();
    assert_eq!(fail.factors.len(), 1);
    assert_eq!(fail.factors[0].0.to_string(), "x^2 + 1");
}

#[test]
fn determinant_and_inverse() {
    let a = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
    assert_eq!(a.determinant(), int(1));
    assert_eq!(a.mul(&a.inverse().unwrap()), Matrix::identity(2));
    assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn solutions_multiply_back(e in entries(25), b in prop::collection::vec(-5i64..=5, 5)) {
        let a = mat(5, 5, &e);
        let b: Vector = b.into_iter().map(int).collect();
        match a.solve_and_kernel(&b) {
            Some((x, k)) => {
                prop_assert_eq!(a.apply(&x), b.clone());
                for v in &k {
                    prop_assert!(vector::is_zero(&a.apply(v)));
                }
                prop_assert_eq!(k.len() + a.rank(), 5);
                if a.is_invertible() {
                    prop_assert!(k.is_empty());
                    prop_assert_eq!(a.inverse().unwrap().apply(&b), x);
                }
            }
            None => prop_assert!(!a.is_invertible()),
        }
    }

    #[test]
    fn dimension_formula(eu in entries(18), ev in entries(18)) {
        let u = Subspace::span(6, mat(3, 6, &eu).row_vectors());
        let v = Subspace::span(6, mat(3, 6, &ev).row_vectors());
        prop_assert_eq!(u.dim() + v.dim(), u.sum(&v).dim() + u.intersect(&v).dim());
        prop_assert!(u.sum(&v).contains_space(&u));
        prop_assert!(u.contains_space(&u.intersect(&v)));
    }

    #[test]
    fn span_is_canonical(e in entries(12), mix in entries(9)) {
        // rows of mix * vs span a subspace of span(vs); adding them back changes nothing
        let vs = mat(3, 4, &e);
        let m = mat(3, 3, &mix);
        let s = Subspace::span(4, vs.row_vectors());
        let mut more = m.mul(&vs).row_vectors();
        more.extend(vs.row_vectors().into_iter().rev());
        let t = Subspace::span(4, more);
        prop_assert_eq!(&s, &t);
        prop_assert_eq!(s.basis(), t.basis());
        for v in vs.row_vectors() {
            prop_assert!(s.contains(&v));
            let c = s.coordinates(&v).unwrap();
            prop_assert_eq!(s.combination(&c), v);
        }
    }

    #[test]
    fn kernel_and_image(e in entries(20)) {
        let a = mat(4, 5, &e);
        let k = a.kernel_space();
        prop_assert_eq!(k.dim() + a.image_space().dim(), 5);
        prop_assert!(Subspace::full(5).image(&a) == a.image_space());
        prop_assert!(Subspace::full(5).kernel_of(&a) == k);
    }

    #[test]
    fn spectral_sums_to_ambient(diag in prop::collection::vec(-3i64..=3, 4), e in entries(16)) {
        // similar to an upper triangular matrix, so the characteristic polynomial splits
        let mut t = Matrix::zeros(4, 4);
        for i in 0..4 {
            t[(i, i)] = int(diag[i]);
            for j in i + 1..4 {
                let (p, q) = e[i * 4 + j];
                t[(i, j)] = frac(p, q);
            }
        }
        let mut p = Matrix::identity(4);
        for i in 0..4 {
            for j in 0..i {
                let (a, _) = e[i * 4 + j];
                p[(i, j)] = int(a);
            }
        }
        let a = p.mul(&t).mul(&p.inverse().unwrap());
        let sp = rational_spectral(&a).unwrap();
        let total: usize = sp.iter().map(|x| x.generalized.dim()).sum();
        prop_assert_eq!(total, 4);
        let mut sum = Subspace::zero(4);
        for x in &sp {
            let shifted = a.sub(&Matrix::scalar(4, &x.value)).pow(4);
            for v in x.generalized.basis() {
                prop_assert!(vector::is_zero(&shifted.apply(v)));
            }
            prop_assert!(x.eigenspace.dim() >= 1);
            prop_assert_eq!(x.multiplicity, x.generalized.dim());
            sum = sum.sum(&x.generalized);
        }
        prop_assert!(sum.is_full());
    }
}
