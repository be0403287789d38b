//! Trace forms, radical, Casimir operator, Fitting decomposition, index and reductivity.

use jforge::catalog::{self, Params};
use jforge::diagnostics::{
    albert_form, casimir, casimir_with_seed, check_components, decompose, fitting, form_from_intertwiner, index,
    radical_and_semisimplicity, reductive_report, trace_form_of_rep, CasimirClass,
};
use jforge::extensions::{adjoint, tstar0};
use jforge::linalg::vector;
use jforge::scalar::{int, one, zero};
use jforge::{check_pep, Algebra, Error, JordanAlgebra, Matrix, PseudoEuclidean, Subspace};

fn pe(name: &str) -> PseudoEuclidean {
    catalog::get(name, &Params::new()).unwrap().pe().unwrap()
}

fn span_units(n: usize, idx: &[usize]) -> Subspace {
    Subspace::span(n, idx.iter().map(|&i| vector::unit(n, i)))
}

const PE_NAMES: &[&str] = &[
    "J_1_1", "J_2_0", "J_2_1", "J_3_0_1", "J_3_1_0", "J_4_1", "J_4_0_A", "J_4_0_B", "J_5_0_1", "J_5_1_0", "NONASSOC_5", "UNIT_1",
    "H_1", "H_2", "H_3", "SPIN(1,1,1)", "SPIN(1,-1,2)", "TSTAR0(UNIT_1)", "TSTAR0(H_2)", "TSTAR0(TENSOR(UNIT_1,2))",
];

#[test]
fn albert_form_examples() {
    for name in ["J_2_1", "J_3_1_0", "J_5_0_1", "NONASSOC_5"] {
        let f = albert_form(&pe(name).algebra);
        assert!(f.gram.is_zero(), "{name}");
    }
    assert_eq!(albert_form(&pe("UNIT_1").algebra).gram, Matrix::from_i64(&[&[1]]));
    let h2 = albert_form(&pe("H_2").algebra);
    assert!(h2.symmetric && h2.associative);
    assert!(h2.gram.is_invertible());
}

#[test]
fn trace_forms_of_representations() {
    let h2 = pe("H_2");
    let a = &h2.algebra;
    assert_eq!(trace_form_of_rep(a, &adjoint(a)), albert_form(a));
    let zero_rep = vec![Matrix::zeros(2, 2); a.dim()];
    assert!(trace_form_of_rep(a, &zero_rep).gram.is_zero());
    // nilpotent algebra: every representation operator is nilpotent, so the trace form vanishes
    let j = pe("J_3_1_0");
    let t = tstar0(&j.algebra);
    // J acting on J* through the coadjoint action, read off the T* product
    let n = j.dim();
    let coadj: Vec<Matrix> = (0..n)
        .map(|i| Matrix::from_fn(n, n, |r, c| t.algebra.product(i, n + c)[n + r].clone()))
        .collect();
    let f = trace_form_of_rep(&j.algebra, &coadj);
    assert!(f.gram.is_zero() && f.symmetric && f.associative);
}

#[test]
fn radicals() {
    let j21 = radical_and_semisimplicity(&pe("J_2_1").algebra).unwrap();
    assert!(j21.radical.is_full() && !j21.semisimple);
    let t = radical_and_semisimplicity(&pe("TSTAR0(H_2)").algebra).unwrap();
    assert_eq!(t.radical, span_units(6, &[3, 4, 5]));
    assert!(radical_and_semisimplicity(&pe("H_2").algebra).unwrap().semisimple);
}

#[test]
fn radical_contains_every_ideal_spun_from_the_annihilator() {
    for name in PE_NAMES {
        let a = pe(name).algebra;
        let rad = radical_and_semisimplicity(&a).unwrap().radical;
        assert!(a.is_ideal(&rad));
        let mut s = a.annihilator();
        // Ann, then the preimages of the successive annihilators: the upper central series
        loop {
            assert!(rad.contains_space(&s), "{name}");
            let next = upper_step(&a, &s);
            if next == s {
                break;
            }
            s = next;
        }
    }
}

/// `{ x : x J is inside s }`
fn upper_step(a: &Algebra, s: &Subspace) -> Subspace {
    let n = a.dim();
    let mut cols = Vec::new();
    let comp = s.echelon_complement();
    for j in 0..n {
        let r = a.mult_operator(&a.basis(j));
        // project R_j onto the complement of s along s
        let rows: Vec<_> = (0..n).map(|c| s.reduce(&r.column(c))).collect();
        cols.push(Matrix::from_columns(n, &rows));
    }
    let mut stacked = Vec::new();
    for m in cols {
        for p in comp.pivots() {
            stacked.push(m.row(*p));
        }
    }
    if stacked.is_empty() {
        return Subspace::full(n);
    }
    Matrix::from_rows(&stacked).kernel_space()
}

#[test]
fn casimir_examples() {
    let c = casimir(&pe("UNIT_1"));
    assert_eq!(c.rc, Matrix::identity(1));
    assert_eq!(c.classification, CasimirClass::Invertible);
    let c = casimir(&pe("J_2_1"));
    assert_eq!(c.c, vec![zero(), zero()]);
    assert!(c.rc.is_zero());
    assert_eq!(c.classification, CasimirClass::Nilpotent);
}

#[test]
fn casimir_invariants_on_the_catalog() {
    for name in PE_NAMES {
        let p = pe(name);
        for seed in 0..3 {
            let c = casimir_with_seed(&p, seed);
            assert!(c.albert_matches, "{name}");
            assert!(c.commutes, "{name}");
            assert!(c.basis_independent, "{name} seed {seed}");
        }
        let c = casimir(&p);
        let semisimple = radical_and_semisimplicity(&p.algebra).unwrap().semisimple;
        assert_eq!(semisimple, c.classification == CasimirClass::Invertible, "{name}");
        assert_eq!(c.rc.is_invertible(), albert_form(&p.algebra).gram.kernel_space().is_zero(), "{name}");
    }
}

#[test]
fn irreducible_entries_are_never_mixed() {
    // entries with no proper nondegenerate ideal
    for name in ["J_1_1", "J_2_1", "J_3_0_1", "J_3_1_0", "J_4_1", "J_5_0_1", "J_5_1_0", "NONASSOC_5", "UNIT_1", "H_2", "H_3", "SPIN(1,1,1)"] {
        let p = pe(name);
        assert_ne!(casimir(&p).classification, CasimirClass::Mixed, "{name}");
        check_components(&p, &[Subspace::full(p.dim())]).unwrap();
    }
}

#[test]
fn fitting_separates_simple_and_nilpotent_parts() {
    let p = pe("UNIT_1").orthogonal_sum(&pe("J_2_1"));
    let c = casimir(&p);
    assert_eq!(c.classification, CasimirClass::Mixed);
    let f = fitting(&p).unwrap();
    assert_eq!(f.s, span_units(3, &[0]));
    assert_eq!(f.s_perp, span_units(3, &[1, 2]));
    assert!(fitting(&pe("J_3_1_0")).unwrap().s.is_zero());
    assert!(fitting(&pe("H_2")).unwrap().s.is_full());
    // H_2 with its Albert form
    let h2 = pe("H_2");
    let alb = PseudoEuclidean::new(h2.algebra.clone(), albert_form(&h2.algebra).gram).unwrap();
    assert!(fitting(&alb).unwrap().s.is_full());
    // a mixed entry fails the irreducibility check
    assert!(matches!(check_components(&p, &[Subspace::full(3)]), Err(Error::BadComponents(_))));
}

fn unit_plus_j11() -> PseudoEuclidean {
    pe("UNIT_1").orthogonal_sum(&pe("J_1_1"))
}

#[test]
fn index_values() {
    assert_eq!(index(&pe("J_1_1").algebra).index, 1);
    assert_eq!(index(&pe("J_2_1").algebra).index, 2);
    assert_eq!(index(&pe("H_2").algebra).index, 1);
    assert_eq!(index(&unit_plus_j11().algebra).index, 2);
    let j11x2 = pe("J_1_1").orthogonal_sum(&pe("J_1_1"));
    assert_eq!(index(&j11x2.algebra).index, 3);
    for name in PE_NAMES {
        let data = index(&pe(name).algebra);
        for f in &data.forms {
            let rep = check_pep(&pe(name).algebra, f);
            assert!(rep.symmetric && rep.associative, "{name}");
        }
    }
}

#[test]
fn index_is_superadditive() {
    let names = ["J_1_1", "J_2_1", "UNIT_1", "H_2", "J_3_1_0"];
    for x in names {
        for y in names {
            let (a, b) = (pe(x), pe(y));
            let s = a.orthogonal_sum(&b);
            assert!(index(&s.algebra).index >= index(&a.algebra).index + index(&b.algebra).index, "{x} {y}");
        }
    }
}

#[test]
fn reductive_reports() {
    let h2 = pe("H_2");
    let r = reductive_report(&h2, &[Subspace::full(3)]).unwrap();
    assert!(r.semisimple && r.square_full && r.index == 1 && r.r == 1);
    assert!(r.reductive_criterion_holds && r.semisimple_criterion_holds);

    let p = unit_plus_j11();
    let r = reductive_report(&p, &[span_units(2, &[0]), span_units(2, &[1])]).unwrap();
    assert!(r.reductive && r.dim_ann == 1 && r.index == 2);
    assert!(r.reductive_criterion_holds && r.semisimple_criterion_holds);
    assert!(!r.semisimple);

    let j11x2 = pe("J_1_1").orthogonal_sum(&pe("J_1_1"));
    let r = reductive_report(&j11x2, &[span_units(2, &[0]), span_units(2, &[1])]).unwrap();
    assert!(r.reductive && r.dim_ann == 2 && r.index == 3);
    assert!(r.reductive_criterion_holds);

    let j21 = pe("J_2_1");
    let r = reductive_report(&j21, &[Subspace::full(2)]).unwrap();
    assert!(!r.semisimple && !r.square_full);
    assert!(r.semisimple_criterion_holds);

    let bad = reductive_report(&p, &[Subspace::full(2), span_units(2, &[1])]);
    assert!(matches!(bad, Err(Error::BadComponents(_))));
    let bad = reductive_report(&p, &[span_units(2, &[0])]);
    assert!(matches!(bad, Err(Error::BadComponents(_))));
}

#[test]
fn decomposition_heuristic() {
    let p = pe("UNIT_1").orthogonal_sum(&pe("J_2_1")).orthogonal_sum(&pe("H_2"));
    let parts = decompose(&p);
    assert_eq!(parts.len(), 3);
    check_components(&p, &parts).unwrap();
    assert_eq!(decompose(&pe("H_3")).len(), 1);
}

#[test]
fn intertwiner_from_a_scalar_product() {
    for name in ["J_2_1", "H_2", "J_3_1_0"] {
        let p = pe(name);
        // phi(x) = B(x, .) has matrix G
        let l = form_from_intertwiner(&p.algebra, &p.form).unwrap();
        assert_eq!(l, p.form, "{name}");
    }
}

#[test]
fn intertwiner_with_a_skew_part() {
    // J_2_1 (+) zero plane, T = B on J_2_1 plus p ^ q on the plane
    let plane = PseudoEuclidean::from_parts(Algebra::zero(jforge::algebra::names(&["p", "q"])), Matrix::identity(2)).unwrap();
    let p = pe("J_2_1").orthogonal_sum(&plane);
    let mut t = Matrix::zeros(4, 4);
    t.set_block(0, 0, &pe("J_2_1").form);
    t[(2, 3)] = one();
    t[(3, 2)] = -one();
    let phi = t.transpose();
    let l = form_from_intertwiner(&p.algebra, &phi).unwrap();
    assert!(check_pep(&p.algebra, &l).ok());
    assert_eq!(l.block(0, 0, 2, 2), pe("J_2_1").form);
    assert_eq!(l.block(2, 2, 2, 2), Matrix::identity(2));
    // UNIT_1 (+) zero plane, only the unit carries the symmetric part
    let q = pe("UNIT_1").orthogonal_sum(&plane);
    let mut t = Matrix::zeros(3, 3);
    t[(0, 0)] = one();
    t[(1, 2)] = int(2);
    t[(2, 1)] = int(-2);
    assert!(check_pep(&q.algebra, &form_from_intertwiner(&q.algebra, &t.transpose()).unwrap()).ok());
}

#[test]
fn non_intertwiners_are_rejected() {
    let p = pe("J_2_1");
    assert_eq!(form_from_intertwiner(&p.algebra, &Matrix::identity(2)).unwrap_err(), Error::NotAnIntertwiner);
    assert_eq!(form_from_intertwiner(&p.algebra, &Matrix::zeros(2, 2)).unwrap_err(), Error::NotAnIntertwiner);
    let u = JordanAlgebra::new(pe("UNIT_1").algebra.into_algebra()).unwrap();
    assert!(form_from_intertwiner(&u, &Matrix::from_i64(&[&[3]])).is_ok());
}
