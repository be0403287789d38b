//! Bilinear forms, associativity, and pseudo-euclidean Jordan algebras.

use num_traits::Zero;

use crate::algebra::{derived_names, Algebra, JordanAlgebra};
use crate::error::{Error, Result};
use crate::linalg::vector::{self, Vector};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

/// `B(x, y) = x^T G y`
pub fn eval(gram: &Matrix, x: &[Scalar], y: &[Scalar]) -> Scalar {
    vector::dot(x, &gram.apply(y))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PepReport {
    pub symmetric: bool,
    pub nondegenerate: bool,
    pub associative: bool,
    /// First basis triple with `B(xy, z) != B(x, yz)`.
    pub first_violation: Option<(usize, usize, usize)>,
}

impl PepReport {
    pub fn ok(&self) -> bool {
        self.symmetric && self.nondegenerate && self.associative
    }
}

pub fn check_pep(a: &Algebra, gram: &Matrix) -> PepReport {
    let n = a.dim();
    assert_eq!((gram.rows(), gram.cols()), (n, n), "gram size");
    let mut first = None;
    'outer: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let l = eval(gram, a.product(i, j), &a.basis(k));
                let r = eval(gram, &a.basis(i), a.product(j, k));
                if l != r {
                    first = Some((i, j, k));
                    break 'outer;
                }
            }
        }
    }
    PepReport {
        symmetric: gram.is_symmetric(),
        nondegenerate: gram.is_invertible(),
        associative: first.is_none(),
        first_violation: first,
    }
}

/// `{ x : B(x, s) = 0 for all s in S }`
pub fn orthogonal_complement(gram: &Matrix, s: &Subspace) -> Subspace {
    let n = gram.rows();
    if s.is_zero() {
        return Subspace::full(n);
    }
    let rows: Vec<Vector> = s.basis().iter().map(|b| gram.apply(b)).collect();
    Matrix::from_rows(&rows).kernel_space()
}

/// Gram matrix of the restriction to a subspace, in its echelon basis.
pub fn restrict_gram(gram: &Matrix, s: &Subspace) -> Matrix {
    let b = s.basis_matrix();
    b.transpose().mul(gram).mul(&b)
}

/// `e'_j` with `B(e_i, e'_j) = delta_ij`, the columns of `G^{-1}`.
pub fn dual_basis(gram: &Matrix) -> Result<Vec<Vector>> {
    let inv = gram.inverse().ok_or_else(|| Error::Degenerate("dual basis".into()))?;
    Ok(inv.columns())
}

/// `B(Dx, y) = B(x, Dy)`
pub fn is_symmetric_operator(gram: &Matrix, d: &Matrix) -> bool {
    d.transpose().mul(gram) == gram.mul(d)
}

/// `B(Dx, y) = -B(x, Dy)`
pub fn is_antisymmetric_operator(gram: &Matrix, d: &Matrix) -> bool {
    d.transpose().mul(gram) == gram.mul(d).neg()
}

/// A Jordan algebra with a symmetric, nondegenerate, associative form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoEuclidean {
    pub algebra: JordanAlgebra,
    pub form: Matrix,
}

impl PseudoEuclidean {
    pub fn new(algebra: JordanAlgebra, form: Matrix) -> Result<Self> {
        if form.rows() != algebra.dim() || form.cols() != algebra.dim() {
            return Err(Error::DimensionMismatch("form".into()));
        }
        let rep = check_pep(&algebra, &form);
        if !rep.symmetric {
            return Err(Error::BadForm("not symmetric".into()));
        }
        if !rep.nondegenerate {
            return Err(Error::BadForm("degenerate".into()));
        }
        if let Some((i, j, k)) = rep.first_violation {
            let nm = algebra.names();
            return Err(Error::BadForm(format!("not associative at ({}, {}, {})", nm[i], nm[j], nm[k])));
        }
        Ok(PseudoEuclidean { algebra, form })
    }

    /// Checks both structures from raw data.
    pub fn from_parts(a: Algebra, form: Matrix) -> Result<Self> {
        Self::new(JordanAlgebra::new(a)?, form)
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn names(&self) -> &[String] {
        self.algebra.names()
    }

    pub fn b(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        eval(&self.form, x, y)
    }

    pub fn perp(&self, s: &Subspace) -> Subspace {
        orthogonal_complement(&self.form, s)
    }

    /// A nondegenerate subalgebra with the restricted form.
    pub fn restrict(&self, s: &Subspace) -> Result<PseudoEuclidean> {
        let alg = self.algebra.restrict(s)?;
        PseudoEuclidean::new(alg, restrict_gram(&self.form, s))
    }

    pub fn orthogonal_sum(&self, other: &PseudoEuclidean) -> PseudoEuclidean {
        PseudoEuclidean { algebra: self.algebra.direct_sum(&other.algebra), form: self.form.direct_sum(&other.form) }
    }

    /// `phi` maps `self` to `other` multiplicatively, bijectively and isometrically.
    pub fn is_isometric_isomorphism(&self, other: &PseudoEuclidean, phi: &Matrix) -> bool {
        self.algebra.check_isomorphism(&other.algebra, phi) && phi.transpose().mul(&other.form).mul(phi) == self.form
    }

    pub fn dual_basis(&self) -> Vec<Vector> {
        dual_basis(&self.form).expect("nondegenerate")
    }
}

/// Result of splitting along an ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitOutcome {
    /// `J = I (+) I^perp`, both pseudo-euclidean.
    Split { ideal: PseudoEuclidean, complement: PseudoEuclidean, perp: Subspace },
    /// `B` restricted to `I` is degenerate.
    Degenerate { radical: Subspace },
}

pub fn split_by_ideal(p: &PseudoEuclidean, ideal: &Subspace) -> Result<SplitOutcome> {
    if !p.algebra.is_ideal(ideal) {
        return Err(Error::NotAnIdeal);
    }
    let perp = p.perp(ideal);
    let radical = ideal.intersect(&perp);
    if !radical.is_zero() {
        return Ok(SplitOutcome::Degenerate { radical });
    }
    Ok(SplitOutcome::Split { ideal: p.restrict(ideal)?, complement: p.restrict(&perp)?, perp })
}

/// Gram matrix from a list of `(i, j, value)` entries, symmetrized.
pub fn gram_from_entries(n: usize, entries: &[(usize, usize, Scalar)]) -> Matrix {
    let mut g = Matrix::zeros(n, n);
    for (i, j, v) in entries {
        g[(*i, *j)] = v.clone();
        g[(*j, *i)] = v.clone();
    }
    g
}

/// Names for a restriction, reexported for modules building subquotients.
pub fn subspace_names(a: &Algebra, s: &Subspace) -> Vec<String> {
    derived_names(a.names(), s)
}

pub fn is_isotropic(gram: &Matrix, s: &Subspace) -> bool {
    restrict_gram(gram, s).entries().iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::names;
    use crate::scalar::int;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn j21() -> PseudoEuclidean {
        let mut a = Algebra::zero(names(&["a1", "b1"]));
        a.set_product(0, 0, v(&[0, 1]));
        PseudoEuclidean::from_parts(a, Matrix::from_i64(&[&[0, 1], &[1, 0]])).unwrap()
    }

    #[test]
    fn ann_perp_is_square() {
        let p = j21();
        assert_eq!(p.perp(&p.algebra.annihilator()), p.algebra.square_span());
    }

    #[test]
    fn degenerate_ideal_does_not_split() {
        let p = j21();
        let out = split_by_ideal(&p, &p.algebra.annihilator()).unwrap();
        assert!(matches!(out, SplitOutcome::Degenerate { .. }));
    }

    #[test]
    fn dual_basis_pairs_to_identity() {
        let p = j21();
        let d = p.dual_basis();
        for i in 0..2 {
            for j in 0..2 {
                let expect = if i == j { int(1) } else { int(0) };
                assert_eq!(p.b(&p.algebra.basis(i), &d[j]), expect);
            }
        }
    }
}
