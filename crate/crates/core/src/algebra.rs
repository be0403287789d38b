//! Finite-dimensional algebras given by structure constants, and Jordan-specific checks.

use std::ops::Deref;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::identity::Violation;
use crate::linalg::vector::{self, Vector};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::Scalar;

/// Structure constants `e_i e_j = sum_k c[i][j][k] e_k`. No identities are assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    names: Vec<String>,
    table: Vec<Vector>,
}

impl Algebra {
    /// `table[i * n + j]` is the product `e_i e_j`.
    pub fn new(names: Vec<String>, table: Vec<Vector>) -> Result<Self> {
        let n = names.len();
        if table.len() != n * n || table.iter().any(|v| v.len() != n) {
            return Err(Error::DimensionMismatch(format!("table for dimension {n}")));
        }
        Ok(Algebra { names, table })
    }

    pub fn from_fn(names: Vec<String>, mut f: impl FnMut(usize, usize) -> Vector) -> Result<Self> {
        let n = names.len();
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(f(i, j));
            }
        }
        Self::new(names, table)
    }

    pub fn zero(names: Vec<String>) -> Self {
        let n = names.len();
        Algebra { table: vec![vector::zeros(n); n * n], names }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }

    pub fn basis(&self, i: usize) -> Vector {
        vector::unit(self.dim(), i)
    }

    pub fn product(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.dim() + j]
    }

    pub fn set_product(&mut self, i: usize, j: usize, v: Vector) {
        let n = self.dim();
        self.table[i * n + j] = v;
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = vector::zeros(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                vector::axpy(&mut out, &c, self.product(i, j));
            }
        }
        out
    }

    pub fn square(&self, x: &[Scalar]) -> Vector {
        self.mul(x, x)
    }

    /// Right multiplication `R_x : y -> y x`.
    pub fn mult_operator(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(&self.basis(j), x)).collect();
        Matrix::from_columns(n, &cols)
    }

    /// Left multiplication `L_x : y -> x y`.
    pub fn left_operator(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(x, &self.basis(j))).collect();
        Matrix::from_columns(n, &cols)
    }

    pub fn basis_operators(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|i| self.mult_operator(&self.basis(i))).collect()
    }

    pub fn is_commutative(&self) -> bool {
        self.first_noncommuting().is_none()
    }

    fn first_noncommuting(&self) -> Option<(usize, usize)> {
        let n = self.dim();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| self.product(i, j) != self.product(j, i))
    }

    /// `(x, y, z) = (xy)z - x(yz)`
    pub fn associator(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        vector::sub(&self.mul(&self.mul(x, y), z), &self.mul(x, &self.mul(y, z)))
    }

    pub fn associator_space(&self) -> Subspace {
        let n = self.dim();
        let mut vs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let a = self.associator(&self.basis(i), &self.basis(j), &self.basis(k));
                    if !vector::is_zero(&a) {
                        vs.push(a);
                    }
                }
            }
        }
        Subspace::span(n, vs)
    }

    pub fn is_associative(&self) -> bool {
        self.associator_space().is_zero()
    }

    /// `Ann = { x : x J = J x = 0 }`
    pub fn annihilator(&self) -> Subspace {
        let n = self.dim();
        let mut rows = Vec::new();
        for j in 0..n {
            let r = self.mult_operator(&self.basis(j));
            let l = self.left_operator(&self.basis(j));
            rows.extend(r.row_vectors());
            rows.extend(l.row_vectors());
        }
        if rows.is_empty() {
            return Subspace::zero(n);
        }
        Matrix::from_rows(&rows).kernel_space()
    }

    /// `{ x : (x,y,z) = (y,x,z) = (y,z,x) = 0 for all y, z }`
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let mut rows = Vec::new();
        for y in 0..n {
            for z in 0..n {
                let (ey, ez) = (self.basis(y), self.basis(z));
                let maps: [Box<dyn Fn(&[Scalar]) -> Vector>; 3] = [
                    Box::new(|x| self.associator(x, &ey, &ez)),
                    Box::new(|x| self.associator(&ey, x, &ez)),
                    Box::new(|x| self.associator(&ey, &ez, x)),
                ];
                for m in &maps {
                    let cols: Vec<Vector> = (0..n).map(|i| m(&self.basis(i))).collect();
                    rows.extend(Matrix::from_columns(n, &cols).row_vectors());
                }
            }
        }
        if rows.is_empty() {
            return Subspace::full(n);
        }
        Matrix::from_rows(&rows).kernel_space()
    }

    /// `J^2`, the span of all products.
    pub fn square_span(&self) -> Subspace {
        Subspace::span(self.dim(), self.table.iter().filter(|v| !vector::is_zero(v)).cloned())
    }

    pub fn product_space(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                let p = self.mul(x, y);
                if !vector::is_zero(&p) {
                    vs.push(p);
                }
            }
        }
        Subspace::span(self.dim(), vs)
    }

    /// Smallest ideal containing `seed`.
    pub fn ideal_closure(&self, seed: &Subspace) -> Subspace {
        let n = self.dim();
        let mut cur = seed.clone();
        loop {
            let mut vs: Vec<Vector> = cur.basis().to_vec();
            for x in cur.basis() {
                for j in 0..n {
                    vs.push(self.mul(x, &self.basis(j)));
                    vs.push(self.mul(&self.basis(j), x));
                }
            }
            let next = Subspace::span(n, vs);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        let n = self.dim();
        s.basis().iter().all(|x| {
            (0..n).all(|j| s.contains(&self.mul(x, &self.basis(j))) && s.contains(&self.mul(&self.basis(j), x)))
        })
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|x| s.basis().iter().all(|y| s.contains(&self.mul(x, y))))
    }

    /// `J^1 = J`, `J^k = sum_{i+j=k} J^i J^j`, until the chain stabilizes.
    pub fn power_chain(&self) -> Vec<Subspace> {
        let mut chain = vec![Subspace::full(self.dim())];
        for k in 2..=self.dim() + 2 {
            let mut s = Subspace::zero(self.dim());
            for i in 1..k {
                s = s.sum(&self.product_space(&chain[i - 1], &chain[k - i - 1]));
            }
            let stable = s == chain[k - 2];
            chain.push(s);
            if stable || chain[k - 1].is_zero() {
                break;
            }
        }
        chain
    }

    /// Smallest `k` with `J^k = 0`, or `None` when the algebra is not nilpotent.
    pub fn nilpotency_class(&self) -> Option<usize> {
        if self.dim() == 0 {
            return Some(1);
        }
        let chain = self.power_chain();
        chain.iter().position(Subspace::is_zero).map(|p| p + 1)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class().is_some()
    }

    /// The algebra carried by a subalgebra, in the coordinates of its echelon basis.
    pub fn restrict(&self, s: &Subspace) -> Result<Algebra> {
        if !self.is_subalgebra(s) {
            return Err(Error::NotSubalgebra("subspace not closed under the product".into()));
        }
        let names = derived_names(&self.names, s);
        let b = s.basis();
        Algebra::from_fn(names, |i, j| s.coordinates(&self.mul(&b[i], &b[j])).expect("closed"))
    }

    /// Quotient by an ideal, realized on the echelon complement, with the projection matrix.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(Algebra, Matrix)> {
        if !self.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let n = self.dim();
        let comp: Vec<usize> = (0..n).filter(|c| !ideal.pivots().contains(c)).collect();
        let project = |v: &[Scalar]| -> Vector {
            let r = ideal.reduce(v);
            comp.iter().map(|&c| r[c].clone()).collect()
        };
        let names: Vec<String> = comp.iter().map(|&c| self.names[c].clone()).collect();
        let q = Algebra::from_fn(names, |i, j| project(self.product(comp[i], comp[j])))?;
        let cols: Vec<Vector> = (0..n).map(|i| project(&self.basis(i))).collect();
        Ok((q, Matrix::from_columns(comp.len(), &cols)))
    }

    /// Whether `phi` (columns are images of basis vectors) is multiplicative into `other`.
    pub fn is_homomorphism(&self, other: &Algebra, phi: &Matrix) -> bool {
        let n = self.dim();
        if phi.rows() != other.dim() || phi.cols() != n {
            return false;
        }
        let imgs = phi.columns();
        (0..n).all(|i| (0..n).all(|j| phi.apply(self.product(i, j)) == other.mul(&imgs[i], &imgs[j])))
    }

    pub fn check_isomorphism(&self, other: &Algebra, phi: &Matrix) -> bool {
        phi.is_square() && phi.is_invertible() && self.is_homomorphism(other, phi)
    }

    /// Orthogonal direct sum of algebras, `self` first.
    pub fn direct_sum(&self, other: &Algebra) -> Algebra {
        let (n, m) = (self.dim(), other.dim());
        let mut names = self.names.clone();
        names.extend(other.names.iter().cloned());
        let names = uniquify(names);
        Algebra::from_fn(names, |i, j| {
            if i < n && j < n {
                vector::concat(&[self.product(i, j), &vector::zeros(m)])
            } else if i >= n && j >= n {
                vector::concat(&[&vector::zeros(n), other.product(i - n, j - n)])
            } else {
                vector::zeros(n + m)
            }
        })
        .expect("dimensions agree")
    }

    /// Transports the structure along an invertible change of basis: the new `i`-th basis
    /// vector is column `i` of `p`.
    pub fn change_basis(&self, p: &Matrix, names: Vec<String>) -> Result<Algebra> {
        let inv = p.inverse().ok_or_else(|| Error::NotInvertible("change of basis".into()))?;
        let cols = p.columns();
        Algebra::from_fn(names, |i, j| inv.apply(&self.mul(&cols[i], &cols[j])))
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Algebra> {
        if names.len() != self.dim() {
            return Err(Error::DimensionMismatch("names".into()));
        }
        self.names = names;
        Ok(self)
    }

    /// Whether `d` is a derivation: `d(xy) = d(x) y + x d(y)`.
    pub fn is_derivation(&self, d: &Matrix) -> bool {
        self.first_derivation_failure(d).is_none()
    }

    pub fn first_derivation_failure(&self, d: &Matrix) -> Option<(usize, usize)> {
        let n = self.dim();
        let dc = d.columns();
        for i in 0..n {
            for j in 0..n {
                let l = d.apply(self.product(i, j));
                let r = vector::add(&self.mul(&dc[i], &self.basis(j)), &self.mul(&self.basis(i), &dc[j]));
                if l != r {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// Names for the echelon basis of a subspace: the parent label when the basis vector is a
/// coordinate vector, a fresh label otherwise.
pub fn derived_names(parent: &[String], s: &Subspace) -> Vec<String> {
    let names = s
        .basis()
        .iter()
        .enumerate()
        .map(|(k, b)| {
            let nz: Vec<usize> = (0..b.len()).filter(|&i| !b[i].is_zero()).collect();
            if nz.len() == 1 && b[nz[0]] == crate::scalar::one() {
                parent[nz[0]].clone()
            } else {
                format!("w{}", k + 1)
            }
        })
        .collect();
    uniquify(names)
}

pub fn uniquify(names: Vec<String>) -> Vec<String> {
    let mut out: Vec<String> = Vec::with_capacity(names.len());
    for n in names {
        let mut cand = n.clone();
        while out.contains(&cand) {
            cand.push('\'');
        }
        out.push(cand);
    }
    out
}

/// Outcome of the Jordan identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub commutative: bool,
    pub jordan: bool,
    pub first_violation: Option<Violation>,
}

/// Checks commutativity and the linearized Jordan identity
/// `[R_{wz}, R_x] + [R_{zx}, R_w] + [R_{xw}, R_z] = 0` on basis triples.
///
/// The left side is symmetric in `x, z, w`, so sorted triples cover every ordered triple. A
/// violation records `(x, z, w, y)` and the two sides `([R_{wz},R_x] + [R_{zx},R_w]) e_y` and
/// `-[R_{xw},R_z] e_y`.
pub fn check_jordan(a: &Algebra) -> IdentityReport {
    if let Some((i, j)) = a.first_noncommuting() {
        return IdentityReport {
            commutative: false,
            jordan: false,
            first_violation: Some(Violation {
                condition: "commutativity".into(),
                indices: vec![vec![i], vec![j]],
                left: a.product(i, j).clone(),
                right: a.product(j, i).clone(),
            }),
        };
    }
    let n = a.dim();
    let r = a.basis_operators();
    let r_of = |v: &Vector| -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&r[k].scale(c));
            }
        }
        m
    };
    let prod_ops: Vec<Vec<Matrix>> = (0..n).map(|i| (0..n).map(|j| r_of(a.product(i, j))).collect()).collect();
    for x in 0..n {
        for z in x..n {
            for w in z..n {
                let left = prod_ops[w][z].commutator(&r[x]).add(&prod_ops[z][x].commutator(&r[w]));
                let right = prod_ops[x][w].commutator(&r[z]).neg();
                if left != right {
                    let y = (0..n).find(|&y| left.column(y) != right.column(y)).unwrap_or(0);
                    return IdentityReport {
                        commutative: true,
                        jordan: false,
                        first_violation: Some(Violation {
                            condition: "linearized Jordan identity".into(),
                            indices: vec![vec![x], vec![z], vec![w], vec![y]],
                            left: left.column(y),
                            right: right.column(y),
                        }),
                    };
                }
            }
        }
    }
    IdentityReport { commutative: true, jordan: true, first_violation: None }
}

/// An algebra that has passed [`check_jordan`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanAlgebra(Algebra);

impl JordanAlgebra {
    pub fn new(a: Algebra) -> Result<Self> {
        let rep = check_jordan(&a);
        if rep.jordan {
            Ok(JordanAlgebra(a))
        } else {
            let v = rep.first_violation.expect("violation recorded");
            Err(Error::NotJordan(v.describe(a.names())))
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.0
    }

    pub fn into_algebra(self) -> Algebra {
        self.0
    }

    pub fn restrict(&self, s: &Subspace) -> Result<JordanAlgebra> {
        Ok(JordanAlgebra(self.0.restrict(s)?))
    }

    pub fn quotient(&self, ideal: &Subspace) -> Result<(JordanAlgebra, Matrix)> {
        let (q, p) = self.0.quotient(ideal)?;
        Ok((JordanAlgebra(q), p))
    }

    pub fn direct_sum(&self, other: &JordanAlgebra) -> JordanAlgebra {
        JordanAlgebra(self.0.direct_sum(&other.0))
    }

    pub fn change_basis(&self, p: &Matrix, names: Vec<String>) -> Result<JordanAlgebra> {
        Ok(JordanAlgebra(self.0.change_basis(p, names)?))
    }

    pub fn with_names(self, names: Vec<String>) -> Result<JordanAlgebra> {
        Ok(JordanAlgebra(self.0.with_names(names)?))
    }
}

impl Deref for JordanAlgebra {
    type Target = Algebra;
    fn deref(&self) -> &Algebra {
        &self.0
    }
}

pub fn names(labels: &[&str]) -> Vec<String> {
    labels.iter().map(|s| s.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn j21() -> Algebra {
        let mut a = Algebra::zero(names(&["a1", "b1"]));
        a.set_product(0, 0, v(&[0, 1]));
        a
    }

    #[test]
    fn non_jordan_table_is_rejected() {
        let mut a = Algebra::zero(names(&["e1", "e2"]));
        a.set_product(0, 0, v(&[0, 1]));
        a.set_product(0, 1, v(&[1, 0]));
        a.set_product(1, 0, v(&[1, 0]));
        let rep = check_jordan(&a);
        assert!(rep.commutative);
        assert!(!rep.jordan);
        assert!(rep.first_violation.is_some());
    }

    #[test]
    fn j21_structure() {
        let a = j21();
        assert!(check_jordan(&a).jordan);
        assert_eq!(a.nilpotency_class(), Some(3));
        assert_eq!(a.annihilator(), Subspace::span(2, [v(&[0, 1])]));
        assert_eq!(a.square_span(), a.annihilator());
        assert!(a.is_associative());
    }

    #[test]
    fn quotient_requires_ideal() {
        let a = j21();
        let not_ideal = Subspace::span(2, [v(&[1, 0])]);
        assert_eq!(a.quotient(&not_ideal).unwrap_err(), Error::NotAnIdeal);
        let (q, p) = a.quotient(&a.annihilator()).unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(p.apply(&v(&[3, 5])), v(&[3]));
    }
}
