//! Finite-dimensional Lie algebras given by a bracket table.

use crate::error::{Error, Result};
use crate::forms;
use crate::linalg::vector::{self, Vector};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    names: Vec<String>,
    grading: Vec<i8>,
    /// `table[i * n + j] = [e_i, e_j]`
    table: Vec<Vector>,
    form: Option<Matrix>,
}

impl LieAlgebra {
    /// Checks antisymmetry and Jacobi on basis triples, and invariance of `form` when given.
    pub fn new(names: Vec<String>, grading: Vec<i8>, table: Vec<Vector>, form: Option<Matrix>) -> Result<Self> {
        let n = names.len();
        if grading.len() != n || table.len() != n * n || table.iter().any(|v| v.len() != n) {
            return Err(Error::DimensionMismatch("bracket table".into()));
        }
        let l = LieAlgebra { names, grading, table, form: None };
        if let Some((i, j)) = l.antisymmetry_failure() {
            return Err(Error::NotAntisymmetric(format!("[{}, {}]", l.names[i], l.names[j])));
        }
        if let Some((i, j, k)) = l.jacobi_failure() {
            return Err(Error::JacobiFailure(format!("({}, {}, {})", l.names[i], l.names[j], l.names[k])));
        }
        match form {
            None => Ok(l),
            Some(g) => l.with_form(g),
        }
    }

    /// Attaches an invariant form after checking symmetry and invariance.
    pub fn with_form(mut self, g: Matrix) -> Result<Self> {
        if g.rows() != self.dim() || g.cols() != self.dim() {
            return Err(Error::DimensionMismatch("form".into()));
        }
        if !g.is_symmetric() {
            return Err(Error::InvarianceFailure("form is not symmetric".into()));
        }
        if let Some((i, j, k)) = self.invariance_failure(&g) {
            let nm = &self.names;
            return Err(Error::InvarianceFailure(format!("([{}, {}], {})", nm[i], nm[j], nm[k])));
        }
        self.form = Some(g);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn grading(&self) -> &[i8] {
        &self.grading
    }

    pub fn form(&self) -> Option<&Matrix> {
        self.form.as_ref()
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &Vector {
        &self.table[i * self.dim() + j]
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = vector::zeros(n);
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !num_traits::Zero::is_zero(*c)) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !num_traits::Zero::is_zero(*c)) {
                vector::axpy(&mut out, &(xi * yj), self.bracket_basis(i, j));
            }
        }
        out
    }

    /// `ad_x`, column `j` is `[x, e_j]`.
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.bracket(x, &vector::unit(n, j))).collect();
        Matrix::from_columns(n, &cols)
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| vector::is_zero(v))
    }

    fn antisymmetry_failure(&self) -> Option<(usize, usize)> {
        let n = self.dim();
        (0..n)
            .flat_map(|i| (i..n).map(move |j| (i, j)))
            .find(|&(i, j)| vector::add(self.bracket_basis(i, j), self.bracket_basis(j, i)) != vector::zeros(n))
    }

    /// The Jacobiator is alternating, so strictly increasing triples suffice.
    pub fn jacobi_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            let ei = vector::unit(n, i);
            for j in i + 1..n {
                let ej = vector::unit(n, j);
                for k in j + 1..n {
                    let ek = vector::unit(n, k);
                    let mut s = self.bracket(&ei, self.bracket_basis(j, k));
                    vector::axpy(&mut s, &crate::scalar::one(), &self.bracket(&ej, self.bracket_basis(k, i)));
                    vector::axpy(&mut s, &crate::scalar::one(), &self.bracket(&ek, self.bracket_basis(i, j)));
                    if !vector::is_zero(&s) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// First basis triple with `g([x, y], z) != g(x, [y, z])`.
    pub fn invariance_failure(&self, g: &Matrix) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let l = g.transpose().apply(self.bracket_basis(i, j));
                for k in 0..n {
                    let r = forms::eval(g, &vector::unit(n, i), self.bracket_basis(j, k));
                    if l[k] != r {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// `K(x, y) = tr(ad_x ad_y)`
    pub fn killing_form(&self) -> Matrix {
        let n = self.dim();
        let ads: Vec<Matrix> = (0..n).map(|i| self.ad(&vector::unit(n, i))).collect();
        Matrix::from_fn(n, n, |i, j| ads[i].mul(&ads[j]).trace())
    }

    /// First basis pair with `D[x, y] != [Dx, y] + [x, Dy]`.
    pub fn derivation_failure(&self, d: &Matrix) -> Option<(usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let l = d.apply(self.bracket_basis(i, j));
                let r = vector::add(&self.bracket(&d.column(i), &vector::unit(n, j)), &self.bracket(&vector::unit(n, i), &d.column(j)));
                if l != r {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_derivation(&self, d: &Matrix) -> bool {
        self.derivation_failure(d).is_none()
    }

    /// Whether `[g_i, g_j]` lies in degree `i + j` for all basis pairs, degrees outside `-1..=1` being zero.
    pub fn respects_grading(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let deg = self.grading[i] + self.grading[j];
                self.bracket_basis(i, j).iter().enumerate().all(|(k, c)| num_traits::Zero::is_zero(c) || self.grading[k] == deg)
            })
        })
    }

    /// Whether `w` is a 2-cocycle: `w([x, y], z) + w([y, z], x) + w([z, x], y) = 0`.
    pub fn is_two_cocycle(&self, w: &Matrix) -> bool {
        let n = self.dim();
        let f = |a: &Vector, c: usize| -> Scalar { forms::eval(w, a, &vector::unit(n, c)) };
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                (j + 1..n).all(|k| {
                    f(self.bracket_basis(i, j), k) + f(self.bracket_basis(j, k), i) + f(self.bracket_basis(k, i), j)
                        == crate::scalar::zero()
                })
            })
        })
    }

    /// Antisymmetric, nondegenerate 2-cocycle.
    pub fn is_symplectic(&self, w: &Matrix) -> bool {
        w.is_antisymmetric() && w.is_invertible() && self.is_two_cocycle(w)
    }
}
