use num_traits::Zero;

use super::matrix::Matrix;
use super::vector::{self, Vector};
use crate::scalar::Scalar;

/// A subspace of `Q^n`, stored as the rows of its reduced row echelon basis.
///
/// The representation is canonical, so structural equality is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace { ambient: n, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        Self::span(n, (0..n).map(|i| vector::unit(n, i)))
    }

    pub fn span<I: IntoIterator<Item = Vector>>(n: usize, vectors: I) -> Self {
        let rows: Vec<Vector> = vectors.into_iter().collect();
        if rows.is_empty() {
            return Self::zero(n);
        }
        assert!(rows.iter().all(|r| r.len() == n), "vector length does not match ambient dimension");
        let (r, pivots) = Matrix::from_rows(&rows).rref();
        let basis = (0..pivots.len()).map(|i| r.row(i)).collect();
        Subspace { ambient: n, basis, pivots }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `n x d` matrix whose columns are the basis vectors.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient, &self.basis)
    }

    /// Residual of `v` after eliminating the pivot coordinates; zero iff `v` lies in the space.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut r = v.to_vec();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let c = r[p].clone();
                vector::axpy(&mut r, &-c, b);
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        vector::is_zero(&self.reduce(v))
    }

    /// Coordinates with respect to the echelon basis.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn combination(&self, coords: &[Scalar]) -> Vector {
        let mut v = vector::zeros(self.ambient);
        for (c, b) in coords.iter().zip(&self.basis) {
            vector::axpy(&mut v, c, b);
        }
        v
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Self::span(self.ambient, self.basis.iter().chain(&other.basis).cloned())
    }

    /// Orthogonal complement for the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Self::full(self.ambient);
        }
        Matrix::from_rows(&self.basis).kernel_space()
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    /// The coordinate complement spanned by unit vectors at the non-pivot positions.
    pub fn echelon_complement(&self) -> Subspace {
        let n = self.ambient;
        Self::span(n, (0..n).filter(|c| !self.pivots.contains(c)).map(|c| vector::unit(n, c)))
    }

    pub fn image(&self, m: &Matrix) -> Subspace {
        Self::span(m.rows(), self.basis.iter().map(|b| m.apply(b)))
    }

    /// `{ v in self : m v = 0 }`
    pub fn kernel_of(&self, m: &Matrix) -> Subspace {
        if self.is_zero() {
            return self.clone();
        }
        let k = m.mul(&self.basis_matrix()).kernel();
        Self::span(self.ambient, k.iter().map(|c| self.combination(c)))
    }

    pub fn is_invariant(&self, m: &Matrix) -> bool {
        self.basis.iter().all(|b| self.contains(&m.apply(b)))
    }
}
