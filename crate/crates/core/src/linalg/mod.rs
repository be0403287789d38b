//! Exact linear algebra over the rationals.

mod matrix;
mod poly;
mod subspace;
pub mod vector;

use std::fmt;

pub use matrix::Matrix;
pub use poly::{char_poly, rational_roots, Poly};
pub use subspace::Subspace;
pub use vector::Vector;

use crate::scalar::Scalar;

/// One rational eigenvalue with its eigenspace and generalized eigenspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigen {
    pub value: Scalar,
    pub multiplicity: usize,
    pub eigenspace: Subspace,
    pub generalized: Subspace,
}

/// The characteristic polynomial does not split over the rationals.
///
/// `factors` are the square-free parts of the cofactor left after removing every rational root;
/// factors of degree two or three are irreducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitFailure {
    pub split: Vec<(Scalar, usize)>,
    pub factors: Vec<(Poly, usize)>,
}

impl fmt::Display for SplitFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, m)| if *m == 1 { format!("({p})") } else { format!("({p})^{m}") })
            .collect();
        write!(f, "characteristic polynomial has non-linear factors {}", parts.join(" "))
    }
}

/// Rational spectral decomposition, eigenvalues in increasing order.
pub fn rational_spectral(a: &Matrix) -> Result<Vec<Eigen>, SplitFailure> {
    let n = a.rows();
    let (roots, rest) = rational_roots(&char_poly(a));
    if rest.degree().unwrap_or(0) > 0 {
        return Err(SplitFailure { split: roots, factors: rest.square_free() });
    }
    Ok(roots
        .into_iter()
        .map(|(value, multiplicity)| {
            let shifted = a.sub(&Matrix::scalar(n, &value));
            Eigen {
                eigenspace: shifted.kernel_space(),
                generalized: shifted.pow(n as u32).kernel_space(),
                value,
                multiplicity,
            }
        })
        .collect())
}

/// Rational eigenvalues and eigenspaces only; irrational parts are ignored.
pub fn rational_eigenvectors(a: &Matrix) -> Vec<(Scalar, Subspace)> {
    let n = a.rows();
    let (roots, _) = rational_roots(&char_poly(a));
    roots.into_iter().map(|(v, _)| {
        let k = a.sub(&Matrix::scalar(n, &v)).kernel_space();
        (v, k)
    }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn diagonalizable_spectrum() {
        let a = Matrix::from_i64(&[&[1, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, -2]]);
        let s = rational_spectral(&a).unwrap();
        let vals: Vec<Scalar> = s.iter().map(|e| e.value.clone()).collect();
        assert_eq!(vals, vec![int(-2), int(-1), int(1), int(2)]);
        assert!(s.iter().all(|e| e.generalized.dim() == 1));
    }

    #[test]
    fn jordan_block_generalized_space() {
        let a = Matrix::from_i64(&[&[3, 1], &[0, 3]]);
        let s = rational_spectral(&a).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].multiplicity, 2);
        assert_eq!(s[0].eigenspace.dim(), 1);
        assert_eq!(s[0].generalized.dim(), 2);
    }

    #[test]
    fn rotation_does_not_split() {
        let a = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
        let err = rational_spectral(&a).unwrap_err();
        assert_eq!(err.factors.len(), 1);
        assert_eq!(err.factors[0].0.to_string(), "x^2 + 1");
        let b = Matrix::from_i64(&[&[0, 2], &[1, 0]]);
        assert_eq!(rational_spectral(&b).unwrap_err().factors[0].0.to_string(), "x^2 - 2");
    }

    #[test]
    fn solve_and_kernel_on_rank_deficient_system() {
        let a = Matrix::from_i64(&[&[1, 2, 3], &[2, 4, 6]]);
        let (x, k) = a.solve_and_kernel(&[int(1), int(2)]).unwrap();
        assert_eq!(a.apply(&x), vec![int(1), int(2)]);
        assert_eq!(k.len(), 2);
        assert!(a.solve_and_kernel(&[int(1), int(3)]).is_none());
    }
}
