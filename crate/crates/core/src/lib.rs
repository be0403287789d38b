//! Exact rational toolkit for pseudo-euclidean Jordan algebras: structure checks, extensions,
//! double extensions and their inverses, Tits-Kantor-Koecher algebras, symplectic structures,
//! Manin triples and structural diagnostics.

pub mod algebra;
pub mod catalog;
pub mod diagnostics;
pub mod double_ext;
pub mod error;
pub mod extensions;
pub mod forms;
pub mod identity;
pub mod lie;
pub mod manin;
pub mod linalg;
pub mod samples;
pub mod scalar;
pub mod symplectic;
pub mod tkk;

pub use algebra::{check_jordan, Algebra, IdentityReport, JordanAlgebra};
pub use error::{Error, Result};
pub use forms::{check_pep, PseudoEuclidean};
pub use lie::LieAlgebra;
pub use linalg::{Matrix, Subspace, Vector};
pub use scalar::Scalar;
