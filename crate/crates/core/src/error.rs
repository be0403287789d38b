use thiserror::Error;

use crate::linalg::SplitFailure;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a Jordan algebra: {0}")]
    NotJordan(String),
    #[error("invalid form: {0}")]
    BadForm(String),
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("not a subalgebra: {0}")]
    NotSubalgebra(String),
    #[error("not a representation: {0}")]
    NotRepresentation(String),
    #[error("not admissible: condition {condition} fails{detail}")]
    NotAdmissible { condition: String, detail: String },
    #[error("bad cocycle: {0}")]
    BadCocycle(String),
    #[error("invalid input: {0}")]
    SpecInvalid(String),
    #[error("bad direction: {0}")]
    BadDirection(String),
    #[error("ideal is nondegenerate, nothing to peel")]
    NondegenerateIdeal,
    #[error("ideal is not maximal with a complementary subalgebra: {0}")]
    NotMaximalComplemented(String),
    #[error("L(J^2) and [L,L] are not in direct sum")]
    NotDirect,
    #[error("Jacobi identity fails: {0}")]
    JacobiFailure(String),
    #[error("form is not invariant: {0}")]
    InvarianceFailure(String),
    #[error("form is degenerate: {0}")]
    Degenerate(String),
    #[error("not a derivation: {0}")]
    NotADerivation(String),
    #[error("not antisymmetric: {0}")]
    NotAntisymmetric(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("classical Yang-Baxter equation fails")]
    YbeFails,
    #[error("compatibility condition fails: {0}")]
    CompatibilityFails(String),
    #[error("{0}")]
    Split(SplitFailure),
    #[error("algebra is zero")]
    ZeroAlgebra,
    #[error("no isotropic direction in the annihilator meets the Manin components")]
    NoIsotropicAnnDirection,
    #[error("zero is an eigenvalue of the derivation")]
    ZeroEigenvalue,
    #[error("no rational eigenvector: {0}")]
    NoEigenvector(String),
    #[error("Manin components are not stable under the derivation")]
    NotDeltaStable,
    #[error("not a Manin triple: {0}")]
    NotManin(String),
    #[error("bad components: {0}")]
    BadComponents(String),
    #[error("map is not an intertwiner")]
    NotAnIntertwiner,
    #[error("unknown catalog entry: {0}")]
    UnknownName(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("dimension {dim} exceeds the limit {max}")]
    TooLarge { dim: usize, max: usize },
    #[error("verification failed: {0}")]
    Verification(String),
}

impl From<SplitFailure> for Error {
    fn from(s: SplitFailure) -> Self {
        Error::Split(s)
    }
}
