use thiserror::Error;

/// Errors raised by the kernel operations.
///
/// Construction and defect operations report *defects* through their return
/// values, never through errors; errors are reserved for inputs that make an
/// operation meaningless (shape mismatches, singular matrices, violated
/// preconditions).
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("bilinear form is degenerate")]
    Degenerate,
    #[error("tensor is not skew-symmetric")]
    NotSkew,
    #[error("tensor is not (R,ad)-invariant")]
    NotInvariant,
    #[error("the given (l, r) pair is not a representation")]
    NotARepresentation,
    #[error("input is not a perm bialgebra: {0}")]
    NotABialgebra(String),
    #[error("tensor is not factorizable on this algebra")]
    NotFactorizable,
    #[error("tensor is not a quasi-triangular structure on this algebra")]
    NotQuasiTriangular,
    #[error("form is not a quadratic structure on this algebra")]
    NotQuadratic,
    #[error("data is not a quadratic Rota-Baxter structure: {0}")]
    NotQuadraticRb(String),
    #[error("operator is not Rota-Baxter of the given weight")]
    NotRotaBaxter,
    #[error("weight must be nonzero for this construction")]
    ZeroWeight,
    #[error("unknown catalog name: {0}")]
    UnknownName(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
