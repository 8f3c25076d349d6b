use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("unknown multiplication `{0}`")]
    UnknownMult(String),
    #[error("type matrix is singular")]
    SingularTypeMatrix,
    #[error("map is not an O-operator")]
    NotAnOperator,
    #[error("bracket does not satisfy the Lie relations")]
    NotLie,
    #[error("multiplication does not satisfy the Leibniz identity")]
    NotLeibniz,
    #[error("operator is not averaging")]
    NotAveraging,
    #[error("the pair is not a Lie representation")]
    NotLieRep,
    #[error("bilinear form is degenerate")]
    DegenerateForm,
    #[error("bilinear form is not symmetric")]
    NotSymmetric,
    #[error("bilinear form is not left-invariant")]
    NotLeftInvariant,
    #[error("bilinear form does not satisfy the type-M invariant condition")]
    NotInvariant,
    #[error("not a valid split algebra: {0}")]
    InvalidSplit(String),
    #[error("comultiplication pair is not a coalgebra")]
    NotCoalgebra,
    #[error("the bialgebra compatibility identities fail")]
    NotBialgebra,
    #[error("input is not an averaging Lie bialgebra")]
    NotAvgLieBialgebra,
    #[error("construction exceeds the dimension cap ({0})")]
    CapExceeded(usize),
    #[error("bad shape: {0}")]
    BadShape(String),
}
