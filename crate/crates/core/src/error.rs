use thiserror::Error;

/// Everything that can go wrong in the library and the command line layer.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is singular")]
    Singular,
    #[error("not a representation: {0}")]
    InvalidRepresentation(String),
    #[error("not a Lie algebra: {0}")]
    NotLie(String),
    #[error("Leibniz identity fails at ({}, {}, {})", .triple.0 + 1, .triple.1 + 1, .triple.2 + 1)]
    NotLeibniz { triple: (usize, usize, usize) },
    #[error("not factorizable: {0}")]
    NotFactorizable(String),
    #[error("not a Leibniz bialgebra: {0}")]
    InvalidBialgebra(String),
    #[error("tensor is not invariant")]
    NotInvariant,
    #[error("tensor is not skew-symmetric")]
    NotSkew,
    #[error("skew-symmetric part of r is not invariant")]
    SkewPartNotInvariant,
    #[error("space mismatch: {0}")]
    TagMismatch(String),
    #[error("wrong weight: {0}")]
    WrongWeight(String),
    #[error("invalid data: {0}")]
    Invalid(String),
    #[error("not a Rota-Baxter operator of weight {0}")]
    NotRotaBaxter(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
