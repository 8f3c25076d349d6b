//! Exact-arithmetic toolkit for finite-dimensional nonassociative algebras
//! given by structure constants.
//!
//! The crate verifies and constructs generalized splittings of algebras:
//! type-M and dual type-M pre-structures, (dual) type-M O-operators and
//! Rota-Baxter operators, bilinear-form invariance conditions, special
//! type-a pre-Leibniz (SDPL) algebras, averaging Lie algebras, and the
//! bialgebra / Manin-triple layer on top of them.
//!
//! All arithmetic is over the rationals with arbitrary-precision integers;
//! every check is an exact equality.

pub mod algebra;
pub mod averaging;
pub mod bialgebra;
mod error;
pub mod leibniz;
pub mod linalg;
pub mod scalar;
pub mod search;
pub mod sl2;
pub mod splitting;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
