//! Exact structure-constant computations for Leibniz algebras: the
//! classical Leibniz Yang-Baxter equation, quasi-triangular, triangular and
//! factorizable Leibniz bialgebras, their doubles, and the correspondence
//! with skew-symmetric quadratic Rota-Baxter Leibniz algebras.
//!
//! All arithmetic is over exact rationals; every check is an equality of
//! coefficients with no tolerance.

pub mod algebra;
pub mod bialgebra;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod linear;
pub mod random;
pub mod report;
pub mod rota_baxter;
pub mod yang_baxter;

pub use error::{Error, Result};
