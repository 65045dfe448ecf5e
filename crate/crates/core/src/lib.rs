//! Low-degree factors of lacunary bivariate polynomials over Q.

pub mod binomial;
pub mod cli;
pub mod bounds;
pub mod dense;
pub mod engine;
pub mod error;
pub mod gap;
pub mod numeric;
pub mod sparse;
pub mod univariate;

pub use error::{Error, Result, Untested};
pub use sparse::{SparsePolynomial, Term, Var};
