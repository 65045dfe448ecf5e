//! Dense polynomials with integer coefficients and their factorization.
//!
//! Rational inputs are brought to integer form by clearing denominators;
//! factorizations carry the rational unit separately.

mod bivariate;
mod gcd;
mod modp;
mod poly1;
mod poly2;
mod qpoly;
mod zassenhaus;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::ToPrimitive;

pub use bivariate::factor_bivariate;
pub use gcd::{gcd as gcd_univariate, is_squarefree, squarefree as squarefree_univariate};
pub use poly1::DensePoly1;
pub use poly2::DensePoly2;
pub use zassenhaus::factor_univariate;

use crate::error::{Error, Result};
use crate::sparse::SparsePolynomial;

/// `unit * prod(poly^mult)` reconstructs the factored polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization<P> {
    pub unit: BigRational,
    pub factors: Vec<(P, usize)>,
}

/// A sparse polynomial materialized densely:
/// `f = x^x_shift * y^y_shift * poly / denominator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Densified {
    pub x_shift: BigUint,
    pub y_shift: BigUint,
    pub denominator: BigInt,
    pub poly: DensePoly2,
}

/// Densifies `f` after removing its monomial content. The stripped
/// polynomial's total degree must not exceed `limit`.
pub fn from_sparse(f: &SparsePolynomial, limit: usize) -> Result<Densified> {
    let (a, b) = f.min_exponents()?;
    let spread_x = f.degree_x() - &a;
    let spread_y = f.degree_y() - &b;
    let spread = f
        .terms()
        .iter()
        .map(|t| (&t.ex - &a) + (&t.ey - &b))
        .max()
        .unwrap_or_default();
    if spread > BigUint::from(limit) {
        return Err(Error::DenseLimitExceeded {
            required: spread,
            limit,
        });
    }
    debug_assert!(spread_x <= spread && spread_y <= spread);
    let (den, cleared) = f.clear_denominators();
    let poly = DensePoly2::from_terms(cleared.terms().iter().map(|t| {
        (
            (&t.ex - &a).to_usize().unwrap(),
            (&t.ey - &b).to_usize().unwrap(),
            t.coeff.to_integer(),
        )
    }));
    Ok(Densified {
        x_shift: a,
        y_shift: b,
        denominator: den,
        poly,
    })
}

/// Densifies a univariate polynomial (in whichever variable it uses),
/// returning the stripped power of the variable and the integer polynomial.
pub fn univariate_from_sparse(f: &SparsePolynomial, limit: usize) -> Result<(BigUint, DensePoly1)> {
    let d = from_sparse(f, limit)?;
    if let Some(p) = d.poly.as_univariate_x().filter(|_| f.is_univariate_x()) {
        Ok((d.x_shift, p))
    } else if let Some(p) = d.poly.as_univariate_y().filter(|_| f.is_univariate_y()) {
        Ok((d.y_shift, p))
    } else {
        Err(Error::NotUnivariate)
    }
}

/// Whether `p` divides `f` over Q, for `p` coprime to `x` and `y`.
pub fn divides_sparse(p: &DensePoly2, f: &SparsePolynomial, limit: usize) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    Ok(p.divides(&from_sparse(f, limit)?.poly))
}

/// Dense form of a small sparse polynomial, without stripping monomials.
#[cfg(test)]
pub(crate) fn dense2(s: &str) -> DensePoly2 {
    let f: SparsePolynomial = s.parse().unwrap();
    DensePoly2::from_terms(f.terms().iter().map(|t| {
        (
            t.ex.to_usize().unwrap(),
            t.ey.to_usize().unwrap(),
            t.coeff.to_integer(),
        )
    }))
}
