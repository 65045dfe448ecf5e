//! Bounds on the number of non-cyclotomic factors, and gap lengths adapted
//! to a single linear candidate.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::dense::DensePoly2;
use crate::error::{Error, Result};
use crate::gap::{compute_c, decompose, GapPolicy};
use crate::numeric::{ceil_nat, ln_lower_nat, ln_upper_nat};
use crate::sparse::SparsePolynomial;

fn rat(n: u64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `5^6 * n^3 * h1 * ln^3(8 n deg)` with the logarithm rounded up: an
/// upper bound on the number of non-cyclotomic irreducible factors of a
/// polynomial in `n` variables over Q, counted with multiplicity.
pub fn factor_count_bound_rational(n: u64, h1_upper: &BigRational, degree: &BigUint) -> BigRational {
    if !h1_upper.is_positive() {
        return BigRational::zero();
    }
    let l = ln_upper_nat(&(degree * 8u32 * n));
    rat(15625 * n * n * n) * h1_upper * &l * &l * &l
}

/// `10^14 * n^8 * h1 * ln^5(max(16, n deg))`: the same count over the
/// algebraic closure.
pub fn factor_count_bound_absolute(n: u64, h1_upper: &BigRational, degree: &BigUint) -> BigRational {
    if !h1_upper.is_positive() {
        return BigRational::zero();
    }
    let arg = (degree * n).max(BigUint::from(16u32));
    let l = ln_upper_nat(&arg);
    let l5 = &l * &l * &l * &l * &l;
    let n8 = BigInt::from(n).pow(8);
    BigRational::from_integer(BigInt::from(10u64).pow(14) * n8) * h1_upper * l5
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub n: u64,
    pub h1_upper: BigRational,
    pub degree: BigUint,
    pub bound_rational: BigRational,
    pub bound_absolute: BigRational,
}

impl BoundReport {
    pub fn new(n: u64, h1_upper: BigRational, degree: BigUint) -> Self {
        BoundReport {
            bound_rational: factor_count_bound_rational(n, &h1_upper, &degree),
            bound_absolute: factor_count_bound_absolute(n, &h1_upper, &degree),
            n,
            h1_upper,
            degree,
        }
    }

    /// Report for a bivariate `f`.
    pub fn for_polynomial(f: &SparsePolynomial) -> Result<Self> {
        Ok(Self::new(2, compute_c(f)?, f.total_degree()))
    }

    pub fn to_json(&self) -> BoundReportJson {
        BoundReportJson {
            n: self.n,
            h1_upper: self.h1_upper.to_string(),
            degree: self.degree.to_string(),
            bound_rational: ceil_nat(&self.bound_rational).to_string(),
            bound_absolute: ceil_nat(&self.bound_absolute).to_string(),
        }
    }
}

/// Bounds rounded up to integers, as decimal strings.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReportJson {
    pub n: u64,
    pub h1_upper: String,
    pub degree: String,
    pub bound_rational: String,
    pub bound_absolute: String,
}

/// `a*x + b*y + c` with `gcd(a, b, c) = 1`, `abc != 0` and `b > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearCandidate {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl LinearCandidate {
    pub fn new(a: BigInt, b: BigInt, c: BigInt) -> Result<Self> {
        if a.is_zero() || b.is_zero() || c.is_zero() {
            return Err(Error::InvalidCandidate("coefficients must be nonzero".into()));
        }
        if !a.gcd(&b).gcd(&c).is_one() {
            return Err(Error::InvalidCandidate("coefficients must be coprime".into()));
        }
        let s = if b.is_negative() { -BigInt::one() } else { BigInt::one() };
        Ok(LinearCandidate {
            a: a * &s,
            b: b * &s,
            c: c * s,
        })
    }

    pub fn from_i64(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::new(a.into(), b.into(), c.into())
    }

    pub fn coefficients(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.c)
    }

    pub fn to_dense(&self) -> DensePoly2 {
        DensePoly2::from_terms([
            (1, 0, self.a.clone()),
            (0, 1, self.b.clone()),
            (0, 0, self.c.clone()),
        ])
    }

    fn max_abs(&self) -> BigUint {
        [&self.a, &self.b, &self.c]
            .into_iter()
            .map(|v| v.magnitude().clone())
            .max()
            .unwrap()
    }
}

/// A lower bound for the essential minimum of the line `ax + by + c = 0`:
/// `0.1911` when all coefficients are units, else `ln(max |coeff|) / 2`
/// rounded down.
pub fn adaptive_mu_lower(p: &LinearCandidate) -> BigRational {
    let m = p.max_abs();
    if m.is_one() {
        BigRational::new(1911.into(), 10000.into())
    } else {
        ln_lower_nat(&m) / rat(2)
    }
}

/// Gap length that makes divisibility of `f` by `p` visible piecewise:
/// `ceil(c / mu)` with `c` an upper bound for the height of `f`.
pub fn adaptive_delta(f: &SparsePolynomial, p: &LinearCandidate) -> Result<BigUint> {
    Ok(ceil_nat(&(compute_c(f)? / adaptive_mu_lower(p))))
}

/// Whether `p` divides `f`, decided on the pieces of `f` split at the
/// adaptive gap.
pub fn test_linear_factor_adaptive(
    f: &SparsePolynomial,
    p: &LinearCandidate,
    dense_limit: usize,
) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let delta = adaptive_delta(f, p)?;
    let policy = GapPolicy {
        dense_limit,
        heuristic_delta: None,
    };
    let pieces = policy.densify(&decompose(f, &delta, &delta)?)?;
    let q = p.to_dense();
    Ok(pieces.iter().all(|piece| q.divides(&piece.poly)))
}

/// All candidates with coefficients bounded by `h` in absolute value.
pub fn linear_candidates(h: u64) -> Vec<LinearCandidate> {
    let h = h as i64;
    let mut out = Vec::new();
    for a in -h..=h {
        for b in 1..=h {
            for c in -h..=h {
                if let Ok(p) = LinearCandidate::from_i64(a, b, c) {
                    out.push(p);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::to_f64;

    fn s(t: &str) -> SparsePolynomial {
        t.parse().unwrap()
    }

    #[test]
    fn count_bounds() {
        let b = factor_count_bound_rational(2, &rat(2), &BigUint::from(2u32));
        let e = 15625.0 * 8.0 * 2.0 * 32f64.ln().powi(3);
        assert!((to_f64(&b) / e - 1.0).abs() < 1e-9);
        assert!(factor_count_bound_rational(2, &rat(0), &BigUint::from(5u32)).is_zero());
        let d = BigUint::from(9u32);
        assert!(factor_count_bound_rational(1, &rat(1), &d) < factor_count_bound_rational(2, &rat(1), &d));

        let b = factor_count_bound_absolute(2, &rat(1), &BigUint::from(2u32));
        let e = 1e14 * 256.0 * 16f64.ln().powi(5);
        assert!((to_f64(&b) / e - 1.0).abs() < 1e-9);
        assert!(factor_count_bound_absolute(2, &rat(0), &d).is_zero());
        let b9 = factor_count_bound_absolute(2, &rat(1), &BigUint::from(9u32));
        let b10 = factor_count_bound_absolute(2, &rat(1), &BigUint::from(10u32));
        assert!(b9 < b10);
    }

    #[test]
    fn candidates_are_normalized() {
        let p = LinearCandidate::from_i64(2, -1, 3).unwrap();
        assert_eq!(p.coefficients(), (&(-2).into(), &1.into(), &(-3).into()));
        assert!(LinearCandidate::from_i64(0, 1, 1).is_err());
        assert!(LinearCandidate::from_i64(2, 4, 6).is_err());
    }

    #[test]
    fn mu_lower_bounds() {
        let mu = adaptive_mu_lower(&LinearCandidate::from_i64(1, 1, 1).unwrap());
        assert_eq!(mu, BigRational::new(1911.into(), 10000.into()));
        assert_eq!(mu, adaptive_mu_lower(&LinearCandidate::from_i64(-1, 1, -1).unwrap()));
        let mu = to_f64(&adaptive_mu_lower(&LinearCandidate::from_i64(2, 1, 1).unwrap()));
        assert!(mu <= 2f64.ln() / 2.0 && mu > 0.3465);
    }

    #[test]
    fn adaptive_linear_test() {
        let f = s("x + y + 1") * s("x^10000 + 7");
        let p = LinearCandidate::from_i64(1, 1, 1).unwrap();
        assert!(adaptive_delta(&f, &p).unwrap() < BigUint::from(10000u32));
        assert!(test_linear_factor_adaptive(&f, &p, 2000).unwrap());
        let q = LinearCandidate::from_i64(1, -1, 1).unwrap();
        assert!(!test_linear_factor_adaptive(&f, &q, 2000).unwrap());
        let g = s("x + 2*y + 3");
        let r = LinearCandidate::from_i64(1, 2, 3).unwrap();
        assert!(test_linear_factor_adaptive(&g, &r, 2000).unwrap());
    }

    #[test]
    fn candidate_enumeration() {
        let all = linear_candidates(1);
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(|p| p.coefficients().1.is_positive()));
    }
}
