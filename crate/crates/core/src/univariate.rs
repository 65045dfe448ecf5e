//! Low-degree factors of a lacunary polynomial in one variable.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::dense::{factor_univariate, DensePoly1, DensePoly2};
use crate::error::{Error, Result, Untested};
use crate::gap::GapPolicy;
use crate::sparse::{SparsePolynomial, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivariateFactor {
    /// Primitive, positive leading coefficient.
    pub poly: DensePoly1,
    pub multiplicity: usize,
    pub cyclotomic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivariateFactorList {
    pub var: Var,
    pub z_multiplicity: BigUint,
    pub factors: Vec<UnivariateFactor>,
    pub untested: Vec<Untested>,
    pub heuristic: bool,
}

/// Euler's totient for `0..=n`.
fn phi_table(n: usize) -> Vec<usize> {
    let mut phi: Vec<usize> = (0..=n).collect();
    for p in 2..=n {
        if phi[p] == p {
            for k in (p..=n).step_by(p) {
                phi[k] -= phi[k] / p;
            }
        }
    }
    phi
}

/// All `n >= 1` with `phi(n) <= d`, ascending.
pub fn phi_inverse_candidates(d: usize) -> Vec<usize> {
    // phi(n) >= sqrt(n / 2)
    let top = 2 * d * d;
    let phi = phi_table(top.max(2));
    (1..=top.max(2)).filter(|&n| phi[n] <= d).collect()
}

/// The `n` with `q == Phi_n`, if any.
pub fn is_cyclotomic(q: &DensePoly1) -> Option<usize> {
    let k = q.degree();
    if k == 0 || q.lc() != 1.into() {
        return None;
    }
    let phi = phi_table(2 * k * k);
    (1..phi.len())
        .filter(|&n| phi[n] == k)
        .find(|&n| DensePoly1::cyclotomic(n) == *q)
}

fn variable_of(f: &SparsePolynomial) -> Result<Var> {
    if f.is_univariate_x() {
        Ok(Var::X)
    } else if f.is_univariate_y() {
        Ok(Var::Y)
    } else {
        Err(Error::NotUnivariate)
    }
}

fn divisible_by_cyclotomic(f: &SparsePolynomial, n: usize, limit: usize) -> Result<bool> {
    let r = f.reduce_mod_cyclotomic_support(n, limit)?;
    Ok(r.rem_monic(&DensePoly1::cyclotomic(n)).is_zero())
}

/// Largest `e <= cap` with `Phi_n^e | f` for univariate `f`, counting the
/// successive derivatives that stay divisible. Each test folds exponents
/// mod `n`, so it is exact whatever the size of the exponents.
pub fn cyclotomic_multiplicity(
    f: &SparsePolynomial,
    n: usize,
    dense_limit: usize,
    cap: usize,
) -> Result<(usize, Option<Untested>)> {
    let var = variable_of(f)?;
    let (_, _, mut current) = f.strip_monomial()?;
    let mut e = 0;
    while e < cap && !current.is_zero() {
        match divisible_by_cyclotomic(&current, n, dense_limit) {
            Ok(true) => {
                e += 1;
                current = current.partial_derivative(var);
            }
            Ok(false) => break,
            Err(err) => {
                let u = Untested::from_error(format!("cyclotomic factor Phi_{n}"), err)?;
                return Ok((e, Some(u)));
            }
        }
    }
    Ok((e, None))
}

/// Cyclotomic factors `(n, multiplicity)` of a univariate `f` with
/// `phi(n) <= d`.
pub fn cyclotomic_factors(
    f: &SparsePolynomial,
    d: usize,
    dense_limit: usize,
) -> Result<(Vec<(usize, usize)>, Vec<Untested>)> {
    variable_of(f)?;
    let (_, _, g) = f.strip_monomial()?;
    if g.is_constant() {
        return Ok((Vec::new(), Vec::new()));
    }
    let cap = g.num_terms() - 1;
    let results: Vec<Result<(usize, usize, Option<Untested>)>> = phi_inverse_candidates(d)
        .into_par_iter()
        .map(|n| {
            let (e, u) = cyclotomic_multiplicity(&g, n, dense_limit, cap)?;
            Ok((n, e, u))
        })
        .collect();
    let mut found = Vec::new();
    let mut untested = Vec::new();
    for r in results {
        let (n, e, u) = r?;
        if e > 0 {
            found.push((n, e));
        }
        untested.extend(u);
    }
    Ok((found, untested))
}

/// All irreducible factors of degree `<= d` of a univariate `f`, with
/// multiplicities. Non-cyclotomic factors are the common factors of the
/// pieces of a gap decomposition; their multiplicities come from exact
/// piecewise division.
pub fn find_low_degree_factors(
    f: &SparsePolynomial,
    d: usize,
    policy: &GapPolicy,
) -> Result<UnivariateFactorList> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if d == 0 {
        return Err(Error::InvalidArgument("degree bound must be at least 1".into()));
    }
    let var = variable_of(f)?;
    let (a, b, g) = f.strip_monomial()?;
    let mut out = UnivariateFactorList {
        var,
        z_multiplicity: if var == Var::X { a } else { b },
        factors: Vec::new(),
        untested: Vec::new(),
        heuristic: policy.is_heuristic(),
    };
    if g.is_constant() {
        return Ok(out);
    }
    let (cyclo, untested) = cyclotomic_factors(&g, d, policy.dense_limit)?;
    out.untested.extend(untested);
    for (n, e) in cyclo {
        out.factors.push(UnivariateFactor {
            poly: DensePoly1::cyclotomic(n),
            multiplicity: e,
            cyclotomic: true,
        });
    }

    let pieces = match policy.dense_pieces(&g, d) {
        Ok(p) => p,
        Err(e) => {
            out.untested
                .push(Untested::from_error("non-cyclotomic factors", e)?);
            out.factors.sort_by(|p, q| p.poly.cmp(&q.poly));
            return Ok(out);
        }
    };
    let as_univariate = |p: &DensePoly2| match var {
        Var::X => p.as_univariate_x(),
        Var::Y => p.as_univariate_y(),
    };
    let smallest = (0..pieces.len())
        .min_by_key(|&k| pieces[k].poly.total_degree())
        .unwrap();
    let base = as_univariate(&pieces[smallest].poly).expect("pieces stay univariate");
    let candidates: Vec<DensePoly1> = factor_univariate(&base)?
        .factors
        .into_iter()
        .map(|(q, _)| q)
        .filter(|q| q.degree() >= 1 && q.degree() <= d && is_cyclotomic(q).is_none())
        .filter(|q| {
            let q2 = DensePoly2::from_univariate(q, var);
            pieces.iter().all(|p| q2.divides(&p.poly))
        })
        .collect();
    let cap = g.num_terms() - 1;
    let counted: Vec<Result<(DensePoly1, usize, Option<Untested>)>> = candidates
        .into_par_iter()
        .map(|q| {
            let q2 = DensePoly2::from_univariate(&q, var);
            let (e, u) = policy.multiplicity(&g, &q2, cap)?;
            Ok((q, e, u))
        })
        .collect();
    for r in counted {
        let (q, e, u) = r?;
        out.untested.extend(u);
        if e > 0 {
            out.factors.push(UnivariateFactor {
                poly: q,
                multiplicity: e,
                cyclotomic: false,
            });
        }
    }
    out.factors.sort_by(|p, q| p.poly.cmp(&q.poly));
    Ok(out)
}
