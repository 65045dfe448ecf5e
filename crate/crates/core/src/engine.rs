//! Low-degree factorization of a sparse bivariate polynomial.
//!
//! Factors that are products of binomials come from [`binomial_factor_search`];
//! every other factor of degree at most `d` divides each piece of the gap
//! decomposition, so it is found by factoring the smallest piece densely and
//! keeping what divides the rest.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::binomial::{binomial_factor_search, binomial_multiplicity, classify, FactorClass, FoundFactor};
use crate::dense::{factor_bivariate, DensePoly2};
use crate::error::{Error, Result, Untested};
use crate::gap::{compute_c, decompose, GapMode, GapParameters, GapPolicy};
use crate::sparse::{PolynomialJson, SparsePolynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorOutput {
    pub x_multiplicity: BigUint,
    pub y_multiplicity: BigUint,
    /// Sorted canonically.
    pub factors: Vec<FoundFactor>,
    pub untested: Vec<Untested>,
    pub parameters: GapParameters,
    pub heuristic: bool,
    /// Binomial factors on which the two search paths disagreed.
    pub conflicts: usize,
}

/// Whether the irreducible `p` divides every piece of `f` split at `delta`.
/// With `delta` at least the certified gap for `deg p`, this is
/// equivalent to `p | f`. Torsion factors are tested exactly instead.
pub fn check_divides(
    f: &SparsePolynomial,
    p: &DensePoly2,
    delta: &BigUint,
    dense_limit: usize,
) -> Result<bool> {
    if p.is_constant() {
        return Ok(true);
    }
    if f.is_zero() {
        return Ok(true);
    }
    let policy = GapPolicy {
        dense_limit,
        heuristic_delta: None,
    };
    if classify(p) == FactorClass::Cyclotomic {
        // the gap says nothing about torsion factors; test them exactly
        let (e, untested) = binomial_multiplicity(f, p, &policy)?.expect("torsion is binomial");
        if let Some(u) = untested.into_iter().next() {
            return Err(Error::DenseLimitExceeded {
                required: u.required,
                limit: u.limit,
            });
        }
        return Ok(e > 0);
    }
    let pieces = policy.densify(&decompose(f, delta, delta)?)?;
    let p = p.primitive();
    Ok(pieces.iter().all(|piece| p.divides(&piece.poly)))
}

struct GapResult {
    factors: Vec<FoundFactor>,
    untested: Vec<Untested>,
    complete: bool,
}

/// Non-torsion factors of degree `<= d` common to all pieces.
fn gap_path(g: &SparsePolynomial, d: usize, policy: &GapPolicy) -> Result<GapResult> {
    let mut out = GapResult {
        factors: Vec::new(),
        untested: Vec::new(),
        complete: true,
    };
    let pieces = match policy.dense_pieces(g, d) {
        Ok(p) => p,
        Err(e) => {
            out.untested
                .push(Untested::from_error("factors from the gap decomposition", e)?);
            out.complete = false;
            return Ok(out);
        }
    };
    let smallest = (0..pieces.len())
        .min_by_key(|&k| (pieces[k].poly.total_degree(), pieces[k].poly.num_terms()))
        .unwrap();
    let candidates: Vec<DensePoly2> = factor_bivariate(&pieces[smallest].poly)?
        .factors
        .into_iter()
        .map(|(p, _)| p)
        .filter(|p| !p.is_constant() && p.total_degree() <= d)
        .filter(|p| classify(p) != FactorClass::Cyclotomic)
        .filter(|p| pieces.iter().all(|piece| p.divides(&piece.poly)))
        .collect();
    let cap = g.num_terms() - 1;
    let counted: Vec<Result<(DensePoly2, usize, Option<Untested>)>> = candidates
        .into_par_iter()
        .map(|p| {
            let (e, u) = policy.multiplicity(g, &p, cap)?;
            Ok((p, e, u))
        })
        .collect();
    for r in counted {
        let (p, e, u) = r?;
        if u.is_some() {
            out.complete = false;
        }
        out.untested.extend(u);
        if e > 0 {
            let class = classify(&p);
            out.factors.push(FoundFactor {
                poly: p,
                multiplicity: e,
                class,
            });
        }
    }
    Ok(out)
}

/// All irreducible factors of `f` over Q of total degree at most `d`, with
/// multiplicities. Checks that could not run because a dense form exceeded
/// the limit are listed in `untested`.
pub fn factor(f: &SparsePolynomial, d: usize, policy: &GapPolicy) -> Result<FactorOutput> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if d == 0 {
        return Err(Error::InvalidArgument("degree bound must be at least 1".into()));
    }
    let (a, b, g) = f.strip_monomial()?;
    let mut parameters = GapParameters::new(d, compute_c(&g)?, GapMode::Rational);
    if let Some(k) = &policy.heuristic_delta {
        parameters.delta = k.clone();
    }
    let mut out = FactorOutput {
        x_multiplicity: a,
        y_multiplicity: b,
        factors: Vec::new(),
        untested: Vec::new(),
        parameters,
        heuristic: policy.is_heuristic(),
        conflicts: 0,
    };
    if g.is_constant() {
        return Ok(out);
    }

    let (binomial, gap) = rayon::join(
        || binomial_factor_search(&g, d, policy),
        || gap_path(&g, d, policy),
    );
    let binomial = binomial?;
    let gap = gap?;
    let binomial_complete = binomial.untested.is_empty();
    out.untested.extend(binomial.untested);
    out.untested.extend(gap.untested);

    let gap_polys: BTreeSet<DensePoly2> = gap.factors.iter().map(|f| f.poly.clone()).collect();
    let mut merged: BTreeMap<DensePoly2, FoundFactor> = BTreeMap::new();
    for f in binomial.factors {
        merged.insert(f.poly.clone(), f);
    }
    for f in gap.factors {
        match merged.get(&f.poly) {
            Some(seen) => {
                if seen.multiplicity != f.multiplicity {
                    out.conflicts += 1;
                }
            }
            None => {
                if f.class == FactorClass::Binomial && binomial_complete {
                    out.conflicts += 1;
                }
                merged.insert(f.poly.clone(), f);
            }
        }
    }
    if gap.complete {
        out.conflicts += merged
            .values()
            .filter(|f| f.class == FactorClass::Binomial && !gap_polys.contains(&f.poly))
            .count();
    }
    out.factors = merged.into_values().collect();
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorJson {
    pub poly: PolynomialJson,
    pub mult: usize,
    pub class: FactorClass,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorOutputJson {
    pub x_mult: String,
    pub y_mult: String,
    pub factors: Vec<FactorJson>,
    pub untested: Vec<Untested>,
    pub delta: String,
    pub heuristic: bool,
}

impl FactorOutput {
    pub fn to_json(&self) -> FactorOutputJson {
        FactorOutputJson {
            x_mult: self.x_multiplicity.to_string(),
            y_mult: self.y_multiplicity.to_string(),
            factors: self
                .factors
                .iter()
                .map(|f| FactorJson {
                    poly: f.poly.to_sparse().to_json(),
                    mult: f.multiplicity,
                    class: f.class,
                })
                .collect(),
            untested: self.untested.clone(),
            delta: self.parameters.delta.to_string(),
            heuristic: self.heuristic,
        }
    }
}
