//! Factors that are products of binomials: `x^a - c*y^b`, `x^a*y^b - c`
//! and polynomials in one variable. Each family is found by substituting a
//! new variable `z` for a binomial and factoring in `z`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dense::{DensePoly1, DensePoly2};
use crate::error::{Error, Result, Untested};
use crate::gap::GapPolicy;
use crate::sparse::{SparsePolynomial, Term, Var};
use crate::univariate::{cyclotomic_multiplicity, find_low_degree_factors, is_cyclotomic};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FactorClass {
    /// A product of binomials whose coefficients are roots of unity.
    Cyclotomic,
    /// Any other product of binomials, including polynomials in one variable.
    Binomial,
    General,
}

impl FactorClass {
    pub fn as_str(self) -> &'static str {
        match self {
            FactorClass::Cyclotomic => "cyclotomic",
            FactorClass::Binomial => "binomial",
            FactorClass::General => "general",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoundFactor {
    /// Primitive, irreducible, positive canonical leading coefficient.
    pub poly: DensePoly2,
    pub multiplicity: usize,
    pub class: FactorClass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialFactors {
    pub factors: Vec<FoundFactor>,
    pub untested: Vec<Untested>,
}

/// `First`: `x^alpha = z*y^beta`. `Second`: `x^alpha*y^beta = z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BinomialForm {
    First,
    Second,
}

/// The coefficient of `x^i*y^j` in the remainder, a polynomial in `z`
/// (stored in the variable `x`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slice {
    pub i: usize,
    pub j: BigUint,
    pub g: SparsePolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialRemainder {
    pub form: BinomialForm,
    pub alpha: usize,
    pub beta: usize,
    pub slices: Vec<Slice>,
}

/// Rewrites `f` modulo the binomial of the given form. Every term lands in
/// exactly one slice, so the slices hold `t` terms in total. For the
/// second form `y` exponents are shifted so the smallest is zero.
pub fn remainder_slices(
    f: &SparsePolynomial,
    alpha: usize,
    beta: usize,
    form: BinomialForm,
) -> Result<BinomialRemainder> {
    if alpha == 0 || beta == 0 || alpha.gcd(&beta) != 1 {
        return Err(Error::InvalidArgument(format!(
            "binomial exponents ({alpha}, {beta}) must be positive and coprime"
        )));
    }
    let a = BigUint::from(alpha);
    let b = BigInt::from(beta);
    let mut keyed: Vec<(usize, BigInt, Term)> = Vec::with_capacity(f.num_terms());
    for t in f.terms() {
        let (k, r) = t.ex.div_rem(&a);
        let shift = &b * BigInt::from(k.clone());
        let ey = BigInt::from(t.ey.clone());
        let j = match form {
            BinomialForm::First => ey + shift,
            BinomialForm::Second => ey - shift,
        };
        let z = Term::new(t.coeff.clone(), k, BigUint::zero());
        keyed.push((r.to_usize().unwrap(), j, z));
    }
    let low = match form {
        BinomialForm::First => BigInt::zero(),
        BinomialForm::Second => keyed.iter().map(|(_, j, _)| j.clone()).min().unwrap_or_default(),
    };
    let mut groups: BTreeMap<(usize, BigUint), Vec<Term>> = BTreeMap::new();
    for (i, j, z) in keyed {
        let j = (j - &low).to_biguint().expect("shifted to be nonnegative");
        groups.entry((i, j)).or_default().push(z);
    }
    let slices = groups
        .into_iter()
        .map(|((i, j), terms)| Slice {
            i,
            j,
            g: SparsePolynomial::canonicalize(terms),
        })
        .collect();
    Ok(BinomialRemainder {
        form,
        alpha,
        beta,
        slices,
    })
}

/// `y^(beta*deg q) * q(x^alpha / y^beta)` or `q(x^alpha * y^beta)`,
/// made primitive.
pub fn reconstruct_factor(
    q: &DensePoly1,
    alpha: usize,
    beta: usize,
    form: BinomialForm,
    d: usize,
) -> Result<DensePoly2> {
    let n = q.degree();
    let degree = match form {
        BinomialForm::First => alpha.max(beta) * n,
        BinomialForm::Second => (alpha + beta) * n,
    };
    if degree > d {
        return Err(Error::DegreeExceeded { degree, bound: d });
    }
    let terms = q.coeffs().iter().enumerate().map(|(k, c)| {
        let j = match form {
            BinomialForm::First => beta * (n - k),
            BinomialForm::Second => beta * k,
        };
        (alpha * k, j, c.clone())
    });
    Ok(DensePoly2::from_terms(terms).primitive())
}

/// Classifies a primitive irreducible polynomial coprime to `x` and `y`
/// by its support: collinear support means a product of binomials.
pub fn classify(p: &DensePoly2) -> FactorClass {
    match binomial_data(p) {
        None => FactorClass::General,
        Some((_, q)) if is_cyclotomic(&q.primitive()).is_some() => FactorClass::Cyclotomic,
        Some(_) => FactorClass::Binomial,
    }
}

/// The family of `p` and the polynomial `q` in `z` it comes from, when
/// the support of `p` lies on a line.
fn binomial_data(p: &DensePoly2) -> Option<(Family, DensePoly1)> {
    let mut terms: Vec<(usize, usize, BigInt)> =
        p.terms().map(|(i, j, c)| (i, j, c.clone())).collect();
    if terms.len() < 2 {
        return None;
    }
    terms.sort_by_key(|&(i, j, _)| (i, j));
    let (i0, j0) = (terms[0].0 as i64, terms[0].1 as i64);
    let (di, dj) = (terms[1].0 as i64 - i0, terms[1].1 as i64 - j0);
    let g = di.gcd(&dj);
    let (si, sj) = (di / g, dj / g);
    let mut coeffs = Vec::new();
    for (i, j, c) in terms {
        let (u, v) = (i as i64 - i0, j as i64 - j0);
        if u * sj != v * si {
            return None;
        }
        let k = if si != 0 { u / si } else { v / sj } as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, BigInt::zero());
        }
        coeffs[k] = c;
    }
    let family = match (si, sj) {
        (_, 0) => Family::PureX,
        (0, _) => Family::PureY,
        (a, b) if b < 0 => Family::Binomial(a as usize, (-b) as usize, BinomialForm::First),
        (a, b) => Family::Binomial(a as usize, b as usize, BinomialForm::Second),
    };
    Some((family, DensePoly1::new(coeffs)))
}

/// Exact multiplicity of an irreducible product of binomials `p` in `f`,
/// or `None` when `p` is not of that shape. Torsion factors are tested by
/// folding exponents, so no gap is involved for them.
pub fn binomial_multiplicity(
    f: &SparsePolynomial,
    p: &DensePoly2,
    policy: &GapPolicy,
) -> Result<Option<(usize, Vec<Untested>)>> {
    let Some((family, q)) = binomial_data(&p.primitive()) else {
        return Ok(None);
    };
    let q = q.primitive();
    let (_, _, g) = f.strip_monomial()?;
    let (slices, var) = family_slices(&g, family)?;
    let cyclo = is_cyclotomic(&q);
    let mut e = usize::MAX;
    let mut untested = Vec::new();
    for s in &slices {
        let (m, u) = slice_multiplicity(s, &q, cyclo, var, policy)?;
        untested.extend(u);
        e = e.min(m);
        if e == 0 {
            break;
        }
    }
    Ok(Some((e.min(g.num_terms().saturating_sub(1)), untested)))
}

struct Common {
    factors: Vec<(DensePoly1, usize, bool)>,
    untested: Vec<Untested>,
}

fn slice_multiplicity(
    g: &SparsePolynomial,
    q: &DensePoly1,
    cyclotomic: Option<usize>,
    var: Var,
    policy: &GapPolicy,
) -> Result<(usize, Option<Untested>)> {
    let cap = g.num_terms().saturating_sub(1);
    match cyclotomic {
        Some(n) => cyclotomic_multiplicity(g, n, policy.dense_limit, cap),
        None => policy.multiplicity(g, &DensePoly2::from_univariate(q, var), cap),
    }
}

/// Irreducible factors of degree `<= d` shared by all the univariate
/// `slices`, with the smallest multiplicity among them.
fn common_factors(
    slices: &[SparsePolynomial],
    d: usize,
    var: Var,
    policy: &GapPolicy,
) -> Result<Common> {
    let mut out = Common {
        factors: Vec::new(),
        untested: Vec::new(),
    };
    if d == 0 || slices.is_empty() || slices.iter().any(|g| g.num_terms() < 2) {
        return Ok(out);
    }
    let spread = |g: &SparsePolynomial| g.strip_monomial().unwrap().2.total_degree();
    let base = (0..slices.len())
        .min_by_key(|&k| (spread(&slices[k]), slices[k].num_terms()))
        .unwrap();
    let found = find_low_degree_factors(&slices[base], d, policy)?;
    out.untested.extend(found.untested);
    let counted: Vec<Result<(DensePoly1, usize, bool, Vec<Untested>)>> = found
        .factors
        .into_par_iter()
        .map(|f| {
            let cyclo = f.cyclotomic.then(|| is_cyclotomic(&f.poly)).flatten();
            let mut e = f.multiplicity;
            let mut untested = Vec::new();
            for (k, g) in slices.iter().enumerate() {
                if k == base || e == 0 {
                    continue;
                }
                let (m, u) = slice_multiplicity(g, &f.poly, cyclo, var, policy)?;
                untested.extend(u);
                e = e.min(m);
            }
            Ok((f.poly, e, f.cyclotomic, untested))
        })
        .collect();
    for r in counted {
        let (q, e, cyclotomic, u) = r?;
        out.untested.extend(u);
        if e > 0 {
            out.factors.push((q, e, cyclotomic));
        }
    }
    Ok(out)
}

fn coprime_pairs(d: usize) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for alpha in 1..=d {
        for beta in 1..=d {
            if alpha.gcd(&beta) == 1 {
                pairs.push((alpha, beta));
            }
        }
    }
    pairs
}

#[derive(Clone, Copy)]
enum Family {
    Binomial(usize, usize, BinomialForm),
    PureX,
    PureY,
}

/// The univariate polynomials whose common factors give the factors of
/// `f` in the family, and the variable they are written in.
fn family_slices(f: &SparsePolynomial, family: Family) -> Result<(Vec<SparsePolynomial>, Var)> {
    Ok(match family {
        Family::Binomial(alpha, beta, form) => {
            let r = remainder_slices(f, alpha, beta, form)?;
            (r.slices.into_iter().map(|s| s.g).collect(), Var::X)
        }
        Family::PureX => (
            f.y_coefficients().into_iter().map(|(_, g)| g).collect(),
            Var::X,
        ),
        Family::PureY => (
            f.x_coefficients().into_iter().map(|(_, g)| g).collect(),
            Var::Y,
        ),
    })
}

fn search_family(
    f: &SparsePolynomial,
    d: usize,
    family: Family,
    policy: &GapPolicy,
) -> Result<(Vec<FoundFactor>, Vec<Untested>)> {
    let cap = match family {
        Family::Binomial(alpha, beta, BinomialForm::First) => d / alpha.max(beta),
        Family::Binomial(alpha, beta, BinomialForm::Second) => d / (alpha + beta),
        Family::PureX | Family::PureY => d,
    };
    let (slices, var) = family_slices(f, family)?;
    let common = common_factors(&slices, cap, var, policy)?;
    let mut found = Vec::new();
    for (q, e, cyclotomic) in common.factors {
        let poly = match family {
            Family::Binomial(alpha, beta, form) => reconstruct_factor(&q, alpha, beta, form, d)?,
            Family::PureX => DensePoly2::from_univariate(&q, Var::X),
            Family::PureY => DensePoly2::from_univariate(&q, Var::Y),
        };
        let class = if cyclotomic {
            FactorClass::Cyclotomic
        } else {
            FactorClass::Binomial
        };
        found.push(FoundFactor {
            poly,
            multiplicity: e,
            class,
        });
    }
    Ok((found, common.untested))
}

/// All irreducible factors of `f` of total degree `<= d` that are products
/// of binomials, monomials excepted, with their multiplicities.
pub fn binomial_factor_search(
    f: &SparsePolynomial,
    d: usize,
    policy: &GapPolicy,
) -> Result<BinomialFactors> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (_, _, g) = f.strip_monomial()?;
    let mut families = vec![Family::PureX, Family::PureY];
    for (alpha, beta) in coprime_pairs(d) {
        families.push(Family::Binomial(alpha, beta, BinomialForm::First));
        if alpha + beta <= d {
            families.push(Family::Binomial(alpha, beta, BinomialForm::Second));
        }
    }
    let results: Vec<Result<(Vec<FoundFactor>, Vec<Untested>)>> = families
        .into_par_iter()
        .map(|family| search_family(&g, d, family, policy))
        .collect();
    let mut merged: BTreeMap<DensePoly2, FoundFactor> = BTreeMap::new();
    let mut untested = Vec::new();
    for r in results {
        let (found, u) = r?;
        untested.extend(u);
        for f in found {
            merged.entry(f.poly.clone()).or_insert(f);
        }
    }
    Ok(BinomialFactors {
        factors: merged.into_values().collect(),
        untested,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(t: &str) -> SparsePolynomial {
        t.parse().unwrap()
    }

    fn d2(t: &str) -> DensePoly2 {
        crate::dense::dense2(t)
    }

    fn search(t: &str, d: usize) -> Vec<(DensePoly2, usize, FactorClass)> {
        let out = binomial_factor_search(&s(t), d, &GapPolicy::default()).unwrap();
        assert!(out.untested.is_empty(), "{:?}", out.untested);
        out.factors
            .into_iter()
            .map(|f| (f.poly, f.multiplicity, f.class))
            .collect()
    }

    #[test]
    fn slices_of_the_first_form() {
        let r = remainder_slices(&s("x^7*y^2"), 3, 1, BinomialForm::First).unwrap();
        assert_eq!(r.slices.len(), 1);
        assert_eq!((r.slices[0].i, r.slices[0].j.clone()), (1, BigUint::from(4u32)));
        assert_eq!(r.slices[0].g, s("x^2"));

        let r = remainder_slices(&s("x^2 - 4*y^2"), 1, 1, BinomialForm::First).unwrap();
        assert_eq!(r.slices.len(), 1);
        assert_eq!(r.slices[0].j, BigUint::from(2u32));
        assert_eq!(r.slices[0].g, s("x^2 - 4"));
    }

    #[test]
    fn slices_of_the_second_form() {
        let r = remainder_slices(&s("x*y - 6"), 1, 1, BinomialForm::Second).unwrap();
        assert_eq!(r.slices.len(), 1);
        assert_eq!(r.slices[0].g, s("x - 6"));
        let r = remainder_slices(&s("x^5 + y + 3"), 2, 3, BinomialForm::Second).unwrap();
        let total: usize = r.slices.iter().map(|s| s.g.num_terms()).sum();
        assert_eq!(total, 3);
    }

    #[test]
    fn rejects_non_coprime_exponents() {
        assert!(remainder_slices(&s("x"), 2, 4, BinomialForm::First).is_err());
    }

    #[test]
    fn reconstruction() {
        let q = DensePoly1::from_i64(&[-2, 1]);
        assert_eq!(
            reconstruct_factor(&q, 1, 1, BinomialForm::First, 1).unwrap(),
            d2("x - 2*y").primitive()
        );
        let q = DensePoly1::cyclotomic(3);
        assert_eq!(
            reconstruct_factor(&q, 1, 1, BinomialForm::First, 2).unwrap(),
            d2("x^2 + x*y + y^2")
        );
        let q = DensePoly1::from_i64(&[-6, 1]);
        assert_eq!(reconstruct_factor(&q, 1, 1, BinomialForm::Second, 2).unwrap(), d2("x*y - 6"));
        assert!(reconstruct_factor(&q, 1, 1, BinomialForm::Second, 1).is_err());
    }

    #[test]
    fn classification() {
        assert_eq!(classify(&d2("x - y")), FactorClass::Cyclotomic);
        assert_eq!(classify(&d2("x + y")), FactorClass::Cyclotomic);
        assert_eq!(classify(&d2("x - 2*y")), FactorClass::Binomial);
        assert_eq!(classify(&d2("x^2*y^3 - 5")), FactorClass::Binomial);
        assert_eq!(classify(&d2("x^2 + x*y + y^2")), FactorClass::Cyclotomic);
        assert_eq!(classify(&d2("x^2 + 1")), FactorClass::Cyclotomic);
        assert_eq!(classify(&d2("y^2 - 3")), FactorClass::Binomial);
        assert_eq!(classify(&d2("x + y + 1")), FactorClass::General);
    }

    #[test]
    fn exact_binomial_multiplicity() {
        let policy = GapPolicy::default();
        let f = s("(x - y)^2*(x^3 + 2)") * s("x^1000000000 + y + 7");
        let m = |p: &str| binomial_multiplicity(&f, &d2(p), &policy).unwrap().map(|r| r.0);
        assert_eq!(m("x - y"), Some(2));
        assert_eq!(m("x + y"), Some(0));
        assert_eq!(m("x^3 + 2"), Some(1));
        assert_eq!(m("x + y + 1"), None);
    }

    #[test]
    fn fifth_powers() {
        let got = search("x^5 - y^5", 4);
        assert_eq!(
            got,
            vec![
                (d2("x - y").primitive(), 1, FactorClass::Cyclotomic),
                (d2("x^4 + x^3*y + x^2*y^2 + x*y^3 + y^4"), 1, FactorClass::Cyclotomic),
            ]
        );
    }

    #[test]
    fn repeated_binomial_behind_a_huge_gap() {
        let f = format!("{}", s("(x*y - 2)^3") * s("x^18446744073709551616 + y + 1"));
        let got = search(&f, 2);
        assert_eq!(got, vec![(d2("x*y - 2"), 3, FactorClass::Binomial)]);
    }

    #[test]
    fn single_variable_factors() {
        assert_eq!(search("x^2 - 2", 2), vec![(d2("x^2 - 2"), 1, FactorClass::Binomial)]);
        let got = search("(y^2 + 1)^2*(x^3 + 7) + (y^2 + 1)^2*y^9", 2);
        assert_eq!(got, vec![(d2("y^2 + 1"), 2, FactorClass::Cyclotomic)]);
    }

    #[test]
    fn non_coprime_presentation_splits() {
        let got = search("x^2 - 4*y^2", 1);
        let polys: Vec<_> = got.iter().map(|g| g.0.clone()).collect();
        assert!(polys.contains(&d2("x - 2*y").primitive()));
        assert!(polys.contains(&d2("x + 2*y").primitive()));
        assert_eq!(got.len(), 2);
    }
}
