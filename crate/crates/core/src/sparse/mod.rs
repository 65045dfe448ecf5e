//! Lacunary bivariate polynomials over Q with unbounded exponents.

mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::dense::DensePoly1;
use crate::error::{Error, Result};

pub use parse::parse_polynomial;

/// One nonzero term `coeff * x^ex * y^ey`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: BigRational,
    pub ex: BigUint,
    pub ey: BigUint,
}

impl Term {
    pub fn new(coeff: BigRational, ex: BigUint, ey: BigUint) -> Self {
        Term { coeff, ex, ey }
    }

    fn key(&self) -> (&BigUint, &BigUint) {
        (&self.ey, &self.ex)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

/// A polynomial given by its nonzero terms, sorted ascending by `(ey, ex)`.
///
/// Univariate lacunary polynomials are represented with every `ey = 0`,
/// i.e. as polynomials in `x`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparsePolynomial {
    terms: Vec<Term>,
}

/// `content * primitive` equals the original polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveForm {
    pub content: BigRational,
    pub primitive: SparsePolynomial,
}

#[cfg(test)]
pub(crate) fn rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

fn nat_to_int(n: &BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, n.clone())
}

/// `floor(log2 n)` with the convention `floor(log2 0) = 0`.
fn floor_log2(n: &BigUint) -> u64 {
    n.bits().saturating_sub(1)
}

impl SparsePolynomial {
    pub fn zero() -> Self {
        SparsePolynomial { terms: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, BigUint::zero(), BigUint::zero())
    }

    pub fn monomial(c: BigRational, ex: BigUint, ey: BigUint) -> Self {
        Self::canonicalize(vec![Term::new(c, ex, ey)])
    }

    /// `x` or `y` as a polynomial.
    pub fn var(v: Var) -> Self {
        match v {
            Var::X => Self::monomial(BigRational::one(), BigUint::one(), BigUint::zero()),
            Var::Y => Self::monomial(BigRational::one(), BigUint::zero(), BigUint::one()),
        }
    }

    /// Merges repeated exponent pairs, drops zero coefficients and sorts.
    pub fn canonicalize(terms: impl IntoIterator<Item = Term>) -> Self {
        let mut acc: BTreeMap<(BigUint, BigUint), BigRational> = BTreeMap::new();
        for t in terms {
            let e = acc.entry((t.ey, t.ex)).or_insert_with(BigRational::zero);
            *e += t.coeff;
        }
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((ey, ex), coeff)| Term { coeff, ex, ey })
            .collect();
        SparsePolynomial { terms }
    }

    /// Builds from terms already in canonical order with distinct keys and
    /// nonzero coefficients.
    fn from_sorted(terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].key() < w[1].key()));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        SparsePolynomial { terms }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1 && self.terms[0].ex.is_zero() && self.terms[0].ey.is_zero())
    }

    /// True when no term involves `y`.
    pub fn is_univariate_x(&self) -> bool {
        self.terms.iter().all(|t| t.ey.is_zero())
    }

    pub fn is_univariate_y(&self) -> bool {
        self.terms.iter().all(|t| t.ex.is_zero())
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.iter().all(|t| t.coeff.is_integer())
    }

    /// Last term in canonical order.
    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.last()
    }

    pub fn degree_x(&self) -> BigUint {
        self.terms.iter().map(|t| &t.ex).max().cloned().unwrap_or_default()
    }

    pub fn degree_y(&self) -> BigUint {
        self.terms.last().map(|t| t.ey.clone()).unwrap_or_default()
    }

    pub fn total_degree(&self) -> BigUint {
        self.terms.iter().map(|t| &t.ex + &t.ey).max().unwrap_or_default()
    }

    /// Exponents of the trivial factors `x` and `y`.
    pub fn min_exponents(&self) -> Result<(BigUint, BigUint)> {
        let first = self.terms.first().ok_or(Error::ZeroPolynomial)?;
        let a = self.terms.iter().map(|t| &t.ex).min().unwrap().clone();
        Ok((a, first.ey.clone()))
    }

    pub fn primitive_part(&self) -> Result<PrimitiveForm> {
        let lead = self.leading_term().ok_or(Error::ZeroPolynomial)?;
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for t in &self.terms {
            num_gcd = num_gcd.gcd(t.coeff.numer());
            den_lcm = den_lcm.lcm(t.coeff.denom());
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        if lead.coeff.is_negative() {
            content = -content;
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: &t.coeff / &content,
                ex: t.ex.clone(),
                ey: t.ey.clone(),
            })
            .collect();
        Ok(PrimitiveForm {
            content,
            primitive: Self::from_sorted(terms),
        })
    }

    /// Multiplies by the lcm of the coefficient denominators.
    pub fn clear_denominators(&self) -> (BigInt, SparsePolynomial) {
        let l = self
            .terms
            .iter()
            .fold(BigInt::one(), |acc, t| acc.lcm(t.coeff.denom()));
        (l.clone(), self.scale(&BigRational::from_integer(l)))
    }

    fn integer_magnitudes(&self) -> Result<impl Iterator<Item = BigUint> + '_> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !self.has_integer_coefficients() {
            return Err(Error::NonIntegerCoefficient);
        }
        Ok(self.terms.iter().map(|t| t.coeff.numer().magnitude().clone()))
    }

    /// Largest coefficient magnitude of an integer polynomial.
    pub fn max_abs_coeff(&self) -> Result<BigUint> {
        Ok(self.integer_magnitudes()?.max().unwrap())
    }

    /// Sum of coefficient magnitudes of an integer polynomial.
    pub fn l1_norm(&self) -> Result<BigUint> {
        Ok(self.integer_magnitudes()?.sum())
    }

    /// Bit length of the sparse encoding; an upper bound for the term count.
    pub fn sparse_length(&self) -> Result<BigUint> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut total = BigUint::zero();
        for t in &self.terms {
            let m = t.coeff.numer().magnitude();
            let n = t.coeff.denom().magnitude();
            total += floor_log2(m) + floor_log2(n) + 2;
            total += floor_log2(&t.ex) + floor_log2(&t.ey) + 2;
        }
        Ok(total)
    }

    pub fn partial_derivative(&self, var: Var) -> Self {
        let terms = self
            .terms
            .iter()
            .filter_map(|t| {
                let e = match var {
                    Var::X => &t.ex,
                    Var::Y => &t.ey,
                };
                if e.is_zero() {
                    return None;
                }
                let coeff = &t.coeff * BigRational::from_integer(nat_to_int(e));
                let (ex, ey) = match var {
                    Var::X => (&t.ex - 1u32, t.ey.clone()),
                    Var::Y => (t.ex.clone(), &t.ey - 1u32),
                };
                Some(Term { coeff, ex, ey })
            })
            .collect();
        // shifting one variable down uniformly keeps the order intact
        Self::from_sorted(terms)
    }

    pub fn nth_derivative(&self, var: Var, n: usize) -> Self {
        let mut f = self.clone();
        for _ in 0..n {
            if f.is_zero() {
                break;
            }
            f = f.partial_derivative(var);
        }
        f
    }

    /// Groups by `y`-exponent: pairs `(ey, coefficient polynomial in x)`.
    pub fn y_coefficients(&self) -> Vec<(BigUint, SparsePolynomial)> {
        let mut out: Vec<(BigUint, Vec<Term>)> = Vec::new();
        for t in &self.terms {
            let term = Term::new(t.coeff.clone(), t.ex.clone(), BigUint::zero());
            match out.last_mut() {
                Some((ey, group)) if *ey == t.ey => group.push(term),
                _ => out.push((t.ey.clone(), vec![term])),
            }
        }
        out.into_iter()
            .map(|(ey, g)| (ey, Self::from_sorted(g)))
            .collect()
    }

    /// Groups by `x`-exponent: pairs `(ex, coefficient polynomial in y)`.
    pub fn x_coefficients(&self) -> Vec<(BigUint, SparsePolynomial)> {
        self.swap_variables()
            .y_coefficients()
            .into_iter()
            .map(|(ex, g)| (ex, g.swap_variables()))
            .collect()
    }

    pub fn swap_variables(&self) -> Self {
        Self::canonicalize(
            self.terms
                .iter()
                .map(|t| Term::new(t.coeff.clone(), t.ey.clone(), t.ex.clone())),
        )
    }

    pub fn mul_monomial(&self, ex: &BigUint, ey: &BigUint) -> Self {
        Self::from_sorted(
            self.terms
                .iter()
                .map(|t| Term::new(t.coeff.clone(), &t.ex + ex, &t.ey + ey))
                .collect(),
        )
    }

    /// Divides by `x^ex y^ey`; every term must be divisible.
    pub fn div_monomial(&self, ex: &BigUint, ey: &BigUint) -> Self {
        Self::from_sorted(
            self.terms
                .iter()
                .map(|t| {
                    assert!(t.ex >= *ex && t.ey >= *ey, "monomial does not divide");
                    Term::new(t.coeff.clone(), &t.ex - ex, &t.ey - ey)
                })
                .collect(),
        )
    }

    /// Removes the trivial monomial factor `x^a y^b`.
    pub fn strip_monomial(&self) -> Result<(BigUint, BigUint, SparsePolynomial)> {
        let (a, b) = self.min_exponents()?;
        let g = self.div_monomial(&a, &b);
        Ok((a, b, g))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_sorted(
            self.terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.ex.clone(), t.ey.clone()))
                .collect(),
        )
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(BigRational::one());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// The exponents of a univariate polynomial, in whichever variable it uses.
    fn univariate_exponents(&self) -> Result<Vec<(&BigRational, &BigUint)>> {
        if self.is_univariate_x() {
            Ok(self.terms.iter().map(|t| (&t.coeff, &t.ex)).collect())
        } else if self.is_univariate_y() {
            Ok(self.terms.iter().map(|t| (&t.coeff, &t.ey)).collect())
        } else {
            Err(Error::NotUnivariate)
        }
    }

    /// Remainder modulo `z^n - 1` of a univariate polynomial, with
    /// denominators cleared, as a dense polynomial of degree `< n`.
    ///
    /// Folding only reduces exponents mod `n`, so this stays cheap for
    /// astronomically large exponents.
    pub fn reduce_mod_cyclotomic_support(&self, n: usize, limit: usize) -> Result<DensePoly1> {
        if n == 0 {
            return Err(Error::InvalidArgument("modulus z^0 - 1".into()));
        }
        if n > limit {
            return Err(Error::DenseLimitExceeded {
                required: BigUint::from(n),
                limit,
            });
        }
        let (_, cleared) = self.clear_denominators();
        let mut coeffs = vec![BigInt::zero(); n];
        let nn = BigUint::from(n);
        for (c, e) in cleared.univariate_exponents()? {
            let k = (e % &nn).to_usize().unwrap();
            coeffs[k] += c.numer();
        }
        Ok(DensePoly1::new(coeffs))
    }

    /// Evaluation at a rational point (test helper for small exponents).
    pub fn eval_small(&self, x: &BigRational, y: &BigRational) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for t in &self.terms {
            let ex = t.ex.to_u32()?;
            let ey = t.ey.to_u32()?;
            acc += &t.coeff * pow_rat(x, ex) * pow_rat(y, ey);
        }
        Some(acc)
    }
}

fn pow_rat(b: &BigRational, e: u32) -> BigRational {
    num_traits::pow(b.clone(), e as usize)
}

impl PrimitiveForm {
    pub fn reconstruct(&self) -> SparsePolynomial {
        self.primitive.scale(&self.content)
    }
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        SparsePolynomial::canonicalize(self.terms.iter().chain(rhs.terms.iter()).cloned())
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        self.scale(&-BigRational::one())
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self + &(-rhs)
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for a in &self.terms {
            for b in &rhs.terms {
                out.push(Term::new(&a.coeff * &b.coeff, &a.ex + &b.ex, &a.ey + &b.ey));
            }
        }
        SparsePolynomial::canonicalize(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for SparsePolynomial {
            type Output = SparsePolynomial;
            fn $m(self, rhs: SparsePolynomial) -> SparsePolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

// ---------------------------------------------------------------------------
// Text and JSON forms
// ---------------------------------------------------------------------------

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().rev().enumerate() {
            let neg = t.coeff.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = t.coeff.abs();
            let mut parts: Vec<String> = Vec::new();
            let is_const = t.ex.is_zero() && t.ey.is_zero();
            if !mag.is_one() || is_const {
                parts.push(mag.to_string());
            }
            for (e, v) in [(&t.ex, 'x'), (&t.ey, 'y')] {
                if e.is_one() {
                    parts.push(v.to_string());
                } else if !e.is_zero() {
                    parts.push(format!("{v}^{e}"));
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

impl std::str::FromStr for SparsePolynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_polynomial(s)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub c: String,
    pub ex: String,
    pub ey: String,
}

/// Wire form: `{"terms":[{"c":"3","ex":"12","ey":"7"}, ...]}` with every
/// number as a decimal string.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PolynomialJson {
    pub terms: Vec<TermJson>,
}

impl From<&SparsePolynomial> for PolynomialJson {
    fn from(p: &SparsePolynomial) -> Self {
        PolynomialJson {
            terms: p
                .terms
                .iter()
                .map(|t| TermJson {
                    c: t.coeff.to_string(),
                    ex: t.ex.to_string(),
                    ey: t.ey.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&PolynomialJson> for SparsePolynomial {
    type Error = Error;
    fn try_from(p: &PolynomialJson) -> Result<Self> {
        let mut terms = Vec::with_capacity(p.terms.len());
        for (i, t) in p.terms.iter().enumerate() {
            let bad = |what: &str| Error::parse(i, format!("term {i}: invalid {what}"));
            let coeff: BigRational = t.c.trim().parse().map_err(|_| bad("coefficient"))?;
            let ex: BigUint = t.ex.trim().parse().map_err(|_| bad("x exponent"))?;
            let ey: BigUint = t.ey.trim().parse().map_err(|_| bad("y exponent"))?;
            terms.push(Term::new(coeff, ex, ey));
        }
        Ok(SparsePolynomial::canonicalize(terms))
    }
}

impl SparsePolynomial {
    pub fn to_json(&self) -> PolynomialJson {
        PolynomialJson::from(self)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let wire: PolynomialJson =
            serde_json::from_str(s).map_err(|e| Error::parse(e.column(), e.to_string()))?;
        SparsePolynomial::try_from(&wire)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SparsePolynomial {
        s.parse().unwrap()
    }

    fn nat(s: &str) -> BigUint {
        s.parse().unwrap()
    }

    #[test]
    fn canonicalize_cancels_and_merges() {
        let one = BigRational::one();
        let z = SparsePolynomial::canonicalize(vec![
            Term::new(one.clone(), nat("2"), nat("0")),
            Term::new(-one.clone(), nat("2"), nat("0")),
        ]);
        assert!(z.is_zero());
        let m = SparsePolynomial::canonicalize(vec![
            Term::new(rat(2), nat("5"), nat("1")),
            Term::new(rat(3), nat("5"), nat("1")),
        ]);
        assert_eq!(m.terms(), &[Term::new(rat(5), nat("5"), nat("1"))]);
    }

    #[test]
    fn canonical_order_is_y_then_x() {
        let big = nat("1000000000000000000000000000000");
        let f = SparsePolynomial::canonicalize(vec![
            Term::new(rat(1), nat("0"), big.clone()),
            Term::new(rat(1), nat("1"), nat("0")),
        ]);
        assert_eq!(f.terms()[0].ex, nat("1"));
        assert_eq!(f.terms()[1].ey, big);
    }

    #[test]
    fn primitive_part_examples() {
        let f = p("6*x^5*y - 4");
        let pf = f.primitive_part().unwrap();
        assert_eq!(pf.content, rat(2));
        assert_eq!(pf.primitive, p("3*x^5*y - 2"));

        let pf = p("3/2*x").primitive_part().unwrap();
        assert_eq!(pf.content, BigRational::new(3.into(), 2.into()));
        assert_eq!(pf.primitive, p("x"));

        let pf = p("-x - y").primitive_part().unwrap();
        assert_eq!(pf.content, rat(-1));
        assert_eq!(pf.primitive, p("x + y"));

        assert_eq!(SparsePolynomial::zero().primitive_part(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn norms() {
        let f = p("3*x^5*y - 2");
        assert_eq!(f.max_abs_coeff().unwrap(), BigUint::from(3u32));
        assert_eq!(f.l1_norm().unwrap(), BigUint::from(5u32));
        let g = p("x^1267650600228229401496703205376 + 1");
        assert_eq!(g.max_abs_coeff().unwrap(), BigUint::from(1u32));
        assert_eq!(g.l1_norm().unwrap(), BigUint::from(2u32));
        let h = p("7*x - 7*y");
        assert_eq!(h.max_abs_coeff().unwrap(), BigUint::from(7u32));
        assert_eq!(h.l1_norm().unwrap(), BigUint::from(14u32));
        assert_eq!(p("x/2").l1_norm(), Err(Error::NonIntegerCoefficient));
        assert_eq!(SparsePolynomial::zero().l1_norm(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn sparse_length_examples() {
        assert_eq!(p("x").sparse_length().unwrap(), BigUint::from(4u32));
        assert_eq!(p("2").sparse_length().unwrap(), BigUint::from(5u32));
        // 5/2: floor(log2 5) + floor(log2 2) + 2 = 5, exponents contribute 2
        assert_eq!(p("5/2").sparse_length().unwrap(), BigUint::from(7u32));
    }

    #[test]
    fn derivatives() {
        let f = p("y^100000000000000000000 + y");
        let d = f.partial_derivative(Var::Y);
        assert_eq!(d, p("100000000000000000000*y^99999999999999999999 + 1"));
        assert!(p("x^3").partial_derivative(Var::Y).is_zero());
        assert_eq!(p("2*x^2*y - x").partial_derivative(Var::X), p("4*x*y - 1"));
    }

    #[test]
    fn min_exponents_examples() {
        assert_eq!(
            p("x^2*y^5 + x^2*y^7").min_exponents().unwrap(),
            (nat("2"), nat("5"))
        );
        assert_eq!(p("x + y").min_exponents().unwrap(), (nat("0"), nat("0")));
        assert_eq!(
            p("x^18446744073709551616*y^3").min_exponents().unwrap(),
            (nat("18446744073709551616"), nat("3"))
        );
    }

    #[test]
    fn coefficient_slices() {
        let s = p("x^2 + x^2*y + 3*y").y_coefficients();
        assert_eq!(s, vec![(nat("0"), p("x^2")), (nat("1"), p("x^2 + 3"))]);
        assert_eq!(p("x^5").y_coefficients(), vec![(nat("0"), p("x^5"))]);
        let f = p("y^1000000000*(x - 1) + (x - 1)");
        let s = f.y_coefficients();
        assert_eq!(s.len(), 2);
        assert!(s.iter().all(|(_, g)| *g == p("x - 1")));
        let s = p("x^3*y^2 + x^3 + y").x_coefficients();
        assert_eq!(s, vec![(nat("0"), p("y")), (nat("3"), p("y^2 + 1"))]);
    }

    #[test]
    fn cyclotomic_folding() {
        let f = p("x^1048576 - 1");
        assert!(f.reduce_mod_cyclotomic_support(2, 2000).unwrap().is_zero());
        let g = p("x^3 + 1").reduce_mod_cyclotomic_support(2, 2000).unwrap();
        assert_eq!(g, DensePoly1::from_i64(&[1, 1]));
        let h = p("x + 2").reduce_mod_cyclotomic_support(3, 2000).unwrap();
        assert_eq!(h, DensePoly1::from_i64(&[2, 1]));
        assert!(matches!(
            f.reduce_mod_cyclotomic_support(5000, 2000),
            Err(Error::DenseLimitExceeded { .. })
        ));
        assert_eq!(
            p("x + y").reduce_mod_cyclotomic_support(2, 10),
            Err(Error::NotUnivariate)
        );
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "3*x^12345678901234567890*y^7 - 5/2",
            "-x - y",
            "x*y - 6",
            "0",
            "-7/3*x^2 + y^3 + 1",
        ] {
            let f = p(s);
            assert_eq!(p(&f.to_string()), f, "{s}");
        }
    }

    #[test]
    fn json_and_text_agree() {
        let text = p("3*x^12345678901234567890*y^7 - 5/2");
        let json = SparsePolynomial::from_json_str(
            r#"{"terms":[{"c":"3","ex":"12345678901234567890","ey":"7"},{"c":"-5/2","ex":"0","ey":"0"}]}"#,
        )
        .unwrap();
        assert_eq!(text, json);
        let back = serde_json::to_string(&text.to_json()).unwrap();
        assert_eq!(SparsePolynomial::from_json_str(&back).unwrap(), text);
    }
}
