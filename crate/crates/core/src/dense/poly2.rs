use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd::gcd;
use super::DensePoly1;
use crate::error::{Error, Result};
use crate::sparse::{SparsePolynomial, Term, Var};

/// Bivariate polynomial with integer coefficients, stored as a polynomial in
/// `x` whose coefficients are polynomials in `y`: `rows[i]` is the
/// coefficient of `x^i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DensePoly2 {
    rows: Vec<DensePoly1>,
}

impl DensePoly2 {
    pub fn new(mut rows: Vec<DensePoly1>) -> Self {
        while rows.last().is_some_and(|r| r.is_zero()) {
            rows.pop();
        }
        DensePoly2 { rows }
    }

    pub fn zero() -> Self {
        DensePoly2 { rows: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![DensePoly1::constant(c)])
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// `x` or `y`.
    pub fn var(v: Var) -> Self {
        match v {
            Var::X => Self::new(vec![DensePoly1::zero(), DensePoly1::one()]),
            Var::Y => Self::new(vec![DensePoly1::from_i64(&[0, 1])]),
        }
    }

    /// Embeds a univariate polynomial in the given variable.
    pub fn from_univariate(p: &DensePoly1, v: Var) -> Self {
        match v {
            Var::X => Self::new(
                p.coeffs()
                    .iter()
                    .map(|c| DensePoly1::constant(c.clone()))
                    .collect(),
            ),
            Var::Y => Self::new(vec![p.clone()]),
        }
    }

    /// Builds from `(i, j, c)` triples meaning `c * x^i * y^j`.
    pub fn from_terms(terms: impl IntoIterator<Item = (usize, usize, BigInt)>) -> Self {
        let mut grid: Vec<Vec<BigInt>> = Vec::new();
        for (i, j, c) in terms {
            if grid.len() <= i {
                grid.resize(i + 1, Vec::new());
            }
            if grid[i].len() <= j {
                grid[i].resize(j + 1, BigInt::zero());
            }
            grid[i][j] += c;
        }
        Self::new(grid.into_iter().map(DensePoly1::new).collect())
    }

    pub fn from_i64(terms: &[(usize, usize, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(i, j, c)| (i, j, BigInt::from(c))))
    }

    pub fn rows(&self) -> &[DensePoly1] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.rows.len() <= 1 && self.rows.first().is_none_or(|r| r.is_constant())
    }

    pub fn deg_x(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    pub fn deg_y(&self) -> usize {
        self.rows.iter().map(|r| r.degree()).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> usize {
        self.terms().map(|(i, j, _)| i + j).max().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.rows.get(i).map(|r| r.coeff(j)).unwrap_or_default()
    }

    /// Nonzero terms as `(x-degree, y-degree, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.rows.iter().enumerate().flat_map(|(i, r)| {
            r.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| (i, j, c))
        })
    }

    pub fn num_terms(&self) -> usize {
        self.terms().count()
    }

    /// Leading coefficient in `x`, a polynomial in `y`.
    pub fn lc_x(&self) -> DensePoly1 {
        self.rows.last().cloned().unwrap_or_default()
    }

    /// Coefficient of the last term in canonical `(ey, ex)` order.
    pub fn canonical_lc(&self) -> BigInt {
        let dy = self.deg_y();
        self.rows
            .iter()
            .rev()
            .map(|r| r.coeff(dy))
            .find(|c| !c.is_zero())
            .unwrap_or_default()
    }

    pub fn is_univariate_x(&self) -> bool {
        self.rows.iter().all(|r| r.is_constant())
    }

    pub fn is_univariate_y(&self) -> bool {
        self.rows.len() <= 1
    }

    /// The polynomial in `x` when `y` does not occur.
    pub fn as_univariate_x(&self) -> Option<DensePoly1> {
        self.is_univariate_x()
            .then(|| DensePoly1::new(self.rows.iter().map(|r| r.coeff(0)).collect()))
    }

    /// The polynomial in `y` when `x` does not occur.
    pub fn as_univariate_y(&self) -> Option<DensePoly1> {
        self.is_univariate_y()
            .then(|| self.rows.first().cloned().unwrap_or_default())
    }

    pub fn transpose(&self) -> Self {
        Self::from_terms(self.terms().map(|(i, j, c)| (j, i, c.clone())))
    }

    pub fn int_content(&self) -> BigInt {
        self.rows
            .iter()
            .fold(BigInt::zero(), |acc, r| acc.gcd(&r.content()))
    }

    /// `(u, p)` with `u * p == self`, `p` primitive with positive canonical
    /// leading coefficient.
    pub fn split_content(&self) -> (BigInt, Self) {
        if self.is_zero() {
            return (BigInt::zero(), Self::zero());
        }
        let mut c = self.int_content();
        if self.canonical_lc().is_negative() {
            c = -c;
        }
        (c.clone(), self.div_scalar(&c))
    }

    pub fn primitive(&self) -> Self {
        self.split_content().1
    }

    /// Gcd in Z[y] of the coefficients in `x` (integer content included),
    /// with positive leading coefficient.
    pub fn content_y(&self) -> DensePoly1 {
        let mut g = DensePoly1::zero();
        for r in &self.rows {
            g = gcd(&g, r);
            if g.is_one() {
                break;
            }
        }
        g.scale(&self.int_content())
    }

    /// Removes the content in Z[y]; sign normalized canonically.
    pub fn primitive_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content_y();
        self.div_row_exact(&c).expect("content divides").primitive()
    }

    fn div_row_exact(&self, c: &DensePoly1) -> Result<Self> {
        let rows = self
            .rows
            .iter()
            .map(|r| r.div_exact(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(rows))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.rows.iter().map(|r| r.scale(c)).collect())
    }

    pub fn mul_row(&self, c: &DensePoly1) -> Self {
        Self::new(self.rows.iter().map(|r| r * c).collect())
    }

    pub fn div_scalar(&self, c: &BigInt) -> Self {
        Self::new(self.rows.iter().map(|r| r.div_scalar(c)).collect())
    }

    pub fn mul_x_power(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut rows = vec![DensePoly1::zero(); k];
        rows.extend(self.rows.iter().cloned());
        Self::new(rows)
    }

    pub fn derivative_x(&self) -> Self {
        Self::new(
            self.rows
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, r)| r.scale(&BigInt::from(i)))
                .collect(),
        )
    }

    pub fn derivative_y(&self) -> Self {
        Self::new(self.rows.iter().map(|r| r.derivative()).collect())
    }

    pub fn derivative(&self, v: Var) -> Self {
        match v {
            Var::X => self.derivative_x(),
            Var::Y => self.derivative_y(),
        }
    }

    /// `self(x, b)`.
    pub fn eval_y(&self, b: &BigInt) -> DensePoly1 {
        DensePoly1::new(self.rows.iter().map(|r| r.eval(b)).collect())
    }

    /// `self(x, y + b)`.
    pub fn shift_y(&self, b: &BigInt) -> Self {
        Self::new(self.rows.iter().map(|r| r.taylor_shift(b)).collect())
    }

    /// Exact quotient over Z; fails unless `d * q == self` for integer `q`.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::NotDivisible);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.deg_x() < d.deg_x() || self.deg_y() < d.deg_y() {
            return Err(Error::NotDivisible);
        }
        let dn = d.deg_x();
        let dl = d.lc_x();
        let mut r = self.rows.clone();
        let mut q = vec![DensePoly1::zero(); r.len() - dn];
        for k in (0..q.len()).rev() {
            if r[k + dn].is_zero() {
                continue;
            }
            let qc = r[k + dn].div_exact(&dl)?;
            for (j, dc) in d.rows.iter().enumerate() {
                r[k + j] = &r[k + j] - &(&qc * dc);
            }
            q[k] = qc;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(Self::new(q))
    }

    /// Whether `self` divides `f` over Q.
    pub fn divides(&self, f: &Self) -> bool {
        if f.is_zero() {
            return true;
        }
        if self.is_zero() {
            return false;
        }
        f.div_exact(&self.primitive()).is_ok()
    }

    /// Largest `e` with `p^e | self`, for nonconstant `p`.
    pub fn multiplicity_of(&self, p: &Self) -> usize {
        if self.is_zero() || p.is_constant() {
            return 0;
        }
        let p = p.primitive();
        let mut f = self.clone();
        let mut e = 0;
        while let Ok(q) = f.div_exact(&p) {
            f = q;
            e += 1;
        }
        e
    }

    /// A nonzero multiple of the remainder of `self` by `d` in `x`.
    fn pseudo_rem(&self, d: &Self) -> Self {
        let dn = d.deg_x();
        let dl = d.lc_x();
        let mut r = self.clone();
        while !r.is_zero() && r.deg_x() >= dn {
            let k = r.deg_x() - dn;
            let lr = r.lc_x();
            let shifted = d.mul_row(&lr).mul_x_power(k);
            r = &r.mul_row(&dl) - &shifted;
        }
        r
    }

    /// Greatest common divisor over Z, primitive with canonical sign.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        let ca = self.content_y();
        let cb = other.content_y();
        let c = Self::from_univariate(&gcd(&ca, &cb), Var::Y);
        let (mut a, mut b) = (self.primitive_x(), other.primitive_x());
        if a.deg_x() < b.deg_x() {
            std::mem::swap(&mut a, &mut b);
        }
        let g = loop {
            if b.deg_x() == 0 {
                break if b.is_zero() { a } else { Self::one() };
            }
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                break b;
            }
            a = b;
            b = r.primitive_x();
        };
        (&c * &g.primitive_x()).primitive()
    }

    /// Squarefree decomposition with respect to `x` of a polynomial with
    /// trivial content in Z[y].
    pub fn squarefree_x(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.deg_x() == 0 {
            return out;
        }
        let f = self.primitive_x();
        let mut g = f.gcd(&f.derivative_x());
        let mut w = f.div_exact(&g).expect("gcd divides").primitive();
        let mut i = 1;
        while w.deg_x() > 0 {
            let y = w.gcd(&g);
            let z = w.div_exact(&y).expect("gcd divides").primitive();
            if z.deg_x() > 0 {
                out.push((z, i));
            }
            i += 1;
            g = g.div_exact(&y).expect("gcd divides").primitive();
            w = y;
        }
        out
    }

    pub fn to_sparse(&self) -> SparsePolynomial {
        SparsePolynomial::canonicalize(self.terms().map(|(i, j, c)| {
            Term::new(
                BigRational::from_integer(c.clone()),
                BigUint::from(i),
                BigUint::from(j),
            )
        }))
    }

    pub fn eval_rational(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for r in self.rows.iter().rev() {
            acc = acc * x + r.eval_rational(y);
        }
        acc
    }
}

/// Total degree, then `y`-degree, then the coefficient rows.
impl Ord for DensePoly2 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.deg_y().cmp(&other.deg_y()))
            .then_with(|| self.rows.len().cmp(&other.rows.len()))
            .then_with(|| self.rows.iter().rev().cmp(other.rows.iter().rev()))
    }
}

impl PartialOrd for DensePoly2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &DensePoly2 {
    type Output = DensePoly2;
    fn add(self, rhs: &DensePoly2) -> DensePoly2 {
        let n = self.rows.len().max(rhs.rows.len());
        let z = DensePoly1::zero();
        DensePoly2::new(
            (0..n)
                .map(|i| self.rows.get(i).unwrap_or(&z) + rhs.rows.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Sub for &DensePoly2 {
    type Output = DensePoly2;
    fn sub(self, rhs: &DensePoly2) -> DensePoly2 {
        let n = self.rows.len().max(rhs.rows.len());
        let z = DensePoly1::zero();
        DensePoly2::new(
            (0..n)
                .map(|i| self.rows.get(i).unwrap_or(&z) - rhs.rows.get(i).unwrap_or(&z))
                .collect(),
        )
    }
}

impl Neg for &DensePoly2 {
    type Output = DensePoly2;
    fn neg(self) -> DensePoly2 {
        DensePoly2::new(self.rows.iter().map(|r| -r).collect())
    }
}

impl Mul for &DensePoly2 {
    type Output = DensePoly2;
    fn mul(self, rhs: &DensePoly2) -> DensePoly2 {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly2::zero();
        }
        let mut out = vec![DensePoly1::zero(); self.rows.len() + rhs.rows.len() - 1];
        for (i, a) in self.rows.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.rows.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        DensePoly2::new(out)
    }
}

impl fmt::Display for DensePoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sparse())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> DensePoly2 {
        super::super::dense2(s)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p("x^2 - y^2").gcd(&p("x - y")), p("y - x"));
        assert_eq!(p("x^2 + y^2").gcd(&p("x - y")), p("1"));
        let g = p("x*y + 3*y + 1");
        let a = &g * &p("x^2 + y");
        let b = &g * &p("x - y^3 + 2");
        assert_eq!(a.gcd(&b), g.primitive());
        assert_eq!(p("2*y^2 + 2*y").gcd(&p("3*x*y + 3*x*y^2")), p("y^2 + y"));
    }

    #[test]
    fn exact_division() {
        let f = p("x^2 - 1");
        assert_eq!(f.div_exact(&p("x + 2")), Err(Error::NotDivisible));
        assert_eq!(p("x^2 - y^2").div_exact(&p("x + y")).unwrap(), p("x - y"));
    }

    #[test]
    fn squarefree_example() {
        let a = p("x - y");
        let b = p("x + y + 1");
        let f = &(&a * &a) * &b;
        assert_eq!(f.squarefree_x(), vec![(b, 1), (a.primitive(), 2)]);
    }

    #[test]
    fn multiplicity_examples() {
        let a = p("x - y");
        let f = &(&(&a * &a) * &a) * &p("x + 1");
        assert_eq!(f.multiplicity_of(&a), 3);
        assert_eq!(p("x - 1").multiplicity_of(&p("x + 1")), 0);
        assert_eq!(p("y").multiplicity_of(&p("y")), 1);
    }

    #[test]
    fn canonical_sign() {
        let (u, q) = p("-x + 2*y").split_content();
        assert_eq!(u, BigInt::from(1));
        assert_eq!(q, p("-x + 2*y"));
        let (u, q) = p("x - 2*y").split_content();
        assert_eq!(u, BigInt::from(-1));
        assert_eq!(q, p("-x + 2*y"));
    }
}
