use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::sparse::{SparsePolynomial, Term, Var};

/// Univariate polynomial with integer coefficients, lowest degree first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DensePoly1 {
    coeffs: Vec<BigInt>,
}

impl DensePoly1 {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePoly1 { coeffs }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn zero() -> Self {
        DensePoly1 { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * z^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `z - a`.
    pub fn linear_root(a: BigInt) -> Self {
        Self::new(vec![-a, BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn low_degree(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Content removed and sign fixed so the leading coefficient is positive.
    pub fn primitive(&self) -> Self {
        self.split_content().1
    }

    /// `(u, p)` with `u * p == self`, `p` primitive with positive leading
    /// coefficient.
    pub fn split_content(&self) -> (BigInt, Self) {
        if self.is_zero() {
            return (BigInt::zero(), Self::zero());
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        (c.clone(), self.div_scalar(&c))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides every coefficient by `c`, which must divide them exactly.
    pub fn div_scalar(&self, c: &BigInt) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|a| {
                    debug_assert!((a % c).is_zero());
                    a / c
                })
                .collect(),
        )
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn mul_xk(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self::new(v)
    }

    /// Drops the lowest `k` coefficients (division by `z^k` when exact).
    pub fn shift_down(&self, k: usize) -> Self {
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// `p(z + b)`.
    pub fn taylor_shift(&self, b: &BigInt) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        if b.is_zero() {
            return self.clone();
        }
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &c[j + 1] * b;
                c[j] += t;
            }
        }
        Self::new(c)
    }

    /// `z^deg * p(1/z)`.
    pub fn reverse(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Exact quotient over Z; fails unless `d * q == self` for an integer `q`.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::NotDivisible);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.coeffs.len() < d.coeffs.len() {
            return Err(Error::NotDivisible);
        }
        let dl = d.lc();
        let dn = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); r.len() - dn];
        for k in (0..q.len()).rev() {
            let top = &r[k + dn];
            if top.is_zero() {
                continue;
            }
            let (qc, rem) = top.div_rem(&dl);
            if !rem.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &qc * dc;
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

    /// Remainder modulo a monic polynomial.
    pub fn rem_monic(&self, m: &Self) -> Self {
        assert!(m.lc().is_one(), "modulus must be monic");
        let dn = m.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        while r.len() > dn {
            let top = r.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let base = r.len() - dn;
            for (j, mc) in m.coeffs[..dn].iter().enumerate() {
                r[base + j] -= &top * mc;
            }
        }
        Self::new(r)
    }

    /// Pseudo-remainder `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        assert!(!d.is_zero());
        let dn = d.degree();
        let dl = d.lc();
        let mut r = self.clone();
        if r.is_zero() || r.degree() < dn {
            return r;
        }
        let mut steps = r.degree() - dn + 1;
        while !r.is_zero() && r.degree() >= dn {
            let k = r.degree() - dn;
            let lr = r.lc();
            let mut v: Vec<BigInt> = r.coeffs.iter().map(|c| c * &dl).collect();
            for (j, dc) in d.coeffs.iter().enumerate() {
                v[k + j] -= &lr * dc;
            }
            r = Self::new(v);
            steps -= 1;
        }
        if steps > 0 {
            r = r.scale(&num_traits::pow(dl, steps));
        }
        r
    }

    /// Largest `e` with `p^e | self`, for nonconstant `p` and nonzero `self`.
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

    /// The `n`-th cyclotomic polynomial.
    pub fn cyclotomic(n: usize) -> Self {
        assert!(n >= 1);
        let mut num = Self::one();
        let mut den = Self::one();
        for d in 1..=n {
            if n % d != 0 {
                continue;
            }
            let f = &Self::monomial(BigInt::one(), n / d) - &Self::one();
            match mobius(d) {
                1 => num = &num * &f,
                -1 => den = &den * &f,
                _ => {}
            }
        }
        num.div_exact(&den).expect("cyclotomic quotient is exact")
    }

    pub fn max_abs(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    pub fn l1_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    /// Sparse view in the variable `var`.
    pub fn to_sparse(&self, var: Var) -> SparsePolynomial {
        SparsePolynomial::canonicalize(self.coeffs.iter().enumerate().map(|(i, c)| {
            let e = BigUint::from(i);
            let (ex, ey) = match var {
                Var::X => (e, BigUint::zero()),
                Var::Y => (BigUint::zero(), e),
            };
            Term::new(BigRational::from_integer(c.clone()), ex, ey)
        }))
    }
}

fn mobius(n: usize) -> i32 {
    let mut n = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Degree first, then coefficients from the top down.
impl Ord for DensePoly1 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for DensePoly1 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &DensePoly1 {
    type Output = DensePoly1;
    fn add(self, rhs: &DensePoly1) -> DensePoly1 {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly1::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &DensePoly1 {
    type Output = DensePoly1;
    fn sub(self, rhs: &DensePoly1) -> DensePoly1 {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly1::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &DensePoly1 {
    type Output = DensePoly1;
    fn neg(self) -> DensePoly1 {
        DensePoly1::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &DensePoly1 {
    type Output = DensePoly1;
    fn mul(self, rhs: &DensePoly1) -> DensePoly1 {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly1::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DensePoly1::new(out)
    }
}

impl fmt::Display for DensePoly1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sparse(Var::X))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> DensePoly1 {
        DensePoly1::from_i64(c)
    }

    #[test]
    fn exact_division() {
        let f = p(&[-1, 0, 1]);
        assert_eq!(f.div_exact(&p(&[1, 1])).unwrap(), p(&[-1, 1]));
        assert_eq!(f.div_exact(&p(&[2, 1])), Err(Error::NotDivisible));
        assert_eq!(p(&[1, 3, 2]).div_exact(&p(&[1, 2])).unwrap(), p(&[1, 1]));
        assert!(p(&[2, 4]).divides(&p(&[1, 3, 2])));
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(DensePoly1::cyclotomic(1), p(&[-1, 1]));
        assert_eq!(DensePoly1::cyclotomic(2), p(&[1, 1]));
        assert_eq!(DensePoly1::cyclotomic(3), p(&[1, 1, 1]));
        assert_eq!(DensePoly1::cyclotomic(4), p(&[1, 0, 1]));
        assert_eq!(DensePoly1::cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(DensePoly1::cyclotomic(12), p(&[1, 0, -1, 0, 1]));
        // degree of Phi_105 is phi(105) = 48 and it has a coefficient -2
        let c = DensePoly1::cyclotomic(105);
        assert_eq!(c.degree(), 48);
        assert!(c.coeffs().contains(&BigInt::from(-2)));
    }

    #[test]
    fn taylor_shift_matches_evaluation() {
        let f = p(&[3, -2, 0, 5]);
        let g = f.taylor_shift(&BigInt::from(-2));
        for x in -3..4 {
            let x = BigInt::from(x);
            assert_eq!(g.eval(&x), f.eval(&(&x - 2)));
        }
    }

    #[test]
    fn pseudo_remainder() {
        let f = p(&[1, 0, 1]);
        let d = p(&[1, 2]);
        // 4*(x^2+1) = (2x-1)(2x+1) + 5
        assert_eq!(f.pseudo_rem(&d), p(&[5]));
    }

    #[test]
    fn multiplicity() {
        let lin = p(&[-1, 1]);
        let f = &(&lin * &lin) * &p(&[1, 1]);
        assert_eq!(f.multiplicity_of(&lin), 2);
        assert_eq!(p(&[-1, 1]).multiplicity_of(&p(&[1, 1])), 0);
    }
}
