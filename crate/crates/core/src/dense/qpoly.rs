//! Univariate polynomials over Q, used by the power-series lifting.

use std::ops::{Add, Mul, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::DensePoly1;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct QPoly {
    c: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(|v| v.is_zero()) {
            c.pop();
        }
        QPoly { c }
    }

    pub fn zero() -> Self {
        QPoly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Self::new(vec![BigRational::one()])
    }

    pub fn from_int(p: &DensePoly1) -> Self {
        Self::new(
            p.coeffs()
                .iter()
                .map(|v| BigRational::from_integer(v.clone()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.c.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn lc(&self) -> BigRational {
        self.c.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self::new(self.c.iter().map(|v| v * s).collect())
    }

    pub fn monic(&self) -> Self {
        self.scale(&self.lc().recip())
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero());
        if self.c.len() < d.c.len() {
            return (Self::zero(), self.clone());
        }
        let li = d.lc().recip();
        let dn = d.c.len() - 1;
        let mut r = self.c.clone();
        let mut q = vec![BigRational::zero(); r.len() - dn];
        for k in (0..q.len()).rev() {
            if r[k + dn].is_zero() {
                continue;
            }
            let f = &r[k + dn] * &li;
            for (j, dc) in d.c.iter().enumerate() {
                r[k + j] -= &f * dc;
            }
            q[k] = f;
        }
        r.truncate(dn);
        (Self::new(q), Self::new(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.divrem(d).1
    }

    /// `(s, t)` with `s*a + t*b = 1` for coprime `a`, `b`.
    pub fn bezout(a: &Self, b: &Self) -> (Self, Self) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        assert_eq!(r0.degree(), 0, "bezout inputs must be coprime");
        let inv = r0.lc().recip();
        (s0.scale(&inv), t0.scale(&inv))
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.c.len().max(rhs.c.len());
        QPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.c.len().max(rhs.c.len());
        QPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }
}
