//! Complete factorization in Z[z]: modular factorization (distinct degree,
//! then Cantor-Zassenhaus splitting), quadratic Hensel lifting along a factor
//! tree, and recombination by subsets.

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::gcd::squarefree;
use super::modp::{self, PolyP};
use super::{DensePoly1, Factorization};
use crate::error::{Error, Result};

const FIRST_PRIME: u64 = 10007;
const PRIME_TRIALS: usize = 3;

/// Irreducible factorization over Q of a nonzero integer polynomial.
pub fn factor_univariate(f: &DensePoly1) -> Result<Factorization<DensePoly1>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (unit, pp) = f.split_content();
    let mut factors = Vec::new();
    let k = pp.low_degree();
    if k > 0 {
        factors.push((DensePoly1::monomial(BigInt::one(), 1), k));
    }
    let pp = pp.shift_down(k);
    for (s, i) in squarefree(&pp) {
        for g in factor_squarefree(&s) {
            factors.push((g, i));
        }
    }
    factors.sort();
    Ok(Factorization {
        unit: BigRational::from_integer(unit),
        factors,
    })
}

/// Frobenius map `a -> a^p mod f` as a matrix of the powers `z^(i p) mod f`.
struct Frobenius {
    rows: Vec<PolyP>,
    p: u64,
}

impl Frobenius {
    fn new(f: &[u64], p: u64) -> Self {
        let n = f.len() - 1;
        let xp = modp::pow_mod_poly(&[0, 1], &BigUint::from(p), f, p);
        let mut rows = Vec::with_capacity(n);
        let mut cur = vec![1u64];
        for _ in 0..n {
            rows.push(cur.clone());
            cur = modp::rem(&modp::mul(&cur, &xp, p), f, p);
        }
        Frobenius { rows, p }
    }

    fn apply(&self, a: &[u64]) -> PolyP {
        let p = self.p;
        let n = self.rows.len();
        let mut out = vec![0u64; n];
        for (ai, row) in a.iter().zip(&self.rows) {
            if *ai == 0 {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                *o = (*o + ai * r) % p;
            }
        }
        modp::trim(out)
    }
}

/// Distinct-degree factorization of a monic squarefree `f`: pairs `(d, w)`
/// where `w` is the product of the degree-`d` irreducible factors.
fn distinct_degree(f: &[u64], frob: &Frobenius, p: u64) -> Vec<(usize, PolyP)> {
    let mut out = Vec::new();
    let mut g = f.to_vec();
    let mut h = vec![0u64, 1];
    let mut d = 1;
    while g.len() - 1 >= 2 * d {
        h = frob.apply(&h);
        let w = modp::gcd(&modp::sub(&h, &[0, 1], p), &g, p);
        if w.len() > 1 {
            g = modp::divrem(&g, &w, p).0;
            out.push((d, w));
        }
        d += 1;
    }
    if g.len() > 1 {
        out.push((g.len() - 1, g));
    }
    out
}

/// Splits a product of degree-`d` irreducibles into its factors.
fn equal_degree(w: &[u64], d: usize, frob: &Frobenius, p: u64, rng: &mut ChaCha8Rng) -> Vec<PolyP> {
    let n = w.len() - 1;
    if n == d {
        return vec![w.to_vec()];
    }
    loop {
        let a: PolyP = modp::trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let g = modp::gcd(&a, w, p);
        let u = if g.len() > 1 {
            g
        } else {
            // norm a * a^p * ... * a^(p^(d-1)), then the quadratic character
            let mut norm = a.clone();
            let mut conj = a.clone();
            for _ in 1..d {
                conj = frob.apply(&conj);
                norm = modp::rem(&modp::mul(&norm, &conj, p), w, p);
            }
            let b = modp::pow_mod_poly(&norm, &BigUint::from((p - 1) / 2), w, p);
            modp::gcd(&modp::sub(&b, &[1], p), w, p)
        };
        if u.len() > 1 && u.len() < w.len() {
            let v = modp::divrem(w, &u, p).0;
            let mut out = equal_degree(&u, d, frob, p, rng);
            out.extend(equal_degree(&v, d, frob, p, rng));
            return out;
        }
    }
}

struct ModularImage {
    p: u64,
    ddf: Vec<(usize, PolyP)>,
    frob: Frobenius,
}

impl ModularImage {
    fn count(&self) -> usize {
        self.ddf.iter().map(|(d, w)| (w.len() - 1) / d).sum()
    }
}

fn choose_prime(f: &DensePoly1) -> ModularImage {
    let mut best: Option<ModularImage> = None;
    let mut tried = 0;
    for p in modp::primes_from(FIRST_PRIME) {
        if (f.lc() % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = modp::monic(&modp::reduce(f, p), p);
        if modp::gcd(&fp, &modp::derivative(&fp, p), p).len() != 1 {
            continue;
        }
        let frob = Frobenius::new(&fp, p);
        let ddf = distinct_degree(&fp, &frob, p);
        let img = ModularImage { p, ddf, frob };
        if best.as_ref().is_none_or(|b| img.count() < b.count()) {
            best = Some(img);
        }
        tried += 1;
        if tried == PRIME_TRIALS || best.as_ref().unwrap().count() == 1 {
            break;
        }
    }
    best.unwrap()
}

fn reduce_mod(f: &DensePoly1, m: &BigInt) -> DensePoly1 {
    DensePoly1::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

fn symmetric(f: &DensePoly1, m: &BigInt) -> DensePoly1 {
    let half = m >> 1;
    DensePoly1::new(
        f.coeffs()
            .iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

/// Division by a monic polynomial with integer arithmetic, reduced mod `m`.
fn divrem_monic(a: &DensePoly1, h: &DensePoly1, m: &BigInt) -> (DensePoly1, DensePoly1) {
    let dn = h.degree();
    let mut r: Vec<BigInt> = a.coeffs().to_vec();
    if r.len() <= dn {
        return (DensePoly1::zero(), reduce_mod(a, m));
    }
    let mut q = vec![BigInt::zero(); r.len() - dn];
    for k in (0..q.len()).rev() {
        let c = r[k + dn].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (j, hc) in h.coeffs().iter().enumerate() {
            r[k + j] = (&r[k + j] - &c * hc).mod_floor(m);
        }
        q[k] = c;
    }
    r.truncate(dn);
    (DensePoly1::new(q), reduce_mod(&DensePoly1::new(r), m))
}

fn from_modp(a: &[u64]) -> DensePoly1 {
    DensePoly1::new(a.iter().map(|&c| BigInt::from(c)).collect())
}

/// Lifts `f = g*h (mod p)` with `f`, `h` monic to a factorization mod `big`,
/// where `big` is `p^(2^j)`.
fn hensel_pair(f: &DensePoly1, g0: &[u64], h0: &[u64], p: u64, big: &BigInt) -> (DensePoly1, DensePoly1) {
    let (one, s0, t0) = modp::ext_gcd(g0, h0, p);
    debug_assert_eq!(one, vec![1]);
    let (mut g, mut h) = (from_modp(g0), from_modp(h0));
    let (mut s, mut t) = (from_modp(&s0), from_modp(&t0));
    let mut m = BigInt::from(p);
    while &m < big {
        let m2 = &m * &m;
        let e = reduce_mod(&(f - &(&g * &h)), &m2);
        let (q, r) = divrem_monic(&(&s * &e), &h, &m2);
        let g_new = reduce_mod(&(&(&g + &(&t * &e)) + &(&q * &g)), &m2);
        let h_new = reduce_mod(&(&h + &r), &m2);
        let b = reduce_mod(&(&(&(&s * &g_new) + &(&t * &h_new)) - &DensePoly1::one()), &m2);
        let (c, d) = divrem_monic(&(&s * &b), &h_new, &m2);
        s = reduce_mod(&(&s - &d), &m2);
        t = reduce_mod(&(&(&t - &(&t * &b)) - &(&c * &g_new)), &m2);
        g = g_new;
        h = h_new;
        m = m2;
    }
    (g, h)
}

/// Lifts the monic modular factors of the monic `f` (mod `big`).
fn hensel_tree(f: &DensePoly1, parts: &[PolyP], p: u64, big: &BigInt) -> Vec<DensePoly1> {
    if parts.len() == 1 {
        return vec![reduce_mod(f, big)];
    }
    let mid = parts.len() / 2;
    let prod = |ps: &[PolyP]| ps.iter().fold(vec![1u64], |acc, x| modp::mul(&acc, x, p));
    let (g, h) = hensel_pair(f, &prod(&parts[..mid]), &prod(&parts[mid..]), p, big);
    let mut out = hensel_tree(&g, &parts[..mid], p, big);
    out.extend(hensel_tree(&h, &parts[mid..], p, big));
    out
}

/// Factors a primitive squarefree polynomial with positive leading
/// coefficient and nonzero constant term.
fn factor_squarefree(f: &DensePoly1) -> Vec<DensePoly1> {
    if f.degree() <= 1 {
        return vec![f.clone()];
    }
    let img = choose_prime(f);
    if img.count() == 1 {
        return vec![f.clone()];
    }
    let p = img.p;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ p ^ (f.degree() as u64) << 32);
    let mut parts: Vec<PolyP> = Vec::new();
    for (d, w) in &img.ddf {
        parts.extend(equal_degree(w, *d, &img.frob, p, &mut rng));
    }
    parts.sort();

    // any factor g of f has |coeff| <= 2^deg f * ||f||_1, scaled by lc(f)
    let lc = f.lc();
    let bound = (f.l1_norm() * lc.abs()) << (f.degree() + 1);
    let pb = BigInt::from(p);
    let mut big = pb.clone();
    while big <= bound {
        big = &big * &big;
    }
    let lc_inv = lc
        .extended_gcd(&big)
        .x
        .mod_floor(&big);
    let monic_f = reduce_mod(&f.scale(&lc_inv), &big);
    let lifted = hensel_tree(&monic_f, &parts, p, &big);
    recombine(f, lifted, &big)
}

fn recombine(f: &DensePoly1, lifted: Vec<DensePoly1>, big: &BigInt) -> Vec<DensePoly1> {
    let mut remaining: Vec<DensePoly1> = lifted;
    let mut f = f.clone();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= remaining.len() {
        let mut hit = None;
        let lc = f.lc();
        let target = (&lc * f.coeff(0)).abs();
        for combo in (0..remaining.len()).combinations(size) {
            let c0 = combo
                .iter()
                .fold(lc.clone(), |acc, &i| (acc * remaining[i].coeff(0)).mod_floor(big));
            let c0 = if &c0 * 2 > *big { c0 - big } else { c0 };
            if c0.is_zero() || !(&target % &c0).is_zero() {
                continue;
            }
            let prod = combo.iter().fold(DensePoly1::constant(lc.clone()), |acc, &i| {
                reduce_mod(&(&acc * &remaining[i]), big)
            });
            let g = symmetric(&prod, big).primitive();
            if let Ok(q) = f.div_exact(&g) {
                hit = Some((combo, g, q));
                break;
            }
        }
        match hit {
            Some((combo, g, q)) => {
                found.push(g);
                f = q;
                remaining = remaining
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, u)| u)
                    .collect();
            }
            None => size += 1,
        }
    }
    if !f.is_constant() {
        found.push(f.primitive());
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> DensePoly1 {
        DensePoly1::from_i64(c)
    }

    fn reconstruct(fac: &Factorization<DensePoly1>) -> DensePoly1 {
        let mut acc = DensePoly1::constant(fac.unit.to_integer());
        for (g, e) in &fac.factors {
            for _ in 0..*e {
                acc = &acc * g;
            }
        }
        acc
    }

    #[test]
    fn difference_of_squares() {
        let fac = factor_univariate(&p(&[-1, 0, 1])).unwrap();
        assert_eq!(fac.factors, vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1)]);
    }

    #[test]
    fn irreducible_quadratic() {
        let fac = factor_univariate(&p(&[1, 0, 1])).unwrap();
        assert_eq!(fac.factors, vec![(p(&[1, 0, 1]), 1)]);
    }

    #[test]
    fn swinnerton_dyer_like_recombination() {
        // x^4 - 10x^2 + 1 is irreducible but splits modulo every prime
        let f = p(&[1, 0, -10, 0, 1]);
        let fac = factor_univariate(&f).unwrap();
        assert_eq!(fac.factors, vec![(f, 1)]);
    }

    #[test]
    fn content_powers_and_multiplicities() {
        let a = p(&[-2, 3]);
        let b = p(&[1, 1, 1]);
        let f = (&(&(&a * &a) * &b) * &p(&[0, 0, 6])).scale(&BigInt::from(-5));
        let fac = factor_univariate(&f).unwrap();
        assert_eq!(fac.unit, BigRational::from_integer((-30).into()));
        assert_eq!(fac.factors, vec![(p(&[0, 1]), 2), (a, 2), (b, 1)]);
        assert_eq!(reconstruct(&fac), f);
    }

    #[test]
    fn cyclotomic_product() {
        let f = &DensePoly1::monomial(BigInt::one(), 12) - &DensePoly1::one();
        let fac = factor_univariate(&f).unwrap();
        let mut expected: Vec<_> = [1, 2, 3, 4, 6, 12]
            .iter()
            .map(|&n| (DensePoly1::cyclotomic(n), 1))
            .collect();
        expected.sort();
        assert_eq!(fac.factors, expected);
    }

    #[test]
    fn large_leading_coefficient() {
        let a = p(&[7, -1000003]);
        let b = p(&[-5, 0, 0, 999983]);
        let f = &a * &b;
        let fac = factor_univariate(&f).unwrap();
        assert_eq!(reconstruct(&fac), f);
        assert_eq!(fac.factors.len(), 2);
    }
}
