//! Univariate gcd over Z by Chinese remaindering of modular images, with a
//! trial-division check before anything is returned.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::modp;
use super::DensePoly1;

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Combines `acc mod m` with `img mod p` coefficientwise.
fn crt(acc: &[BigInt], m: &BigInt, img: &[u64], p: u64) -> Vec<BigInt> {
    let pb = BigInt::from(p);
    let m_mod_p = modp::reduce_int(m, p);
    let m_inv = modp::inv(m_mod_p, p);
    acc.iter()
        .zip(img)
        .map(|(a, &b)| {
            let a_p = modp::reduce_int(a, p);
            let k = (b + p - a_p) % p * m_inv % p;
            (a + m * BigInt::from(k)).mod_floor(&(m * &pb))
        })
        .collect()
}

/// Primitive gcd with positive leading coefficient; `gcd(0, 0) = 0`.
pub fn gcd(a: &DensePoly1, b: &DensePoly1) -> DensePoly1 {
    if a.is_zero() {
        return b.primitive();
    }
    if b.is_zero() {
        return a.primitive();
    }
    let a = a.primitive();
    let b = b.primitive();
    if a.is_constant() || b.is_constant() {
        return DensePoly1::one();
    }
    if a.divides(&b) {
        return a;
    }
    if b.divides(&a) {
        return b;
    }
    let l = a.lc().gcd(&b.lc());
    let mut best_deg = a.degree().min(b.degree()) + 1;
    let mut acc: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut last: Option<DensePoly1> = None;
    for p in modp::large_primes() {
        if (&l % BigInt::from(p)).is_zero() {
            continue;
        }
        let g = modp::gcd(&modp::reduce(&a, p), &modp::reduce(&b, p), p);
        let e = g.len() - 1;
        if e == 0 {
            return DensePoly1::one();
        }
        if e > best_deg {
            continue;
        }
        let img = modp::scale(&g, modp::reduce_int(&l, p), p);
        let mut img = img;
        img.resize(e + 1, 0);
        if e < best_deg {
            best_deg = e;
            acc = img.iter().map(|&c| BigInt::from(c)).collect();
            modulus = BigInt::from(p);
            last = None;
            continue;
        }
        acc = crt(&acc, &modulus, &img, p);
        modulus *= p;
        let cand = DensePoly1::new(acc.iter().map(|c| symmetric(c, &modulus)).collect());
        if last.as_ref() == Some(&cand) {
            let g = cand.primitive();
            if g.divides(&a) && g.divides(&b) {
                return g;
            }
        }
        last = Some(cand);
    }
    unreachable!("ran out of primes below 2^31")
}

/// Squarefree decomposition of a primitive polynomial: pairwise coprime
/// primitive `s_i` with `f = unit * prod s_i^i`. Constant parts are omitted.
pub fn squarefree(f: &DensePoly1) -> Vec<(DensePoly1, usize)> {
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let f = f.primitive();
    let mut g = gcd(&f, &f.derivative());
    let mut w = f.div_exact(&g).expect("gcd divides").primitive();
    let mut i = 1;
    while !w.is_constant() {
        let y = gcd(&w, &g);
        let z = w.div_exact(&y).expect("gcd divides").primitive();
        if !z.is_constant() {
            out.push((z, i));
        }
        i += 1;
        g = g.div_exact(&y).expect("gcd divides").primitive();
        w = y;
    }
    out
}

pub fn is_squarefree(f: &DensePoly1) -> bool {
    f.is_constant() || gcd(f, &f.derivative()).is_constant()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> DensePoly1 {
        DensePoly1::from_i64(c)
    }

    #[test]
    fn small_gcds() {
        assert_eq!(gcd(&p(&[-1, 0, 1]), &p(&[-1, 1])), p(&[-1, 1]));
        assert_eq!(gcd(&p(&[1, 0, 1]), &p(&[-1, 1])), p(&[1]));
        assert_eq!(gcd(&p(&[0, 0, 6]), &p(&[0, 4])), p(&[0, 1]));
        assert_eq!(gcd(&DensePoly1::zero(), &p(&[2, 4])), p(&[1, 2]));
    }

    #[test]
    fn gcd_with_large_coefficients() {
        let a = p(&[123456789, -987654321, 555555555]);
        let b = p(&[-31, 17, 1]);
        let c = p(&[7, 0, -3, 1]);
        let g = gcd(&(&a * &c), &(&b * &c));
        assert_eq!(g, c);
        let big = DensePoly1::new(vec![BigInt::from(10).pow(60u32) + 7, BigInt::from(3)]);
        let g = gcd(&(&big * &a), &(&big * &b));
        assert_eq!(g, big.primitive());
    }

    #[test]
    fn squarefree_parts() {
        let a = p(&[-1, 1]);
        let b = p(&[1, 1]);
        let f = &(&a * &a) * &b;
        assert_eq!(squarefree(&f), vec![(b.clone(), 1), (a.clone(), 2)]);
        let g = &(&f * &f) * &p(&[2, 0, 1]);
        let sq = squarefree(&g);
        assert_eq!(sq.len(), 3);
        assert!(is_squarefree(&p(&[2, 0, 1])));
        assert!(!is_squarefree(&g));
    }
}
