//! Complete factorization in Z[x, y].
//!
//! After removing contents and splitting squarefree parts, each part is
//! specialized at a good `y = b`, factored as a univariate polynomial, and
//! the factors are lifted over Q[[y - b]] by linear lifting along a binary
//! factor tree. True factors are recovered by recombining
//! subsets of lifted factors and dividing exactly.

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::gcd::is_squarefree;
use super::qpoly::QPoly;
use super::zassenhaus::factor_univariate;
use super::{DensePoly1, DensePoly2, Factorization};
use crate::error::{Error, Result};
use crate::sparse::Var;

const EVALUATION_TRIALS: usize = 3;
const MAX_EVALUATION_POINTS: i64 = 4096;

/// Irreducible factorization over Q of a nonzero integer polynomial.
pub fn factor_bivariate(f: &DensePoly2) -> Result<Factorization<DensePoly2>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (unit, mut g) = f.split_content();
    let mut factors: Vec<(DensePoly2, usize)> = Vec::new();

    // monomial part
    let a = g.rows().iter().take_while(|r| r.is_zero()).count();
    let b = g.rows().iter().filter(|r| !r.is_zero()).map(|r| r.low_degree()).min().unwrap_or(0);
    if a > 0 {
        factors.push((DensePoly2::var(Var::X), a));
    }
    if b > 0 {
        factors.push((DensePoly2::var(Var::Y), b));
    }
    g = DensePoly2::new(g.rows()[a..].iter().map(|r| r.shift_down(b)).collect());

    // factors in y alone
    let cy = g.content_y().primitive();
    if !cy.is_constant() {
        for (p, e) in factor_univariate(&cy)?.factors {
            factors.push((DensePoly2::from_univariate(&p, Var::Y), e));
        }
        g = g.div_exact(&DensePoly2::from_univariate(&cy, Var::Y))?;
    }
    // factors in x alone
    let gt = g.transpose();
    let cx = gt.content_y().primitive();
    if !cx.is_constant() {
        for (p, e) in factor_univariate(&cx)?.factors {
            factors.push((DensePoly2::from_univariate(&p, Var::X), e));
        }
        g = g.div_exact(&DensePoly2::from_univariate(&cx, Var::X))?;
    }

    for (part, e) in g.primitive().squarefree_x() {
        for p in factor_squarefree(&part) {
            factors.push((p, e));
        }
    }
    factors.sort();
    let unit = BigRational::from_integer(unit);
    Ok(Factorization { unit, factors })
}

/// Factors a squarefree polynomial that is primitive in both variables.
fn factor_squarefree(f: &DensePoly2) -> Vec<DensePoly2> {
    let f = f.primitive();
    if f.deg_x() <= 1 || f.deg_y() <= 1 {
        return vec![f];
    }
    // lift in the variable that keeps the leading coefficient simple
    let swap = {
        let t = f.transpose();
        let lx = f.lc_x().is_constant();
        let ly = t.lc_x().is_constant();
        (!lx && ly) || (lx == ly && t.deg_y() < f.deg_y())
    };
    let g = if swap { f.transpose() } else { f.clone() };
    let out = factor_primitive_main_x(&g);
    out.into_iter()
        .map(|p| if swap { p.transpose() } else { p })
        .map(|p| p.primitive())
        .collect()
}

struct Specialization {
    b: BigInt,
    factors: Vec<DensePoly1>,
}

fn specializations(f: &DensePoly2) -> Option<Specialization> {
    let lc = f.lc_x();
    let mut best: Option<Specialization> = None;
    let mut tried = 0;
    for k in 0..MAX_EVALUATION_POINTS {
        // 0, 1, -1, 2, -2, ...
        let b = if k % 2 == 1 { BigInt::from(k / 2 + 1) } else { -BigInt::from(k / 2) };
        if lc.eval(&b).is_zero() {
            continue;
        }
        let u = f.eval_y(&b);
        if !is_squarefree(&u) {
            continue;
        }
        let fac = factor_univariate(&u).expect("nonzero specialization");
        let factors: Vec<DensePoly1> = fac.factors.into_iter().map(|(p, _)| p).collect();
        if best.as_ref().is_none_or(|s| factors.len() < s.factors.len()) {
            best = Some(Specialization { b, factors });
        }
        tried += 1;
        if tried == EVALUATION_TRIALS || best.as_ref().unwrap().factors.len() == 1 {
            break;
        }
    }
    best
}

/// Truncated power series in `y` whose coefficients are polynomials in `x`.
type Series = Vec<QPoly>;

/// `A * B = H mod y^prec` with `A`, `B` monic in `x`, given
/// `A_0 * B_0 = H_0` with coprime `A_0`, `B_0`.
fn lift_pair(h: &Series, a0: &QPoly, b0: &QPoly, prec: usize) -> (Series, Series) {
    let (s, t) = QPoly::bezout(a0, b0);
    let mut a = vec![a0.clone()];
    let mut b = vec![b0.clone()];
    for k in 1..prec {
        let mut e = h.get(k).cloned().unwrap_or_default();
        for j in 1..k {
            e = &e - &(&a[j] * &b[k - j]);
        }
        // a_k * b0 + b_k * a0 = e with deg a_k < deg a0, deg b_k < deg b0
        let ak = (&t * &e).rem(a0);
        let bk = (&s * &e).rem(b0);
        a.push(ak);
        b.push(bk);
    }
    (a, b)
}

fn product_series(a: &Series, b: &Series, prec: usize) -> Series {
    (0..prec)
        .map(|k| {
            (0..=k).fold(QPoly::zero(), |acc, j| match (a.get(j), b.get(k - j)) {
                (Some(x), Some(y)) => &acc + &(x * y),
                _ => acc,
            })
        })
        .collect()
}

fn lift_tree(h: &Series, parts: &[QPoly], prec: usize) -> Vec<Series> {
    if parts.len() == 1 {
        return vec![h.clone()];
    }
    let mid = parts.len() / 2;
    let prod = |ps: &[QPoly]| ps.iter().fold(QPoly::one(), |acc, x| &acc * x);
    let (a, b) = lift_pair(h, &prod(&parts[..mid]), &prod(&parts[mid..]), prec);
    let mut out = lift_tree(&a, &parts[..mid], prec);
    out.extend(lift_tree(&b, &parts[mid..], prec));
    out
}

/// `1 / c mod y^prec` for a series with nonzero constant term.
fn invert_series(c: &[BigRational], prec: usize) -> Vec<BigRational> {
    let c0 = c[0].recip();
    let mut inv = vec![c0.clone()];
    for k in 1..prec {
        let mut s = BigRational::zero();
        for j in 1..=k.min(c.len() - 1) {
            s += &c[j] * &inv[k - j];
        }
        inv.push(-s * &c0);
    }
    inv
}

/// Rows indexed by `y`-degree of a polynomial in `x`: the series form of `g`.
fn to_series(g: &DensePoly2) -> Series {
    let t = g.transpose();
    (0..=g.deg_y())
        .map(|j| QPoly::from_int(t.rows().get(j).unwrap_or(&DensePoly1::zero())))
        .collect()
}

fn from_series(s: &Series) -> Option<DensePoly2> {
    let mut terms = Vec::new();
    for (j, q) in s.iter().enumerate() {
        for (i, c) in q.coeffs().iter().enumerate() {
            if !c.is_integer() {
                return None;
            }
            if !c.is_zero() {
                terms.push((i, j, c.to_integer()));
            }
        }
    }
    Some(DensePoly2::from_terms(terms))
}

fn factor_primitive_main_x(f: &DensePoly2) -> Vec<DensePoly2> {
    let Some(spec) = specializations(f) else {
        // unreachable for squarefree inputs: only finitely many points fail
        return vec![f.clone()];
    };
    if spec.factors.len() == 1 {
        return vec![f.clone()];
    }
    let mut g = f.shift_y(&spec.b);
    let prec = g.deg_y() + 1;
    let lc = g.lc_x();
    let lc_inv = invert_series(
        &lc.coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect::<Vec<_>>(),
        prec,
    );
    let gs = to_series(&g);
    // monic target H = g / lc(g)
    let h: Series = (0..prec)
        .map(|k| {
            (0..=k).fold(QPoly::zero(), |acc, j| match gs.get(j) {
                Some(gj) => &acc + &gj.scale(&lc_inv[k - j]),
                None => acc,
            })
        })
        .collect();
    let parts: Vec<QPoly> = spec
        .factors
        .iter()
        .map(|u| QPoly::from_int(u).monic())
        .collect();
    let mut lifted = lift_tree(&h, &parts, prec);

    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let lcs: Series = vec_series_from_poly(&g.lc_x());
        let mut hit = None;
        for combo in (0..lifted.len()).combinations(size) {
            let prod = combo
                .iter()
                .fold(lcs.clone(), |acc, &i| product_series(&acc, &lifted[i], prec));
            let Some(cand) = from_series(&prod) else { continue };
            let cand = cand.primitive_x();
            if cand.deg_x() == 0 {
                continue;
            }
            if let Ok(q) = g.div_exact(&cand) {
                hit = Some((combo, cand, q));
                break;
            }
        }
        match hit {
            Some((combo, cand, q)) => {
                found.push(cand);
                g = q;
                lifted = lifted
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, s)| s)
                    .collect();
            }
            None => size += 1,
        }
    }
    if g.deg_x() > 0 {
        found.push(g.primitive_x());
    }
    let back = -spec.b;
    found.into_iter().map(|p| p.shift_y(&back)).collect()
}

/// Series form of a polynomial in `y` with constant-in-`x` coefficients.
fn vec_series_from_poly(c: &DensePoly1) -> Series {
    c.coeffs()
        .iter()
        .map(|v| QPoly::new(vec![BigRational::from_integer(v.clone())]))
        .collect()
}
