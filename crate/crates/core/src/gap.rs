//! Gap lengths and the splitting of a lacunary polynomial into pieces that
//! are far apart in the exponent plane.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::dense::{from_sparse, DensePoly2};
use crate::error::{Error, Result, Untested};
use crate::numeric::{ceil_nat, ln2_upper, ln_upper_nat, nat_to_rational};
use crate::sparse::{PolynomialJson, SparsePolynomial, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GapMode {
    /// Factors over Q.
    Rational,
    /// Factors over the algebraic closure, binomials excluded.
    Absolute,
}

/// Degree bound, height bound and the gap length derived from them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapParameters {
    pub d: usize,
    pub c: BigRational,
    pub delta: BigUint,
    pub mode: GapMode,
}

impl GapParameters {
    pub fn new(d: usize, c: BigRational, mode: GapMode) -> Self {
        let delta = match mode {
            GapMode::Rational => delta_rational(d, &c),
            GapMode::Absolute => delta_absolute(d, &c),
        };
        GapParameters { d, c, delta, mode }
    }

    /// Parameters for `f` itself.
    pub fn for_polynomial(f: &SparsePolynomial, d: usize, mode: GapMode) -> Result<Self> {
        Ok(Self::new(d, compute_c(f)?, mode))
    }

    /// Parameters that stay valid for `f` and for its first `t - 1`
    /// derivatives in either variable, `t` the number of terms. Each
    /// derivative raises the height by at most `ln(deg + 1)`.
    pub fn padded(f: &SparsePolynomial, d: usize, mode: GapMode) -> Result<Self> {
        let (_, _, g) = f.strip_monomial()?;
        let steps = BigUint::from(g.num_terms().saturating_sub(1));
        let deg = g.degree_x().max(g.degree_y());
        let c = compute_c(f)? + nat_to_rational(&steps) * ln_upper_nat(&(deg + 1u32));
        let mut p = Self::new(d, c, mode);
        p.delta += steps;
        Ok(p)
    }
}

/// An upper bound for `ln ||f~||_1`, `f~` the primitive part of `f`.
pub fn compute_c(f: &SparsePolynomial) -> Result<BigRational> {
    let norm = f.primitive_part()?.primitive.l1_norm()?;
    Ok(BigRational::from_integer(norm.bits().into()) * ln2_upper())
}

fn nat(n: u64) -> BigUint {
    BigUint::from(n)
}

/// `ceil(5^6 * d * ln^3(16 d) * c)`, rounded up.
pub fn delta_rational(d: usize, c: &BigRational) -> BigUint {
    if !c.is_positive() {
        return BigUint::zero();
    }
    let d = d.max(1) as u64;
    let l = ln_upper_nat(&nat(16 * d));
    let v = BigRational::from_integer((15625 * d).into()) * &l * &l * &l * c;
    ceil_nat(&v)
}

/// `ceil(2^70 * d * ln^5(d + 2) * c)`, rounded up.
pub fn delta_absolute(d: usize, c: &BigRational) -> BigUint {
    if !c.is_positive() {
        return BigUint::zero();
    }
    let d = d.max(1) as u64;
    let l = ln_upper_nat(&nat(d + 2));
    let l5 = &l * &l * &l * &l * &l;
    let v = BigRational::from_integer((BigUint::one() << 70u32).into())
        * BigRational::from_integer(d.into())
        * l5
        * c;
    ceil_nat(&v)
}

/// `x^gamma * y^delta_off * poly`, with `poly` free of monomial content.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub gamma: BigUint,
    pub delta_off: BigUint,
    pub poly: SparsePolynomial,
}

impl Piece {
    fn from_terms(terms: Vec<Term>) -> Self {
        let poly = SparsePolynomial::canonicalize(terms);
        let (gamma, delta_off, poly) = poly.strip_monomial().expect("pieces are nonzero");
        Piece {
            gamma,
            delta_off,
            poly,
        }
    }

    /// Largest total degree of the piece.
    pub fn spread(&self) -> BigUint {
        self.poly.total_degree()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapDecomposition {
    pub pieces: Vec<Piece>,
    pub delta_x: BigUint,
    pub delta_y: BigUint,
}

/// Splits the support of `f` first along `y`, then each group along `x`,
/// wherever consecutive exponents differ by at least the gap.
pub fn decompose(
    f: &SparsePolynomial,
    delta_x: &BigUint,
    delta_y: &BigUint,
) -> Result<GapDecomposition> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    // canonical order sorts by y-exponent first
    let mut groups: Vec<Vec<Term>> = Vec::new();
    let mut prev: Option<&BigUint> = None;
    for t in f.terms() {
        if prev.is_none_or(|p| &t.ey - p >= *delta_y) {
            groups.push(Vec::new());
        }
        groups.last_mut().unwrap().push(t.clone());
        prev = Some(&t.ey);
    }
    let mut pieces = Vec::new();
    for mut group in groups {
        group.sort_by(|a, b| a.ex.cmp(&b.ex).then_with(|| a.ey.cmp(&b.ey)));
        let mut current: Vec<Term> = Vec::new();
        for t in group {
            if current.last().is_some_and(|p| &t.ex - &p.ex >= *delta_x) {
                pieces.push(Piece::from_terms(std::mem::take(&mut current)));
            }
            current.push(t);
        }
        pieces.push(Piece::from_terms(current));
    }
    Ok(GapDecomposition {
        pieces,
        delta_x: delta_x.clone(),
        delta_y: delta_y.clone(),
    })
}

impl GapDecomposition {
    pub fn reconstruct(&self) -> SparsePolynomial {
        SparsePolynomial::canonicalize(self.pieces.iter().flat_map(|p| {
            p.poly
                .mul_monomial(&p.gamma, &p.delta_off)
                .into_terms()
        }))
    }

    fn separated(&self, i: &Piece, j: &Piece) -> bool {
        let ahead = |lo: &BigUint, width: BigUint, hi: &BigUint, gap: &BigUint| {
            *hi >= lo + width + gap
        };
        ahead(&i.gamma, i.poly.degree_x(), &j.gamma, &self.delta_x)
            || ahead(&j.gamma, j.poly.degree_x(), &i.gamma, &self.delta_x)
            || ahead(&i.delta_off, i.poly.degree_y(), &j.delta_off, &self.delta_y)
            || ahead(&j.delta_off, j.poly.degree_y(), &i.delta_off, &self.delta_y)
    }

    /// Whether every pair of pieces is separated by a gap in `x` or in `y`.
    pub fn check_separation(&self) -> bool {
        self.pieces.iter().enumerate().all(|(k, a)| {
            self.pieces[k + 1..]
                .iter()
                .all(|b| self.separated(a, b))
        })
    }

    /// Index of the piece with the smallest total degree.
    pub fn smallest_piece(&self) -> usize {
        (0..self.pieces.len())
            .min_by_key(|&k| (self.pieces[k].spread(), self.pieces[k].poly.num_terms()))
            .unwrap_or(0)
    }

    pub fn to_json(&self) -> DecompositionJson {
        DecompositionJson {
            delta_x: self.delta_x.to_string(),
            delta_y: self.delta_y.to_string(),
            pieces: self
                .pieces
                .iter()
                .map(|p| PieceJson {
                    gamma: p.gamma.to_string(),
                    delta: p.delta_off.to_string(),
                    poly: p.poly.to_json(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PieceJson {
    pub gamma: String,
    pub delta: String,
    pub poly: PolynomialJson,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct DecompositionJson {
    pub delta_x: String,
    pub delta_y: String,
    pub pieces: Vec<PieceJson>,
}

/// Gap and densification settings shared by the factor searches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapPolicy {
    pub dense_limit: usize,
    /// A user-chosen gap in place of the certified one. Reported factors
    /// stay correct but the list may be incomplete.
    pub heuristic_delta: Option<BigUint>,
}

impl Default for GapPolicy {
    fn default() -> Self {
        GapPolicy {
            dense_limit: 2000,
            heuristic_delta: None,
        }
    }
}

/// A piece in dense integer form: `piece = poly / denominator`.
#[derive(Clone, Debug)]
pub struct DensePiece {
    pub gamma: BigUint,
    pub delta_off: BigUint,
    pub denominator: BigInt,
    pub poly: DensePoly2,
}

impl GapPolicy {
    pub fn is_heuristic(&self) -> bool {
        self.heuristic_delta.is_some()
    }

    /// The gap that makes divisibility by any non-torsion factor of degree
    /// at most `d` visible piece by piece.
    pub fn delta(&self, f: &SparsePolynomial, d: usize) -> Result<BigUint> {
        match &self.heuristic_delta {
            Some(k) => Ok(k.clone()),
            None => Ok(delta_rational(d, &compute_c(f)?)),
        }
    }

    pub fn densify(&self, dec: &GapDecomposition) -> Result<Vec<DensePiece>> {
        dec.pieces
            .iter()
            .map(|p| {
                let d = from_sparse(&p.poly, self.dense_limit)?;
                Ok(DensePiece {
                    gamma: p.gamma.clone(),
                    delta_off: p.delta_off.clone(),
                    denominator: d.denominator,
                    poly: d.poly,
                })
            })
            .collect()
    }

    /// Decomposes `f` at the gap for degree `d` and densifies the pieces.
    pub fn dense_pieces(&self, f: &SparsePolynomial, d: usize) -> Result<Vec<DensePiece>> {
        let delta = self.delta(f, d)?;
        self.densify(&decompose(f, &delta, &delta)?)
    }

    /// `f / p` if the primitive `p` divides every piece of `f`, else `None`.
    /// `p` must be free of torsion factors and coprime to `x` and `y`.
    pub fn divide_piecewise(
        &self,
        f: &SparsePolynomial,
        p: &DensePoly2,
    ) -> Result<Option<SparsePolynomial>> {
        let pieces = self.dense_pieces(f, p.total_degree().max(1))?;
        let mut terms = Vec::new();
        for piece in pieces {
            let Ok(q) = piece.poly.div_exact(p) else {
                return Ok(None);
            };
            let inv = BigRational::new(BigInt::one(), piece.denominator);
            terms.extend(
                q.to_sparse()
                    .scale(&inv)
                    .mul_monomial(&piece.gamma, &piece.delta_off)
                    .into_terms(),
            );
        }
        Ok(Some(SparsePolynomial::canonicalize(terms)))
    }

    /// Largest `e <= cap` with `p^e | f`, found by dividing out `p` one
    /// piece at a time. Each quotient is decomposed at its own gap, so a
    /// negative answer is certified as well. When a quotient cannot be
    /// densified the count found so far is returned with a marker.
    pub fn multiplicity(
        &self,
        f: &SparsePolynomial,
        p: &DensePoly2,
        cap: usize,
    ) -> Result<(usize, Option<Untested>)> {
        let p = p.primitive();
        let mut current = f.clone();
        let mut e = 0;
        while e < cap {
            match self.divide_piecewise(&current, &p) {
                Ok(Some(q)) => {
                    current = q;
                    e += 1;
                }
                Ok(None) => break,
                Err(err) => {
                    let what = format!("multiplicity of {} beyond {e}", p.to_sparse());
                    return Ok((e, Some(Untested::from_error(what, err)?)));
                }
            }
        }
        Ok((e, None))
    }
}
