//! Recursive-descent parser for polynomial expressions.
//!
//! Accepts sums of terms such as `3*x^12345678901234567890*y^7 - 5/2`, plus
//! parentheses, products (explicit or by juxtaposition) and powers. Powers
//! of monomials may have unbounded exponents. Powers of anything else are
//! expanded and limited to 4096, as are powers of non-unit coefficients.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{SparsePolynomial, Term, Var};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigUint),
    Var(Var),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(s[start..i].parse().unwrap())));
                continue;
            }
            b'x' | b'X' => Tok::Var(Var::X),
            b'y' | b'Y' => Tok::Var(Var::Y),
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let ch = s[i..].chars().next().unwrap();
                return Err(Error::parse(i, format!("unexpected character {ch:?}")));
            }
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(o, _)| *o).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::parse(self.offset(), msg))
    }

    fn expr(&mut self) -> Result<SparsePolynomial> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                -&self.product()?
            }
            Some(Tok::Plus) => {
                self.bump();
                self.product()?
            }
            _ => self.product()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.product()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Num(_)) | Some(Tok::Var(_)) | Some(Tok::LParen)
        )
    }

    fn product(&mut self) -> Result<SparsePolynomial> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = &acc * &self.power()?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let at = self.offset();
                    let d = self.power()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(Error::parse(at, "divisor must be a nonzero constant"));
                    }
                    let inv = d.terms()[0].coeff.recip();
                    acc = acc.scale(&inv);
                }
                _ if self.starts_factor() => acc = &acc * &self.power()?,
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<SparsePolynomial> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        let n = match self.bump() {
            Some(Tok::Num(n)) => n,
            _ => return Err(Error::parse(at, "expected a natural exponent after '^'")),
        };
        raise(&base, &n).ok_or_else(|| Error::parse(at, "exponent too large for this base"))
    }

    fn atom(&mut self) -> Result<SparsePolynomial> {
        match self.bump() {
            Some(Tok::Num(n)) => Ok(SparsePolynomial::constant(BigRational::from_integer(
                BigInt::from(n),
            ))),
            Some(Tok::Var(v)) => Ok(SparsePolynomial::var(v)),
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                if self.bump() != Some(Tok::RParen) {
                    self.pos -= 1;
                    return self.err("expected ')'");
                }
                Ok(inner)
            }
            Some(_) => {
                self.pos -= 1;
                self.err("expected a number, variable or '('")
            }
            None => self.err("unexpected end of input"),
        }
    }
}

/// `base^n`; monomials with unit coefficient accept any exponent.
fn raise(base: &SparsePolynomial, n: &BigUint) -> Option<SparsePolynomial> {
    if n.is_zero() {
        return Some(SparsePolynomial::constant(BigRational::one()));
    }
    if base.num_terms() == 1 {
        let t = &base.terms()[0];
        let coeff = if t.coeff.abs().is_one() {
            if t.coeff.is_negative() && n.bit(0) {
                -BigRational::one()
            } else {
                BigRational::one()
            }
        } else {
            num_traits::pow(t.coeff.clone(), small_exponent(n)?)
        };
        return Some(SparsePolynomial::canonicalize([Term::new(
            coeff,
            &t.ex * n,
            &t.ey * n,
        )]));
    }
    if base.is_zero() {
        return Some(SparsePolynomial::zero());
    }
    Some(base.pow(small_exponent(n)? as u32))
}

const MAX_DENSE_POWER: usize = 4096;

fn small_exponent(n: &BigUint) -> Option<usize> {
    n.to_usize().filter(|&k| k <= MAX_DENSE_POWER)
}

/// Parses the text form of a polynomial.
pub fn parse_polynomial(s: &str) -> Result<SparsePolynomial> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::parse(0, "empty input"));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: s.len(),
    };
    let f = p.expr()?;
    if p.pos < p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_examples() {
        let f = parse_polynomial("3*x^12345678901234567890*y^7 - 5/2").unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.terms()[1].ex, "12345678901234567890".parse().unwrap());
        let g = parse_polynomial("3x^2y^7").unwrap();
        assert_eq!(g, parse_polynomial("3*x^2*y^7").unwrap());
        assert_eq!(
            parse_polynomial("  - x + 2 ").unwrap(),
            parse_polynomial("2-x").unwrap()
        );
    }

    #[test]
    fn products_and_powers() {
        let f = parse_polynomial("(x+y+1)^2").unwrap();
        assert_eq!(f.num_terms(), 6);
        let g = parse_polynomial("(x - 1)*(x + 1)").unwrap();
        assert_eq!(g, parse_polynomial("x^2 - 1").unwrap());
        let h = parse_polynomial("(x*y)^100000000000000000000").unwrap();
        assert_eq!(h.terms()[0].ey, "100000000000000000000".parse().unwrap());
        assert_eq!(parse_polynomial("(-x)^3").unwrap(), parse_polynomial("-x^3").unwrap());
        assert_eq!(parse_polynomial("2^10").unwrap(), parse_polynomial("1024").unwrap());
    }

    #[test]
    fn rejects_malformed() {
        for s in ["", "x +", "3**x", "x^", "x^y", "(x", "x)", "x / y", "1/0", "z", "x % 2"] {
            assert!(matches!(parse_polynomial(s), Err(Error::Parse { .. })), "{s:?}");
        }
    }

    #[test]
    fn huge_power_of_nonmonomial_is_rejected() {
        assert!(parse_polynomial("(x+1)^100000000000").is_err());
        assert!(parse_polynomial("3^100000000000000000000").is_err());
    }
}
