//! Rigorous rational enclosures of natural logarithms.
//!
//! Gap lengths and factor-count bounds are only sound when the logarithms
//! they contain are rounded in a known direction. Everything here works on
//! fixed-point integers scaled by `2^PRECISION_BITS`, truncating lower bounds
//! down and upper bounds up at every step.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Fractional bits carried by the fixed-point evaluation.
pub const PRECISION_BITS: u64 = 256;

fn scale() -> BigInt {
    BigInt::one() << PRECISION_BITS
}

fn div_floor(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

fn div_ceil(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

/// Fixed-point bounds on `atanh(num/den)` for `0 <= num/den <= 1/3`.
fn atanh_fixed(num: &BigInt, den: &BigInt) -> (BigInt, BigInt) {
    debug_assert!(!num.is_negative() && den.is_positive());
    debug_assert!(num * 3 <= *den);
    if num.is_zero() {
        return (BigInt::zero(), BigInt::zero());
    }
    let one = scale();
    let num2 = num * num;
    let den2 = den * den;
    let u2_lo = div_floor(&(&num2 << PRECISION_BITS), &den2);
    let u2_hi = div_ceil(&(&num2 << PRECISION_BITS), &den2);
    let mut p_lo = div_floor(&(num << PRECISION_BITS), den);
    let mut p_hi = div_ceil(&(num << PRECISION_BITS), den);
    let mut sum_lo = BigInt::zero();
    let mut sum_hi = BigInt::zero();
    let mut k: u64 = 0;
    loop {
        let odd = BigInt::from(2 * k + 1);
        sum_lo += div_floor(&p_lo, &odd);
        sum_hi += div_ceil(&p_hi, &odd);
        p_lo = div_floor(&(&p_lo * &u2_lo), &one);
        p_hi = div_ceil(&(&p_hi * &u2_hi), &one);
        k += 1;
        if p_hi <= BigInt::from(2) {
            // remaining terms sum to at most p_hi * (1/(1-u^2)) / (2k+1) <= p_hi * 9 / (8(2k+1))
            let tail = div_ceil(&(&p_hi * 9), &BigInt::from(8 * (2 * k + 1)));
            sum_hi += tail;
            break;
        }
    }
    (sum_lo, sum_hi)
}

fn ln2_fixed() -> &'static (BigInt, BigInt) {
    static LN2: OnceLock<(BigInt, BigInt)> = OnceLock::new();
    LN2.get_or_init(|| {
        let (lo, hi) = atanh_fixed(&BigInt::one(), &BigInt::from(3));
        (lo * 2, hi * 2)
    })
}

/// Fixed-point bounds on `ln n` for a positive natural `n`.
fn ln_nat_fixed(n: &BigUint) -> (BigInt, BigInt) {
    assert!(!n.is_zero(), "logarithm of zero");
    let k = n.bits() - 1;
    let n = BigInt::from_biguint(Sign::Plus, n.clone());
    let pow = BigInt::one() << k;
    let (a_lo, a_hi) = atanh_fixed(&(&n - &pow), &(&n + &pow));
    let (l2_lo, l2_hi) = ln2_fixed();
    let k = BigInt::from(k);
    (&k * l2_lo + a_lo * 2, &k * l2_hi + a_hi * 2)
}

fn to_rational(v: BigInt) -> BigRational {
    BigRational::new(v, scale())
}

/// Lower and upper rational bounds on `ln x` for positive rational `x`.
pub fn ln_bounds(x: &BigRational) -> (BigRational, BigRational) {
    assert!(x.is_positive(), "logarithm of a non-positive number");
    let num = x.numer().magnitude();
    let den = x.denom().magnitude();
    let (n_lo, n_hi) = ln_nat_fixed(num);
    let (d_lo, d_hi) = ln_nat_fixed(den);
    (to_rational(n_lo - d_hi), to_rational(n_hi - d_lo))
}

pub fn ln_upper(x: &BigRational) -> BigRational {
    ln_bounds(x).1
}

pub fn ln_lower(x: &BigRational) -> BigRational {
    ln_bounds(x).0
}

pub fn ln_upper_nat(n: &BigUint) -> BigRational {
    to_rational(ln_nat_fixed(n).1)
}

pub fn ln_lower_nat(n: &BigUint) -> BigRational {
    to_rational(ln_nat_fixed(n).0)
}

/// A rational strictly above `ln 2`.
pub fn ln2_upper() -> BigRational {
    to_rational(ln2_fixed().1.clone())
}

/// Smallest natural number `>= r`; negative inputs clamp to zero.
pub fn ceil_nat(r: &BigRational) -> BigUint {
    let c = r.ceil().to_integer();
    c.to_biguint().unwrap_or_default()
}

pub fn nat_to_rational(n: &BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from_biguint(Sign::Plus, n.clone()))
}

/// Approximate `f64` value, for diagnostics only.
pub fn to_f64(r: &BigRational) -> f64 {
    // shift both parts down so the division stays in range
    let n = r.numer();
    let d = r.denom();
    let shift = n.bits().max(d.bits()).saturating_sub(1000);
    let n = (n >> shift).to_string().parse::<f64>().unwrap_or(f64::NAN);
    let d = (d >> shift).to_string().parse::<f64>().unwrap_or(f64::NAN);
    n / d
}
