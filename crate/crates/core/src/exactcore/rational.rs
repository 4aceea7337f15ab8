//! Arbitrary-precision rational scalars and exact integer root/kernel
//! extraction helpers used throughout the library.
//!
//! Rationals are always kept in lowest terms with positive denominator;
//! `num_rational::BigRational` guarantees both on construction.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

use crate::error::{CoreError, Result};

/// Exact rational scalar, lowest terms, positive denominator.
pub type Rat = num_rational::BigRational;

/// Rational from any integer-like value.
pub fn rat<T: Into<BigInt>>(n: T) -> Rat {
    Rat::from_integer(n.into())
}

/// Rational `n/d`; panics if `d == 0` (programming error, not input).
pub fn rat_frac<N: Into<BigInt>, D: Into<BigInt>>(n: N, d: D) -> Rat {
    Rat::new(n.into(), d.into())
}

/// Parse `"p/q"` or `"p"` (optional sign, decimal digits).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    match s.split('/').collect::<Vec<_>>()[..] {
        [n] => {
            let n = BigInt::from_str(n).map_err(|_| CoreError::parse(format!("bad rational: {s:?}")))?;
            Ok(Rat::from_integer(n))
        }
        [n, d] => {
            let n = BigInt::from_str(n).map_err(|_| CoreError::parse(format!("bad rational: {s:?}")))?;
            let d = BigInt::from_str(d).map_err(|_| CoreError::parse(format!("bad rational: {s:?}")))?;
            if d.is_zero() {
                return Err(CoreError::parse(format!("zero denominator: {s:?}")));
            }
            Ok(Rat::new(n, d))
        }
        _ => Err(CoreError::parse(format!("bad rational: {s:?}"))),
    }
}

/// Render as `"p/q"`, omitting `/q` when the denominator is 1.
pub fn rat_str(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Exact integer n-th root of a non-negative integer, if one exists.
pub fn int_nth_root(x: &BigInt, n: u32) -> Option<BigInt> {
    assert!(n >= 1);
    if x.is_negative() {
        return None;
    }
    if x.is_zero() || x.is_one() || n == 1 {
        return Some(x.clone());
    }
    let r = x.nth_root(n);
    if num_traits::pow::pow(r.clone(), n as usize) == *x {
        Some(r)
    } else {
        None
    }
}

/// Exact rational n-th root. For even `n` the input must be non-negative and
/// the non-negative root is returned; for odd `n` the sign carries through.
pub fn rat_nth_root(r: &Rat, n: u32) -> Option<Rat> {
    assert!(n >= 1);
    if r.is_negative() {
        if n % 2 == 0 {
            return None;
        }
        return rat_nth_root(&-r.clone(), n).map(|x| -x);
    }
    let num = int_nth_root(r.numer(), n)?;
    let den = int_nth_root(r.denom(), n)?;
    Some(Rat::new(num, den))
}

pub fn rat_sqrt(r: &Rat) -> Option<Rat> {
    rat_nth_root(r, 2)
}

/// x^e for e ∈ ℤ; negative exponents require x ≠ 0.
pub fn rat_pow_i(x: &Rat, e: i64) -> Rat {
    if e < 0 {
        assert!(!x.is_zero(), "negative power of zero");
        return rat_pow_i(&(Rat::one() / x), -e);
    }
    let mut acc = Rat::one();
    let mut base = x.clone();
    let mut e = e as u64;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

pub fn is_square_rat(r: &Rat) -> bool {
    rat_sqrt(r).is_some()
}

/// Squarefree kernel of a nonzero integer: the product of the primes dividing
/// it to an odd power, with the sign of the input. Returns 0 for 0.
///
/// Exact whenever the part of `|x|` not factored by trial division (primes up
/// to 10⁵) is 1, a perfect power, or a prime; inputs in this library are far
/// below that threshold.
pub fn squarefree_kernel_int(x: &BigInt) -> BigInt {
    if x.is_zero() {
        return BigInt::zero();
    }
    let sign: BigInt = if x.is_negative() { (-1).into() } else { 1.into() };
    let mut m = x.abs();
    let mut kernel = BigInt::one();
    let mut d = BigInt::from(2u32);
    let bound = BigInt::from(100_000u64);
    while &d * &d <= m && d <= bound {
        if (&m % &d).is_zero() {
            let mut e = 0u32;
            while (&m % &d).is_zero() {
                m /= &d;
                e += 1;
            }
            if e % 2 == 1 {
                kernel *= &d;
            }
        }
        d += 1u32;
    }
    if !m.is_one() {
        // Leftover cofactor with no factor ≤ 10⁵: strip it if it is a perfect
        // even power, keep the root if an odd power, otherwise treat it as
        // squarefree (true when it is prime or a product of distinct large
        // primes).
        if int_nth_root(&m, 2).is_some() {
            // m = r²: contributes nothing
        } else if let Some(r3) = int_nth_root(&m, 3) {
            kernel *= r3;
        } else {
            kernel *= &m;
        }
    }
    sign * kernel
}

/// Squarefree kernel of a nonzero rational: kernel of numerator·denominator
/// (`r` and `kernel(r)` differ by a rational square).
pub fn squarefree_kernel_rat(r: &Rat) -> BigInt {
    squarefree_kernel_int(&(r.numer() * r.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["3", "-7", "3/4", "-22/7", "0"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(rat_str(&r), s);
        }
        // normalization: sign moves to the numerator, fraction reduces
        assert_eq!(rat_str(&parse_rat("4/-6").unwrap()), "-2/3");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("a/b").is_err());
        assert!(parse_rat("1/2/3").is_err());
    }

    #[test]
    fn nth_roots() {
        assert_eq!(rat_nth_root(&rat_frac(4, 9), 2), Some(rat_frac(2, 3)));
        assert_eq!(rat_nth_root(&rat_frac(-8, 27), 3), Some(rat_frac(-2, 3)));
        assert_eq!(rat_nth_root(&rat(-4), 2), None);
        assert_eq!(rat_nth_root(&rat_frac(2, 3), 2), None);
        assert_eq!(rat_nth_root(&rat(1944810000u64), 4), Some(rat(210)));
    }

    #[test]
    fn squarefree_kernels() {
        assert_eq!(squarefree_kernel_int(&BigInt::from(128)), BigInt::from(2));
        assert_eq!(squarefree_kernel_int(&BigInt::from(320)), BigInt::from(5));
        assert_eq!(squarefree_kernel_int(&BigInt::from(-12)), BigInt::from(-3));
        assert_eq!(squarefree_kernel_int(&BigInt::from(1)), BigInt::from(1));
        assert_eq!(squarefree_kernel_int(&BigInt::from(0)), BigInt::from(0));
        // kernel of a rational is the kernel of numerator times denominator
        assert_eq!(squarefree_kernel_rat(&rat_frac(8, 3)), BigInt::from(6));
    }
}
