//! Rational functions in one variable over ℚ.
//!
//! Stored reduced (coprime numerator and denominator) with monic
//! denominator, so structural equality is mathematical equality.
//! Substitutions t ↦ λ·tⁿ with n ∈ ℤ∖{0} cover base changes and the
//! coordinate moves used when matching fibrations; valuations at finite
//! places and at t = ∞ feed the fiber classifier.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::UniPoly;
use super::rational::Rat;
use crate::error::{CoreError, Result};

/// Element of ℚ(t); see the module docs for the canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    /// Build and reduce; the denominator must be nonzero.
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(CoreError::math("zero denominator in rational function"));
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: UniPoly, den: UniPoly) -> Self {
        if num.is_zero() {
            return RationalFunction { num, den: UniPoly::one() };
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g).expect("gcd divides");
        let mut den = den.exact_div(&g).expect("gcd divides");
        let lc = den.lc();
        if !lc.is_one() {
            let inv = Rat::one() / lc;
            num = num.mul_scalar(&inv);
            den = den.mul_scalar(&inv);
        }
        RationalFunction { num, den }
    }

    pub fn zero() -> Self {
        RationalFunction { num: UniPoly::zero(), den: UniPoly::one() }
    }

    pub fn one() -> Self {
        RationalFunction { num: UniPoly::one(), den: UniPoly::one() }
    }

    pub fn constant(c: Rat) -> Self {
        RationalFunction { num: UniPoly::constant(c), den: UniPoly::one() }
    }

    /// The coordinate t itself.
    pub fn var() -> Self {
        RationalFunction { num: UniPoly::var(), den: UniPoly::one() }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RationalFunction { num: p, den: UniPoly::one() }
    }

    /// c·tᵏ for k ∈ ℤ.
    pub fn monomial(c: Rat, k: i64) -> Self {
        if k >= 0 {
            RationalFunction::from_poly(UniPoly::monomial(k as usize, c))
        } else {
            RationalFunction {
                num: UniPoly::constant(c),
                den: UniPoly::monomial((-k) as usize, Rat::one()),
            }
        }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    /// As a rational number, if constant.
    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// As a polynomial, if the denominator is 1.
    pub fn as_poly(&self) -> Option<&UniPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn reciprocal(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(CoreError::math("reciprocal of zero"));
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return Ok(self.reciprocal()?.pow(-e).expect("nonnegative"));
        }
        Ok(RationalFunction {
            num: self.num.pow(e as u32),
            den: self.den.pow(e as u32),
        })
    }

    /// Evaluate at a point; `None` at poles.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x) / d)
    }

    /// Substitute t ↦ λ·tⁿ, n ∈ ℤ∖{0}, λ ≠ 0.
    pub fn substitute(&self, lambda: &Rat, n: i64) -> Result<Self> {
        if n == 0 || lambda.is_zero() {
            return Err(CoreError::math("substitution t -> λ·t^n needs n ≠ 0, λ ≠ 0"));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let m = n.unsigned_abs() as usize;
        if n > 0 {
            let num = self.num.scale_var(lambda).stretch(m);
            let den = self.den.scale_var(lambda).stretch(m);
            Ok(Self::reduced(num, den))
        } else {
            // p(λ/s) = s^(−deg p)·rev(p(λ·s)); equalize the powers of s,
            // then stretch s = t^m.
            let qn = self.num.scale_var(lambda).reversed();
            let qd = self.den.scale_var(lambda).reversed();
            let dn = self.num.degree().unwrap();
            let dd = self.den.degree().unwrap();
            let (mut num, mut den) = (qn, qd);
            if dd >= dn {
                num = &num * &UniPoly::monomial(dd - dn, Rat::one());
            } else {
                den = &den * &UniPoly::monomial(dn - dd, Rat::one());
            }
            Ok(Self::reduced(num.stretch(m), den.stretch(m)))
        }
    }

    /// Exact n-th root in ℚ(t), if one exists, normalized with positive
    /// leading numerator coefficient when n is even.
    pub fn nth_root_exact(&self, n: u32) -> Option<Self> {
        let num = self.num.nth_root_exact(n)?;
        let den = self.den.nth_root_exact(n)?;
        Some(RationalFunction::reduced(num, den))
    }

    pub fn sqrt_exact(&self) -> Option<Self> {
        self.nth_root_exact(2)
    }

    /// Order of vanishing at t = α (negative at poles). Zero input is
    /// rejected, as its valuation is +∞.
    pub fn valuation_at(&self, alpha: &Rat) -> Result<i64> {
        let lin = UniPoly::new(vec![-alpha.clone(), Rat::one()]);
        self.valuation_at_poly(&lin)
    }

    /// Valuation with respect to a nonconstant polynomial place
    /// (multiplicity of `q` in num minus in den).
    pub fn valuation_at_poly(&self, q: &UniPoly) -> Result<i64> {
        if self.is_zero() {
            return Err(CoreError::math("valuation of zero function"));
        }
        let (vn, _) = self.num.strip_factor(q);
        let (vd, _) = self.den.strip_factor(q);
        Ok(vn as i64 - vd as i64)
    }

    /// Order of vanishing at t = ∞: deg den − deg num. Zero is rejected.
    pub fn valuation_at_infinity(&self) -> Result<i64> {
        if self.is_zero() {
            return Err(CoreError::math("valuation of zero function"));
        }
        Ok(self.den.degree().unwrap() as i64 - self.num.degree().unwrap() as i64)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num.to_string_var("t"))
        } else {
            write!(
                f,
                "({}) / ({})",
                self.num.to_string_var("t"),
                self.den.to_string_var("t")
            )
        }
    }
}

impl From<Rat> for RationalFunction {
    fn from(c: Rat) -> Self {
        RationalFunction::constant(c)
    }
}

impl From<UniPoly> for RationalFunction {
    fn from(p: UniPoly) -> Self {
        RationalFunction::from_poly(p)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFunction::reduced(num, &self.den * &rhs.den)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        RationalFunction::reduced(num, &self.den * &rhs.den)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RationalFunction::reduced(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::{rat, rat_frac};

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_ints(coeffs)
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn reduction_and_normalization() {
        // (t² − 1)/(2t − 2) = (t + 1)/2 with monic denominator
        let f = rf(&[-1, 0, 1], &[-2, 2]);
        assert_eq!(f.num(), &p(&[1, 1]).mul_scalar(&rat_frac(1, 2)));
        assert!(f.den().is_one());
        assert!(RationalFunction::new(p(&[1]), p(&[])).is_err());
        assert_eq!(rf(&[0], &[1, 1]), RationalFunction::zero());
    }

    #[test]
    fn arithmetic() {
        // 1/t + 1/t² = (t + 1)/t²
        let a = rf(&[1], &[0, 1]);
        let b = rf(&[1], &[0, 0, 1]);
        assert_eq!(&a + &b, rf(&[1, 1], &[0, 0, 1]));
        assert_eq!(&(&a * &a) - &b, RationalFunction::zero());
        assert_eq!(&a / &b, RationalFunction::var());
        assert_eq!(a.pow(-2).unwrap(), rf(&[0, 0, 1], &[1]));
    }

    #[test]
    fn substitution() {
        // t ↦ 2/t on f = t gives 2/t
        let t = RationalFunction::var();
        assert_eq!(t.substitute(&rat(2), -1).unwrap(), rf(&[2], &[0, 1]));
        // (t² + 1)/t under t ↦ 3t² gives (9t⁴ + 1)/(3t²)
        let f = rf(&[1, 0, 1], &[0, 1]);
        let g = f.substitute(&rat(3), 2).unwrap();
        assert_eq!(
            g,
            RationalFunction::new(p(&[1, 0, 0, 0, 9]), p(&[0, 0, 3])).unwrap()
        );
        // substituting t ↦ 1/t twice is the identity
        let back = g.substitute(&rat(1), -1).unwrap();
        assert_eq!(back, f.substitute(&rat(3), -2).unwrap());
    }

    #[test]
    fn valuations() {
        // f = t³(t − 1)/(t + 2)²
        let num = &p(&[0, 0, 0, 1]) * &p(&[-1, 1]);
        let f = RationalFunction::new(num, &p(&[2, 1]) * &p(&[2, 1])).unwrap();
        assert_eq!(f.valuation_at(&rat(0)).unwrap(), 3);
        assert_eq!(f.valuation_at(&rat(1)).unwrap(), 1);
        assert_eq!(f.valuation_at(&rat(-2)).unwrap(), -2);
        assert_eq!(f.valuation_at(&rat(5)).unwrap(), 0);
        assert_eq!(f.valuation_at_infinity().unwrap(), -2);
        // pole order at a quadratic place
        let g = RationalFunction::new(p(&[1]), p(&[1, 0, 1])).unwrap();
        assert_eq!(g.valuation_at_poly(&p(&[1, 0, 1])).unwrap(), -1);
    }

    #[test]
    fn eval_and_poles() {
        let f = rf(&[1, 1], &[-1, 1]);
        assert_eq!(f.eval(&rat(2)), Some(rat(3)));
        assert_eq!(f.eval(&rat(1)), None);
    }
}
