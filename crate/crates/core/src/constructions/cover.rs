//! Degree-3 covers from a genus-2 curve C: y² = f(x) to an elliptic curve.
//!
//! A cover is given by x₁ = xn(x)/xd(x) and y₁ = yn(x)·y/yd(x); it lands on
//! the target curve exactly when substituting into the target Weierstrass
//! equation and reducing y² ↦ f(x) kills both the y-free part and the
//! y-linear part. With the target y₁² + a₁x₁y₁ + a₃y₁ = x₁³ + a₂x₁² + a₄x₁
//! + a₆ the two cleared residues are
//!
//!   even: yn²·f·xd³ − yd²·(xn³ + a₂xn²xd + a₄xn·xd² + a₆xd³)
//!   odd:  yn·(a₁xn + a₃xd)
//!
//! and the degree of a verified cover is max(deg xn, deg xd).

use crate::error::{CoreError, Result};
use crate::exactcore::poly::UniPoly;
use crate::genus2::Genus2Curve;

use super::ellq::EllipticCurveQ;

/// A map (x, y) ↦ (xn/xd, yn·y/yd) with polynomial components in x,
/// stored in lowest terms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoverMap {
    pub x_num: UniPoly,
    pub x_den: UniPoly,
    pub y_num: UniPoly,
    pub y_den: UniPoly,
}

impl CoverMap {
    /// Reduces both components to lowest terms; zero denominators (or a
    /// zero x-numerator-and-denominator pair) are rejected.
    pub fn new(x_num: UniPoly, x_den: UniPoly, y_num: UniPoly, y_den: UniPoly) -> Result<Self> {
        if x_den.is_zero() || y_den.is_zero() {
            return Err(CoreError::math("cover map with zero denominator"));
        }
        if x_num.is_zero() {
            return Err(CoreError::math("cover map with identically zero x-component"));
        }
        let reduce = |num: UniPoly, den: UniPoly| -> (UniPoly, UniPoly) {
            let g = num.gcd(&den);
            match (num.exact_div(&g), den.exact_div(&g)) {
                (Some(n), Some(d)) => (n, d),
                _ => (num, den),
            }
        };
        let (x_num, x_den) = reduce(x_num, x_den);
        let (y_num, y_den) = reduce(y_num, y_den);
        Ok(CoverMap { x_num, x_den, y_num, y_den })
    }

    /// max(deg xn, deg xd): the degree of the induced map on x-lines, and
    /// of the cover itself when it verifies.
    pub fn degree(&self) -> u32 {
        let dn = self.x_num.degree().unwrap_or(0);
        let dd = self.x_den.degree().unwrap_or(0);
        dn.max(dd) as u32
    }
}

/// Outcome of an exact cover verification.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CoverReport {
    /// Both residues vanish identically; the map is a cover of this degree.
    Verified { degree: u32 },
    /// The first nonvanishing residue polynomial.
    Failed { residue: UniPoly },
}

/// Substitute the map into the target equation over ℚ(x)[y]/(y² − f) and
/// demand exact vanishing.
pub fn verify_cover(c: &Genus2Curve, e: &EllipticCurveQ, m: &CoverMap) -> CoverReport {
    let f = c.f();
    let (xn, xd, yn, yd) = (&m.x_num, &m.x_den, &m.y_num, &m.y_den);
    let xd2 = xd * xd;
    let xd3 = &xd2 * xd;
    let xn2 = xn * xn;
    let cubic = &(&xn2 * xn) + &(&xn2 * xd).mul_scalar(&e.a2);
    let linear = &(xn * &xd2).mul_scalar(&e.a4) + &xd3.mul_scalar(&e.a6);
    let even = &(&(&(yn * yn) * f) * &xd3) - &(&(yd * yd) * &(&cubic + &linear));
    if !even.is_zero() {
        return CoverReport::Failed { residue: even };
    }
    let odd = yn * &(&xn.mul_scalar(&e.a1) + &xd.mul_scalar(&e.a3));
    if !odd.is_zero() {
        return CoverReport::Failed { residue: odd };
    }
    CoverReport::Verified { degree: m.degree() }
}
