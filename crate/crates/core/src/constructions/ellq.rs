//! Elliptic curves over ℚ: long Weierstrass models, their invariants,
//! short models, quadratic twists, ℚ-isomorphism testing, exact point
//! arithmetic, and rational n-torsion detection for n ≤ 6.
//!
//! Torsion detection follows the classical route: the x-coordinates of
//! points of exact order n are the roots of the primitive n-division
//! polynomial of the short model y² = x³ + Ax + B,
//!
//!   n = 2: x³ + Ax + B
//!   n = 3: ψ₃ = 3x⁴ + 6Ax² + 12Bx − A²
//!   n = 4: g₄ = x⁶ + 5Ax⁴ + 20Bx³ − 5A²x² − 4ABx − 8B² − A³  (ψ₄ = 4y·g₄)
//!   n = 5: ψ₅ = 32f²g₄ − ψ₃³                                  (f = x³+Ax+B)
//!   n = 6: u₆ = ψ₅ − 4g₄²                                      (ψ₆ = 2y·ψ₃·u₆)
//!
//! and every rational root with a rational y-lift is confirmed by exact
//! chord-tangent arithmetic before an order is believed.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{CoreError, Result};
use crate::exactcore::poly::UniPoly;
use crate::exactcore::rational::{is_square_rat, rat, rat_nth_root, rat_sqrt, rat_str, Rat};

/// Elliptic curve y² + a₁xy + a₃y = x³ + a₂x² + a₄x + a₆ over ℚ.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EllipticCurveQ {
    pub a1: Rat,
    pub a2: Rat,
    pub a3: Rat,
    pub a4: Rat,
    pub a6: Rat,
}

/// Affine rational point; `None` is the point at infinity.
pub type EcPoint = Option<(Rat, Rat)>;

impl EllipticCurveQ {
    pub fn new(a1: Rat, a2: Rat, a3: Rat, a4: Rat, a6: Rat) -> Result<Self> {
        let e = EllipticCurveQ { a1, a2, a3, a4, a6 };
        if e.disc().is_zero() {
            return Err(CoreError::math("singular Weierstrass equation (Δ = 0)"));
        }
        Ok(e)
    }

    /// y² = x³ + Ax + B.
    pub fn from_short(a4: Rat, a6: Rat) -> Result<Self> {
        EllipticCurveQ::new(Rat::zero(), Rat::zero(), Rat::zero(), a4, a6)
    }

    pub fn b_invariants(&self) -> (Rat, Rat, Rat, Rat) {
        let b2 = &self.a1 * &self.a1 + rat(4) * &self.a2;
        let b4 = rat(2) * &self.a4 + &self.a1 * &self.a3;
        let b6 = &self.a3 * &self.a3 + rat(4) * &self.a6;
        let b8 = (&b2 * &b6 - &b4 * &b4) / rat(4);
        (b2, b4, b6, b8)
    }

    pub fn c4(&self) -> Rat {
        let (b2, b4, _, _) = self.b_invariants();
        &b2 * &b2 - rat(24) * b4
    }

    pub fn c6(&self) -> Rat {
        let (b2, b4, b6, _) = self.b_invariants();
        -(&b2 * &b2 * &b2) + rat(36) * b2 * b4 - rat(216) * b6
    }

    /// Δ = (c₄³ − c₆²)/1728.
    pub fn disc(&self) -> Rat {
        let c4 = self.c4();
        let c6 = self.c6();
        (&c4 * &c4 * &c4 - &c6 * &c6) / rat(1728)
    }

    /// The ℚ-isomorphic short model y² = x³ − 27c₄·x − 54c₆.
    pub fn short_model(&self) -> (Rat, Rat) {
        (rat(-27) * self.c4(), rat(-54) * self.c6())
    }

    /// Exact membership test.
    pub fn contains(&self, x: &Rat, y: &Rat) -> bool {
        y * y + &self.a1 * x * y + &self.a3 * y
            == x * x * x + &self.a2 * x * x + &self.a4 * x + &self.a6
    }

    /// −(x, y) = (x, −y − a₁x − a₃).
    pub fn neg(&self, p: &EcPoint) -> EcPoint {
        p.as_ref()
            .map(|(x, y)| (x.clone(), -y - &self.a1 * x - &self.a3))
    }

    /// Chord-tangent addition.
    pub fn add(&self, p: &EcPoint, q: &EcPoint) -> EcPoint {
        let (x1, y1) = match p {
            None => return q.clone(),
            Some(v) => v,
        };
        let (x2, y2) = match q {
            None => return p.clone(),
            Some(v) => v,
        };
        let lambda = if x1 == x2 {
            if self.neg(p).as_ref().map(|(_, y)| y) == Some(y2) {
                return None;
            }
            // Tangent: λ = (3x² + 2a₂x + a₄ − a₁y)/(2y + a₁x + a₃).
            (rat(3) * x1 * x1 + rat(2) * &self.a2 * x1 + &self.a4 - &self.a1 * y1)
                / (rat(2) * y1 + &self.a1 * x1 + &self.a3)
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let nu = y1 - &lambda * x1;
        let x3 = &lambda * &lambda + &self.a1 * &lambda - &self.a2 - x1 - x2;
        let y3 = -(&lambda + &self.a1) * &x3 - &nu - &self.a3;
        Some((x3, y3))
    }

    /// k·P by repeated addition (k small: torsion verification only).
    pub fn mul_small(&self, k: u32, p: &EcPoint) -> EcPoint {
        let mut acc: EcPoint = None;
        for _ in 0..k {
            acc = self.add(&acc, p);
        }
        acc
    }

    /// Exact order of P when it is at most `bound`.
    pub fn order_at_most(&self, p: &EcPoint, bound: u32) -> Option<u32> {
        let mut acc: EcPoint = None;
        for k in 1..=bound {
            acc = self.add(&acc, p);
            if acc.is_none() {
                return Some(k);
            }
        }
        None
    }
}

impl fmt::Display for EllipticCurveQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut lhs = String::from("y^2");
        if !self.a1.is_zero() {
            lhs += &format!(" + ({})*x*y", rat_str(&self.a1));
        }
        if !self.a3.is_zero() {
            lhs += &format!(" + ({})*y", rat_str(&self.a3));
        }
        let mut rhs = String::from("x^3");
        for (c, m) in [(&self.a2, "x^2"), (&self.a4, "x"), (&self.a6, "")] {
            if !c.is_zero() {
                let sep = if m.is_empty() { "" } else { "*" };
                rhs += &format!(" + ({}){}{}", rat_str(c), sep, m);
            }
        }
        write!(f, "{lhs} = {rhs}")
    }
}

/// j = c₄³/Δ.
pub fn ec_j_invariant(e: &EllipticCurveQ) -> Rat {
    let c4 = e.c4();
    &c4 * &c4 * &c4 / e.disc()
}

/// Quadratic twist by d ≠ 0, performed on the short model:
/// (A, B) ↦ (d²A, d³B).
pub fn ec_quadratic_twist(e: &EllipticCurveQ, d: &Rat) -> Result<EllipticCurveQ> {
    if d.is_zero() {
        return Err(CoreError::math("quadratic twist by 0"));
    }
    let (a, b) = e.short_model();
    EllipticCurveQ::from_short(d * d * a, d * d * d * b)
}

/// ℚ-isomorphism test: equal j-invariants and the connecting twist factor
/// u² a rational square (u⁴, u⁶ scalings of the short coefficients).
pub fn ec_isomorphic_q(e1: &EllipticCurveQ, e2: &EllipticCurveQ) -> bool {
    if ec_j_invariant(e1) != ec_j_invariant(e2) {
        return false;
    }
    let (a1, b1) = e1.short_model();
    let (a2, b2) = e2.short_model();
    if a1.is_zero() {
        // j = 0: need B₂/B₁ a sixth power.
        return rat_nth_root(&(&b2 / &b1), 6).is_some();
    }
    if b1.is_zero() {
        // j = 1728: need A₂/A₁ a fourth power.
        return rat_nth_root(&(&a2 / &a1), 4).is_some();
    }
    // Generic j: u² = A₁B₂/(A₂B₁) must be consistent and a square.
    let u2 = &a1 * &b2 / (&a2 * &b1);
    let u4 = &u2 * &u2;
    &u4 * &a1 == a2 && &u4 * &u2 * &b1 == b2 && is_square_rat(&u2)
}

/// x-part of the primitive n-division polynomial of y² = x³ + Ax + B.
fn primitive_division_poly(a: &Rat, b: &Rat, n: u32) -> UniPoly {
    let f = UniPoly::new(vec![b.clone(), a.clone(), Rat::zero(), Rat::one()]);
    let psi3 = UniPoly::new(vec![
        -(a * a),
        rat(12) * b,
        rat(6) * a,
        Rat::zero(),
        rat(3),
    ]);
    let g4 = UniPoly::new(vec![
        rat(-8) * b * b - a * a * a,
        rat(-4) * a * b,
        rat(-5) * a * a,
        rat(20) * b,
        rat(5) * a,
        Rat::zero(),
        Rat::one(),
    ]);
    match n {
        2 => f,
        3 => psi3,
        4 => g4,
        5 | 6 => {
            let f2 = &f * &f;
            let psi5 = &(&f2 * &g4).mul_scalar(&rat(32)) - &(&(&psi3 * &psi3) * &psi3);
            if n == 5 {
                psi5
            } else {
                &psi5 - &(&g4 * &g4).mul_scalar(&rat(4))
            }
        }
        _ => unreachable!("primitive_division_poly called with n outside 2..=6"),
    }
}

/// Does the curve have a rational point of exact order n (2 ≤ n ≤ 6)?
///
/// Candidates come from the rational roots of the primitive division
/// polynomial on the short model; each lift with rational y is confirmed
/// by exact repeated addition before being counted.
pub fn has_rational_n_torsion(e: &EllipticCurveQ, n: u32) -> Result<bool> {
    if !(2..=6).contains(&n) {
        return Err(CoreError::math(format!(
            "torsion order n = {n} out of the supported range 2..6"
        )));
    }
    let (a, b) = e.short_model();
    let short = EllipticCurveQ::from_short(a.clone(), b.clone())?;
    let poly = primitive_division_poly(&a, &b, n);
    for x0 in poly.rational_roots()? {
        let fx = x0.clone() * &x0 * &x0 + &a * &x0 + &b;
        let Some(y0) = rat_sqrt(&fx) else { continue };
        let p = Some((x0, y0));
        if short.order_at_most(&p, n) == Some(n) {
            return Ok(true);
        }
    }
    Ok(false)
}
