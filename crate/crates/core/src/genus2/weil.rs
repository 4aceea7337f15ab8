//! Weil polynomials of genus-2 Jacobians over 𝔽_p.
//!
//! The characteristic polynomial of Frobenius on a genus-2 Jacobian is
//!   P(x) = x⁴ − a₁x³ + a₂x² − p·a₁·x + p²,
//! where the reciprocity x⁴·P(p/x) = p²·P(x) is built into the shape and
//! a₁, a₂ are determined by the point counts of the curve:
//!   N₁ = p + 1 − a₁,   N₂ = p² + 1 − (a₁² − 2a₂).
//! The real Weil polynomial x² − a₁x + (a₂ − 2p) is the characteristic
//! polynomial of α + p/α; its splitting field is the real quadratic
//! subfield of ℚ[x]/P.

use num_bigint::BigInt;

use crate::error::{CoreError, Result};
use crate::exactcore::poly::UniPoly;
use crate::exactcore::rational::squarefree_kernel_int;

use super::counting::{count_points_fp, count_points_fp2};
use super::curve::Genus2Curve;

/// x⁴ − a₁x³ + a₂x² − p·a₁·x + p², stored by its free parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeilPolynomial {
    pub p: u64,
    pub a1: i64,
    pub a2: i64,
}

impl WeilPolynomial {
    pub fn charpoly(&self) -> UniPoly {
        let p = self.p as i64;
        UniPoly::from_ints(&[p * p, -p * self.a1, self.a2, -self.a1, 1])
    }

    pub fn n1(&self) -> i64 {
        self.p as i64 + 1 - self.a1
    }

    pub fn n2(&self) -> i64 {
        let p2 = (self.p * self.p) as i64;
        p2 + 1 - (self.a1 * self.a1 - 2 * self.a2)
    }
}

impl std::fmt::Display for WeilPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.charpoly().to_string_var("x"))
    }
}

/// Characteristic polynomial of Frob_p on J(C), from the exact point
/// counts over 𝔽_p and 𝔽_{p²}.
pub fn frobenius_charpoly(curve: &Genus2Curve, p: u64) -> Result<WeilPolynomial> {
    let n1 = count_points_fp(curve, p)? as i64;
    let n2 = count_points_fp2(curve, p)? as i64;
    let a1 = p as i64 + 1 - n1;
    let t2 = (p * p) as i64 + 1 - n2;
    if (a1 * a1 - t2) % 2 != 0 {
        return Err(CoreError::internal(
            "point counts inconsistent with a Weil polynomial",
        ));
    }
    let a2 = (a1 * a1 - t2) / 2;
    Ok(WeilPolynomial { p, a1, a2 })
}

/// Real Weil polynomial x² − a₁x + (a₂ − 2p) together with the squarefree
/// kernel of its discriminant a₁² − 4a₂ + 8p (0 when the discriminant
/// vanishes); ℚ(√kernel) is the real quadratic subfield of ℚ[x]/P when P
/// is irreducible.
pub fn real_weil_quadratic(w: &WeilPolynomial) -> (UniPoly, BigInt) {
    let q = UniPoly::from_ints(&[w.a2 - 2 * w.p as i64, -w.a1, 1]);
    let disc = w.a1 * w.a1 - 4 * w.a2 + 8 * w.p as i64;
    (q, squarefree_kernel_int(&BigInt::from(disc)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::{rat, rat_frac, Rat};
    use num_traits::One;

    fn example43_curve() -> Genus2Curve {
        // y² = x(x−1)(x+1)(x−1/7)(x+6/7)
        let mut f = UniPoly::var();
        for r in [rat(1), rat(-1), rat_frac(1, 7), rat_frac(-6, 7)] {
            f = &f * &UniPoly::new(vec![-r, Rat::one()]);
        }
        Genus2Curve::new(f).unwrap()
    }

    #[test]
    fn frobenius_at_37_and_41() {
        let c = example43_curve();
        let w37 = frobenius_charpoly(&c, 37).unwrap();
        assert_eq!(w37, WeilPolynomial { p: 37, a1: 4, a2: 46 });
        assert_eq!(
            w37.charpoly(),
            UniPoly::from_ints(&[1369, -148, 46, -4, 1])
        );
        assert_eq!(w37.n1(), 34);
        assert_eq!(w37.n2(), 1446);

        let w41 = frobenius_charpoly(&c, 41).unwrap();
        assert_eq!(w41, WeilPolynomial { p: 41, a1: -4, a2: 6 });
        assert_eq!(
            w41.charpoly(),
            UniPoly::from_ints(&[1681, 164, 6, 4, 1])
        );
    }

    #[test]
    fn weil_reciprocity_and_hasse_bound() {
        let c = example43_curve();
        // 3 and 13 are bad: 1/7 collides with another root there
        for p in [5u64, 11, 17, 19, 37, 41] {
            let w = frobenius_charpoly(&c, p).unwrap();
            // x⁴·P(p/x) = p²·P(x)
            let cp = w.charpoly();
            let coeffs = cp.coeffs();
            // coefficient of x^j in x⁴·P(p/x) is c₍₄₋ⱼ₎·p^(4−j)
            let mut rev = Vec::new();
            for (i, cf) in coeffs.iter().enumerate().rev() {
                rev.push(cf * rat(p as i64).pow(i as i32));
            }
            let lhs = UniPoly::new(rev);
            let rhs = cp.mul_scalar(&rat((p * p) as i64));
            assert_eq!(lhs, rhs);
            // |a1| ≤ 4·⌊√p⌋ + 4 and N1 ≥ 1
            let isqrt = (p as f64).sqrt() as i64;
            assert!(w.a1.abs() <= 4 * isqrt + 4);
            assert!(w.n1() >= 1);
        }
    }

    #[test]
    fn quintic_with_many_automorphisms() {
        // y² = x⁵ + 1 over 𝔽₃: N₁ = 4 forces a₁ = 0
        let c = Genus2Curve::new(UniPoly::from_ints(&[1, 0, 0, 0, 0, 1])).unwrap();
        let w = frobenius_charpoly(&c, 3).unwrap();
        assert_eq!(w.a1, 0);
        assert_eq!(w.n1(), 4);
        assert_eq!(w.n2(), count_points_fp2(&c, 3).unwrap() as i64);
    }

    #[test]
    fn real_quadratics_of_the_printed_charpolys() {
        let (q37, k37) = real_weil_quadratic(&WeilPolynomial { p: 37, a1: 4, a2: 46 });
        assert_eq!(q37, UniPoly::from_ints(&[-28, -4, 1]));
        assert_eq!(k37, BigInt::from(2)); // discriminant 128 = 2⁷
        let (q41, k41) = real_weil_quadratic(&WeilPolynomial { p: 41, a1: -4, a2: 6 });
        assert_eq!(q41, UniPoly::from_ints(&[-76, 4, 1]));
        assert_eq!(k41, BigInt::from(5)); // discriminant 320 = 2⁶·5
        // degenerate: a1 = 0, a2 = 2p gives x² with kernel 0
        let (q, k) = real_weil_quadratic(&WeilPolynomial { p: 5, a1: 0, a2: 10 });
        assert_eq!(q, UniPoly::from_ints(&[0, 0, 1]));
        assert_eq!(k, BigInt::from(0));
    }
}
