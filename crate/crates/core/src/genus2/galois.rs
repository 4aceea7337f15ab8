//! Galois groups of rational quartics, for the simplicity and
//! endomorphism-field analysis of Frobenius characteristic polynomials.
//!
//! For an irreducible monic quartic x⁴ + bx³ + cx² + dx + e the group is
//! read off from the resolvent cubic
//!   R(y) = y³ − c·y² + (bd − 4e)·y − (b²e − 4ce + d²),
//! whose roots are the three pairings rᵢrⱼ + rₖrₗ of the quartic's roots
//! and whose discriminant equals the quartic's discriminant D:
//!   * three rational roots → V4,
//!   * no rational root → A4 if D is a square, S4 otherwise,
//!   * one rational root β → C4 if both x² − βx + e and x² + bx + (c − β)
//!     split over ℚ(√D), D4 otherwise (Kappe–Warren criterion; a
//!     quadratic with discriminant δ splits there iff δ = 0 or δ or δD is
//!     a square).
//! Reducibility is decided exactly first: rational roots, then an
//! exhaustive search for monic integer quadratic factors driven by the
//! divisors of the constant term.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{CoreError, Result};
use crate::exactcore::poly::UniPoly;
use crate::exactcore::primefield::{is_prime_u64, FpPoly};
use crate::exactcore::rational::{int_nth_root, is_square_rat, rat, Rat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GaloisGroup {
    Reducible,
    C4,
    V4,
    D4,
    A4,
    S4,
}

impl GaloisGroup {
    pub fn name(self) -> &'static str {
        match self {
            GaloisGroup::Reducible => "reducible",
            GaloisGroup::C4 => "C4",
            GaloisGroup::V4 => "V4",
            GaloisGroup::D4 => "D4",
            GaloisGroup::A4 => "A4",
            GaloisGroup::S4 => "S4",
        }
    }
}

impl std::fmt::Display for GaloisGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Exact Galois group of the splitting field of a degree-4 polynomial
/// over ℚ (the leading coefficient is irrelevant and may be any nonzero
/// rational).
pub fn quartic_galois_group(q: &UniPoly) -> Result<GaloisGroup> {
    if q.degree() != Some(4) {
        return Err(CoreError::math(format!(
            "Galois classification needs a quartic, got degree {:?}",
            q.degree()
        )));
    }
    let (b, c, d, e) = monic_integral_model(q);

    if !q.rational_roots()?.is_empty() {
        return Ok(GaloisGroup::Reducible);
    }
    if has_quadratic_factor(&b, &c, &d, &e)? {
        return Ok(GaloisGroup::Reducible);
    }

    // y³ − c·y² + (bd − 4e)·y − (b²e − 4ce + d²)
    let r1 = &(&b * &d) - &(&e * &BigInt::from(4));
    let r0 = &(&(&(&b * &b) * &e) - &(&(&c * &e) * &BigInt::from(4))) + &(&d * &d);
    let resolvent = UniPoly::new(vec![
        Rat::from_integer(-r0.clone()),
        Rat::from_integer(r1.clone()),
        Rat::from_integer(-c.clone()),
        Rat::one(),
    ]);
    // an irreducible quartic is separable, so the resolvent is too and
    // the root list below has no repeats
    let roots = resolvent.rational_roots()?;
    let disc = cubic_discriminant(&resolvent);

    match roots.len() {
        3 => Ok(GaloisGroup::V4),
        0 => {
            if is_square_rat(&disc) {
                Ok(GaloisGroup::A4)
            } else {
                Ok(GaloisGroup::S4)
            }
        }
        1 => {
            let beta = &roots[0];
            // x² − βx + e and x² + bx + (c − β)
            let d1 = beta * beta - rat(4) * Rat::from_integer(e.clone());
            let d2 = Rat::from_integer(&b * &b)
                - rat(4) * (Rat::from_integer(c.clone()) - beta);
            let splits = |delta: &Rat| {
                delta.is_zero() || is_square_rat(delta) || is_square_rat(&(delta * &disc))
            };
            if splits(&d1) && splits(&d2) {
                Ok(GaloisGroup::C4)
            } else {
                Ok(GaloisGroup::D4)
            }
        }
        _ => Err(CoreError::internal(
            "cubic with exactly two rational roots",
        )),
    }
}

/// Rewrites a quartic as the monic integral X⁴ + bX³ + cX² + dX + e with
/// the same splitting field, via x = X/s for s the lcm of the monic
/// model's coefficient denominators.
fn monic_integral_model(q: &UniPoly) -> (BigInt, BigInt, BigInt, BigInt) {
    let monic = q.monic();
    let mut s = BigInt::one();
    for c in monic.coeffs() {
        s = s.lcm(c.denom());
    }
    let coef = |i: usize, k: u32| {
        let scaled = monic.coeff(i) * Rat::from_integer(num_traits::pow::pow(s.clone(), k as usize));
        debug_assert!(scaled.is_integer());
        scaled.numer().clone()
    };
    (coef(3, 1), coef(2, 2), coef(1, 3), coef(0, 4))
}

/// Decides whether X⁴ + bX³ + cX² + dX + e (integral, no rational roots)
/// factors into two monic integer quadratics (X² + αX + β)(X² + γX + δ):
/// β runs over divisors of e, then α + γ = b, αγ = c − β − δ pin α, γ up
/// to a square-discriminant test, checked against αδ + βγ = d.
fn has_quadratic_factor(b: &BigInt, c: &BigInt, d: &BigInt, e: &BigInt) -> Result<bool> {
    // no rational roots ⟹ e ≠ 0
    debug_assert!(!e.is_zero());
    for beta in integer_divisors(e)? {
        for beta in [beta.clone(), -beta] {
            let delta = e / &beta;
            // α, γ are roots of z² − bz + (c − β − δ)
            let prod = c - &beta - &delta;
            let disc = b * b - BigInt::from(4) * &prod;
            let Some(sq) = int_nth_root(&disc, 2) else {
                continue;
            };
            if (b + &sq).is_odd() {
                continue;
            }
            for alpha in [(b + &sq) / 2, (b - &sq) / 2] {
                let gamma = b - &alpha;
                if &alpha * &delta + &beta * &gamma == *d {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// Positive divisors of n ≠ 0. Factors by trial division up to 10⁶; a
/// leftover must be prime or a prime power detectable by integer roots,
/// otherwise the (never observed) NeedsFactorization error is raised.
fn integer_divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let mut m = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let push = |p: BigInt, k: u32, primes: &mut Vec<(BigInt, u32)>| {
        if let Some(entry) = primes.iter_mut().find(|(q, _)| *q == p) {
            entry.1 += k;
        } else {
            primes.push((p, k));
        }
    };
    let mut d = BigInt::from(2);
    let bound = BigInt::from(1_000_000u64);
    while &d * &d <= m && d <= bound {
        if (&m % &d).is_zero() {
            let mut k = 0;
            while (&m % &d).is_zero() {
                m /= &d;
                k += 1;
            }
            push(d.clone(), k, &mut primes);
        }
        d += 1u32;
    }
    if !m.is_one() {
        let mut handled = false;
        // leftover below bound² is prime; larger leftovers are accepted
        // when they are p or p^k for a provable prime p
        for k in (1..=4u32).rev() {
            if let Some(r) = int_nth_root(&m, k) {
                if r.to_u64().map(is_prime_u64) == Some(true) {
                    push(r, k, &mut primes);
                    handled = true;
                    break;
                }
            }
        }
        if !handled {
            if m <= &bound * &bound {
                push(m.clone(), 1, &mut primes);
            } else {
                return Err(CoreError::NeedsFactorization(format!(
                    "cannot factor constant term part {m}"
                )));
            }
        }
    }
    let mut divisors = vec![BigInt::one()];
    for (p, k) in primes {
        let mut next = Vec::new();
        for old in &divisors {
            let mut pw = BigInt::one();
            for _ in 0..=k {
                next.push(old * &pw);
                pw *= &p;
            }
        }
        divisors = next;
    }
    Ok(divisors)
}

/// Discriminant 18ABC − 4A³C + A²B² − 4B³ − 27C² of y³ + Ay² + By + C.
fn cubic_discriminant(q: &UniPoly) -> Rat {
    debug_assert_eq!(q.degree(), Some(3));
    debug_assert!(q.lc().is_one());
    let (a, b, c) = (q.coeff(2), q.coeff(1), q.coeff(0));
    rat(18) * &a * &b * &c - rat(4) * &a * &a * &a * &c + &a * &a * &b * &b
        - rat(4) * &b * &b * &b
        - rat(27) * &c * &c
}

/// Degrees of the irreducible factors of q mod p, ascending (distinct-
/// degree factorization). None when q mod p is not squarefree of full
/// degree, so patterns are only reported at primes of good reduction of
/// the polynomial.
pub(crate) fn factorization_pattern_mod(q: &UniPoly, p: u64) -> Option<Vec<u32>> {
    let deg = q.degree()?;
    let mut coeffs = Vec::new();
    for c in q.coeffs() {
        let den = crate::exactcore::poly::bigint_mod_u64(c.denom(), p);
        if den == 0 {
            return None;
        }
        let num = crate::exactcore::poly::bigint_mod_u64(c.numer(), p);
        coeffs.push(crate::exactcore::primefield::mulm(
            num,
            crate::exactcore::primefield::invm(den, p),
            p,
        ));
    }
    let f = FpPoly::new(p, coeffs).monic();
    if f.degree() != Some(deg) || f.gcd(&f.derivative()).degree() != Some(0) {
        return None;
    }
    let mut pattern = Vec::new();
    let mut rest = f;
    let mut d = 0u32;
    while rest.degree() > Some(0) {
        d += 1;
        // gcd(rest, x^(p^d) − x) collects the factors of degree d
        let pd = num_bigint::BigUint::from(p).pow(d);
        let frob = FpPoly::x(p).pow_mod(&pd, &rest);
        let diff = frob.sub(&FpPoly::x(p));
        let g = rest.gcd(&diff);
        if let Some(gd) = g.degree() {
            if gd > 0 {
                for _ in 0..(gd as u32 / d) {
                    pattern.push(d);
                }
                rest = rest.divrem(&g).0;
            }
        }
    }
    Some(pattern)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quartic(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_ints(coeffs)
    }

    #[test]
    fn textbook_groups() {
        assert_eq!(
            quartic_galois_group(&quartic(&[-2, 0, 0, 0, 1])).unwrap(),
            GaloisGroup::D4
        );
        assert_eq!(
            quartic_galois_group(&quartic(&[1, 0, 0, 0, 1])).unwrap(),
            GaloisGroup::V4
        );
        // Φ₅ is cyclic
        assert_eq!(
            quartic_galois_group(&quartic(&[1, 1, 1, 1, 1])).unwrap(),
            GaloisGroup::C4
        );
        assert_eq!(
            quartic_galois_group(&quartic(&[12, 8, 0, 0, 1])).unwrap(),
            GaloisGroup::A4
        );
        assert_eq!(
            quartic_galois_group(&quartic(&[1, 1, 0, 0, 1])).unwrap(),
            GaloisGroup::S4
        );
    }

    #[test]
    fn reducible_quartics() {
        // (x−2)(x³+1): rational root
        assert_eq!(
            quartic_galois_group(&quartic(&[-2, 1, 0, -2, 1])).unwrap(),
            GaloisGroup::Reducible
        );
        // (x²+1)(x²+2): no rational roots
        assert_eq!(
            quartic_galois_group(&quartic(&[2, 0, 3, 0, 1])).unwrap(),
            GaloisGroup::Reducible
        );
        // (x²−x+3)(x²+x+4) = x⁴ + 6x² − x + 12
        assert_eq!(
            quartic_galois_group(&quartic(&[12, -1, 6, 0, 1])).unwrap(),
            GaloisGroup::Reducible
        );
        // non-monic and non-integral input is normalized first
        let q = quartic(&[2, 0, 3, 0, 1]).mul_scalar(&crate::exactcore::rational::rat_frac(3, 7));
        assert_eq!(quartic_galois_group(&q).unwrap(), GaloisGroup::Reducible);
        // degree guard
        assert!(quartic_galois_group(&quartic(&[1, 1, 1])).is_err());
    }

    #[test]
    fn frobenius_charpolys_of_the_lemma() {
        let p37 = quartic(&[1369, -148, 46, -4, 1]);
        assert_eq!(quartic_galois_group(&p37).unwrap(), GaloisGroup::D4);
        let p41 = quartic(&[1681, 164, 6, 4, 1]);
        assert_eq!(quartic_galois_group(&p41).unwrap(), GaloisGroup::C4);
    }

    #[test]
    fn biquadratic_c4_fields() {
        // x⁴ − 4x² + 2 is the minimal polynomial of √(2+√2), i.e. of
        // ℚ(ζ₁₆)⁺: resolvent roots {−4, ±2√2}, and the Kappe–Warren test
        // needs the δ·D square branch (δ = 8, D = 2048)
        assert_eq!(
            quartic_galois_group(&quartic(&[2, 0, -4, 0, 1])).unwrap(),
            GaloisGroup::C4
        );
        // x⁴ + 4x² + 2: totally imaginary but still cyclic
        // (biquadratic x⁴+ax²+b is C4 iff b(a²−4b) is a square: 2·8 = 16)
        assert_eq!(
            quartic_galois_group(&quartic(&[2, 0, 4, 0, 1])).unwrap(),
            GaloisGroup::C4
        );
    }

    #[test]
    fn factorization_patterns() {
        // x⁴+1 factors into two quadratics mod every odd prime
        let q = quartic(&[1, 0, 0, 0, 1]);
        assert_eq!(factorization_pattern_mod(&q, 3).unwrap(), vec![2, 2]);
        assert_eq!(factorization_pattern_mod(&q, 7).unwrap(), vec![2, 2]);
        assert_eq!(factorization_pattern_mod(&q, 17).unwrap(), vec![1, 1, 1, 1]);
        // x⁴+x+1 is irreducible mod 2… but 2 ∤ disc? disc = 229, odd ⟶ usable
        let q = quartic(&[1, 1, 0, 0, 1]);
        assert_eq!(factorization_pattern_mod(&q, 2).unwrap(), vec![4]);
        // bad prime rejected: x⁴+1 ≡ (x+1)⁴ mod 2
        assert_eq!(factorization_pattern_mod(&quartic(&[1, 0, 0, 0, 1]), 2), None);
    }

    #[test]
    fn divisor_enumeration() {
        let divs = integer_divisors(&BigInt::from(12)).unwrap();
        let mut sorted = divs.clone();
        sorted.sort();
        assert_eq!(
            sorted,
            [1, 2, 3, 4, 6, 12].map(BigInt::from).to_vec()
        );
        // 1369 = 37²: divisor structure via the perfect-square path
        let divs = integer_divisors(&BigInt::from(1369)).unwrap();
        assert_eq!(divs.len(), 3);
        // large prime square beyond trial division: (10⁹+7)²
        let p = BigInt::from(1_000_000_007u64);
        let divs = integer_divisors(&(&p * &p)).unwrap();
        assert_eq!(divs.len(), 3);
        assert!(divs.contains(&p));
    }
}
