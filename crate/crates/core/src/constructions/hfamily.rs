//! The two-IV* fibration on the Kummer surface of J(C) for
//! C: y² = x(x−1)(x−a)(x−b)(x−c), its Jacobian Weierstrass model
//!
//!   Y² = X³ + A·X² + (B₁T + B₂ + B₃/T)·X + (C₁T + C₂/T)²,
//!
//! and the base-change family H⁽ⁿ⁾ obtained by T ↦ tⁿ, a K3 surface for
//! n ≤ 3 with singular fibers (for general parameters)
//!
//!   n = 1: 2·IV* + 8·I₁       rank 2 + ρ
//!   n = 2: 2·IV + 16·I₁       rank 10 + ρ
//!   n = 3: 24·I₁              rank 14 + ρ
//!
//! over ℚ̄(t), where ρ is the Picard number of J(C). The coefficients
//! A, B₁, B₂, B₃, C₁, C₂ are fixed polynomials in (a, b, c); they satisfy
//! B₃ = −B₁C₂ identically. B₂ is a 41-term polynomial and is the dominant
//! transcription risk, so the test suite compares this transcription
//! against an independently keyed second one at random parameter points.
//!
//! Also here: the intermediate fibration (the 2-neighbor stop between the
//! I₀*-fibration and the two-IV* fibration), with its section data and
//! elliptic-parameter constants carried as metadata, and the genus-2
//! curve attached to the parameters.

use num_traits::{One, Zero};

use crate::ellsurf::WeierstrassSurface;
use crate::error::{CoreError, Result};
use crate::exactcore::poly::UniPoly;
use crate::exactcore::ratfun::RationalFunction;
use crate::exactcore::rational::{rat, rat_pow_i, Rat};
use crate::genus2::Genus2Curve;

type RF = RationalFunction;

/// Parameters (a, b, c) of the genus-2 curve y² = x(x−1)(x−a)(x−b)(x−c);
/// {0, 1, a, b, c} must be pairwise distinct for the curve to be smooth.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HParams {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
}

impl HParams {
    pub fn new(a: Rat, b: Rat, c: Rat) -> Result<Self> {
        let p = HParams { a, b, c };
        p.validate()?;
        Ok(p)
    }

    /// {0, 1, a, b, c} pairwise distinct.
    pub fn validate(&self) -> Result<()> {
        let pts = [Rat::zero(), Rat::one(), self.a.clone(), self.b.clone(), self.c.clone()];
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                if pts[i] == pts[j] {
                    return Err(CoreError::math(format!(
                        "degenerate parameters: the Weierstrass points 0, 1, a, b, c collide \
                         (a = {}, b = {}, c = {})",
                        self.a, self.b, self.c
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The six coefficients of the two-IV* Jacobian model.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HCoefficients {
    /// Coefficient of X².
    pub a: Rat,
    pub b1: Rat,
    pub b2: Rat,
    pub b3: Rat,
    pub c1: Rat,
    pub c2: Rat,
}

/// Monomial table: coefficient of a^i b^j c^k, encoded (i, j, k, coeff).
type MonomialTable = &'static [(u32, u32, u32, i64)];

/// Bracket of A: A = 4·(…), 12 terms.
const A_BRACKET: MonomialTable = &[
    (1, 1, 2, 1),
    (0, 1, 2, 1),
    (1, 0, 2, -2),
    (1, 2, 1, 1),
    (0, 2, 1, -2),
    (2, 1, 1, -2),
    (0, 1, 1, 1),
    (2, 0, 1, 4),
    (1, 0, 1, -2),
    (1, 2, 0, 1),
    (2, 1, 0, -2),
    (1, 1, 0, 1),
];

/// Bracket of B₂: B₂ = −16·(…), 41 terms, in source reading order.
const B2_BRACKET: MonomialTable = &[
    (1, 2, 4, 1),
    (2, 1, 4, -1),
    (1, 1, 4, -1),
    (2, 0, 4, 1),
    (2, 3, 3, 1),
    (1, 3, 3, -1),
    (0, 3, 3, -1),
    (3, 2, 3, -1),
    (2, 2, 3, 2),
    (1, 2, 3, -2),
    (0, 2, 3, 1),
    (2, 1, 3, 1),
    (1, 1, 3, 2),
    (2, 0, 3, -2),
    (1, 4, 2, -1),
    (0, 4, 2, 1),
    (3, 3, 2, -1),
    (2, 3, 2, -2),
    (1, 3, 2, 6),
    (0, 3, 2, -1),
    (4, 2, 2, 1),
    (3, 2, 2, 1),
    (2, 2, 2, -3),
    (1, 2, 2, -2),
    (2, 1, 2, 1),
    (1, 1, 2, -1),
    (2, 0, 2, 1),
    (2, 4, 1, 1),
    (1, 4, 1, -1),
    (3, 3, 1, 2),
    (2, 3, 1, -2),
    (1, 3, 1, -1),
    (4, 2, 1, -2),
    (3, 2, 1, 1),
    (2, 2, 1, 2),
    (1, 2, 1, 1),
    (2, 1, 1, -1),
    (3, 3, 0, -1),
    (2, 3, 0, 1),
    (4, 2, 0, 1),
    (3, 2, 0, -1),
];

fn eval_table(table: MonomialTable, a: &Rat, b: &Rat, c: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for &(i, j, k, coef) in table {
        acc += rat(coef)
            * rat_pow_i(a, i as i64)
            * rat_pow_i(b, j as i64)
            * rat_pow_i(c, k as i64);
    }
    acc
}

/// The coefficients (A, B₁, B₂, B₃, C₁, C₂) as exact rationals.
/// B₃ is built as −B₁C₂, the form the factored display takes.
pub fn h_coefficients(p: &HParams) -> Result<HCoefficients> {
    p.validate()?;
    let (a, b, c) = (&p.a, &p.b, &p.c);
    let one = Rat::one();
    let coeff_a = rat(4) * eval_table(A_BRACKET, a, b, c);
    let b1 = (a - &one) * c - a * (b - &one);
    let b2 = rat(-16) * eval_table(B2_BRACKET, a, b, c);
    let c2 = a
        * b
        * b
        * c
        * (a - &one)
        * (b - &one)
        * (c - &one)
        * (c - &one)
        * (a - b)
        * (b - c)
        * (c - a);
    if c2.is_zero() {
        // Unreachable once validate() passed; kept as the degeneration guard.
        return Err(CoreError::math("degenerate parameters: C2 = 0"));
    }
    let b3 = -(&b1 * &c2);
    Ok(HCoefficients { a: coeff_a, b1, b2, b3, c1: one, c2 })
}

/// The base-change family
/// H⁽ⁿ⁾: Y² = X³ + A·X² + (B₁tⁿ + B₂ + B₃/tⁿ)·X + (C₁tⁿ + C₂/tⁿ)².
///
/// Errors for n outside 1..3: the family stops being K3 there.
pub fn h_surface(p: &HParams, n: u32) -> Result<WeierstrassSurface> {
    if !(1..=3).contains(&n) {
        return Err(CoreError::math(format!(
            "base change exponent n = {n}: the H-family is a K3 only for n ≤ 3 (n ≥ 1)"
        )));
    }
    let hc = h_coefficients(p)?;
    let n = n as usize;
    let tn = UniPoly::monomial(n, Rat::one());
    // a4 = (B1·t²ⁿ + B2·tⁿ + B3) / tⁿ
    let mut n4 = vec![Rat::zero(); 2 * n + 1];
    n4[0] = hc.b3.clone();
    n4[n] = hc.b2.clone();
    n4[2 * n] = hc.b1.clone();
    let a4 = RF::new(UniPoly::new(n4), tn)?;
    // a6 = (C1·t²ⁿ + C2)² / t²ⁿ
    let mut sq = vec![Rat::zero(); 2 * n + 1];
    sq[0] = hc.c2.clone();
    sq[2 * n] = hc.c1.clone();
    let num = UniPoly::new(sq);
    let a6 = RF::new(&num * &num, UniPoly::monomial(2 * n, Rat::one()))?;
    Ok(WeierstrassSurface::new(
        RF::zero(),
        RF::constant(hc.a),
        RF::zero(),
        a4,
        a6,
    ))
}

/// The fibration sitting between the I₀*-model and the two-IV* model in
/// the 2-neighbor chain, with the data needed to reproduce the step.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntermediateFibration {
    /// y² = x³ + P(t)x² − Q(t)x over ℚ(t), the base coordinate being the
    /// elliptic parameter t₁.
    pub surface: WeierstrassSurface,
    /// Section (xₛ, yₛ) on the source fibration used to define t₁:
    /// xₛ = −4(a−1)(b−1)·t(t−c)(ct−ab).
    pub section_x: UniPoly,
    /// yₛ = −8(a−1)(b−1)(c−a)(c−b)·t²(t−ab)(t−c).
    pub section_y: UniPoly,
    /// t₁ = ((y+yₛ)/(x−xₛ) − t1_offset)/(t−a) with t1_offset = 2a(b−1)(c−a).
    pub t1_offset: Rat,
    /// Next elliptic parameter: t₂ = x₁/(t₁ + t2_shift), t2_shift = 2(b−a)c.
    pub t2_shift: Rat,
}

/// Linear polynomial c₀ + c₁t.
fn lin(c0: Rat, c1: Rat) -> UniPoly {
    UniPoly::new(vec![c0, c1])
}

/// The intermediate fibration
///
///   y² = x(x² + P(t)x − Q(t)),
///   P = t⁴/16 + t³(b−1)(c−a)/2 + t²·q/2
///       + 2t·(b−1)b(b−a)(c−1)c(c−a) + b²(b−a)²c²(c−1)²,
///   Q = (a−1)a(b−1)(c−a)(c−b)·t³(t + 2b(c−1))(t + 2c(b−a))/2,
///
/// with q the displayed 14-term polynomial in (a, b, c). It carries an I₆
/// fiber at t = 0 and I₂ fibers at t = −2(b−a)c and t = −2b(c−1).
pub fn intermediate_fibration(p: &HParams) -> Result<IntermediateFibration> {
    p.validate()?;
    let (a, b, c) = (&p.a, &p.b, &p.c);
    let one = Rat::one();
    // q = 3b²c² − abc² − 4bc² + 2ac² − 4ab²c − b²c + 2a²bc + 3abc + 2bc
    //     − 4a²c + 2ac + 2ab² + 2a²b − 4ab
    let q_table: MonomialTable = &[
        (0, 2, 2, 3),
        (1, 1, 2, -1),
        (0, 1, 2, -4),
        (1, 0, 2, 2),
        (1, 2, 1, -4),
        (0, 2, 1, -1),
        (2, 1, 1, 2),
        (1, 1, 1, 3),
        (0, 1, 1, 2),
        (2, 0, 1, -4),
        (1, 0, 1, 2),
        (1, 2, 0, 2),
        (2, 1, 0, 2),
        (1, 1, 0, -4),
    ];
    let q = eval_table(q_table, a, b, c);
    let p4 = Rat::new(1.into(), 16.into());
    let p3 = (b - &one) * (c - a) / rat(2);
    let p2 = &q / rat(2);
    let p1 = rat(2) * (b - &one) * b * (b - a) * (c - &one) * c * (c - a);
    let p0 = b * b * (b - a) * (b - a) * c * c * (c - &one) * (c - &one);
    let p_poly = UniPoly::new(vec![p0, p1, p2, p3, p4]);
    let k = (a - &one) * a * (b - &one) * (c - a) * (c - b) / rat(2);
    let t3 = UniPoly::monomial(3, k);
    let q_poly = &(&t3 * &lin(rat(2) * b * (c - &one), one.clone()))
        * &lin(rat(2) * c * (b - a), one.clone());
    let surface = WeierstrassSurface::new(
        RF::zero(),
        RF::from_poly(p_poly),
        RF::zero(),
        RF::from_poly(-&q_poly),
        RF::zero(),
    );
    // xₛ = −4(a−1)(b−1)·t(t−c)(ct−ab)
    let m4 = rat(-4) * (a - &one) * (b - &one);
    let section_x = &(&UniPoly::monomial(1, m4) * &lin(-c.clone(), one.clone()))
        * &lin(-(a * b), c.clone());
    // yₛ = −8(a−1)(b−1)(c−a)(c−b)·t²(t−ab)(t−c)
    let m8 = rat(-8) * (a - &one) * (b - &one) * (c - a) * (c - b);
    let section_y = &(&UniPoly::monomial(2, m8) * &lin(-(a * b), one.clone()))
        * &lin(-c.clone(), one);
    Ok(IntermediateFibration {
        surface,
        section_x,
        section_y,
        t1_offset: rat(2) * a * (b - &Rat::one()) * (c - a),
        t2_shift: rat(2) * (b - a) * c,
    })
}

/// The genus-2 curve y² = x(x−1)(x−a)(x−b)(x−c) behind the parameters.
pub fn genus2_from_hparams(p: &HParams) -> Result<Genus2Curve> {
    p.validate()?;
    let one = Rat::one();
    let f = &(&(&(&UniPoly::var() * &lin(-one.clone(), one.clone()))
        * &lin(-p.a.clone(), one.clone()))
        * &lin(-p.b.clone(), one.clone()))
        * &lin(-p.c.clone(), one);
    Genus2Curve::new(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ellsurf::classify_fibers;
    use crate::ellsurf::kodaira::{KodairaType, Place};
    use crate::exactcore::rational::rat_frac;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn example_params() -> HParams {
        HParams::new(rat(-1), rat_frac(1, 7), rat_frac(-6, 7)).unwrap()
    }

    fn random_params(rng: &mut StdRng) -> HParams {
        loop {
            let draw = |rng: &mut StdRng| {
                rat_frac(rng.gen_range(-12i64..=12), rng.gen_range(1i64..=4))
            };
            let p = HParams { a: draw(rng), b: draw(rng), c: draw(rng) };
            if p.validate().is_ok() {
                return p;
            }
        }
    }

    /// Independent second transcription of the B₂ bracket, keyed by powers
    /// of c (the first is keyed in source reading order); the two must
    /// agree everywhere.
    fn b2_bracket_by_c_powers(a: &Rat, b: &Rat, c: &Rat) -> Rat {
        let ip = |x: &Rat, k: i64| rat_pow_i(x, k);
        let c4 = a * &ip(b, 2) - &ip(a, 2) * b - a * b + &ip(a, 2);
        let c3 = &ip(a, 2) * &ip(b, 3) - a * &ip(b, 3) - ip(b, 3) - &ip(a, 3) * &ip(b, 2)
            + rat(2) * &ip(a, 2) * &ip(b, 2)
            - rat(2) * a * &ip(b, 2)
            + ip(b, 2)
            + &ip(a, 2) * b
            + rat(2) * a * b
            - rat(2) * ip(a, 2);
        let c2 = -(a * &ip(b, 4)) + ip(b, 4) - &ip(a, 3) * &ip(b, 3)
            - rat(2) * &ip(a, 2) * &ip(b, 3)
            + rat(6) * a * &ip(b, 3)
            - ip(b, 3)
            + &ip(a, 4) * &ip(b, 2)
            + &ip(a, 3) * &ip(b, 2)
            - rat(3) * &ip(a, 2) * &ip(b, 2)
            - rat(2) * a * &ip(b, 2)
            + &ip(a, 2) * b
            - a * b
            + ip(a, 2);
        let c1 = &ip(a, 2) * &ip(b, 4) - a * &ip(b, 4) + rat(2) * &ip(a, 3) * &ip(b, 3)
            - rat(2) * &ip(a, 2) * &ip(b, 3)
            - a * &ip(b, 3)
            - rat(2) * &ip(a, 4) * &ip(b, 2)
            + &ip(a, 3) * &ip(b, 2)
            + rat(2) * &ip(a, 2) * &ip(b, 2)
            + a * &ip(b, 2)
            - &ip(a, 2) * b;
        let c0 = -(&ip(a, 3) * &ip(b, 3)) + &ip(a, 2) * &ip(b, 3) + &ip(a, 4) * &ip(b, 2)
            - &ip(a, 3) * &ip(b, 2);
        &c4 * &ip(c, 4) + &c3 * &ip(c, 3) + &c2 * &ip(c, 2) + &c1 * c + c0
    }

    #[test]
    fn b2_transcriptions_agree() {
        let mut rng = StdRng::seed_from_u64(4243);
        for _ in 0..20 {
            let p = random_params(&mut rng);
            let hc = h_coefficients(&p).unwrap();
            let other = rat(-16) * b2_bracket_by_c_powers(&p.a, &p.b, &p.c);
            assert_eq!(hc.b2, other, "params {:?}", p);
        }
    }

    #[test]
    fn degenerate_parameters_are_rejected() {
        assert!(HParams::new(rat(0), rat(2), rat(3)).is_err());
        assert!(HParams::new(rat(2), rat(1), rat(3)).is_err());
        assert!(HParams::new(rat(2), rat(3), rat(3)).is_err());
        let bad = HParams { a: rat(2), b: rat(3), c: rat(3) };
        assert!(h_coefficients(&bad).is_err());
        assert!(h_surface(&bad, 1).is_err());
        assert!(intermediate_fibration(&bad).is_err());
        assert!(genus2_from_hparams(&bad).is_err());
    }

    #[test]
    fn example_coefficients_frozen() {
        let hc = h_coefficients(&example_params()).unwrap();
        assert_eq!(hc.a, rat_frac(-5416, 343));
        assert_eq!(hc.b1, rat_frac(6, 7));
        assert_eq!(hc.b2, rat_frac(-5502592, 117649));
        assert_eq!(hc.b3, rat_frac(584064, 40353607));
        assert_eq!(hc.c1, rat(1));
        assert_eq!(hc.c2, rat_frac(-97344, 5764801));
    }

    #[test]
    fn b3_is_minus_b1_c2() {
        let mut rng = StdRng::seed_from_u64(99);
        for _ in 0..10 {
            let p = random_params(&mut rng);
            let hc = h_coefficients(&p).unwrap();
            assert_eq!(hc.b3, -(&hc.b1 * &hc.c2));
        }
    }

    #[test]
    fn h_surface_range() {
        let p = example_params();
        assert!(h_surface(&p, 0).is_err());
        assert!(h_surface(&p, 4).is_err());
        for n in 1..=3 {
            assert!(h_surface(&p, n).is_ok());
        }
    }

    #[test]
    fn h1_has_two_iv_star_fibers() {
        let cfg = classify_fibers(&h_surface(&example_params(), 1).unwrap()).unwrap();
        assert_eq!(
            cfg.type_at(&Place::Rational(rat(0))),
            Some(KodairaType::IVStar)
        );
        assert_eq!(cfg.type_at(&Place::Infinity), Some(KodairaType::IVStar));
        assert_eq!(cfg.count_of(KodairaType::I(1)), 8);
        assert!(cfg.is_k3());
    }

    #[test]
    fn h_surface_is_base_change_of_h1() {
        let p = example_params();
        let h1 = h_surface(&p, 1).unwrap();
        for n in 2..=3 {
            assert_eq!(
                h1.substitute_base(&Rat::one(), n as i64).unwrap(),
                h_surface(&p, n).unwrap()
            );
        }
    }

    #[test]
    fn intermediate_fibration_fibers_at_example_params() {
        let p = example_params();
        let ifib = intermediate_fibration(&p).unwrap();
        let cfg = classify_fibers(&ifib.surface).unwrap();
        assert_eq!(cfg.type_at(&Place::Rational(rat(0))), Some(KodairaType::I(6)));
        // I₂ at t = −2(b−a)c = 96/49 and t = −2b(c−1) = 26/49.
        assert_eq!(
            cfg.type_at(&Place::Rational(rat_frac(96, 49))),
            Some(KodairaType::I(2))
        );
        assert_eq!(
            cfg.type_at(&Place::Rational(rat_frac(26, 49))),
            Some(KodairaType::I(2))
        );
        assert_eq!(cfg.euler_total(), 24);
        assert_eq!(ifib.t2_shift, rat_frac(-96, 49));
        assert_eq!(ifib.t1_offset, rat_frac(12, 49));
    }

    #[test]
    fn genus2_curve_matches_parameters() {
        let c = genus2_from_hparams(&example_params()).unwrap();
        // x(x−1)(x+1)(x−1/7)(x+6/7) = x⁵ + 5/7·x⁴ − 55/49·x³ − 5/7·x² + 6/49·x
        let expect = UniPoly::new(vec![
            rat(0),
            rat_frac(6, 49),
            rat_frac(-5, 7),
            rat_frac(-55, 49),
            rat_frac(5, 7),
            rat(1),
        ]);
        assert_eq!(c.f(), &expect);
        // The curve only remembers the Weierstrass points, not their order.
        let permuted =
            HParams::new(rat_frac(-6, 7), rat(-1), rat_frac(1, 7)).unwrap();
        assert_eq!(genus2_from_hparams(&permuted).unwrap().f(), &expect);
    }
}
