//! Singular-fiber classification over ℚ(t) in characteristic zero.
//!
//! At a place q of ℙ¹ the local valuations (v₄, v₆, v_Δ) of (c₄, c₆, Δ)
//! determine the Kodaira type: the model is first minimalized by the
//! largest twist u = q^k with k = min(⌊v₄/4⌋, ⌊v₆/6⌋, ⌊v_Δ/12⌋) — this
//! also absorbs poles of a non-integral model — and the reduced triple is
//! looked up in the valuation table sharpened by 1728·Δ = c₄³ − c₆².
//! Profiles that the identity rules out are reported as internal errors.
//!
//! Places are found without factoring over ℚ: the squarefree part of
//! num(Δ)·den(Δ)·den(c₄)·den(c₆) is split into its rational roots and a
//! residual with none; the residual is partitioned by repeated gcds into
//! clusters on which each valuation is constant, so every conjugacy class
//! of geometric bad points is classified exactly once.

use num_traits::One;

use super::kodaira::{Fiber, FiberConfiguration, KodairaType, Place};
use super::weierstrass::WeierstrassSurface;
use crate::exactcore::poly::UniPoly;
use crate::exactcore::ratfun::RationalFunction;
use crate::exactcore::rational::Rat;
use crate::error::{CoreError, Result};

/// Classify all singular fibers of the associated relatively minimal
/// elliptic surface. Requires Δ ≠ 0 in ℚ(t).
pub fn classify_fibers(s: &WeierstrassSurface) -> Result<FiberConfiguration> {
    let c4 = s.c4();
    let c6 = s.c6();
    let disc = s.disc();
    if disc.is_zero() {
        return Err(CoreError::math(
            "discriminant vanishes identically: not an elliptic surface",
        ));
    }

    let mut fibers: Vec<Fiber> = vec![];

    // Candidate finite places: zeros of Δ and poles of any invariant.
    let mut w = disc.num().clone();
    for d in [disc.den(), c4.den(), c6.den()] {
        w = &w * d;
    }
    let mut residual = w.squarefree_part()?;
    let mut rational_places: Vec<Rat> = residual.rational_roots()?;
    rational_places.dedup();
    for alpha in &rational_places {
        let lin = UniPoly::new(vec![-alpha.clone(), Rat::one()]);
        let (_, rest) = residual.strip_factor(&lin);
        residual = rest;
    }

    let val_opt = |f: &RationalFunction, q: &UniPoly| -> Result<Option<i64>> {
        if f.is_zero() {
            Ok(None)
        } else {
            f.valuation_at_poly(q).map(Some)
        }
    };

    for alpha in &rational_places {
        let lin = UniPoly::new(vec![-alpha.clone(), Rat::one()]);
        let v4 = val_opt(&c4, &lin)?;
        let v6 = val_opt(&c6, &lin)?;
        let vd = disc.valuation_at_poly(&lin)?;
        if let Some(ty) = kodaira_from_valuations(v4, v6, vd)? {
            fibers.push(Fiber { place: Place::Rational(alpha.clone()), kodaira: ty });
        }
    }

    if !residual.is_constant() {
        let p4 = valuation_split(&residual, &c4)?;
        let p6 = valuation_split(&residual, &c6)?;
        let pd = valuation_split(&residual, &disc)?;
        for (piece, (v4, (v6, vd))) in refine(&p4, &refine(&p6, &pd)) {
            let vd = vd.expect("Δ is nonzero");
            if let Some(ty) = kodaira_from_valuations(v4, v6, vd)? {
                fibers.push(Fiber { place: Place::Cluster(piece), kodaira: ty });
            }
        }
    }

    // The place t = ∞ with uniformizer 1/t: v_∞(f) = deg den − deg num.
    let vinf = |f: &RationalFunction| -> Result<Option<i64>> {
        if f.is_zero() {
            Ok(None)
        } else {
            f.valuation_at_infinity().map(Some)
        }
    };
    let v4 = vinf(&c4)?;
    let v6 = vinf(&c6)?;
    let vd = disc.valuation_at_infinity()?;
    if let Some(ty) = kodaira_from_valuations(v4, v6, vd)? {
        fibers.push(Fiber { place: Place::Infinity, kodaira: ty });
    }

    fibers.sort_by(|a, b| a.place.cmp_places(&b.place));
    Ok(FiberConfiguration { fibers })
}

/// Kodaira type from local valuations; `None` components mean the invariant
/// is identically zero (valuation +∞). Returns `Ok(None)` for good
/// reduction. Minimalization happens here, so poles (negative valuations)
/// and non-minimal models are both handled.
pub(crate) fn kodaira_from_valuations(
    v4: Option<i64>,
    v6: Option<i64>,
    vd: i64,
) -> Result<Option<KodairaType>> {
    let mut k = vd.div_euclid(12);
    if let Some(v) = v4 {
        k = k.min(v.div_euclid(4));
    }
    if let Some(v) = v6 {
        k = k.min(v.div_euclid(6));
    }
    let v4 = v4.map(|v| v - 4 * k);
    let v6 = v6.map(|v| v - 6 * k);
    let vd = vd - 12 * k;
    debug_assert!(vd >= 0 && v4.map_or(true, |v| v >= 0) && v6.map_or(true, |v| v >= 0));

    if vd == 0 {
        return Ok(None);
    }
    if v4 == Some(0) {
        return Ok(Some(KodairaType::I(vd as u32)));
    }
    // additive: v4 ≥ 1 (or c4 ≡ 0); the guards encode what 1728Δ = c4³ − c6²
    // forces, so a failed guard means an impossible profile, i.e. a bug.
    let bad = || {
        Err(CoreError::internal(format!(
            "impossible valuation profile v4={v4:?} v6={v6:?} vΔ={vd}"
        )))
    };
    let ty = match vd {
        2 if v6 == Some(1) => KodairaType::II,
        3 if v4 == Some(1) => KodairaType::III,
        4 if v6 == Some(2) => KodairaType::IV,
        6 if v4.map_or(true, |v| v >= 2) && v6.map_or(true, |v| v >= 3) => KodairaType::IStar(0),
        n if n >= 7 && v4 == Some(2) && v6 == Some(3) => KodairaType::IStar((n - 6) as u32),
        8 if v6 == Some(4) && v4.map_or(true, |v| v >= 3) => KodairaType::IVStar,
        9 if v4 == Some(3) && v6.map_or(true, |v| v >= 5) => KodairaType::IIIStar,
        10 if v6 == Some(5) && v4.map_or(true, |v| v >= 4) => KodairaType::IIStar,
        _ => return bad(),
    };
    Ok(Some(ty))
}

/// Partition a monic squarefree polynomial `r` into pieces on which the
/// valuation of `f` is constant. Covers all of `r`; the label is `None`
/// when `f` is identically zero.
fn valuation_split(
    r: &UniPoly,
    f: &RationalFunction,
) -> Result<Vec<(UniPoly, Option<i64>)>> {
    if f.is_zero() {
        return Ok(vec![(r.clone(), None)]);
    }
    let mut out = vec![];
    for (piece, k) in peel(r, f.num()) {
        if k > 0 {
            out.push((piece, Some(k as i64)));
        } else {
            // numerator and denominator are coprime, so only the k = 0
            // piece can meet the denominator
            for (piece2, k2) in peel(&piece, f.den()) {
                out.push((piece2, Some(-(k2 as i64))));
            }
        }
    }
    Ok(out)
}

/// For monic squarefree `r` and nonzero `p`: pieces of `r` grouped by the
/// exact multiplicity of their irreducible factors in `p`, via the gcd
/// peeling S₀ = r, S_{k+1} = gcd(S_k, p / S₁⋯S_k); the factors with
/// multiplicity exactly k form S_k / S_{k+1}.
fn peel(r: &UniPoly, p: &UniPoly) -> Vec<(UniPoly, u32)> {
    let mut out = vec![];
    let mut s = r.monic();
    let mut f = p.clone();
    let mut k = 0u32;
    loop {
        let s_next = s.gcd(&f);
        let piece = s.exact_div(&s_next).expect("gcd divides");
        if !piece.is_constant() {
            out.push((piece.monic(), k));
        }
        if s_next.is_constant() {
            break;
        }
        f = f.exact_div(&s_next).expect("peeled factor divides");
        s = s_next;
        k += 1;
    }
    out
}

/// Common refinement of two partitions of the same squarefree polynomial.
fn refine<X: Clone, Y: Clone>(
    a: &[(UniPoly, X)],
    b: &[(UniPoly, Y)],
) -> Vec<(UniPoly, (X, Y))> {
    let mut out = vec![];
    for (pa, xa) in a {
        for (pb, yb) in b {
            let g = pa.gcd(pb);
            if !g.is_constant() {
                out.push((g, (xa.clone(), yb.clone())));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::{rat, rat_frac};

    fn tpoly(coeffs: &[i64]) -> RationalFunction {
        RationalFunction::from_poly(UniPoly::from_ints(coeffs))
    }

    #[test]
    fn table_spot_checks() {
        use KodairaType::*;
        let f = kodaira_from_valuations;
        assert_eq!(f(Some(0), Some(0), 0).unwrap(), None);
        assert_eq!(f(Some(0), Some(0), 3).unwrap(), Some(I(3)));
        assert_eq!(f(Some(1), Some(1), 2).unwrap(), Some(II));
        assert_eq!(f(Some(1), Some(2), 3).unwrap(), Some(III));
        assert_eq!(f(Some(2), Some(2), 4).unwrap(), Some(IV));
        assert_eq!(f(Some(2), Some(3), 6).unwrap(), Some(IStar(0)));
        assert_eq!(f(Some(2), Some(3), 9).unwrap(), Some(IStar(3)));
        assert_eq!(f(Some(3), Some(4), 8).unwrap(), Some(IVStar));
        assert_eq!(f(Some(3), Some(5), 9).unwrap(), Some(IIIStar));
        assert_eq!(f(Some(4), Some(5), 10).unwrap(), Some(IIStar));
        // c4 ≡ 0 (j = 0 fibers)
        assert_eq!(f(None, Some(1), 2).unwrap(), Some(II));
        assert_eq!(f(None, Some(3), 6).unwrap(), Some(IStar(0)));
        assert_eq!(f(None, Some(5), 10).unwrap(), Some(IIStar));
        // non-minimal and pole profiles minimalize first
        assert_eq!(f(Some(4), Some(6), 12).unwrap(), None);
        assert_eq!(f(Some(5), Some(7), 15).unwrap(), Some(III));
        assert_eq!(f(Some(-1), None, -3).unwrap(), Some(IIIStar));
        assert_eq!(f(Some(-2), Some(-3), 0).unwrap(), Some(IStar(6)));
        // impossible profiles must be flagged, not misclassified
        assert!(f(Some(1), Some(1), 1).is_err());
        assert!(f(Some(2), Some(3), 5).is_err());
        assert!(f(None, Some(2), 3).is_err());
    }

    #[test]
    fn classify_isotrivial_j0_surface() {
        // y² = x³ + t: III at t=0? no — c4 = 0, c6 = −864t, Δ = −432t²:
        // at 0: (∞, 1, 2) → II; at ∞: vd = −2, v6 = −1 → k=−1 → (∞, 5, 10) → II*
        let s = WeierstrassSurface::from_short(RationalFunction::zero(), tpoly(&[0, 1]));
        let cfg = classify_fibers(&s).unwrap();
        assert_eq!(cfg.fibers.len(), 2);
        assert_eq!(
            cfg.type_at(&Place::Rational(rat(0))),
            Some(KodairaType::II)
        );
        assert_eq!(cfg.type_at(&Place::Infinity), Some(KodairaType::IIStar));
        assert_eq!(cfg.euler_total(), 12);
    }

    #[test]
    fn classify_j1728_surface() {
        // y² = x³ + tx: c4 = −48t, c6 = 0, Δ = −64t³:
        // at 0: (1, ∞, 3) → III; at ∞: k = −1 → (3, ∞, 9) → III*
        let s = WeierstrassSurface::from_short(tpoly(&[0, 1]), RationalFunction::zero());
        let cfg = classify_fibers(&s).unwrap();
        assert_eq!(cfg.type_at(&Place::Rational(rat(0))), Some(KodairaType::III));
        assert_eq!(cfg.type_at(&Place::Infinity), Some(KodairaType::IIIStar));
        assert_eq!(cfg.euler_total(), 12);
    }

    #[test]
    fn classify_with_cluster_and_rational_i1() {
        // y² + xy = x³ + t: c4 = 1, c6 = −1 − 864t, Δ = −t(1 + 432t).
        let s = WeierstrassSurface::new(
            RationalFunction::one(),
            RationalFunction::zero(),
            RationalFunction::zero(),
            RationalFunction::zero(),
            tpoly(&[0, 1]),
        );
        let cfg = classify_fibers(&s).unwrap();
        assert_eq!(cfg.type_at(&Place::Rational(rat(0))), Some(KodairaType::I(1)));
        assert_eq!(
            cfg.type_at(&Place::Rational(rat_frac(-1, 432))),
            Some(KodairaType::I(1))
        );
        assert_eq!(cfg.type_at(&Place::Infinity), Some(KodairaType::IIStar));
        assert_eq!(cfg.euler_total(), 12);

        // y² = x³ + x + t: Δ = −16(4 + 27t²) — an irrational I1 pair
        let s = WeierstrassSurface::from_short(tpoly(&[1]), tpoly(&[0, 1]));
        let cfg = classify_fibers(&s).unwrap();
        let cluster = UniPoly::new(vec![rat_frac(4, 27), rat(0), rat(1)]);
        assert_eq!(cfg.type_at(&Place::Cluster(cluster)), Some(KodairaType::I(1)));
        assert_eq!(cfg.count_of(KodairaType::I(1)), 2);
        assert_eq!(cfg.euler_total(), 12);
    }

    #[test]
    fn classification_is_rescale_invariant() {
        let s = WeierstrassSurface::from_short(tpoly(&[1, 0, 1]), tpoly(&[0, 1, 2]));
        let base = classify_fibers(&s).unwrap();
        let u = RationalFunction::new(
            UniPoly::from_ints(&[0, 0, 3]),
            UniPoly::from_ints(&[-1, 1]),
        )
        .unwrap();
        let r = s.rescale(&u).unwrap();
        assert_eq!(classify_fibers(&r).unwrap(), base);
    }

    #[test]
    fn multiplicative_star_at_both_ends() {
        // y² = x³ − t²x: I0* at 0 and ∞ (isotrivial j = 1728)
        let s = WeierstrassSurface::from_short(tpoly(&[0, 0, -1]), RationalFunction::zero());
        let cfg = classify_fibers(&s).unwrap();
        assert_eq!(cfg.type_at(&Place::Rational(rat(0))), Some(KodairaType::IStar(0)));
        assert_eq!(cfg.type_at(&Place::Infinity), Some(KodairaType::IStar(0)));
        assert_eq!(cfg.euler_total(), 12);
    }
}
