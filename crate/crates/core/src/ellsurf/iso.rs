//! Detecting when two elliptic surfaces present the same fibration.
//!
//! Two Weierstrass models over ℚ(t) define isomorphic elliptic surfaces
//! compatibly with the fibration exactly when, for some coordinate change
//! t ↦ λ·t^e of ℙ¹ (λ ∈ ℚ^×, e = ±1) and some v ∈ ℚ(t)^×,
//!
//!   c₄ᴮ(t) = v⁴ · c₄ᴬ(λtᵉ),   c₆ᴮ(t) = v⁶ · c₆ᴬ(λtᵉ).
//!
//! Candidates for λ come from invariants of the fibration: singular fibers
//! of matching Kodaira type must correspond under t ↦ λtᵉ, so ratios of
//! rational bad places — or coefficient ratios of the monic cluster
//! polynomials — pin down λ up to an exact rational root. Every candidate
//! is verified exactly; v is recovered as the square root of c₆-ratio over
//! c₄-ratio, with the j = 0 and j = 1728 degenerate cases handled by exact
//! sixth and fourth roots.

use num_traits::{One, Zero};

use super::classify::classify_fibers;
use super::kodaira::{FiberConfiguration, Place};
use super::weierstrass::WeierstrassSurface;
use crate::exactcore::poly::UniPoly;
use crate::exactcore::ratfun::RationalFunction;
use crate::exactcore::rational::{rat_nth_root, Rat};
use crate::error::Result;

type RF = RationalFunction;

/// Witness of an isomorphism: B arises from A by the base move t ↦ λ·tᵉ
/// followed by (x, y) ↦ (v²x, v³y).
#[derive(Clone, Debug)]
pub struct IsoWitness {
    pub lambda: Rat,
    pub exponent: i64,
    pub scale: RF,
}

/// Search for an isomorphism of fibrations from A to B over ℚ(t) up to a
/// coordinate change t ↦ λ·t^(±1) of the base. Returns a verified witness,
/// or `None` when no such isomorphism exists over ℚ.
pub fn same_surface_up_to_iso(
    a: &WeierstrassSurface,
    b: &WeierstrassSurface,
) -> Result<Option<IsoWitness>> {
    let c4a = a.c4();
    let c6a = a.c6();
    let c4b = b.c4();
    let c6b = b.c6();
    if a.disc().is_zero() || b.disc().is_zero() {
        return Err(crate::error::CoreError::math(
            "isomorphism test requires nonsingular surfaces",
        ));
    }
    // zero patterns of c4/c6 are invariant under every allowed move
    if c4a.is_zero() != c4b.is_zero() || c6a.is_zero() != c6b.is_zero() {
        return Ok(None);
    }

    let cfg_a = classify_fibers(a)?;
    let cfg_b = classify_fibers(b)?;
    if !configurations_compatible(&cfg_a, &cfg_b) {
        return Ok(None);
    }

    for exponent in [1i64, -1] {
        let mut cands = lambda_candidates(&cfg_a, &cfg_b, exponent);
        cands.push(Rat::one());
        cands.extend(monomial_candidates(&c4a, &c6a, &c4b, &c6b, exponent));
        cands.sort();
        cands.dedup();
        for lambda in cands {
            if lambda.is_zero() {
                continue;
            }
            if let Some(scale) = try_map(&c4a, &c6a, &c4b, &c6b, &lambda, exponent)? {
                return Ok(Some(IsoWitness { lambda, exponent, scale }));
            }
        }
    }
    Ok(None)
}

/// The multisets (Kodaira type, place degree) must agree.
fn configurations_compatible(a: &FiberConfiguration, b: &FiberConfiguration) -> bool {
    let key = |cfg: &FiberConfiguration| {
        let mut v: Vec<(String, u32)> = cfg
            .fibers
            .iter()
            .map(|f| (f.kodaira.name(), f.place.degree()))
            .collect();
        v.sort();
        v
    };
    key(a) == key(b)
}

/// λ candidates from matching singular fibers: a B-place β of some type
/// corresponds to the A-place α = λ·βᵉ, so λ = α/βᵉ for rational places
/// and λ^(d−j) = (coefficient ratio) for degree-d clusters.
fn lambda_candidates(
    cfg_a: &FiberConfiguration,
    cfg_b: &FiberConfiguration,
    exponent: i64,
) -> Vec<Rat> {
    let mut out = vec![];
    for fa in &cfg_a.fibers {
        for fb in &cfg_b.fibers {
            if fa.kodaira != fb.kodaira {
                continue;
            }
            match (&fa.place, &fb.place) {
                (Place::Rational(alpha), Place::Rational(beta)) => {
                    if alpha.is_zero() || beta.is_zero() {
                        continue;
                    }
                    let lam = if exponent == 1 {
                        alpha / beta
                    } else {
                        alpha * beta
                    };
                    out.push(lam);
                }
                (Place::Cluster(pa), Place::Cluster(pb)) => {
                    out.extend(cluster_lambda_candidates(pa, pb, exponent));
                }
                _ => {}
            }
        }
    }
    out
}

/// For monic clusters with roots {αᵢ} and {βᵢ} and the correspondence
/// α = λβᵉ: when e = 1, p_b(t) = λ^d·p_a(λ⁻¹·λ t)… concretely the monic
/// polynomial with roots λ·rᵢ (rᵢ roots of the reference r) satisfies
/// coeff_j = r_j·λ^(d−j), giving λ^(d−j) from any shared nonzero
/// coefficient pair. When e = −1 the reference is the reversed polynomial
/// (roots 1/αᵢ). Clusters never vanish at 0, so reversal keeps the degree.
fn cluster_lambda_candidates(pa: &UniPoly, pb: &UniPoly, exponent: i64) -> Vec<Rat> {
    let mut out = vec![];
    if pa.degree() != pb.degree() {
        return out;
    }
    // reference with roots {β possible images}: β = (α/λ)^e inverse…
    // roots of pb are β with α = λβᵉ ⇔ β = (α/λ) for e = 1, β = λ/α for
    // e = −1; in both cases pb's roots are λ^(−e·…) — normalize so that
    // pb has roots μ·sᵢ where sᵢ are the roots of the reference:
    //   e = 1:  β = α/λ   ⇒ reference pa,          μ = 1/λ
    //   e = −1: β = λ·α⁻¹ ⇒ reference rev(pa),     μ = λ
    let reference = if exponent == 1 { pa.monic() } else { pa.reversed().monic() };
    let d = reference.degree().unwrap();
    for j in (0..d).rev() {
        let ra = reference.coeff(j);
        let rb = pb.coeff(j);
        if ra.is_zero() || rb.is_zero() {
            if ra.is_zero() != rb.is_zero() {
                return vec![]; // zero patterns must match
            }
            continue;
        }
        let k = (d - j) as u32;
        // rb_j = ra_j · μ^(d−j)
        if let Some(mu) = rat_nth_root(&(rb / ra), k) {
            let lam = |m: &Rat| if exponent == 1 { Rat::one() / m } else { m.clone() };
            out.push(lam(&mu));
            if k % 2 == 0 {
                out.push(lam(&-mu));
            }
        }
    }
    out
}

/// Fallback candidates when the surfaces have few usable places: if an
/// invariant is a monomial c·t^k its transformation law pins λ modulo
/// exact powers. With v = c·tᵐ and weight w (4 for c₄, 6 for c₆),
/// b = cʷ·a·λᵏ, so b/a must be a g-th power for g = gcd(w, k), and a
/// Bézout relation w·u + k·z = g turns the g-th root r into the candidate
/// λ = r^z. Both signs are tried where the root degree is even.
fn monomial_candidates(c4a: &RF, c6a: &RF, c4b: &RF, c6b: &RF, exponent: i64) -> Vec<Rat> {
    let mono = |f: &RF| -> Option<(Rat, i64)> {
        let nd = f.num().degree()?;
        let dd = f.den().degree().unwrap_or(0);
        let num_mono = f.num().coeffs().iter().filter(|c| !c.is_zero()).count() == 1;
        let den_mono = f.den().coeffs().iter().filter(|c| !c.is_zero()).count() == 1;
        if num_mono && den_mono {
            Some((f.num().lc() / f.den().lc(), nd as i64 - dd as i64))
        } else {
            None
        }
    };
    let mut out = vec![];
    for (fa, fb, weight) in [(c4a, c4b, 4i64), (c6a, c6b, 6i64)] {
        if fa.is_zero() || fb.is_zero() {
            continue;
        }
        let (Some((a, ka)), Some((b, kb))) = (mono(fa), mono(fb)) else {
            continue;
        };
        // exponent bookkeeping: kb = weight·m + e·ka must have integral m
        if (kb - exponent * ka).rem_euclid(weight) != 0 {
            continue;
        }
        out.extend(bezout_lambda(&(b / a), ka, weight));
    }
    out
}

/// All λ of the form r^z solving `ratio = c^weight · λ^k` for some c ∈ ℚ^×,
/// where r ranges over the rational g-th roots of `ratio`, g = gcd(weight, k).
fn bezout_lambda(ratio: &Rat, k: i64, weight: i64) -> Vec<Rat> {
    use num_integer::Integer;
    if k == 0 || ratio.is_zero() {
        return vec![];
    }
    let e = weight.extended_gcd(&k);
    let g = e.gcd; // = weight·e.x + k·e.y > 0
    let mut roots = vec![];
    if let Some(r) = rat_nth_root(ratio, g as u32) {
        roots.push(r.clone());
        if g % 2 == 0 {
            roots.push(-r);
        }
    }
    roots
        .into_iter()
        .map(|r| crate::exactcore::rational::rat_pow_i(&r, e.y))
        .collect()
}

/// Verify a specific (λ, e): find v with c₄ᴮ = v⁴·c₄ᴬ(λtᵉ) and
/// c₆ᴮ = v⁶·c₆ᴬ(λtᵉ), exactly.
fn try_map(
    c4a: &RF,
    c6a: &RF,
    c4b: &RF,
    c6b: &RF,
    lambda: &Rat,
    exponent: i64,
) -> Result<Option<RF>> {
    let c4s = c4a.substitute(lambda, exponent)?;
    let c6s = c6a.substitute(lambda, exponent)?;
    let v = if c4s.is_zero() {
        // j = 0: v⁶ = c₆ᴮ/c₆ˢ must admit an exact sixth root
        match (&(c6b / &c6s)).nth_root_exact(6) {
            Some(v) => v,
            None => return Ok(None),
        }
    } else if c6s.is_zero() {
        // j = 1728: v⁴ = c₄ᴮ/c₄ˢ
        match (&(c4b / &c4s)).nth_root_exact(4) {
            Some(v) => v,
            None => return Ok(None),
        }
    } else {
        let r4 = c4b / &c4s;
        let r6 = c6b / &c6s;
        let w = &r6 / &r4; // = v²
        if &(&w * &w) != &r4 || &(&(&w * &w) * &w) != &r6 {
            return Ok(None);
        }
        match w.sqrt_exact() {
            Some(v) => v,
            None => return Ok(None),
        }
    };
    let v2 = &v * &v;
    let v4 = &v2 * &v2;
    let v6 = &v4 * &v2;
    if &(&v4 * &c4s) == c4b && &(&v6 * &c6s) == c6b {
        Ok(Some(v))
    } else {
        Ok(None)
    }
}
