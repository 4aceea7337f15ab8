//! Exact point counts of genus-2 curves over 𝔽_p and 𝔽_{p²}.
//!
//! For y² = f(x) with good reduction at p, the number of points on the
//! smooth projective model is
//!   #C(𝔽_q) = Σ_{x∈𝔽_q} (1 + χ_q(f(x))) + (points at infinity),
//! with χ_q the quadratic character of 𝔽_q (χ_q(0) = 0). There is one
//! point at infinity when deg f = 5 and 1 + χ_q(lc f) when deg f = 6.
//! Over 𝔽_{p²} every element of 𝔽_p^× is a square, so a degree-6 curve
//! always has two points at infinity there.

use crate::error::{CoreError, Result};
use crate::exactcore::poly::bigint_mod_u64;
use crate::exactcore::primefield::{invm, is_prime_u64, mulm, FpPoly, PrimeFieldCtx};
use crate::exactcore::rational::Rat;

use super::curve::Genus2Curve;

/// Hard cap on the field size q: counting is a Θ(q) scan.
pub const MAX_FIELD_SIZE: u64 = 1 << 22;

/// Reduces f mod p and checks that y² = f̄(x) is again a smooth genus-2
/// curve: p odd, denominators and leading coefficient prime to p, and f̄
/// squarefree.
fn reduce_curve(curve: &Genus2Curve, p: u64) -> Result<FpPoly> {
    if !is_prime_u64(p) {
        return Err(CoreError::math(format!("{p} is not prime")));
    }
    if p == 2 {
        return Err(CoreError::math(
            "reduction mod 2 of y^2 = f(x) is never smooth",
        ));
    }
    let coeffs = curve
        .f()
        .coeffs()
        .iter()
        .map(|c| rat_mod_p(c, p))
        .collect::<Result<Vec<u64>>>()?;
    let fbar = FpPoly::new(p, coeffs);
    if fbar.degree() != curve.f().degree() {
        return Err(CoreError::math(format!(
            "bad reduction at {p}: leading coefficient vanishes"
        )));
    }
    if fbar.gcd(&fbar.derivative()).degree() != Some(0) {
        return Err(CoreError::math(format!(
            "bad reduction at {p}: f is not squarefree mod {p}"
        )));
    }
    Ok(fbar)
}

fn rat_mod_p(x: &Rat, p: u64) -> Result<u64> {
    let den = bigint_mod_u64(x.denom(), p);
    if den == 0 {
        return Err(CoreError::math(format!(
            "coefficient denominator divisible by {p}"
        )));
    }
    Ok(mulm(bigint_mod_u64(x.numer(), p), invm(den, p), p))
}

/// True if y² = f(x) reduces to a smooth genus-2 curve over 𝔽_p.
pub fn has_good_reduction(curve: &Genus2Curve, p: u64) -> bool {
    reduce_curve(curve, p).is_ok()
}

/// #C(𝔽_p) on the smooth projective model.
pub fn count_points_fp(curve: &Genus2Curve, p: u64) -> Result<u64> {
    if p > MAX_FIELD_SIZE {
        return Err(CoreError::math(format!(
            "field size {p} exceeds the counting cap 2^22"
        )));
    }
    let fbar = reduce_curve(curve, p)?;
    let ctx = PrimeFieldCtx::new(p)?;
    let coeffs = fbar.coeffs().to_vec();
    let mut count: u64 = 0;
    for x in 0..p {
        let mut v: u64 = 0;
        for c in coeffs.iter().rev() {
            v = mulm(v, x, p);
            v = (v + c) % p;
        }
        count += (1 + ctx.chi(v)) as u64;
    }
    count += points_at_infinity(&fbar, |lc| ctx.chi(lc));
    Ok(count)
}

/// #C(𝔽_{p²}) on the smooth projective model.
pub fn count_points_fp2(curve: &Genus2Curve, p: u64) -> Result<u64> {
    if p.saturating_mul(p) > MAX_FIELD_SIZE {
        return Err(CoreError::math(format!(
            "field size {p}^2 exceeds the counting cap 2^22"
        )));
    }
    let fbar = reduce_curve(curve, p)?;
    let ctx = PrimeFieldCtx::new(p)?;
    let coeffs: Vec<(u64, u64)> = fbar.coeffs().iter().map(|&c| ctx.embed(c)).collect();
    let mut count: u64 = 0;
    for c0 in 0..p {
        for c1 in 0..p {
            let x = (c0, c1);
            let mut v = (0, 0);
            for c in coeffs.iter().rev() {
                v = ctx.mul2(v, x);
                v = ctx.add2(v, *c);
            }
            count += (1 + ctx.chi2(v)) as u64;
        }
    }
    // χ_{p²} is trivial on 𝔽_p^×, so a sextic always has 2 points at ∞
    count += points_at_infinity(&fbar, |_| 1);
    Ok(count)
}

fn points_at_infinity(fbar: &FpPoly, chi_of_lc: impl Fn(u64) -> i64) -> u64 {
    match fbar.degree() {
        Some(5) => 1,
        Some(6) => (1 + chi_of_lc(fbar.lc())) as u64,
        _ => unreachable!("reduce_curve enforces degree 5 or 6"),
    }
}
