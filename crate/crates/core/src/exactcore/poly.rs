//! Dense univariate polynomials over ℚ.
//!
//! Coefficients are stored in ascending degree order with no trailing zeros
//! (the zero polynomial is the empty list). Gcds run on primitive integer
//! models with content tracking to avoid rational coefficient blowup;
//! squarefree decomposition is Yun's algorithm; resultants follow the
//! Sylvester-determinant sign convention with the first argument's
//! coefficients in the top rows, so `resultant(t−1, t−2) = −1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::{rat, Rat};
use crate::error::{CoreError, Result};

/// Polynomial in one variable over ℚ; see the module docs for conventions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::new(vec![c])
    }

    /// The variable itself.
    pub fn var() -> Self {
        UniPoly::new(vec![Rat::zero(), Rat::one()])
    }

    /// `c·t^k`.
    pub fn monomial(k: usize, c: Rat) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        UniPoly::new(v)
    }

    /// Convenience constructor from integer coefficients, ascending degree.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree as i64 with deg 0 for constants; panics on zero polynomial.
    fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    /// Leading coefficient; zero polynomial yields 0.
    pub fn lc(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    /// Coefficient of `t^k` (0 beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat(k as i64))
                .collect(),
        )
    }

    pub fn mul_scalar(&self, s: &Rat) -> UniPoly {
        if s.is_zero() {
            return UniPoly::zero();
        }
        UniPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let inv = Rat::one() / self.lc();
        self.mul_scalar(&inv)
    }

    pub fn pow(&self, mut e: u32) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Quotient and remainder of field division; panics if `d` is zero.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() || self.deg() < d.deg() {
            return (UniPoly::zero(), self.clone());
        }
        let dd = d.deg();
        let dlc_inv = Rat::one() / d.lc();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] * &dlc_inv;
            for j in 0..dd {
                let sub = &q * &d.coeffs[j];
                rem[k - dd + j] = &rem[k - dd + j] - &sub;
            }
            rem[k] = Rat::zero();
            quot[k - dd] = q;
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Exact quotient; `None` if the remainder is nonzero.
    pub fn exact_div(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.divrem(d);
        if r.is_zero() {
            Some(q)
        } else {
            None
        }
    }

    /// Largest `k` with `d^k | self` together with `self / d^k`.
    /// Requires `d` nonconstant and `self` nonzero.
    pub fn strip_factor(&self, d: &UniPoly) -> (u32, UniPoly) {
        assert!(!self.is_zero() && !d.is_constant());
        let mut k = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.exact_div(d) {
            cur = q;
            k += 1;
        }
        (k, cur)
    }

    /// `p(q(t))` by Horner's scheme.
    pub fn compose(&self, q: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &UniPoly::constant(c.clone());
        }
        acc
    }

    /// `p(λ·t)`.
    pub fn scale_var(&self, lambda: &Rat) -> UniPoly {
        let mut pw = Rat::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let out = c * &pw;
                pw = &pw * lambda;
                out
            })
            .collect();
        UniPoly::new(coeffs)
    }

    /// `p(t^n)`, `n ≥ 1`.
    pub fn stretch(&self, n: usize) -> UniPoly {
        assert!(n >= 1);
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Rat::zero(); self.deg() * n + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[k * n] = c.clone();
        }
        UniPoly::new(v)
    }

    /// `t^deg · p(1/t)` (coefficient reversal).
    pub fn reversed(&self) -> UniPoly {
        let mut v = self.coeffs.clone();
        v.reverse();
        UniPoly::new(v)
    }

    /// Primitive integer model: `self = scale · prim` with `prim ∈ ℤ[t]`,
    /// content 1 and positive leading coefficient. Zero maps to `(0, [])`.
    pub fn to_primitive_integer(&self) -> (Vec<BigInt>, Rat) {
        if self.is_zero() {
            return (vec![], Rat::zero());
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for c in &ints {
            content = content.gcd(c);
        }
        if ints.last().unwrap().is_negative() {
            content = -content;
        }
        let prim: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
        (prim, Rat::new(content, den_lcm))
    }

    fn from_integer_coeffs(v: &[BigInt]) -> UniPoly {
        UniPoly::new(v.iter().map(|c| Rat::from_integer(c.clone())).collect())
    }

    /// Monic gcd via a primitive pseudo-remainder sequence over ℤ.
    /// `gcd(0, 0) = 0`; otherwise the result is monic.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let (mut a, _) = self.to_primitive_integer();
        let (mut b, _) = other.to_primitive_integer();
        if int_deg(&a) < int_deg(&b) {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.is_empty() {
                return UniPoly::from_integer_coeffs(&a).monic();
            }
            let r = int_pseudo_rem(&a, &b);
            a = b;
            b = int_primitive_part(r);
        }
    }

    /// Squarefree part `self / gcd(self, self')`, monic. Zero is rejected.
    pub fn squarefree_part(&self) -> Result<UniPoly> {
        if self.is_zero() {
            return Err(CoreError::math("squarefree part of zero polynomial"));
        }
        if self.is_constant() {
            return Ok(UniPoly::one());
        }
        let g = self.gcd(&self.derivative());
        Ok(self
            .exact_div(&g)
            .expect("gcd divides")
            .monic())
    }

    /// Yun squarefree decomposition: monic pairwise-coprime squarefree
    /// `aᵢ` with `self = lc · ∏ aᵢ^{mᵢ}`, sorted by multiplicity.
    /// Constants decompose to an empty list; zero is rejected.
    pub fn squarefree_decompose(&self) -> Result<Vec<(UniPoly, u32)>> {
        if self.is_zero() {
            return Err(CoreError::math("squarefree decomposition of zero polynomial"));
        }
        let f = self.monic();
        if f.is_constant() {
            return Ok(vec![]);
        }
        let fp = f.derivative();
        let g = f.gcd(&fp);
        let mut c = f.exact_div(&g).expect("gcd divides");
        let mut d = &fp.exact_div(&g).expect("gcd divides") - &c.derivative();
        let mut out = vec![];
        let mut m = 1u32;
        while !c.is_constant() {
            let a = c.gcd(&d);
            if !a.is_constant() {
                out.push((a.clone(), m));
            }
            c = c.exact_div(&a).expect("gcd divides");
            d = &d.exact_div(&a).expect("gcd divides") - &c.derivative();
            m += 1;
        }
        out.sort_by_key(|(_, m)| *m);
        Ok(out)
    }

    /// Resultant with the Sylvester convention described in the module docs.
    /// Zero inputs are rejected.
    pub fn resultant(&self, other: &UniPoly) -> Result<Rat> {
        if self.is_zero() || other.is_zero() {
            return Err(CoreError::math("resultant of zero polynomial"));
        }
        Ok(res_rec(self.clone(), other.clone()))
    }

    /// All rational roots with multiplicity, ascending (a root of
    /// multiplicity m appears m times). Zero is rejected.
    pub fn rational_roots(&self) -> Result<Vec<Rat>> {
        if self.is_zero() {
            return Err(CoreError::math("roots of zero polynomial"));
        }
        let mut roots: Vec<Rat> = vec![];
        for r in distinct_rational_roots(self)? {
            let lin = UniPoly::new(vec![-r.clone(), Rat::one()]);
            let (m, _) = self.strip_factor(&lin);
            for _ in 0..m {
                roots.push(r.clone());
            }
        }
        roots.sort();
        Ok(roots)
    }

    /// Exact polynomial square root, if one exists (lc must be a rational
    /// square and every squarefree factor must occur to even multiplicity).
    pub fn sqrt_exact(&self) -> Option<UniPoly> {
        self.nth_root_exact(2)
    }

    /// Exact n-th root, if one exists: the leading coefficient must be an
    /// exact rational n-th root and every squarefree factor must occur to a
    /// multiplicity divisible by n.
    pub fn nth_root_exact(&self, n: u32) -> Option<UniPoly> {
        assert!(n >= 1);
        if self.is_zero() {
            return Some(UniPoly::zero());
        }
        let lc_root = super::rational::rat_nth_root(&self.lc(), n)?;
        let mut root = UniPoly::constant(lc_root);
        for (a, m) in self.squarefree_decompose().ok()? {
            if m % n != 0 {
                return None;
            }
            root = &root * &a.pow(m / n);
        }
        if &root.pow(n) == self {
            Some(root)
        } else {
            None
        }
    }

    /// Lagrange interpolation through distinct nodes.
    pub fn interpolate(points: &[(Rat, Rat)]) -> UniPoly {
        let mut acc = UniPoly::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut li = UniPoly::constant(yi.clone());
            for (j, (xj, _)) in points.iter().enumerate() {
                if i == j {
                    continue;
                }
                let dx = xi - xj;
                assert!(!dx.is_zero(), "interpolation nodes must be distinct");
                let lin = UniPoly::new(vec![-xj.clone(), Rat::one()]);
                li = &li * &lin.mul_scalar(&(Rat::one() / dx));
            }
            acc = &acc + &li;
        }
        acc
    }

    /// Human-readable rendering in the given variable, descending degree.
    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag_one = mag.is_one();
            if k == 0 || !mag_one {
                out.push_str(&super::rational::rat_str(&mag));
            }
            if k > 0 {
                if !mag_one {
                    out.push('*');
                }
                out.push_str(var);
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
        out
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("t"))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("t"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k) + rhs.coeff(k));
        }
        UniPoly::new(v)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            v.push(self.coeff(k) - rhs.coeff(k));
        }
        UniPoly::new(v)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut v = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        UniPoly::new(v)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

// ---- integer-polynomial helpers for the pseudo-remainder sequence ----

fn int_deg(v: &[BigInt]) -> usize {
    debug_assert!(v.last().map_or(true, |c| !c.is_zero()));
    v.len().saturating_sub(1)
}

fn int_trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

fn int_primitive_part(v: Vec<BigInt>) -> Vec<BigInt> {
    let v = int_trim(v);
    if v.is_empty() {
        return v;
    }
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if v.last().unwrap().is_negative() {
        content = -content;
    }
    v.iter().map(|c| c / &content).collect()
}

/// Pseudo-remainder of `a` by `b` over ℤ: the remainder of
/// `lc(b)^(deg a − deg b + 1) · a` under division by `b`.
fn int_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = int_deg(b);
    let mut rem: Vec<BigInt> = a.to_vec();
    let lcb = b.last().unwrap().clone();
    while int_trim(rem.clone()).len() > db {
        rem = int_trim(rem);
        let da = int_deg(&rem);
        let lead = rem.last().unwrap().clone();
        // rem ← lc(b)·rem − lead·t^(da−db)·b
        for c in rem.iter_mut() {
            *c *= &lcb;
        }
        for j in 0..=db {
            rem[da - db + j] -= &lead * &b[j];
        }
        rem = int_trim(rem);
        if rem.is_empty() {
            break;
        }
    }
    rem
}

// ---- resultant ----

fn res_rec(a: UniPoly, b: UniPoly) -> Rat {
    let da = a.deg();
    let db = b.deg();
    if da == 0 && db == 0 {
        return Rat::one();
    }
    if da == 0 {
        return rat_pow(a.lc(), db as u32);
    }
    if db == 0 {
        return rat_pow(b.lc(), da as u32);
    }
    if da < db {
        let sign = if (da * db) % 2 == 1 { -Rat::one() } else { Rat::one() };
        return sign * res_rec(b, a);
    }
    let (_, r) = a.divrem(&b);
    if r.is_zero() {
        return Rat::zero();
    }
    let dr = r.deg();
    let sign = if (da * db) % 2 == 1 { -Rat::one() } else { Rat::one() };
    sign * rat_pow(b.lc(), (da - dr) as u32) * res_rec(b, r)
}

fn rat_pow(base: Rat, e: u32) -> Rat {
    let mut acc = Rat::one();
    let mut b = base;
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

// ---- rational root extraction ----

/// Distinct rational roots of a nonzero polynomial (no multiplicities).
fn distinct_rational_roots(f: &UniPoly) -> Result<Vec<Rat>> {
    let mut g = f.squarefree_part()?;
    let mut roots = vec![];
    if g.is_constant() {
        return Ok(roots);
    }
    if g.coeff(0).is_zero() {
        roots.push(Rat::zero());
        let (_, rest) = g.strip_factor(&UniPoly::var());
        g = rest;
    }
    if g.is_constant() {
        return Ok(roots);
    }
    if g.deg() == 1 {
        roots.push(-g.coeff(0) / g.coeff(1));
        return Ok(roots);
    }
    let (prim, _) = g.to_primitive_integer();
    // Divisor search when both extreme coefficients factor completely over
    // small primes; otherwise Hensel lifting plus rational reconstruction,
    // which needs no integer factorization.
    let cand = small_divisors(&prim[0]).and_then(|p_divs| {
        small_divisors(prim.last().unwrap()).map(|q_divs| (p_divs, q_divs))
    });
    match cand {
        Some((p_divs, q_divs)) if p_divs.len() * q_divs.len() <= 20_000 => {
            for p in &p_divs {
                for q in &q_divs {
                    if !p.gcd(q).is_one() {
                        continue;
                    }
                    for sign in [1i64, -1] {
                        let r = Rat::new(p * BigInt::from(sign), q.clone());
                        if g.eval(&r).is_zero() {
                            roots.push(r);
                        }
                    }
                }
            }
        }
        _ => {
            roots.extend(hensel_rational_roots(&prim)?);
        }
    }
    roots.sort();
    roots.dedup();
    Ok(roots)
}

/// All positive divisors, provided trial division by primes ≤ 10⁵ factors
/// the number completely and there are at most 20 000 of them; `None`
/// otherwise. The count cap matters: a smooth 700-bit number (products of
/// small primes to large powers arise as discriminant coefficients) has
/// far too many divisors to enumerate.
fn small_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    const MAX_DIVISORS: usize = 20_000;
    let mut m = n.abs();
    if m.is_zero() {
        return None;
    }
    let mut factors: Vec<(BigInt, u32)> = vec![];
    let mut d = BigInt::from(2u32);
    let bound = BigInt::from(100_000u64);
    let mut count: usize = 1;
    while &d * &d <= m && d <= bound {
        if (&m % &d).is_zero() {
            let mut e = 0;
            while (&m % &d).is_zero() {
                m /= &d;
                e += 1;
            }
            count = count.saturating_mul(e as usize + 1);
            if count > MAX_DIVISORS {
                return None;
            }
            factors.push((d.clone(), e));
        }
        d += 1u32;
    }
    if !m.is_one() {
        if &m <= &(&bound * &bound) {
            factors.push((m, 1)); // below (10⁵)² with no small factor ⇒ prime
            count *= 2;
        } else {
            return None;
        }
    }
    if count > MAX_DIVISORS {
        return None;
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = vec![];
        for d0 in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d0 * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    Some(divs)
}

/// Rational roots of a squarefree primitive integer polynomial via mod-ℓ
/// root enumeration, quadratic Hensel lifting, and rational reconstruction.
/// Complete: every rational root reduces to a simple root mod ℓ and lifts
/// uniquely; candidates are verified exactly before being admitted.
fn hensel_rational_roots(prim: &[BigInt]) -> Result<Vec<Rat>> {
    let g = UniPoly::from_integer_coeffs(prim);
    let gp = g.derivative();
    // A prime where the reduction stays squarefree of full degree.
    let mut ell: u64 = 10_007;
    let ell = loop {
        ell = super::primefield::next_prime(ell);
        if (prim.last().unwrap() % ell).is_zero() {
            continue;
        }
        if mod_squarefree(prim, ell) {
            break ell;
        }
        if ell > 200_000 {
            return Err(CoreError::internal(
                "no good prime for rational root extraction",
            ));
        }
    };

    // Bounds for a root p/q in lowest terms: p | a₀, q | a_d.
    let n_bound = prim[0].abs();
    let d_bound = prim.last().unwrap().abs();
    let target = BigInt::from(2u32) * &n_bound * &d_bound + 1u32;

    let mut roots = vec![];
    for r0 in mod_roots(prim, ell) {
        // Quadratic lift of the simple root r0 until the modulus exceeds 2ND.
        let mut modulus = BigInt::from(ell);
        let mut r = BigInt::from(r0);
        while modulus < target {
            modulus = &modulus * &modulus;
            let val = eval_int_mod(prim, &r, &modulus);
            let der = eval_int_mod(&gp_int(&gp), &r, &modulus);
            let inv = match mod_inverse(&der, &modulus) {
                Some(i) => i,
                None => break, // lift obstructed: no rational root over this residue
            };
            r = (&r - val * inv).mod_floor(&modulus);
        }
        if modulus < target {
            continue;
        }
        if let Some((p, q)) = rational_reconstruct(&r, &modulus, &n_bound, &d_bound) {
            let cand = Rat::new(p, q);
            if g.eval(&cand).is_zero() {
                roots.push(cand);
            }
        }
    }
    Ok(roots)
}

fn gp_int(gp: &UniPoly) -> Vec<BigInt> {
    gp.coeffs()
        .iter()
        .map(|c| {
            debug_assert!(c.denom().is_one());
            c.numer().clone()
        })
        .collect()
}

fn eval_int_mod(coeffs: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = (acc * x + c).mod_floor(m);
    }
    acc
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

fn mod_squarefree(prim: &[BigInt], ell: u64) -> bool {
    let f: Vec<u64> = prim.iter().map(|c| bigint_mod_u64(c, ell)).collect();
    let f = super::primefield::FpPoly::new(ell, f);
    if f.degree() != Some(prim.len() - 1) {
        return false;
    }
    let d = f.derivative();
    if d.is_zero() {
        return false;
    }
    f.gcd(&d).degree() == Some(0)
}

fn mod_roots(prim: &[BigInt], ell: u64) -> Vec<u64> {
    let f: Vec<u64> = prim.iter().map(|c| bigint_mod_u64(c, ell)).collect();
    let fp = super::primefield::FpPoly::new(ell, f);
    (0..ell).filter(|&x| fp.eval(x) == 0).collect()
}

pub(crate) fn bigint_mod_u64(c: &BigInt, ell: u64) -> u64 {
    let m = BigInt::from(ell);
    let r = c.mod_floor(&m);
    let (_, digits) = r.to_u64_digits();
    *digits.first().unwrap_or(&0)
}

/// Standard rational reconstruction: the unique `p/q` with `p ≡ q·r (mod m)`,
/// `|p| ≤ N`, `0 < q ≤ D`, provided `m > 2ND`.
fn rational_reconstruct(r: &BigInt, m: &BigInt, n_bound: &BigInt, d_bound: &BigInt) -> Option<(BigInt, BigInt)> {
    let mut r0 = m.clone();
    let mut r1 = r.clone();
    let mut t0 = BigInt::zero();
    let mut t1 = BigInt::one();
    while &r1.abs() > n_bound {
        if r1.is_zero() {
            return None;
        }
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if t1.is_zero() || &t1.abs() > d_bound {
        return None;
    }
    if t1.is_negative() {
        Some((-r1, -t1))
    } else {
        Some((r1, t1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::rat_frac;

    fn p(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_ints(coeffs)
    }

    #[test]
    fn arithmetic_basics() {
        let a = p(&[1, 2, 3]); // 3t² + 2t + 1
        let b = p(&[-1, 1]); // t − 1
        assert_eq!(&(&a * &b) + &a, &a * &p(&[0, 1]));
        let (q, r) = a.divrem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert_eq!(r, UniPoly::constant(rat(6))); // a(1) = 6
    }

    #[test]
    fn gcd_examples() {
        // multiply-out oracle: gcd((t−1)²(t+2), (t−1)(t+3)) = t − 1
        let a = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[2, 1]);
        let b = &p(&[-1, 1]) * &p(&[3, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[-1, 1])), p(&[-1, 1]));
        assert_eq!(p(&[1, 0, 1]).gcd(&p(&[2, 1])), UniPoly::one());
        assert_eq!(UniPoly::zero().gcd(&p(&[0, 2])), p(&[0, 1]));
        // gcd divides both inputs exactly
        let f = &p(&[3, 1, 4]) * &p(&[-5, 0, 0, 2]);
        let g = &p(&[3, 1, 4]) * &p(&[7, 1]);
        let h = f.gcd(&g);
        assert!(f.exact_div(&h).is_some() && g.exact_div(&h).is_some());
        assert_eq!(h, p(&[3, 1, 4]).monic());
    }

    #[test]
    fn squarefree_decomposition() {
        // (t−1)²(t+2) → [(t+2, 1), (t−1, 2)]
        let f = &(&p(&[-1, 1]) * &p(&[-1, 1])) * &p(&[2, 1]);
        let d = f.squarefree_decompose().unwrap();
        assert_eq!(d, vec![(p(&[2, 1]), 1), (p(&[-1, 1]), 2)]);
        // t⁵ → [(t, 5)]
        let d = p(&[0, 0, 0, 0, 0, 1]).squarefree_decompose().unwrap();
        assert_eq!(d, vec![(p(&[0, 1]), 5)]);
        // multiply-out round trip with scalar leading coefficient
        let f = &(&p(&[1, 3]) * &p(&[1, 3])) * &(&p(&[-2, 0, 1]) * &p(&[5, 1]));
        let d = f.squarefree_decompose().unwrap();
        let mut rebuilt = UniPoly::constant(f.lc());
        for (a, m) in &d {
            rebuilt = &rebuilt * &a.pow(*m);
        }
        assert_eq!(rebuilt, f);
    }

    #[test]
    fn resultant_convention_and_identities() {
        // Sylvester matrix [[1, −1], [1, −2]] has determinant −1
        assert_eq!(p(&[-1, 1]).resultant(&p(&[-2, 1])).unwrap(), rat(-1));
        // shared root ⇒ 0
        assert_eq!(p(&[-1, 0, 1]).resultant(&p(&[-1, 1])).unwrap(), rat(0));
        // swap rule: res(a,b) = (−1)^(deg a · deg b) res(b,a)
        let a = p(&[2, 0, 1, 3]);
        let b = p(&[-1, 4, 1]);
        let ab = a.resultant(&b).unwrap();
        let ba = b.resultant(&a).unwrap();
        assert_eq!(ab, ba); // 3·2 even
        let c = p(&[1, 1]);
        assert_eq!(a.resultant(&c).unwrap(), -c.resultant(&a).unwrap());
        // product of evaluations: res(a, b) = lc(a)^{deg b} ∏ b(αᵢ) for a = 3(t−1)(t−2)
        let a = &p(&[-1, 1]) * &p(&[-2, 1]);
        let a = a.mul_scalar(&rat(3));
        let b = p(&[0, 0, 1]); // t²
        assert_eq!(a.resultant(&b).unwrap(), rat(9 * 1 * 4));
        assert!(UniPoly::zero().resultant(&b).is_err());
    }

    #[test]
    fn rational_roots_small() {
        // t³ − 4t → [−2, 0, 2]
        let f = p(&[0, -4, 0, 1]);
        assert_eq!(f.rational_roots().unwrap(), vec![rat(-2), rat(0), rat(2)]);
        // t² + 1 → []
        assert!(p(&[1, 0, 1]).rational_roots().unwrap().is_empty());
        // multiplicity: (2t−3)²(t+1) lists 3/2 twice
        let f = &(&p(&[-3, 2]) * &p(&[-3, 2])) * &p(&[1, 1]);
        assert_eq!(
            f.rational_roots().unwrap(),
            vec![rat(-1), rat_frac(3, 2), rat_frac(3, 2)]
        );
        // root at zero
        let f = &p(&[0, 1]) * &p(&[-5, 7]);
        assert_eq!(f.rational_roots().unwrap(), vec![rat(0), rat_frac(5, 7)]);
    }

    #[test]
    fn rational_roots_huge_coefficients_use_lifting() {
        // (t − a)(t + b)(t² + c) with a, b products of large primes, far
        // beyond trial-division range, so the divisor path must bail out.
        let a = BigInt::from(1_000_003u64) * BigInt::from(1_000_033u64) * BigInt::from(1_000_037u64);
        let b = BigInt::from(999_983u64) * BigInt::from(1_000_003u64) * BigInt::from(1_000_999u64);
        let la = UniPoly::new(vec![Rat::from_integer(-a.clone()), Rat::one()]);
        let lb = UniPoly::new(vec![Rat::from_integer(b.clone()), Rat::one()]);
        let f = &(&la * &lb) * &p(&[7, 0, 3]);
        let roots = f.rational_roots().unwrap();
        assert_eq!(roots, vec![Rat::from_integer(-b), Rat::from_integer(a)]);
    }

    #[test]
    fn compose_scale_stretch_reverse() {
        let f = p(&[1, 2, 1]); // (t+1)²
        assert_eq!(f.compose(&p(&[-1, 1])), p(&[0, 0, 1]));
        assert_eq!(f.scale_var(&rat(2)), p(&[1, 4, 4]));
        assert_eq!(f.stretch(3), p(&[1, 0, 0, 2, 0, 0, 1]));
        assert_eq!(p(&[3, 0, 5]).reversed(), p(&[5, 0, 3]));
    }

    #[test]
    fn sqrt_and_interpolation() {
        let g = p(&[1, 2, 3]);
        let sq = &g * &g;
        assert_eq!(sq.sqrt_exact(), Some(g.clone()));
        assert_eq!(p(&[0, 1]).sqrt_exact(), None);
        let f = p(&[2, -1, 0, 4]);
        let pts: Vec<(Rat, Rat)> = (0..4).map(|k| (rat(k), f.eval(&rat(k)))).collect();
        assert_eq!(UniPoly::interpolate(&pts), f);
    }

    #[test]
    fn display_formatting() {
        let f = UniPoly::new(vec![rat(1), rat_frac(-3, 4), rat(0), rat(1)]);
        assert_eq!(f.to_string_var("t"), "t^3 - 3/4*t + 1");
        assert_eq!(UniPoly::zero().to_string_var("x"), "0");
        assert_eq!(p(&[0, -1]).to_string_var("x"), "-x");
    }
}
