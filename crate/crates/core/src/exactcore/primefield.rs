//! Arithmetic in 𝔽_p and 𝔽_{p²}, and dense polynomials over 𝔽_p.
//!
//! Primality testing is deterministic Miller–Rabin for all 64-bit inputs.
//! The quadratic extension is presented as 𝔽_p[u]/(u² − s·u − t) for a
//! monic irreducible modulus; the default takes u² = n with n the least
//! quadratic non-residue. Quadratic characters use a residue table over
//! 𝔽_p, extended to 𝔽_{p²} through the norm z ↦ z^{p+1}, which lands in
//! 𝔽_p and preserves squareness.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{CoreError, Result};

/// Deterministic Miller–Rabin for u64; the witness set
/// {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37} is exact below 2^64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powm(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mulm(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime strictly greater than `n`.
pub fn next_prime(n: u64) -> u64 {
    let mut m = n.checked_add(1).expect("prime search overflow");
    loop {
        if is_prime_u64(m) {
            return m;
        }
        m += 1;
    }
}

pub(crate) fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

pub(crate) fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}

pub(crate) fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse mod an odd prime via Fermat; panics on 0.
pub(crate) fn invm(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero mod {p}");
    powm(a, p - 2, p)
}

/// 𝔽_p together with a fixed model of 𝔽_{p²}; see the module docs.
pub struct PrimeFieldCtx {
    pub p: u64,
    /// u² = s·u + t in the extension.
    pub s: u64,
    pub t: u64,
    chi_table: Vec<i8>,
}

/// Element of 𝔽_{p²} as (c₀, c₁) = c₀ + c₁·u.
pub type Fq2 = (u64, u64);

impl PrimeFieldCtx {
    /// Default model: u² = n with n the least quadratic non-residue mod p.
    /// Requires an odd prime.
    pub fn new(p: u64) -> Result<Self> {
        let table = Self::build_table(p)?;
        let n = (2..p)
            .find(|&n| table[n as usize] == -1)
            .ok_or_else(|| CoreError::internal("no quadratic non-residue"))?;
        Ok(PrimeFieldCtx { p, s: 0, t: n, chi_table: table })
    }

    /// Custom model u² = s·u + t; the modulus u² − s·u − t must be
    /// irreducible, i.e. have no root in 𝔽_p.
    pub fn with_modulus(p: u64, s: u64, t: u64) -> Result<Self> {
        let table = Self::build_table(p)?;
        let s = s % p;
        let t = t % p;
        // root exists iff discriminant s² + 4t is a square
        let disc = addm(mulm(s, s, p), mulm(4 % p, t, p), p);
        if table[disc as usize] >= 0 {
            return Err(CoreError::math(format!(
                "u^2 - {s}*u - {t} is reducible mod {p}"
            )));
        }
        Ok(PrimeFieldCtx { p, s, t, chi_table: table })
    }

    fn build_table(p: u64) -> Result<Vec<i8>> {
        if p == 2 || !is_prime_u64(p) {
            return Err(CoreError::math(format!("{p} is not an odd prime")));
        }
        let mut table = vec![-1i8; p as usize];
        table[0] = 0;
        for x in 1..p {
            table[mulm(x, x, p) as usize] = 1;
        }
        Ok(table)
    }

    /// Quadratic character χ(a) ∈ {−1, 0, 1} on 𝔽_p.
    pub fn chi(&self, a: u64) -> i64 {
        self.chi_table[(a % self.p) as usize] as i64
    }

    /// Norm 𝔽_{p²} → 𝔽_p: for u² − s·u − t the conjugate of u is s − u,
    /// so N(c₀ + c₁u) = c₀² + s·c₀c₁ − t·c₁².
    pub fn norm2(&self, z: Fq2) -> u64 {
        let p = self.p;
        let a = mulm(z.0, z.0, p);
        let b = mulm(self.s, mulm(z.0, z.1, p), p);
        let c = mulm(self.t, mulm(z.1, z.1, p), p);
        subm(addm(a, b, p), c, p)
    }

    /// Quadratic character on 𝔽_{p²}: χ_q(z) = χ_p(N(z)).
    pub fn chi2(&self, z: Fq2) -> i64 {
        self.chi(self.norm2(z))
    }

    pub fn add2(&self, a: Fq2, b: Fq2) -> Fq2 {
        (addm(a.0, b.0, self.p), addm(a.1, b.1, self.p))
    }

    /// (a₀ + a₁u)(b₀ + b₁u) with u² = s·u + t.
    pub fn mul2(&self, a: Fq2, b: Fq2) -> Fq2 {
        let p = self.p;
        let lo = mulm(a.0, b.0, p);
        let hi = mulm(a.1, b.1, p);
        let mid = addm(mulm(a.0, b.1, p), mulm(a.1, b.0, p), p);
        (addm(lo, mulm(self.t, hi, p), p), addm(mid, mulm(self.s, hi, p), p))
    }

    /// Embed 𝔽_p ↪ 𝔽_{p²}.
    pub fn embed(&self, a: u64) -> Fq2 {
        (a % self.p, 0)
    }
}

/// Dense polynomial over 𝔽_p, ascending coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, coeffs: vec![] }
    }

    pub fn x(p: u64) -> Self {
        FpPoly::new(p, vec![0, 1])
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn lc(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn coeff(&self, k: usize) -> u64 {
        *self.coeffs.get(k).unwrap_or(&0)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = addm(mulm(acc, x, self.p), c, self.p);
        }
        acc
    }

    pub fn derivative(&self) -> FpPoly {
        if self.coeffs.len() <= 1 {
            return FpPoly::zero(self.p);
        }
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| mulm(c, (k as u64) % self.p, self.p))
            .collect();
        FpPoly::new(self.p, v)
    }

    pub fn add(&self, rhs: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n)
            .map(|k| addm(self.coeff(k), rhs.coeff(k), self.p))
            .collect();
        FpPoly::new(self.p, v)
    }

    pub fn sub(&self, rhs: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let v = (0..n)
            .map(|k| subm(self.coeff(k), rhs.coeff(k), self.p))
            .collect();
        FpPoly::new(self.p, v)
    }

    pub fn mul(&self, rhs: &FpPoly) -> FpPoly {
        if self.is_zero() || rhs.is_zero() {
            return FpPoly::zero(self.p);
        }
        let mut v = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = addm(v[i + j], mulm(a, b, self.p), self.p);
            }
        }
        FpPoly::new(self.p, v)
    }

    pub fn divrem(&self, d: &FpPoly) -> (FpPoly, FpPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        if self.is_zero() || self.degree().unwrap() < dd {
            return (FpPoly::zero(self.p), self.clone());
        }
        let p = self.p;
        let inv = invm(d.lc(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k] == 0 {
                continue;
            }
            let q = mulm(rem[k], inv, p);
            for j in 0..dd {
                rem[k - dd + j] = subm(rem[k - dd + j], mulm(q, d.coeffs[j], p), p);
            }
            rem[k] = 0;
            quot[k - dd] = q;
        }
        (FpPoly::new(p, quot), FpPoly::new(p, rem))
    }

    pub fn rem(&self, d: &FpPoly) -> FpPoly {
        self.divrem(d).1
    }

    pub fn monic(&self) -> FpPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = invm(self.lc(), self.p);
        FpPoly::new(self.p, self.coeffs.iter().map(|&c| mulm(c, inv, self.p)).collect())
    }

    /// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &FpPoly) -> FpPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod f` by square-and-multiply with a big-integer exponent.
    pub fn pow_mod(&self, e: &BigUint, f: &FpPoly) -> FpPoly {
        let mut base = self.rem(f);
        let mut acc = FpPoly::new(self.p, vec![1]);
        let mut e = e.clone();
        let two = BigUint::from(2u32);
        while !e.is_zero() {
            if (&e % &two).is_one() {
                acc = acc.mul(&base).rem(f);
            }
            e >>= 1;
            if !e.is_zero() {
                base = base.mul(&base).rem(f);
            }
        }
        acc
    }

    /// Rabin's irreducibility test: f of degree d is irreducible over 𝔽_p
    /// iff x^(p^d) ≡ x (mod f) and gcd(x^(p^(d/ℓ)) − x, f) = 1 for every
    /// prime ℓ | d.
    pub fn is_irreducible(&self) -> bool {
        let d = match self.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(d) => d,
        };
        let p = BigUint::from(self.p);
        let x = FpPoly::x(self.p);
        let frob_check = |k: usize| -> FpPoly {
            // x^(p^k) − x mod self
            let e = p.pow(k as u32);
            x.pow_mod(&e, self).sub(&x)
        };
        if !frob_check(d).rem(self).is_zero() {
            return false;
        }
        let mut m = d;
        let mut ell = 2usize;
        let mut prime_divs = vec![];
        while ell * ell <= m {
            if m % ell == 0 {
                prime_divs.push(ell);
                while m % ell == 0 {
                    m /= ell;
                }
            }
            ell += 1;
        }
        if m > 1 {
            prime_divs.push(m);
        }
        for ell in prime_divs {
            if self.gcd(&frob_check(d / ell)).degree() != Some(0) {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(3));
        assert!(is_prime_u64(10_007));
        assert!(is_prime_u64((1u64 << 61) - 1)); // Mersenne prime
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(561)); // Carmichael
        assert!(!is_prime_u64(3_215_031_751)); // strong pseudoprime to 2,3,5,7
        assert_eq!(next_prime(10_007), 10_009);
        assert_eq!(next_prime(1), 2);
    }

    #[test]
    fn fp_poly_euclid() {
        let p = 7;
        let a = FpPoly::new(p, vec![6, 0, 1]); // x² − 1
        let b = FpPoly::new(p, vec![6, 1]); // x − 1
        assert_eq!(a.gcd(&b), b.monic());
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.is_zero());
        let c = FpPoly::new(p, vec![1, 0, 1]);
        assert_eq!(a.gcd(&c).degree(), Some(0)); // coprime mod 7
    }

    #[test]
    fn irreducibility_known_cases() {
        // x² + 1: irreducible mod 3 (−1 non-residue), reducible mod 5
        assert!(FpPoly::new(3, vec![1, 0, 1]).is_irreducible());
        assert!(!FpPoly::new(5, vec![1, 0, 1]).is_irreducible());
        // x⁴ + x³ + x² + x + 1 is irreducible mod p iff p has order 4 mod 5
        assert!(FpPoly::new(3, vec![1, 1, 1, 1, 1]).is_irreducible());
        assert!(!FpPoly::new(11, vec![1, 1, 1, 1, 1]).is_irreducible());
        // x⁴ + 1 is reducible mod every odd prime
        for p in [3u64, 5, 7, 13, 17] {
            assert!(!FpPoly::new(p, vec![1, 0, 0, 0, 1]).is_irreducible());
        }
        // linears are irreducible, constants are not
        assert!(FpPoly::new(5, vec![2, 3]).is_irreducible());
        assert!(!FpPoly::new(5, vec![2]).is_irreducible());
    }

    #[test]
    fn chi_and_norm_against_brute_force() {
        for p in [7u64, 11, 13] {
            let ctx = PrimeFieldCtx::new(p).unwrap();
            // χ on 𝔽_p matches Euler's criterion
            for a in 0..p {
                let euler = if a == 0 {
                    0
                } else if powm(a, (p - 1) / 2, p) == 1 {
                    1
                } else {
                    -1
                };
                assert_eq!(ctx.chi(a), euler);
            }
            // squares in 𝔽_{p²} by enumeration vs chi2
            let mut squares = std::collections::HashSet::new();
            for c0 in 0..p {
                for c1 in 0..p {
                    squares.insert(ctx.mul2((c0, c1), (c0, c1)));
                }
            }
            for c0 in 0..p {
                for c1 in 0..p {
                    let z = (c0, c1);
                    let expected = if z == (0, 0) {
                        0
                    } else if squares.contains(&z) {
                        1
                    } else {
                        -1
                    };
                    assert_eq!(ctx.chi2(z), expected, "p={p} z={z:?}");
                }
            }
        }
    }

    #[test]
    fn custom_modulus_agrees_with_default() {
        let p = 13u64;
        let default = PrimeFieldCtx::new(p).unwrap();
        // u² = u + 4: disc 1 + 16 = 17 ≡ 4 — that is a square, pick another.
        // u² = u + 1: disc 5, non-residue mod 13 (5^6 = 12 mod 13).
        let custom = PrimeFieldCtx::with_modulus(p, 1, 1).unwrap();
        assert!(PrimeFieldCtx::with_modulus(p, 1, 4).is_err());
        // the set of square norms — hence chi2 as a function of the element
        // written in each basis — must classify the same number of squares
        let count = |ctx: &PrimeFieldCtx| {
            let mut n = 0;
            for c0 in 0..p {
                for c1 in 0..p {
                    if ctx.chi2((c0, c1)) == 1 {
                        n += 1;
                    }
                }
            }
            n
        };
        assert_eq!(count(&default), (p * p - 1) / 2);
        assert_eq!(count(&custom), (p * p - 1) / 2);
    }

    #[test]
    fn pow_mod_fermat() {
        // x^p ≡ x mod (x² − x) fails (reducible), but over an irreducible f,
        // x^(p²) ≡ x by Fermat for 𝔽_{p²}
        let p = 11u64;
        let f = FpPoly::new(p, vec![1, 0, 1]); // −1 non-residue mod 11
        assert!(f.is_irreducible());
        let x = FpPoly::x(p);
        let e = BigUint::from(p) * BigUint::from(p);
        assert_eq!(x.pow_mod(&e, &f), x);
    }
}
