//! Igusa–Clebsch invariants I2, I4, I6, I10 of a genus-2 curve y² = f(x).
//!
//! The invariants are defined by symmetric sums of squared root
//! differences of the binary sextic (with one root at infinity when
//! deg f = 5), but are computed here without any root extraction through
//! Clebsch's transvectant chain: with (g,h)_k the k-th transvectant,
//!
//!   i = (f,f)₄, Δ = (i,i)₂, y₁ = (f,i)₄, y₂ = (i,y₁)₂, y₃ = (i,y₂)₂,
//!   A = (f,f)₆, B = (i,i)₄, C = (i,Δ)₄, D = (y₃,y₁)₂,
//!
//! followed by a fixed linear change of basis from (A, B, C, D) to
//! (I2, I4, I6, I10). The change-of-basis constants are frozen below and
//! re-derived in the test suite by an exact linear solve against the
//! root-difference definition on split sextics, so the two presentations
//! can never drift apart. I10 is the discriminant of f when deg f = 6
//! and lc²·disc(f) when deg f = 5; the tests pin this.

use num_traits::{One, Zero};

use crate::exactcore::poly::UniPoly;
use crate::exactcore::rational::{rat, Rat};

/// Igusa–Clebsch invariants [I2, I4, I6, I10]; accepts deg 5 or 6
/// (deg ≤ 6 inputs are treated as binary sextics, zero-padded on top).
pub fn igusa_clebsch(f: &UniPoly) -> [Rat; 4] {
    let [a, b, c, d] = clebsch_invariants(f);
    let a2 = &a * &a;
    let a3 = &a2 * &a;
    let a5 = &a3 * &a2;
    let i2 = rat(-120) * &a;
    let i4 = rat(-720) * &a2 + rat(6750) * &b;
    let i6 = rat(8640) * &a3 - rat(108_000) * &a * &b + rat(202_500) * &c;
    let i10 = rat(-62_208) * &a5 + rat(972_000) * &a3 * &b + rat(1_620_000) * &a2 * &c
        - rat(3_037_500) * &a * &b * &b
        - rat(6_075_000) * &b * &c
        - rat(4_556_250) * &d;
    [i2, i4, i6, i10]
}

/// Clebsch invariants (A, B, C, D) of the binary sextic attached to f.
pub fn clebsch_invariants(f: &UniPoly) -> [Rat; 4] {
    let f = BinForm::from_poly(f, 6);
    let i = transvectant(&f, &f, 4);
    let delta = transvectant(&i, &i, 2);
    let y1 = transvectant(&f, &i, 4);
    let y2 = transvectant(&i, &y1, 2);
    let y3 = transvectant(&i, &y2, 2);
    let a = transvectant(&f, &f, 6).as_constant();
    let b = transvectant(&i, &i, 4).as_constant();
    let c = transvectant(&i, &delta, 4).as_constant();
    let d = transvectant(&y3, &y1, 2).as_constant();
    [a, b, c, d]
}

/// Binary form of fixed formal degree: coefficient of xⁱ z^(deg−i) at
/// index i. The formal degree matters for transvectants, so a quintic is
/// handled as a sextic with vanishing top coefficient (root at z = 0).
#[derive(Clone, Debug)]
struct BinForm {
    deg: usize,
    coeffs: Vec<Rat>,
}

impl BinForm {
    fn from_poly(f: &UniPoly, deg: usize) -> BinForm {
        assert!(f.degree().map_or(true, |d| d <= deg));
        let mut coeffs = vec![Rat::zero(); deg + 1];
        for (i, c) in f.coeffs().iter().enumerate() {
            coeffs[i] = c.clone();
        }
        BinForm { deg, coeffs }
    }

    fn dx(&self) -> BinForm {
        assert!(self.deg >= 1);
        let coeffs = (1..=self.deg)
            .map(|i| &self.coeffs[i] * rat(i as i64))
            .collect();
        BinForm { deg: self.deg - 1, coeffs }
    }

    fn dz(&self) -> BinForm {
        assert!(self.deg >= 1);
        let coeffs = (0..self.deg)
            .map(|i| &self.coeffs[i] * rat((self.deg - i) as i64))
            .collect();
        BinForm { deg: self.deg - 1, coeffs }
    }

    /// Mixed derivative ∂^a_x ∂^b_z.
    fn dxz(&self, a: usize, b: usize) -> BinForm {
        let mut g = self.clone();
        for _ in 0..a {
            g = g.dx();
        }
        for _ in 0..b {
            g = g.dz();
        }
        g
    }

    fn mul(&self, other: &BinForm) -> BinForm {
        let deg = self.deg + other.deg;
        let mut coeffs = vec![Rat::zero(); deg + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        BinForm { deg, coeffs }
    }

    fn add_scaled(&mut self, other: &BinForm, s: &Rat) {
        assert_eq!(self.deg, other.deg);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a = &*a + &(b * s);
        }
    }

    fn zero(deg: usize) -> BinForm {
        BinForm { deg, coeffs: vec![Rat::zero(); deg + 1] }
    }

    fn as_constant(&self) -> Rat {
        assert_eq!(self.deg, 0);
        self.coeffs[0].clone()
    }
}

fn factorial(n: usize) -> Rat {
    let mut acc = Rat::one();
    for k in 2..=n {
        acc *= rat(k as i64);
    }
    acc
}

fn binomial(n: usize, k: usize) -> Rat {
    &(&factorial(n) / &factorial(k)) / &factorial(n - k)
}

/// k-th transvectant of forms of formal degrees m, n:
/// (g,h)_k = (m−k)!(n−k)!/(m!n!) · Σ_j (−1)ʲ C(k,j) ∂ᵏg/∂x^(k−j)∂zʲ · ∂ᵏh/∂xʲ∂z^(k−j).
fn transvectant(g: &BinForm, h: &BinForm, k: usize) -> BinForm {
    let (m, n) = (g.deg, h.deg);
    assert!(k <= m && k <= n);
    let pre = &(&factorial(m - k) * &factorial(n - k)) / &(&factorial(m) * &factorial(n));
    let mut acc = BinForm::zero(m + n - 2 * k);
    for j in 0..=k {
        let gd = g.dxz(k - j, j);
        let hd = h.dxz(j, k - j);
        let sign = if j % 2 == 0 { Rat::one() } else { -Rat::one() };
        let coef = sign * binomial(k, j) * &pre;
        acc.add_scaled(&gd.mul(&hd), &coef);
    }
    acc
}

/// Root-difference definition on split models, used as the independent
/// oracle in tests: with (ij) = xᵢ − xⱼ and a the leading coefficient,
///   I2  = a²  Σ over the 15 pairings (12)²(34)²(56)²,
///   I4  = a⁴  Σ over the 10 triple splits (12)²(23)²(31)²(45)²(56)²(64)²,
///   I6  = a⁶  Σ over the 60 triple splits with matching
///            (…triples…)·(14)²(25)²(36)²,
///   I10 = a¹⁰ ∏ (ij)².
/// For deg 5 one root sits at infinity: every difference involving it is
/// dropped and the weights stay with the leading coefficient.
#[cfg(test)]
pub(crate) fn igusa_clebsch_from_roots(roots: &[Rat], lc: &Rat) -> [Rat; 4] {
    let n = roots.len();
    assert!(n == 5 || n == 6);
    let d = |i: usize, j: usize| &roots[i] - &roots[j];
    let d2 = |i: usize, j: usize| {
        let x = d(i, j);
        &x * &x
    };
    let tri2 = |t: &[usize]| d2(t[0], t[1]) * d2(t[1], t[2]) * d2(t[2], t[0]);

    let idx: Vec<usize> = (0..n).collect();
    let mut i2 = Rat::zero();
    let mut i4 = Rat::zero();
    let mut i6 = Rat::zero();

    if n == 6 {
        for part in pair_partitions(&idx) {
            i2 += part.iter().map(|p| d2(p.0, p.1)).product::<Rat>();
        }
        for (t1, t2) in triple_partitions(&idx) {
            let base = tri2(&t1) * tri2(&t2);
            i4 += base.clone();
            for perm in permutations3(&t2) {
                let cross: Rat = (0..3).map(|k| d2(t1[k], perm[k])).product();
                i6 += &base * &cross;
            }
        }
    } else {
        // one root at infinity: it absorbs a pair slot / a triple slot
        for s in 0..5 {
            let rest: Vec<usize> = idx.iter().copied().filter(|&i| i != s).collect();
            for part in pair_partitions(&rest) {
                i2 += part.iter().map(|p| d2(p.0, p.1)).product::<Rat>();
            }
        }
        for t1 in choose3(&idx) {
            let rest: Vec<usize> = idx.iter().copied().filter(|i| !t1.contains(i)).collect();
            let base = tri2(&t1) * d2(rest[0], rest[1]);
            i4 += base.clone();
            // second triple is {rest[0], rest[1], ∞}; match t1 against it
            let targets = [Some(rest[0]), Some(rest[1]), None];
            for perm in permutations3(&[0, 1, 2]) {
                let cross: Rat = (0..3)
                    .filter_map(|k| targets[perm[k]].map(|j| d2(t1[k], j)))
                    .product();
                i6 += &base * &cross;
            }
        }
    }

    let mut i10 = Rat::one();
    for i in 0..n {
        for j in (i + 1)..n {
            i10 *= d2(i, j);
        }
    }

    let w = |k: i64| crate::exactcore::rational::rat_pow_i(lc, k);
    [i2 * w(2), i4 * w(4), i6 * w(6), i10 * w(10)]
}

/// Partitions of an even-size index set into unordered pairs.
#[cfg(test)]
fn pair_partitions(items: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let first = items[0];
    let mut out = vec![];
    for k in 1..items.len() {
        let partner = items[k];
        let rest: Vec<usize> = items[1..]
            .iter()
            .copied()
            .filter(|&i| i != partner)
            .collect();
        for mut sub in pair_partitions(&rest) {
            sub.insert(0, (first, partner));
            out.push(sub);
        }
    }
    out
}

/// Unordered partitions of a 6-element set into two triples (first triple
/// contains the smallest element).
#[cfg(test)]
fn triple_partitions(items: &[usize]) -> Vec<(Vec<usize>, Vec<usize>)> {
    assert_eq!(items.len(), 6);
    let mut out = vec![];
    let first = items[0];
    for i in 1..6 {
        for j in (i + 1)..6 {
            let t1 = vec![first, items[i], items[j]];
            let t2: Vec<usize> = items[1..]
                .iter()
                .copied()
                .filter(|x| !t1.contains(x))
                .collect();
            out.push((t1, t2));
        }
    }
    out
}

#[cfg(test)]
fn choose3(items: &[usize]) -> Vec<Vec<usize>> {
    let n = items.len();
    let mut out = vec![];
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                out.push(vec![items[i], items[j], items[k]]);
            }
        }
    }
    out
}

#[cfg(test)]
fn permutations3(items: &[usize]) -> Vec<[usize; 3]> {
    let (a, b, c) = (items[0], items[1], items[2]);
    vec![
        [a, b, c],
        [a, c, b],
        [b, a, c],
        [b, c, a],
        [c, a, b],
        [c, b, a],
    ]
}
