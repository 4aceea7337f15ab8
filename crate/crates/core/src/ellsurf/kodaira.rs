//! Kodaira fiber types, places of the base ℙ¹, and fiber configurations.
//!
//! Each type carries its component count m (the number of irreducible
//! components of the fiber) and its Euler number e:
//!
//! | type | I_n | I_n* | II | III | IV | IV* | III* | II* |
//! |------|-----|------|----|-----|----|-----|------|-----|
//! | m    | n   | n+5  | 1  | 2   | 3  | 7   | 8    | 9   |
//! | e    | n   | n+6  | 2  | 3   | 4  | 8   | 9    | 10  |
//!
//! A relatively minimal elliptic surface over ℙ¹ with section is a K3
//! exactly when the Euler numbers sum to 24, and the trivial sublattice of
//! its Néron–Severi group has rank 2 + Σ_P (m_P − 1), which drives the
//! Mordell–Weil rank computation.

use std::fmt;

use crate::exactcore::poly::UniPoly;
use crate::exactcore::rational::{rat_str, Rat};

/// Kodaira type of a singular fiber (`I(0)` is not a legal value).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum KodairaType {
    /// Multiplicative I_n, n ≥ 1.
    I(u32),
    /// I_n*, n ≥ 0.
    IStar(u32),
    II,
    III,
    IV,
    IVStar,
    IIIStar,
    IIStar,
}

impl KodairaType {
    /// Number of irreducible components m_P.
    pub fn components(&self) -> u32 {
        match *self {
            KodairaType::I(n) => n,
            KodairaType::IStar(n) => n + 5,
            KodairaType::II => 1,
            KodairaType::III => 2,
            KodairaType::IV => 3,
            KodairaType::IVStar => 7,
            KodairaType::IIIStar => 8,
            KodairaType::IIStar => 9,
        }
    }

    /// Topological Euler number of the fiber.
    pub fn euler(&self) -> u32 {
        match *self {
            KodairaType::I(n) => n,
            KodairaType::IStar(n) => n + 6,
            KodairaType::II => 2,
            KodairaType::III => 3,
            KodairaType::IV => 4,
            KodairaType::IVStar => 8,
            KodairaType::IIIStar => 9,
            KodairaType::IIStar => 10,
        }
    }

    /// Conventional name: "I1", "I0*", "II", "IV*", …
    pub fn name(&self) -> String {
        match *self {
            KodairaType::I(n) => format!("I{n}"),
            KodairaType::IStar(n) => format!("I{n}*"),
            KodairaType::II => "II".into(),
            KodairaType::III => "III".into(),
            KodairaType::IV => "IV".into(),
            KodairaType::IVStar => "IV*".into(),
            KodairaType::IIIStar => "III*".into(),
            KodairaType::IIStar => "II*".into(),
        }
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A closed point of ℙ¹ over ℚ: a rational point t = α, the point at
/// infinity, or a cluster — a monic squarefree polynomial without rational
/// roots whose conjugate roots all carry the same fiber data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Place {
    Rational(Rat),
    Infinity,
    Cluster(UniPoly),
}

impl Place {
    /// Number of geometric points of ℙ¹ lying in this place.
    pub fn degree(&self) -> u32 {
        match self {
            Place::Rational(_) | Place::Infinity => 1,
            Place::Cluster(p) => p.degree().expect("cluster polynomial nonzero") as u32,
        }
    }

    /// Sort key: rational places ascending, then clusters by (degree,
    /// coefficients), then infinity.
    fn sort_class(&self) -> u8 {
        match self {
            Place::Rational(_) => 0,
            Place::Cluster(_) => 1,
            Place::Infinity => 2,
        }
    }

    pub fn cmp_places(&self, other: &Place) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.sort_class().cmp(&other.sort_class()) {
            Ordering::Equal => match (self, other) {
                (Place::Rational(a), Place::Rational(b)) => a.cmp(b),
                (Place::Cluster(a), Place::Cluster(b)) => {
                    let da = a.degree().unwrap_or(0);
                    let db = b.degree().unwrap_or(0);
                    da.cmp(&db).then_with(|| {
                        for k in (0..=da.max(db)).rev() {
                            let c = a.coeff(k).cmp(&b.coeff(k));
                            if c != Ordering::Equal {
                                return c;
                            }
                        }
                        Ordering::Equal
                    })
                }
                _ => Ordering::Equal,
            },
            ord => ord,
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Rational(a) => write!(f, "t = {}", rat_str(a)),
            Place::Infinity => write!(f, "t = oo"),
            Place::Cluster(p) => write!(f, "roots of {}", p.to_string_var("t")),
        }
    }
}

/// One entry of a fiber configuration: every geometric point of `place`
/// carries a singular fiber of type `kodaira`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fiber {
    pub place: Place,
    pub kodaira: KodairaType,
}

/// The singular fibers of a relatively minimal elliptic surface.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FiberConfiguration {
    pub fibers: Vec<Fiber>,
}

impl FiberConfiguration {
    /// Σ over geometric points of the Euler numbers.
    pub fn euler_total(&self) -> u32 {
        self.fibers
            .iter()
            .map(|f| f.place.degree() * f.kodaira.euler())
            .sum()
    }

    /// The surface is a K3 iff the Euler numbers sum to 24.
    pub fn is_k3(&self) -> bool {
        self.euler_total() == 24
    }

    /// Σ over geometric points of (m_P − 1): the non-trivial part of the
    /// fibral contribution to the Néron–Severi lattice.
    pub fn fibral_rank(&self) -> u32 {
        self.fibers
            .iter()
            .map(|f| f.place.degree() * (f.kodaira.components() - 1))
            .sum()
    }

    /// Mordell–Weil rank over the algebraic closure from the Shioda–Tate
    /// formula: rk MW = ρ(NS) − 2 − Σ (m_P − 1). Negative results indicate
    /// an inconsistent ρ and are reported as errors.
    pub fn mordell_weil_rank(&self, rho_ns: u32) -> crate::error::Result<u32> {
        let fibral = 2 + self.fibral_rank();
        if rho_ns < fibral {
            return Err(crate::error::CoreError::math(format!(
                "Picard number {rho_ns} is below the fibral rank {fibral}"
            )));
        }
        Ok(rho_ns - fibral)
    }

    /// Total number of geometric singular fibers of the given type.
    pub fn count_of(&self, ty: KodairaType) -> u32 {
        self.fibers
            .iter()
            .filter(|f| f.kodaira == ty)
            .map(|f| f.place.degree())
            .sum()
    }

    /// Fiber type at a given rational place, if singular there.
    pub fn type_at(&self, place: &Place) -> Option<KodairaType> {
        self.fibers
            .iter()
            .find(|f| &f.place == place)
            .map(|f| f.kodaira)
    }

    /// Compact human-readable summary such as
    /// "III* at t = 0, II* at t = oo, 5 x I1 (cluster)".
    pub fn summary(&self) -> String {
        let mut parts = vec![];
        for f in &self.fibers {
            match &f.place {
                Place::Rational(a) => {
                    parts.push(format!("{} at t = {}", f.kodaira, rat_str(a)))
                }
                Place::Infinity => parts.push(format!("{} at t = oo", f.kodaira)),
                Place::Cluster(p) => parts.push(format!(
                    "{} x {} over {}",
                    p.degree().unwrap(),
                    f.kodaira,
                    p.to_string_var("t")
                )),
            }
        }
        parts.join(", ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::rational::rat;

    #[test]
    fn component_and_euler_tables() {
        let rows = [
            (KodairaType::I(1), 1, 1),
            (KodairaType::I(5), 5, 5),
            (KodairaType::IStar(0), 5, 6),
            (KodairaType::IStar(2), 7, 8),
            (KodairaType::II, 1, 2),
            (KodairaType::III, 2, 3),
            (KodairaType::IV, 3, 4),
            (KodairaType::IVStar, 7, 8),
            (KodairaType::IIIStar, 8, 9),
            (KodairaType::IIStar, 9, 10),
        ];
        for (ty, m, e) in rows {
            assert_eq!(ty.components(), m, "{ty}");
            assert_eq!(ty.euler(), e, "{ty}");
        }
        assert_eq!(KodairaType::IStar(3).name(), "I3*");
    }

    #[test]
    fn shioda_tate_arithmetic() {
        // II* + III* + 5·I1 on a K3: fibral 2 + 8 + 7 = 17; ρ = 17 + rank
        let cfg = FiberConfiguration {
            fibers: vec![
                Fiber { place: Place::Rational(rat(0)), kodaira: KodairaType::IIIStar },
                Fiber { place: Place::Infinity, kodaira: KodairaType::IIStar },
                Fiber {
                    place: Place::Cluster(UniPoly::from_ints(&[-1, 0, 0, 0, 0, 1])),
                    kodaira: KodairaType::I(1),
                },
            ],
        };
        assert_eq!(cfg.euler_total(), 9 + 10 + 5);
        assert!(cfg.is_k3());
        assert_eq!(cfg.fibral_rank(), 7 + 8);
        assert_eq!(cfg.mordell_weil_rank(17).unwrap(), 0);
        assert_eq!(cfg.mordell_weil_rank(19).unwrap(), 2);
        assert!(cfg.mordell_weil_rank(10).is_err());
        assert_eq!(cfg.count_of(KodairaType::I(1)), 5);
    }
}
