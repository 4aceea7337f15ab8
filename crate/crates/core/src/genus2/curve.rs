//! Genus-2 curves presented as y² = f(x) with f squarefree of degree 5 or 6.

use crate::exactcore::poly::UniPoly;
use crate::exactcore::rational::Rat;
use crate::error::{CoreError, Result};

/// A smooth projective genus-2 curve with affine model y² = f(x).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Genus2Curve {
    f: UniPoly,
}

impl Genus2Curve {
    /// Validates deg f ∈ {5, 6} and squarefreeness (both are equivalent to
    /// smoothness of the projective hyperelliptic model in genus 2).
    pub fn new(f: UniPoly) -> Result<Self> {
        match f.degree() {
            Some(5) | Some(6) => {}
            d => {
                return Err(CoreError::math(format!(
                    "genus-2 model needs deg f ∈ {{5, 6}}, got {d:?}"
                )))
            }
        }
        if !f.gcd(&f.derivative()).is_constant() {
            return Err(CoreError::math("genus-2 model needs squarefree f"));
        }
        Ok(Genus2Curve { f })
    }

    pub fn f(&self) -> &UniPoly {
        &self.f
    }

    pub fn degree(&self) -> usize {
        self.f.degree().expect("validated nonzero")
    }

    /// Igusa–Clebsch invariants [I2, I4, I6, I10].
    pub fn igusa_clebsch(&self) -> [Rat; 4] {
        super::invariants::igusa_clebsch(&self.f)
    }

    pub fn equation(&self) -> String {
        format!("y^2 = {}", self.f.to_string_var("x"))
    }
}
