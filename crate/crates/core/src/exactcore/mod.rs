//! Exact scalar and polynomial arithmetic: big rationals, dense univariate
//! polynomials over ℚ, rational functions in one variable, and prime fields
//! 𝔽_p / 𝔽_p² for point counting and mod-p certificates.

pub mod poly;
pub mod primefield;
pub mod ratfun;
pub mod rational;

pub use poly::UniPoly;
pub use primefield::{FpPoly, PrimeFieldCtx};
pub use ratfun::RationalFunction;
pub use rational::Rat;
