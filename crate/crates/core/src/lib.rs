//! Exact-arithmetic toolkit for building elliptic K3 surfaces out of genus-2
//! curve data.
//!
//! The layers, bottom to top:
//!
//! * [`exactcore`] — arbitrary-precision rationals, dense univariate
//!   polynomials over ℚ, rational functions, and small prime fields with an
//!   optional quadratic extension.
//! * [`genus2`] — genus-2 curves `y² = f(x)`: Igusa-Clebsch invariants, point
//!   counts over 𝔽_q, Frobenius characteristic polynomials, quartic Galois
//!   classification, and Picard-number certification.
//! * [`ellsurf`] — elliptic surfaces over ℚ(t): Weierstrass invariants,
//!   Kodaira fiber classification, Euler numbers, Shioda-Tate ranks, and
//!   isomorphism testing up to monomial reparameterization and twist.
//! * [`constructions`] — the concrete families attached to a genus-2 curve:
//!   the Shioda-Inose surface, the base-change families G⁽ⁿ⁾ and H⁽ⁿ⁾, a
//!   Kummer-surface fibration, the Inose quartic, and auxiliary elliptic
//!   curve utilities (torsion, twists, covers).
//! * [`io`] — JSON encoding of input records (curves, parameters, covers)
//!   and output documents (surfaces, fiber tables, certificates).
//!
//! All arithmetic is exact; nothing here touches floating point.

pub mod constructions;
pub mod ellsurf;
pub mod error;
pub mod exactcore;
pub mod genus2;
pub mod io;

pub use error::CoreError;
