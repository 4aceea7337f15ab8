//! The concrete curves, surfaces, and maps of the construction: the
//! Shioda–Inose surface of a genus-2 curve, its base-change families G⁽ⁿ⁾,
//! a Kummer-surface fibration, the Inose quartic, the two-IV* families
//! H⁽ⁿ⁾ built from a five-point parameter set, elliptic curves over ℚ with
//! torsion/twist utilities, and degree-3 covers from genus-2 curves to
//! elliptic curves.

pub mod cover;
pub mod displays;
pub mod ellq;
pub mod families;
pub mod hfamily;

pub use cover::{verify_cover, CoverMap, CoverReport};
pub use displays::{example43_h_display, qm_g4_display, qm_g4_simplified, split_g4_display};
pub use ellq::{
    ec_isomorphic_q, ec_j_invariant, ec_quadratic_twist, has_rational_n_torsion, EllipticCurveQ,
};
pub use families::{
    g_surface, inose_quartic, kummer_fibration13, quartic_g1_monomial_search,
    shioda_inose_surface, IgusaClebsch, QuarticForm, QuarticG1Match,
};
pub use hfamily::{
    genus2_from_hparams, h_coefficients, h_surface, intermediate_fibration, HCoefficients,
    HParams, IntermediateFibration,
};
