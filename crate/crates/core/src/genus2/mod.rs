//! Genus-2 curves y² = f(x): Igusa–Clebsch invariants, point counts over
//! small prime fields, Weil polynomials of reductions, and the Galois /
//! endomorphism analysis that certifies the Picard number of the
//! Jacobian.

pub mod certify;
pub mod counting;
pub mod curve;
pub mod galois;
pub mod invariants;
pub mod weil;

pub use certify::{
    certify_picard_one, certify_simple, picard_from_endomorphism_class, DisjointnessRoute,
    EndomorphismClass, PicardCertificate, PrimeEvidence,
};
pub use counting::{count_points_fp, count_points_fp2, has_good_reduction};
pub use curve::Genus2Curve;
pub use galois::{quartic_galois_group, GaloisGroup};
pub use invariants::{clebsch_invariants, igusa_clebsch};
pub use weil::{frobenius_charpoly, real_weil_quadratic, WeilPolynomial};
