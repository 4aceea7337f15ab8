//! Elliptic surfaces over ℙ¹: Weierstrass models over ℚ(t), singular-fiber
//! classification, Shioda–Tate bookkeeping, and fibration isomorphism.

pub mod classify;
pub mod iso;
pub mod kodaira;
pub mod weierstrass;

pub use classify::classify_fibers;
pub use iso::{same_surface_up_to_iso, IsoWitness};
pub use kodaira::{Fiber, FiberConfiguration, KodairaType, Place};
pub use weierstrass::WeierstrassSurface;
