//! Weierstrass models, the group law and curve-level constructions.

pub mod curve;
pub mod file;
pub mod group;
pub mod model;

pub use curve::{base_change_pow, extend_constants, frobenius_twist, has_p_torsion, hasse_invariant, Curve};
pub use file::{parse_curve, print_curve};
pub use group::CurvePoint;
pub use model::{Invariants, Transform, Weierstrass};
