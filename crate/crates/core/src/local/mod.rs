//! Per-place analysis: Tate's algorithm, conductors, fiber zeta functions.

pub mod count;
pub mod global;
pub mod kodaira;
pub mod tate;

pub use count::{count_affine, count_roots, trace_of_frobenius};
pub use global::{classify, conductor, global_data, nprime_deg, torsion_bound, Classification, Conductor, GlobalData};
pub use kodaira::{fiber_counts, FiberZeta, Kodaira};
pub use tate::{count_points_good, minimal_model_at, model_at_infinity, tate_type, LocalData, COUNT_CAP};
