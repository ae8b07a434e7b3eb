//! Finite fields, polynomials, rational functions and places of P^1.

pub mod factor;
pub mod field;
pub mod fq;
pub mod notation;
pub mod numth;
pub mod place;
pub mod poly;
pub mod qmat;
pub mod ratfunc;

pub use factor::{factor, is_irreducible};
pub use field::{FiniteField, Field};
pub use fq::{Fq, FqElem};
pub use numth::mult_order;
pub use place::{places_up_to, reduce_at, valuation, Place, ResidueField};
pub use poly::{Poly, PolyRing};
pub use ratfunc::{FunctionField, RatFunc};
