//! Elliptic curves over the rational function field F_q(t).

pub mod algebra;
pub mod berger;
pub mod error;
pub mod heights;
pub mod lfunction;
pub mod local;
pub mod towers;
pub mod weierstrass;

pub use error::{Error, Result};
