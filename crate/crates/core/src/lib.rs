//! Boundary zigzags, extended divisors and rigidity of Gizatullin
//! ℂ*-surfaces, computed exactly from a pair of ℚ-divisors on the affine line.

pub mod classify;
pub mod corpus;
pub mod dpd;
pub mod dualgraph;
pub mod error;
pub mod exactmath;
pub mod rigidity;

pub use error::{Error, Result};
pub use exactmath::Rational;
