//! Quotient rings, presentation matrices, and finitely presented modules.

pub mod fpmod;
pub mod matrix;
pub mod quotient;

pub use fpmod::FPModule;
pub use matrix::Matrix;
pub use quotient::{QuotientRing, RingHandle};
