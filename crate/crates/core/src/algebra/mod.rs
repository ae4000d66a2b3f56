//! Value types: coefficients, monomials, polynomials, and their orders.

pub mod coeff;
pub mod monomial;
pub mod poly;

pub use coeff::{Coeff, FieldSpec};
pub use monomial::{Monomial, RingOrder};
pub use poly::{Poly, PolyOp, PolyRing, MAX_ARITY};
