//! Groebner bases for ideals and free-module submodules, normal forms,
//! syzygies, and the elimination-based ideal calculus.

pub mod engine;
pub mod ideal;
pub mod modvec;
pub mod syzygy;

pub use engine::{buchberger, ideal_groebner, normal_form, poly_normal_form, Budget, Ctx, DEFAULT_STEP_CAP};
pub use ideal::Ideal;
pub use modvec::{ModOrder, ModTerm, ModVec};
pub use syzygy::{in_span, lift, span_groebner, syzygies, ColumnModule};
