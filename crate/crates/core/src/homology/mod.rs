//! Free resolutions, Ext modules, the Auslander transpose, and the
//! canonical module.

pub mod ext;
pub mod resolution;

pub use ext::{auslander_transpose, canonical_module, ext_from_resolution, ext_module};
pub use resolution::{depth_and_pd, FreeResolution};
