#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod error;
pub mod groebner;
pub mod homology;
pub mod modules;
