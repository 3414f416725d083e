//! Divisor and curve classes on split projective bundles.
//!
//! `Pic(X)` is `Pic(V) + Z` with the second summand generated by the
//! relative hyperplane class. Curve classes are restricted to the
//! torus-invariant generators: a line in a fiber and the lines of each base
//! ruling inside each section. Every nef, ample and pseudoindex statement is
//! made against that finite list.

mod base;
mod blowup;
mod class;
mod scroll;

pub use base::BaseSpace;
pub use blowup::BlowupModel;
pub use class::{index_of, CurveClass, DivisorClass};
pub use scroll::{Normalization, ScrollVariety};
