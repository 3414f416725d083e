//! Exact lattice computations on split projective bundles `P[V; b_0, ..., b_t]`
//! over a projective space, a smooth quadric of dimension at least three, or
//! `P1 x P1`.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is an integer or an
//! arbitrary-precision count, so every result is exact and reproducible.
//!
//! * [`geometry`]: varieties, divisor and curve classes, cones, index and
//!   pseudoindex, restriction to sub-bundles.
//! * [`sections`]: two independent section counts plus the monomial analysis
//!   that detects forced components of a linear system.
//! * [`logfano`]: log Fano pairs `(X, D)` and the gallery of known families.
//! * [`census`]: bounded exhaustive search for pairs of large index.
//! * [`grammar`]: the text syntax for varieties and classes.
#![no_std]

extern crate alloc;

pub mod census;
pub mod error;
pub mod geometry;
pub mod grammar;
pub mod logfano;
pub mod sections;

pub use error::{Error, Result};
pub use geometry::{BaseSpace, BlowupModel, CurveClass, DivisorClass, ScrollVariety};
