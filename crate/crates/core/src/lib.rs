//! Exact-arithmetic calculus for oriented K-theory on cellular models:
//! formal group laws, the truncated universal coefficient ring with its
//! classifying maps, filtered K-theory of multiprojective spaces, the SNC
//! divisor-class formula, and fundamental-class comparisons between the
//! K-theoretic and Chow realizations.
//!
//! All arithmetic is exact (arbitrary-precision integers); every check in
//! this crate is an equality, never an approximation. Values are immutable
//! and operations are pure, so everything can be shared across threads.

pub mod algebra;
pub mod comparison;
pub mod divisor;
pub mod error;
pub mod fgl;
pub mod json;
pub mod lazard;
pub mod proj;

pub use error::{Error, Result};
