//! Exact integer and sparse polynomial arithmetic, quotient-ring normal
//! forms and integer Smith normal form — the substrate for everything else.
//!
//! All values are immutable after construction and all operations are pure;
//! everything here is safe to share across threads.

mod matrix;
mod monomial;
mod poly;
mod ring;

pub use matrix::{hermite_rows, quotient_basis, smith_normal_form, IntMatrix, QuotientBasis, SnfResult};
pub use monomial::{display_cmp, Monomial};
pub use poly::SparsePoly;
pub use ring::{same_ring, EchelonBasis, RingDescriptor, VarSpec};
