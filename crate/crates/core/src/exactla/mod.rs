//! Exact scalar arithmetic and dense linear algebra.

mod field;
mod matrix;
mod subspace;

pub use field::{Field, Fp, Rational};
pub use matrix::{is_zero_vec, vec_sub, Matrix};
pub use subspace::{complement, intersect, span_basis, Frame, RowSpace};
