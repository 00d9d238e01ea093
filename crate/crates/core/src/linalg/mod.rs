//! Exact integer and rational linear algebra.

mod hnf;
mod lattice;
mod matrix;
mod snf;

pub use hnf::hnf;
pub use lattice::{
    coset_contains, coset_equal, integer_kernel, saturation, solve_integer, sublattice_equal, AffineSublattice,
    Sublattice,
};
pub use matrix::{inf_norm, int_vec, is_zero_vec, vec_add, vec_neg, vec_sub, IntMatrix, IntVec, RatMatrix, RatVec};
pub use snf::{snf, SmithDecomposition};
