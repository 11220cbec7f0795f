//! Exact integer and rational linear algebra: Hermite and Smith normal forms
//! with transformation witnesses, torsion orders, lattice membership, and
//! saturation.

mod hnf;
mod lattice;
mod matrix;
mod rational;
mod snf;
mod sparse;

pub use hnf::{hnf, hnf_matrix, hnf_pivots, is_hnf, Hnf};
pub use lattice::{
    canonical_column_basis, in_lattice, kernel, lattice_coordinates, rank, saturation,
    torsion_order,
};
pub use matrix::IntMatrix;
pub use rational::RatVector;
pub use snf::{invariant_factors, snf, Snf};
pub use sparse::{sparse_smith, SparseSmith};
