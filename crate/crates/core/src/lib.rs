//! Arithmetic matroids, their representations over the integers, and the
//! combinatorics of the associated toric arrangements.

pub mod decomposition;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod matroid;
pub mod par;
pub mod reduction;
pub mod representations;
pub mod shnf;
pub mod toric;

pub use error::{Error, Result};
pub use linalg::IntMatrix;
pub use matroid::{ArithmeticMatroid, AxiomViolation, Molecule, Subset};
