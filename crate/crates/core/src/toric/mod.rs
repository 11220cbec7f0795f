//! Posets attached to a central toric arrangement in `(R/Z)^r`, whose
//! hypertori are the kernels of the columns of an integer matrix: the poset
//! of layers, the arithmetic independence poset, their order complexes and
//! integral homology, and poset isomorphism.

mod complex;
mod iso;
mod layer;
mod poset;

pub use complex::{homology, order_complex, HomologyGroup, HomologyProfile, SimplicialComplex};
pub use iso::poset_isomorphic;
pub use layer::{components, Layer};
pub use poset::{independence_poset, layers, layers_poset, Poset};
