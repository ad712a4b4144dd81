//! Concrete `g_N`-modules: vector representation, tensor powers, irreducible
//! modules cut out of tensor powers, weight spaces and skew subspaces.

pub mod build;
pub mod lie;
pub mod sparse;
pub mod subspace;

pub use build::{extract_irrep, extract_irrep_choice};
pub use lie::{HighestWeight, LieRep};
pub use sparse::SparseMat;
pub use subspace::{skew_subspace, weight_space, Subspace};
