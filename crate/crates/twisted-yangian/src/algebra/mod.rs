//! Index conventions, permutations, and the tensor operators acting on `(C^N)^{⊗k}`.

pub mod index;
pub mod perm;
pub mod tensor;

pub use index::{Case, IndexScheme};
pub use perm::{omega, omega_quotient_bijective, Perm};
pub use tensor::TensorOp;
