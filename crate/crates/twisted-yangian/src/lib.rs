//! Exact computations with twisted Yangians realized on finite-dimensional
//! symplectic and orthogonal modules.

pub mod algebra;
pub mod combinatorics;
pub mod error;
pub mod exact;
pub mod par;
pub mod rep;
pub mod report;
pub mod skew;
pub mod sklyanin;
pub mod suites;

pub use error::{Error, Result};
