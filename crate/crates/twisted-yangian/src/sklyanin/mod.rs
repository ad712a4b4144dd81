//! Operator-valued realizations `S(u)` of twisted Yangians and the Sklyanin
//! minor calculus on them.

pub mod chain;
pub mod checks;
pub mod derived;
pub mod family;
pub mod minor;
pub mod sylvester;

pub use derived::{Bordered, EvalVarpi, ExactFamily, SubFamily};
pub use family::{alpha, alpha_at, EvalFamily, Family, Grid, GridCache, Op};
pub use minor::{aux_minor, formula_shape, minor, minor_antisym, minor_formula, sdet, Route};
