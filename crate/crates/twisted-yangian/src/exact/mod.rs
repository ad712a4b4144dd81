//! Exact scalars: rationals, polynomials and rational functions in `u`.

pub mod factor;
pub mod interp;
pub mod linalg;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod scalar;

pub use factor::factor_linear;
pub use interp::interpolate;
pub use linalg::Mat;
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use rational::Rational;
pub use scalar::Scalar;
