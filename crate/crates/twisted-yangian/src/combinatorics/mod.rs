//! Diagrams `Γ(λ)`, their shifted intersections and the diagram rule for Drinfeld
//! polynomials; trapezium patterns, `Λ₀` and pattern weights.

pub mod diagram;
pub mod patterns;

pub use diagram::{content, drinfeld_diagram, evaluation_drinfeld, intersect_shifted, mid, Cell, Diagram, ExtInt};
pub use patterns::{count_patterns, enumerate_patterns, is_nonempty, lambda0, violated_inequality, weight_leq, TrapPattern};
