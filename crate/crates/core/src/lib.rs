//! Exact computations with distributive laws, duplicial objects and cyclic homology.

pub mod algebra;
pub mod coefficients;
pub mod distlaw;
pub mod duplicial;
pub mod homology;
pub mod linalg;
pub mod report;
pub mod settrack;
