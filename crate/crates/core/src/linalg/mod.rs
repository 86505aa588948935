//! Exact linear algebra over ℚ and prime fields.

pub mod elim;
pub mod linmap;
pub mod rational;
pub mod scalar;
pub mod space;

pub use elim::{chain_homology, coequalizer, coequalizer_with_section, inverse, kernel_map, quotient, rank, rank_kernel};
pub use linmap::LinMap;
pub use rational::Rational;
pub use scalar::{Field, Scalar};
pub use space::Space;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("maps live over different fields")]
    FieldMismatch,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("denominator of {value} vanishes mod {p}")]
    DenominatorVanishes { value: String, p: u64 },
    #[error("cannot parse scalar `{0}`")]
    Parse(String),
    #[error("invalid permutation: {0}")]
    Permutation(String),
    #[error("map is singular")]
    Singular,
    #[error("d∘d ≠ 0 at degree {0}")]
    NotAComplex(usize),
}
